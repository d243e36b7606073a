#include "operadkit/io.hpp"

#include <sstream>

#include <json.hpp>

namespace operadkit {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string lincomb_text(const WordLinComb& c) {
    if (c.terms.empty()) return "0";
    std::string out;
    for (const auto& [w, coef] : c.terms) {
        Rat a = abs(coef);
        out += (out.empty() ? "" : " ");
        out += (sgn(coef) < 0 ? "-" : "+");
        out += to_string(a) + "*" + to_string(w);
    }
    return out;
}

std::string word_lincomb_json(const WordLinComb& c) {
    ordered_json j;
    j["gamma"] = c.gamma;
    j["terms"] = ordered_json::array();
    for (const auto& [w, coef] : c.terms)
        j["terms"].push_back({{"coef", to_string(coef)}, {"word", to_string(w)}});
    return j.dump();
}

WordLinComb parse_word_lincomb_json(int gamma, const std::string& text) {
    json j = json::parse(text);
    WordLinComb out;
    out.gamma = j.contains("gamma") ? j["gamma"].get<int>() : gamma;
    for (const auto& t : j["terms"])
        out.add(parse_word(out.gamma, t["word"].get<std::string>()),
                rat_from_string(t["coef"].get<std::string>()));
    return out;
}

std::string tree_lincomb_json(const GeneratorSet& gens, const TreeLinComb& c) {
    ordered_json j;
    j["terms"] = ordered_json::array();
    for (const auto& [t, coef] : c.terms)
        j["terms"].push_back({{"coef", to_string(coef)}, {"tree", to_string(gens, t)}});
    return j.dump();
}

std::string evbt_lincomb_json(const EvbtLinComb& c) {
    ordered_json j;
    j["terms"] = ordered_json::array();
    for (const auto& [t, coef] : c.terms)
        j["terms"].push_back({{"coef", to_string(coef)}, {"tree", to_string(t)}});
    return j.dump();
}

std::string presentation_json(const Presentation& p) {
    ordered_json j;
    j["gamma"] = p.gamma;
    j["generators"] = ordered_json::array();
    for (const auto& g : p.gens.entries) j["generators"].push_back(g.name);
    j["relations"] = ordered_json::array();
    const int g = p.gens.size();
    for (const auto& rel : p.relations) {
        ordered_json row = ordered_json::array();
        for (const auto& [idx, c] : rel) {
            int x, pos, y;
            deg2_unindex(g, idx, x, pos, y);
            row.push_back({{"tree", p.gens.at(x).name + ":" + std::to_string(pos) + ":" +
                                        p.gens.at(y).name},
                           {"coef", to_string(c)}});
        }
        j["relations"].push_back(std::move(row));
    }
    return j.dump();
}

std::string ruleset_text(const RuleSet& rs) {
    std::string out;
    for (const auto& r : rs.rules)
        out += to_string(rs.gens, r.lhs) + " => " + to_string(rs.gens, r.rhs) + "\n";
    return out;
}

std::string series_tsv(const IntSeries& s) {
    std::string out = "n\tdim\n";
    for (int n = 1; n <= s.order(); ++n)
        out += std::to_string(n) + "\t" + to_string(s.at(n)) + "\n";
    return out;
}

std::string series_json(const IntSeries& s) {
    ordered_json j = ordered_json::array();
    for (int n = 1; n <= s.order(); ++n) j.push_back(to_string(s.at(n)));
    return j.dump();
}

namespace {

int dot_node(std::ostream& os, const GeneratorSet& gens, const SyntaxTree& t, int& next) {
    const int id = next++;
    if (t.is_leaf()) {
        os << "  n" << id << " [shape=point];\n";
        return id;
    }
    os << "  n" << id << " [label=\"" << gens.at(t.gen).name << "\"];\n";
    for (const auto& k : t.kids) {
        const int kid = dot_node(os, gens, k, next);
        os << "  n" << id << " -> n" << kid << ";\n";
    }
    return id;
}

}  // namespace

std::string tree_dot(const GeneratorSet& gens, const SyntaxTree& t) {
    std::ostringstream os;
    os << "digraph tree {\n";
    int next = 0;
    dot_node(os, gens, t, next);
    os << "}\n";
    return os.str();
}

}  // namespace operadkit
