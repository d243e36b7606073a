#include "operadkit/freealg.hpp"

#include <sstream>
#include <stdexcept>

namespace operadkit {

GammaWord h(int a, const GammaWord& u) {
    if (a < 1 || a > u.gamma) throw std::invalid_argument("label out of range");
    GammaWord r = u;
    for (auto& l : r.letters)
        if (l < a) l = static_cast<std::uint8_t>(a);
    return r;
}

namespace {

GammaWord concat(const GammaWord& u, const GammaWord& v) {
    GammaWord r = u;
    r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
    return r;
}

}  // namespace

GammaWord pluri_left(int a, const GammaWord& u, const GammaWord& v) {
    if (u.gamma != v.gamma) throw std::invalid_argument("gamma mismatch");
    if (!is_dias_element(u) || !is_dias_element(v))
        throw std::invalid_argument("operands must be single-zero words");
    return concat(u, h(a, v));
}

GammaWord pluri_right(int a, const GammaWord& u, const GammaWord& v) {
    if (u.gamma != v.gamma) throw std::invalid_argument("gamma mismatch");
    if (!is_dias_element(u) || !is_dias_element(v))
        throw std::invalid_argument("operands must be single-zero words");
    return concat(h(a, u), v);
}

int Evbt::node_count() const {
    if (is_leaf()) return 0;
    return 1 + kids[0].node_count() + kids[1].node_count();
}

std::strong_ordering Evbt::operator<=>(const Evbt& o) const {
    if (auto c = kids.size() <=> o.kids.size(); c != 0) return c;
    if (is_leaf()) return std::strong_ordering::equal;
    if (auto c = llab <=> o.llab; c != 0) return c;
    if (auto c = rlab <=> o.rlab; c != 0) return c;
    if (auto c = kids[0] <=> o.kids[0]; c != 0) return c;
    return kids[1] <=> o.kids[1];
}

Evbt evbt_node(Evbt left, int llab, Evbt right, int rlab) {
    Evbt t;
    if (left.is_leaf() != (llab == kInfLabel) || right.is_leaf() != (rlab == kInfLabel))
        throw std::invalid_argument("leaf edges must carry inf, internal edges a label");
    t.kids = {std::move(left), std::move(right)};
    t.llab = llab;
    t.rlab = rlab;
    return t;
}

Evbt evbt_single() { return evbt_node(Evbt{}, kInfLabel, Evbt{}, kInfLabel); }

bool evbt_valid(const Evbt& t, int gamma) {
    if (t.is_leaf()) return true;
    if (t.kids.size() != 2) return false;
    const bool lok = t.kids[0].is_leaf() ? t.llab == kInfLabel : (t.llab >= 1 && t.llab <= gamma);
    const bool rok = t.kids[1].is_leaf() ? t.rlab == kInfLabel : (t.rlab >= 1 && t.rlab <= gamma);
    return lok && rok && evbt_valid(t.kids[0], gamma) && evbt_valid(t.kids[1], gamma);
}

void EvbtLinComb::add(const Evbt& t, const Rat& c) {
    if (sgn(c) == 0) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
}

EvbtLinComb operator+(EvbtLinComb a, const EvbtLinComb& b) {
    for (const auto& [t, c] : b.terms) a.add(t, c);
    return a;
}

EvbtLinComb operator-(EvbtLinComb a, const EvbtLinComb& b) {
    for (const auto& [t, c] : b.terms) a.add(t, -c);
    return a;
}

namespace {

EvbtLinComb dendr_left_impl(int a, const Evbt& s, const Evbt& t);
EvbtLinComb dendr_right_impl(int a, const Evbt& s, const Evbt& t);

// s <_a t: s keeps the root; the recursion walks s's right spine. The label
// parameter may be kInfLabel, which acts as a neutral element for min.
EvbtLinComb dendr_left_impl(int a, const Evbt& s, const Evbt& t) {
    EvbtLinComb out;
    if (t.is_leaf()) {
        if (!s.is_leaf()) out.add(s, Rat(1));  // s < leaf = s
        return out;
    }
    if (s.is_leaf()) return out;  // leaf < t = 0
    const int z = std::min(a, s.rlab);
    const EvbtLinComb inner =
        dendr_left_impl(a, s.kids[1], t) + dendr_right_impl(s.rlab, s.kids[1], t);
    for (const auto& [sub, c] : inner.terms) out.add(evbt_node(s.kids[0], s.llab, sub, z), c);
    return out;
}

// s >_a t: t keeps the root; the recursion walks t's left spine.
EvbtLinComb dendr_right_impl(int a, const Evbt& s, const Evbt& t) {
    EvbtLinComb out;
    if (s.is_leaf()) {
        if (!t.is_leaf()) out.add(t, Rat(1));  // leaf > t = t
        return out;
    }
    if (t.is_leaf()) return out;  // s > leaf = 0
    const int z = std::min(a, t.llab);
    const EvbtLinComb inner =
        dendr_right_impl(a, s, t.kids[0]) + dendr_left_impl(t.llab, s, t.kids[0]);
    for (const auto& [sub, c] : inner.terms) out.add(evbt_node(sub, z, t.kids[1], t.rlab), c);
    return out;
}

}  // namespace

EvbtLinComb dendr_left(int a, const Evbt& s, const Evbt& t) {
    if (s.is_leaf() && t.is_leaf()) throw std::invalid_argument("product of two leaves is undefined");
    return dendr_left_impl(a, s, t);
}

EvbtLinComb dendr_right(int a, const Evbt& s, const Evbt& t) {
    if (s.is_leaf() && t.is_leaf()) throw std::invalid_argument("product of two leaves is undefined");
    return dendr_right_impl(a, s, t);
}

Evbt dup_under(int a, const Evbt& x, const Evbt& y) {
    if (x.is_leaf() && y.is_leaf()) throw std::invalid_argument("product of two leaves is undefined");
    if (y.is_leaf()) return x;  // unit rule
    if (x.is_leaf()) throw std::invalid_argument("leaf under tree vanishes; not an element");
    Evbt r = x;
    if (r.kids[1].is_leaf()) {
        r.kids[1] = y;
        r.rlab = a;
    } else {
        r.rlab = std::min(a, r.rlab);
        r.kids[1] = dup_under(a, r.kids[1], y);
    }
    return r;
}

Evbt dup_over(int a, const Evbt& x, const Evbt& y) {
    if (x.is_leaf() && y.is_leaf()) throw std::invalid_argument("product of two leaves is undefined");
    if (x.is_leaf()) return y;  // unit rule
    if (y.is_leaf()) throw std::invalid_argument("tree over leaf vanishes; not an element");
    Evbt r = y;
    if (r.kids[0].is_leaf()) {
        r.kids[0] = x;
        r.llab = a;
    } else {
        r.llab = std::min(a, r.llab);
        r.kids[0] = dup_over(a, x, r.kids[0]);
    }
    return r;
}

namespace {

std::string label_str(int l) { return l == kInfLabel ? "inf" : std::to_string(l); }

}  // namespace

std::string to_string(const Evbt& t) {
    if (t.is_leaf()) return "_";
    return "( " + to_string(t.kids[0]) + " :" + label_str(t.llab) + " " + to_string(t.kids[1]) +
           " :" + label_str(t.rlab) + " )";
}

namespace {

int parse_label(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || s[pos] != ':') throw std::invalid_argument("expected ':' label");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != ')') ++pos;
    const std::string tok = s.substr(start, pos - start);
    if (tok == "inf") return kInfLabel;
    return std::stoi(tok);
}

Evbt parse_evbt_at(const std::string& s, std::size_t& pos) {
    auto skip_ws = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of tree literal");
    if (s[pos] == '_') {
        ++pos;
        return Evbt{};
    }
    if (s[pos] != '(') throw std::invalid_argument("expected '(' or '_'");
    ++pos;
    Evbt left = parse_evbt_at(s, pos);
    auto skip = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
    skip();
    const int llab = parse_label(s, pos);
    Evbt right = parse_evbt_at(s, pos);
    skip();
    const int rlab = parse_label(s, pos);
    skip();
    if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("missing ')'");
    ++pos;
    return evbt_node(std::move(left), llab, std::move(right), rlab);
}

}  // namespace

Evbt parse_evbt(const std::string& text) {
    std::size_t pos = 0;
    Evbt t = parse_evbt_at(text, pos);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size()) throw std::invalid_argument("trailing characters in tree literal");
    return t;
}

std::string to_string(const EvbtLinComb& c) {
    if (c.terms.empty()) return "0";
    std::string out;
    for (const auto& [t, coef] : c.terms) {
        Rat a = abs(coef);
        out += (out.empty() ? "" : " ");
        out += (sgn(coef) < 0 ? "-" : "+");
        out += to_string(a) + "*" + to_string(t);
    }
    return out;
}

Evbt random_evbt(std::mt19937_64& rng, int gamma, int nodes) {
    if (nodes <= 0) return Evbt{};
    std::uniform_int_distribution<int> split(0, nodes - 1);
    std::uniform_int_distribution<int> lab(1, gamma);
    const int left_nodes = split(rng);
    Evbt left = random_evbt(rng, gamma, left_nodes);
    Evbt right = random_evbt(rng, gamma, nodes - 1 - left_nodes);
    const int llab = left.is_leaf() ? kInfLabel : lab(rng);
    const int rlab = right.is_leaf() ? kInfLabel : lab(rng);
    return evbt_node(std::move(left), llab, std::move(right), rlab);
}

SetsAlgebra::Elem SetsAlgebra::star(int, const Elem& x, const Elem& y) const {
    Elem out;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

SetsAlgebra::Elem SetsAlgebra::proj(int a, const Elem& x) const {
    Elem out;
    for (int v : x)
        if (v >= a && v <= gamma) out.push_back(v);
    return out;
}

WordsAlgebra::Elem WordsAlgebra::star(int, const Elem& x, const Elem& y) const {
    Elem out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

WordsAlgebra::Elem WordsAlgebra::proj(int a, const Elem& x) const {
    Elem out;
    for (int v : x)
        if (v >= a) out.push_back(v);
    return out;
}

MarkedWordsAlgebra::Elem MarkedWordsAlgebra::star(int a, const Elem& x, const Elem& y) const {
    int c = a;
    for (const auto& l : x)
        if (l.marked) c = std::max(c, l.value);
    for (const auto& l : y)
        if (l.marked) c = std::max(c, l.value);
    Elem out = x;
    out.insert(out.end(), y.begin(), y.end());
    for (auto& l : out)
        if (l.marked) l.value = c;
    return out;
}

MarkedWordsAlgebra::Elem MarkedWordsAlgebra::proj(int a, const Elem& x) const {
    Elem out = x;
    for (auto& l : out)
        if (!l.marked && l.value < a) l.value = a;
    return out;
}

FreeWordsAlgebra::Elem FreeWordsAlgebra::star(int, const Elem& x, const Elem& y) const {
    if (x.gamma != y.gamma) throw std::invalid_argument("gamma mismatch");
    return concat(x, y);
}

std::string to_string(const MarkedWordsAlgebra::Elem& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i].value);
        if (w[i].marked) out += '\'';
    }
    return out;
}

}  // namespace operadkit
