#include "operadkit/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace operadkit {

GeneratorSet::GeneratorSet(std::vector<Generator> es) : entries(std::move(es)) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].arity < 1) throw std::invalid_argument("generator arity must be positive");
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i].name == entries[j].name)
                throw std::invalid_argument("duplicate generator name: " + entries[i].name);
    }
}

int GeneratorSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].name == name) return static_cast<int>(i);
    return -1;
}

int SyntaxTree::arity() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& k : kids) n += k.arity();
    return n;
}

int SyntaxTree::degree() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& k : kids) n += k.degree();
    return n;
}

std::strong_ordering SyntaxTree::operator<=>(const SyntaxTree& o) const {
    if (auto c = gen <=> o.gen; c != 0) return c;
    if (auto c = kids.size() <=> o.kids.size(); c != 0) return c;
    for (std::size_t i = 0; i < kids.size(); ++i)
        if (auto c = kids[i] <=> o.kids[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

SyntaxTree corolla(const GeneratorSet& gens, int gen_index) {
    if (gen_index < 0 || gen_index >= gens.size())
        throw std::invalid_argument("generator index out of range");
    SyntaxTree t;
    t.gen = gen_index;
    t.kids.assign(static_cast<std::size_t>(gens.at(gen_index).arity), leaf());
    return t;
}

namespace {

// Replaces the i-th leaf (1-based, counting down from `next`) by t.
bool graft_at(SyntaxTree& s, int& next, const SyntaxTree& t) {
    if (s.is_leaf()) {
        if (--next == 0) {
            s = t;
            return true;
        }
        return false;
    }
    for (auto& k : s.kids)
        if (graft_at(k, next, t)) return true;
    return false;
}

}  // namespace

SyntaxTree graft(const SyntaxTree& s, int i, const SyntaxTree& t) {
    if (i < 1 || i > s.arity()) throw std::invalid_argument("graft position out of range");
    SyntaxTree r = s;
    int next = i;
    graft_at(r, next, t);
    return r;
}

SyntaxTree deg2_tree(const GeneratorSet& gens, int x, int pos, int y) {
    if (pos != 1 && pos != 2) throw std::invalid_argument("binary position must be 1 or 2");
    return graft(corolla(gens, x), pos, corolla(gens, y));
}

std::vector<SyntaxTree> enumerate_trees(const GeneratorSet& gens, int n) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    std::vector<std::vector<SyntaxTree>> by_arity(static_cast<std::size_t>(n) + 1);
    by_arity[1] = {leaf()};
    for (int m = 2; m <= n; ++m) {
        auto& out = by_arity[static_cast<std::size_t>(m)];
        for (int gi = 0; gi < gens.size(); ++gi) {
            const int k = gens.at(gi).arity;
            if (k < 2 || k > m) continue;
            std::vector<SyntaxTree> parts(static_cast<std::size_t>(k));
            auto rec = [&](auto&& self, int slot, int left) -> void {
                if (slot == k) {
                    if (left == 0) {
                        SyntaxTree t;
                        t.gen = gi;
                        t.kids = parts;
                        out.push_back(t);
                    }
                    return;
                }
                const int remaining_slots = k - slot - 1;
                for (int take = 1; take <= left - remaining_slots; ++take) {
                    for (const auto& sub : by_arity[static_cast<std::size_t>(take)]) {
                        parts[static_cast<std::size_t>(slot)] = sub;
                        self(self, slot + 1, left - take);
                    }
                }
            };
            rec(rec, 0, m);
        }
        std::sort(out.begin(), out.end());
    }
    return by_arity[static_cast<std::size_t>(n)];
}

void TreeLinComb::add(const SyntaxTree& t, const Rat& c) {
    if (sgn(c) == 0) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
}

TreeLinComb operator+(TreeLinComb a, const TreeLinComb& b) {
    for (const auto& [t, c] : b.terms) a.add(t, c);
    return a;
}

TreeLinComb operator-(TreeLinComb a, const TreeLinComb& b) {
    for (const auto& [t, c] : b.terms) a.add(t, -c);
    return a;
}

TreeLinComb operator*(const Rat& c, TreeLinComb a) {
    if (sgn(c) == 0) return {};
    for (auto& [t, v] : a.terms) v *= c;
    return a;
}

TreeLinComb graft(const TreeLinComb& a, int i, const TreeLinComb& b) {
    TreeLinComb out;
    for (const auto& [s, cs] : a.terms)
        for (const auto& [t, ct] : b.terms) out.add(graft(s, i, t), cs * ct);
    return out;
}

namespace {

GeneratorSet two_family(int gamma, const char* left, const char* right) {
    std::vector<Generator> es;
    for (int a = 1; a <= gamma; ++a) es.push_back({left + std::to_string(a), 2});
    for (int a = 1; a <= gamma; ++a) es.push_back({right + std::to_string(a), 2});
    return GeneratorSet(std::move(es));
}

GeneratorSet one_family(int gamma, const char* name) {
    std::vector<Generator> es;
    for (int a = 1; a <= gamma; ++a) es.push_back({name + std::to_string(a), 2});
    return GeneratorSet(std::move(es));
}

GeneratorSet middle_family(int gamma, const char* left, const char* mid, const char* right) {
    std::vector<Generator> es;
    for (int a = 1; a <= gamma; ++a) es.push_back({left + std::to_string(a), 2});
    es.push_back({mid, 2});
    for (int a = 1; a <= gamma; ++a) es.push_back({right + std::to_string(a), 2});
    return GeneratorSet(std::move(es));
}

}  // namespace

GeneratorSet dias_generators(int gamma) { return two_family(gamma, "l", "r"); }
GeneratorSet dias_kbasis_generators(int gamma) { return two_family(gamma, "kl", "kr"); }
GeneratorSet trias_generators(int gamma) { return middle_family(gamma, "l", "bot", "r"); }
GeneratorSet dendr_generators(int gamma) { return two_family(gamma, "pl", "pr"); }
GeneratorSet dendr_concise_generators(int gamma) { return two_family(gamma, "lt", "gt"); }
GeneratorSet tdendr_generators(int gamma) { return middle_family(gamma, "pl", "wdg", "pr"); }
GeneratorSet as_generators(int gamma) { return one_family(gamma, "st"); }
GeneratorSet das_generators(int gamma) { return one_family(gamma, "dd"); }
GeneratorSet das_simple_generators(int gamma) { return one_family(gamma, "d"); }
GeneratorSet dup_generators(int gamma) { return two_family(gamma, "u", "o"); }

int dias_left_index(int gamma, int a) {
    if (a < 1 || a > gamma) throw std::invalid_argument("label out of range");
    return a - 1;
}
int dias_right_index(int gamma, int a) {
    if (a < 1 || a > gamma) throw std::invalid_argument("label out of range");
    return gamma + a - 1;
}
int trias_left_index(int gamma, int a) {
    if (a < 1 || a > gamma) throw std::invalid_argument("label out of range");
    return a - 1;
}
int trias_bot_index(int gamma) { return gamma; }
int trias_right_index(int gamma, int a) {
    if (a < 1 || a > gamma) throw std::invalid_argument("label out of range");
    return gamma + a;
}

namespace {

// Classifies an index of the dias or trias alphabet. kind: 0 left, 1 right,
// 2 bottom. label is the 1-based a for left/right.
void classify_word_generator(int gamma, bool trias, int gen, int& kind, int& label) {
    if (!trias) {
        if (gen < 0 || gen >= 2 * gamma) throw std::invalid_argument("foreign generator label");
        kind = gen < gamma ? 0 : 1;
        label = (gen < gamma ? gen : gen - gamma) + 1;
        return;
    }
    if (gen < 0 || gen >= 2 * gamma + 1) throw std::invalid_argument("foreign generator label");
    if (gen < gamma) {
        kind = 0;
        label = gen + 1;
    } else if (gen == gamma) {
        kind = 2;
        label = 0;
    } else {
        kind = 1;
        label = gen - gamma;
    }
}

void word_of_tree_walk(const SyntaxTree& t, int gamma, bool trias, int best,
                       std::vector<std::uint8_t>& out) {
    if (t.is_leaf()) {
        out.push_back(static_cast<std::uint8_t>(best));
        return;
    }
    int kind, label;
    classify_word_generator(gamma, trias, t.gen, kind, label);
    int left_best = best, right_best = best;
    if (kind == 0) right_best = std::max(best, label);  // l_a: eligible in the right subtree
    if (kind == 1) left_best = std::max(best, label);   // r_a: eligible in the left subtree
    word_of_tree_walk(t.kids[0], gamma, trias, left_best, out);
    word_of_tree_walk(t.kids[1], gamma, trias, right_best, out);
}

}  // namespace

GammaWord word_of_tree(const SyntaxTree& t, int gamma, bool trias) {
    std::vector<std::uint8_t> letters;
    letters.reserve(static_cast<std::size_t>(t.arity()));
    word_of_tree_walk(t, gamma, trias, 0, letters);
    return GammaWord(gamma, std::move(letters));
}

namespace {

// Right comb r_{u1}(leaf, r_{u2}(leaf, ...)) built over the given index map.
template <typename RightIndex>
SyntaxTree right_comb(const std::vector<int>& u, RightIndex right_index) {
    SyntaxTree t = leaf();
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
        SyntaxTree n;
        n.gen = right_index(*it);
        n.kids = {leaf(), t};
        t = n;
    }
    return t;
}

template <typename LeftIndex>
SyntaxTree wrap_left_comb(SyntaxTree t, const std::vector<int>& v, LeftIndex left_index) {
    for (int a : v) {
        SyntaxTree n;
        n.gen = left_index(a);
        n.kids = {t, leaf()};
        t = n;
    }
    return t;
}

}  // namespace

SyntaxTree hook_tree(const GammaWord& x) {
    if (!is_dias_element(x)) throw std::invalid_argument("hook tree needs a pluriassociative word");
    const int r = root_position(x);
    std::vector<int> u, v;
    for (int i = 1; i < r; ++i) u.push_back(x.letter(i));
    for (int i = r + 1; i <= x.arity(); ++i) v.push_back(x.letter(i));
    const int g = x.gamma;
    SyntaxTree t = right_comb(u, [g](int a) { return dias_right_index(g, a); });
    return wrap_left_comb(t, v, [g](int a) { return dias_left_index(g, a); });
}

SyntaxTree extended_hook_tree(const GammaWord& x) {
    if (!is_trias_element(x)) throw std::invalid_argument("extended hook needs a pluritriassociative word");
    const int g = x.gamma;
    std::vector<int> zero_pos;
    for (int i = 1; i <= x.arity(); ++i)
        if (x.letter(i) == 0) zero_pos.push_back(i);
    // u runs through the first zero up to just before the second one.
    const int u_end = zero_pos.size() == 1 ? x.arity() : zero_pos[1] - 1;
    std::vector<int> u_left, u_right;
    for (int i = 1; i < zero_pos[0]; ++i) u_left.push_back(x.letter(i));
    for (int i = zero_pos[0] + 1; i <= u_end; ++i) u_right.push_back(x.letter(i));
    SyntaxTree t = right_comb(u_left, [g](int a) { return trias_right_index(g, a); });
    t = wrap_left_comb(t, u_right, [g](int a) { return trias_left_index(g, a); });
    for (std::size_t b = 1; b < zero_pos.size(); ++b) {
        const int block_end = b + 1 < zero_pos.size() ? zero_pos[b + 1] - 1 : x.arity();
        std::vector<int> v;
        for (int i = zero_pos[b] + 1; i <= block_end; ++i) v.push_back(x.letter(i));
        SyntaxTree comb = wrap_left_comb(leaf(), v, [g](int a) { return trias_left_index(g, a); });
        SyntaxTree n;
        n.gen = trias_bot_index(g);
        n.kids = {t, comb};
        t = n;
    }
    return t;
}

namespace {

// Walks a left comb of l-nodes from the root, then a right comb of r-nodes.
bool is_hook_shape(const SyntaxTree& t, int gamma, bool trias) {
    const SyntaxTree* p = &t;
    int kind, label;
    while (!p->is_leaf()) {
        classify_word_generator(gamma, trias, p->gen, kind, label);
        if (kind != 0) break;
        if (!p->kids[1].is_leaf()) return false;
        p = &p->kids[0];
    }
    while (!p->is_leaf()) {
        classify_word_generator(gamma, trias, p->gen, kind, label);
        if (kind != 1) return false;
        if (!p->kids[0].is_leaf()) return false;
        p = &p->kids[1];
    }
    return true;
}

bool is_pure_left_comb(const SyntaxTree& t, int gamma, bool trias) {
    const SyntaxTree* p = &t;
    while (!p->is_leaf()) {
        int kind, label;
        classify_word_generator(gamma, trias, p->gen, kind, label);
        if (kind != 0) return false;
        if (!p->kids[1].is_leaf()) return false;
        p = &p->kids[0];
    }
    return true;
}

}  // namespace

bool is_hook_tree(const SyntaxTree& t, int gamma) { return is_hook_shape(t, gamma, false); }

bool is_extended_hook_tree(const SyntaxTree& t, int gamma) {
    const SyntaxTree* p = &t;
    while (!p->is_leaf() && p->gen == trias_bot_index(gamma)) {
        if (!is_pure_left_comb(p->kids[1], gamma, true)) return false;
        p = &p->kids[0];
    }
    if (!p->is_leaf()) {
        int kind, label;
        classify_word_generator(gamma, true, p->gen, kind, label);
    }
    // Below the bot chain no further bot node may occur.
    auto no_bot = [&](const SyntaxTree& s, auto&& self) -> bool {
        if (s.is_leaf()) return true;
        if (s.gen == trias_bot_index(gamma)) return false;
        return self(s.kids[0], self) && self(s.kids[1], self);
    };
    return no_bot(*p, no_bot) && is_hook_shape(*p, gamma, true);
}

std::string to_string(const GeneratorSet& gens, const SyntaxTree& t) {
    if (t.is_leaf()) return "_";
    std::string s = "(" + gens.at(t.gen).name;
    for (const auto& k : t.kids) s += " " + to_string(gens, k);
    return s + ")";
}

namespace {

SyntaxTree parse_tree_at(const GeneratorSet& gens, const std::string& s, std::size_t& pos) {
    auto skip_ws = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of tree literal");
    if (s[pos] == '_') {
        ++pos;
        return leaf();
    }
    if (s[pos] != '(')
        throw std::invalid_argument("expected '(' or '_' at offset " + std::to_string(pos));
    ++pos;
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '(' && s[pos] != ')') ++pos;
    const std::string name = s.substr(start, pos - start);
    const int gi = gens.index_of(name);
    if (gi < 0) throw std::invalid_argument("unknown generator: " + name);
    SyntaxTree t;
    t.gen = gi;
    skip_ws();
    while (pos < s.size() && s[pos] != ')') {
        t.kids.push_back(parse_tree_at(gens, s, pos));
        skip_ws();
    }
    if (pos >= s.size()) throw std::invalid_argument("missing ')' in tree literal");
    ++pos;
    if (static_cast<int>(t.kids.size()) != gens.at(gi).arity)
        throw std::invalid_argument("arity mismatch for generator " + name);
    return t;
}

}  // namespace

SyntaxTree parse_tree(const GeneratorSet& gens, const std::string& text) {
    std::size_t pos = 0;
    SyntaxTree t = parse_tree_at(gens, text, pos);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size()) throw std::invalid_argument("trailing characters in tree literal");
    return t;
}

std::string to_string(const GeneratorSet& gens, const TreeLinComb& c) {
    if (c.terms.empty()) return "0";
    std::string out;
    for (const auto& [t, coef] : c.terms) {
        Rat a = abs(coef);
        out += (out.empty() ? "" : " ");
        out += (sgn(coef) < 0 ? "-" : "+");
        out += to_string(a) + "*" + to_string(gens, t);
    }
    return out;
}

}  // namespace operadkit
