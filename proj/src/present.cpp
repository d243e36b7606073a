#include "operadkit/present.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace operadkit {

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rat& scale_b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat v = scale_b * b[j].second;
            if (sgn(v) != 0) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Rat v = a[i].second + scale_b * b[j].second;
            if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void sparse_normalize(SparseVec& v) {
    if (v.empty()) return;
    const Rat lead = v.front().second;
    for (auto& [c, val] : v) val /= lead;
}

int deg2_index(int g, int x, int pos, int y) {
    if (x < 0 || x >= g || y < 0 || y >= g || (pos != 1 && pos != 2))
        throw std::invalid_argument("bad degree-2 coordinate");
    return (x * 2 + pos - 1) * g + y;
}

void deg2_unindex(int g, int idx, int& x, int& pos, int& y) {
    y = idx % g;
    const int t = idx / g;
    pos = t % 2 + 1;
    x = t / 2;
}

bool Echelon::insert(SparseVec row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    sparse_normalize(row);
    const int lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

SparseVec Echelon::reduce(SparseVec v) const {
    std::map<int, Rat> m;
    for (auto& [c, val] : v) m.emplace(c, std::move(val));
    auto it = m.begin();
    while (it != m.end()) {
        if (sgn(it->second) == 0) {
            it = m.erase(it);
            continue;
        }
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const Rat c = it->second;
        const int cur = it->first;
        for (const auto& [col, val] : p->second) m[col] -= c * val;
        // Entries below cur are untouched; cur itself is now zero.
        it = m.lower_bound(cur);
        while (it != m.end() && sgn(it->second) == 0) it = m.erase(it);
    }
    SparseVec out;
    out.reserve(m.size());
    for (auto& [c, val] : m)
        if (sgn(val) != 0) out.emplace_back(c, val);
    return out;
}

Presentation::Presentation(GeneratorSet g, int gamma_, std::vector<SparseVec> rels)
    : gens(std::move(g)), gamma(gamma_), relations(std::move(rels)) {
    for (const auto& e : gens.entries)
        if (e.arity != 2) throw std::invalid_argument("presentation generators must be binary");
    const int n = gens.size();
    Echelon ech;
    for (auto& r : relations) {
        if (r.empty()) throw std::invalid_argument("zero relation");
        for (const auto& [c, v] : r)
            if (c < 0 || c >= 2 * n * n) throw std::invalid_argument("relation coordinate out of range");
        if (!ech.insert(r)) throw std::invalid_argument("relations are not linearly independent");
    }
}

TreeLinComb relation_to_lincomb(const GeneratorSet& gens, const SparseVec& row) {
    TreeLinComb out;
    const int g = gens.size();
    for (const auto& [idx, c] : row) {
        int x, pos, y;
        deg2_unindex(g, idx, x, pos, y);
        out.add(deg2_tree(gens, x, pos, y), c);
    }
    return out;
}

SparseVec lincomb_to_relation(const GeneratorSet& gens, const TreeLinComb& c) {
    std::map<int, Rat> m;
    const int g = gens.size();
    for (const auto& [t, coef] : c.terms) {
        if (t.degree() != 2) throw std::invalid_argument("not a degree-2 combination");
        const int x = t.gen;
        int pos = -1;
        for (std::size_t i = 0; i < t.kids.size(); ++i)
            if (!t.kids[i].is_leaf()) pos = static_cast<int>(i) + 1;
        const SyntaxTree& child = t.kids[static_cast<std::size_t>(pos - 1)];
        m[deg2_index(g, x, pos, child.gen)] += coef;
    }
    SparseVec out;
    for (auto& [i, v] : m)
        if (sgn(v) != 0) out.emplace_back(i, v);
    return out;
}

namespace {

// Assembles one relation row from (x, pos, y, coefficient) quadruples.
SparseVec row_of(int g, std::initializer_list<std::tuple<int, int, int, int>> terms) {
    std::map<int, Rat> m;
    for (const auto& [x, pos, y, c] : terms) m[deg2_index(g, x, pos, y)] += Rat(c);
    SparseVec out;
    for (auto& [i, v] : m)
        if (sgn(v) != 0) out.emplace_back(i, v);
    return out;
}

class RowBuilder {
  public:
    explicit RowBuilder(int gen_count) : g_(gen_count) {}
    RowBuilder& term(int x, int pos, int y, int c = 1) {
        m_[deg2_index(g_, x, pos, y)] += Rat(c);
        return *this;
    }
    SparseVec done() {
        SparseVec out;
        for (auto& [i, v] : m_)
            if (sgn(v) != 0) out.emplace_back(i, v);
        m_.clear();
        return out;
    }

  private:
    int g_;
    std::map<int, Rat> m_;
};

}  // namespace

Presentation dias_presentation(int gamma) {
    GeneratorSet gens = dias_generators(gamma);
    const int g = gens.size();
    auto l = [&](int a) { return dias_left_index(gamma, a); };
    auto r = [&](int a) { return dias_right_index(gamma, a); };
    std::vector<SparseVec> rels;
    for (int a = 1; a <= gamma; ++a)
        for (int b = 1; b <= gamma; ++b) {
            const int m = std::max(a, b);
            rels.push_back(row_of(g, {{l(a), 1, r(b), 1}, {r(b), 2, l(a), -1}}));
            rels.push_back(row_of(g, {{l(a), 1, l(m), 1}, {l(a), 2, r(b), -1}}));
            rels.push_back(row_of(g, {{r(a), 1, l(b), 1}, {r(a), 2, r(m), -1}}));
            rels.push_back(row_of(g, {{l(m), 1, l(a), 1}, {l(a), 2, l(b), -1}}));
            rels.push_back(row_of(g, {{r(a), 1, r(b), 1}, {r(m), 2, r(a), -1}}));
        }
    return Presentation(std::move(gens), gamma, std::move(rels));
}

Presentation dias_kbasis_presentation(int gamma) {
    GeneratorSet gens = dias_kbasis_generators(gamma);
    const int g = gens.size();
    auto kl = [&](int a) { return a - 1; };
    auto kr = [&](int a) { return gamma + a - 1; };
    std::vector<SparseVec> rels;
    RowBuilder row(g);
    for (int a = 1; a <= gamma; ++a)
        for (int b = 1; b <= gamma; ++b)
            rels.push_back(row.term(kl(a), 1, kr(b)).term(kr(b), 2, kl(a), -1).done());
    for (int a = 1; a <= gamma; ++a)
        for (int b = a + 1; b <= gamma; ++b) {
            rels.push_back(row.term(kr(b), 1, kr(a)).done());
            rels.push_back(row.term(kl(b), 2, kl(a)).done());
            rels.push_back(row.term(kr(b), 1, kl(a)).done());
            rels.push_back(row.term(kl(b), 2, kr(a)).done());
            rels.push_back(row.term(kr(a), 1, kr(b)).term(kr(b), 2, kr(a), -1).done());
            rels.push_back(row.term(kl(b), 1, kl(a)).term(kl(a), 2, kl(b), -1).done());
            rels.push_back(row.term(kr(a), 1, kl(b)).term(kr(a), 2, kr(b), -1).done());
            rels.push_back(row.term(kl(a), 1, kl(b)).term(kl(a), 2, kr(b), -1).done());
        }
    for (int a = 1; a <= gamma; ++a) {
        row.term(kr(a), 1, kr(a));
        for (int b = a; b <= gamma; ++b) row.term(kr(a), 2, kr(b), -1);
        rels.push_back(row.done());
        for (int b = a; b <= gamma; ++b) row.term(kl(a), 1, kl(b));
        rels.push_back(row.term(kl(a), 2, kl(a), -1).done());
        row.term(kr(a), 1, kl(a));
        for (int b = a; b <= gamma; ++b) row.term(kr(b), 2, kr(a), -1);
        rels.push_back(row.done());
        for (int b = a; b <= gamma; ++b) row.term(kl(b), 1, kl(a));
        rels.push_back(row.term(kl(a), 2, kr(a), -1).done());
    }
    return Presentation(std::move(gens), gamma, std::move(rels));
}

Presentation dendr_presentation(int gamma) {
    GeneratorSet gens = dendr_generators(gamma);
    const int g = gens.size();
    auto pl = [&](int a) { return a - 1; };
    auto pr = [&](int a) { return gamma + a - 1; };
    std::vector<SparseVec> rels;
    RowBuilder row(g);
    for (int a = 1; a <= gamma; ++a)
        for (int b = 1; b <= gamma; ++b)
            rels.push_back(row.term(pl(a), 1, pr(b)).term(pr(b), 2, pl(a), -1).done());
    for (int a = 1; a <= gamma; ++a)
        for (int b = a + 1; b <= gamma; ++b) {
            rels.push_back(row.term(pl(a), 1, pl(b)).term(pl(a), 2, pr(b), -1).done());
            rels.push_back(row.term(pr(a), 1, pl(b)).term(pr(a), 2, pr(b), -1).done());
            rels.push_back(row.term(pl(b), 1, pl(a)).term(pl(a), 2, pl(b), -1).done());
            rels.push_back(row.term(pr(a), 1, pr(b)).term(pr(b), 2, pr(a), -1).done());
        }
    for (int d = 1; d <= gamma; ++d) {
        row.term(pl(d), 1, pl(d));
        for (int c = 1; c <= d; ++c) row.term(pl(d), 2, pl(c), -1).term(pl(d), 2, pr(c), -1);
        rels.push_back(row.done());
        for (int c = 1; c <= d; ++c) row.term(pr(d), 1, pr(c)).term(pr(d), 1, pl(c));
        rels.push_back(row.term(pr(d), 2, pr(d), -1).done());
    }
    return Presentation(std::move(gens), gamma, std::move(rels));
}

Presentation dendr_concise_presentation(int gamma) {
    GeneratorSet gens = dendr_concise_generators(gamma);
    const int g = gens.size();
    auto lt = [&](int a) { return a - 1; };
    auto gt = [&](int a) { return gamma + a - 1; };
    std::vector<SparseVec> rels;
    RowBuilder row(g);
    for (int a = 1; a <= gamma; ++a)
        for (int b = 1; b <= gamma; ++b) {
            const int m = std::min(a, b);
            rels.push_back(row.term(lt(a), 1, gt(b)).term(gt(b), 2, lt(a), -1).done());
            rels.push_back(
                row.term(lt(a), 1, lt(b)).term(lt(m), 2, lt(a), -1).term(lt(m), 2, gt(b), -1).done());
            rels.push_back(
                row.term(gt(m), 1, lt(b)).term(gt(m), 1, gt(a)).term(gt(a), 2, gt(b), -1).done());
        }
    return Presentation(std::move(gens), gamma, std::move(rels));
}

Presentation as_presentation(int gamma) {
    GeneratorSet gens = as_generators(gamma);
    const int g = gens.size();
    auto st = [&](int a) { return a - 1; };
    std::vector<SparseVec> rels;
    RowBuilder row(g);
    for (int b = 1; b <= gamma; ++b)
        for (int a = 1; a <= b; ++a)
            rels.push_back(row.term(st(a), 1, st(b)).term(st(b), 2, st(b), -1).done());
    for (int b = 1; b <= gamma; ++b)
        for (int a = 1; a < b; ++a) {
            rels.push_back(row.term(st(b), 1, st(a)).term(st(b), 2, st(b), -1).done());
            rels.push_back(row.term(st(a), 2, st(b)).term(st(b), 2, st(b), -1).done());
            rels.push_back(row.term(st(b), 2, st(a)).term(st(b), 2, st(b), -1).done());
        }
    return Presentation(std::move(gens), gamma, std::move(rels));
}

Presentation das_presentation(int gamma) {
    GeneratorSet gens = das_generators(gamma);
    const int g = gens.size();
    auto dd = [&](int a) { return a - 1; };
    std::vector<SparseVec> rels;
    RowBuilder row(g);
    for (int b = 1; b <= gamma; ++b) {
        row.term(dd(b), 1, dd(b)).term(dd(b), 2, dd(b), -1);
        for (int a = 1; a < b; ++a)
            row.term(dd(a), 1, dd(b))
                .term(dd(b), 1, dd(a))
                .term(dd(a), 2, dd(b), -1)
                .term(dd(b), 2, dd(a), -1);
        rels.push_back(row.done());
    }
    return Presentation(std::move(gens), gamma, std::move(rels));
}

Presentation das_simple_presentation(int gamma) {
    GeneratorSet gens = das_simple_generators(gamma);
    const int g = gens.size();
    std::vector<SparseVec> rels;
    RowBuilder row(g);
    for (int a = 1; a <= gamma; ++a)
        rels.push_back(row.term(a - 1, 1, a - 1).term(a - 1, 2, a - 1, -1).done());
    return Presentation(std::move(gens), gamma, std::move(rels));
}

Presentation dup_presentation(int gamma) {
    GeneratorSet gens = dup_generators(gamma);
    const int g = gens.size();
    auto u = [&](int a) { return a - 1; };
    auto o = [&](int a) { return gamma + a - 1; };
    std::vector<SparseVec> rels;
    RowBuilder row(g);
    for (int a = 1; a <= gamma; ++a)
        for (int b = 1; b <= gamma; ++b) {
            const int m = std::min(a, b);
            rels.push_back(row.term(u(a), 1, o(b)).term(o(b), 2, u(a), -1).done());
            rels.push_back(row.term(u(a), 1, u(b)).term(u(m), 2, u(a), -1).done());
            rels.push_back(row.term(o(m), 1, o(a)).term(o(a), 2, o(b), -1).done());
        }
    return Presentation(std::move(gens), gamma, std::move(rels));
}

Presentation trias_presentation(int gamma) {
    GeneratorSet gens = trias_generators(gamma);
    const int g = gens.size();
    auto l = [&](int a) { return trias_left_index(gamma, a); };
    auto r = [&](int a) { return trias_right_index(gamma, a); };
    const int bot = trias_bot_index(gamma);
    std::vector<SparseVec> rels;
    RowBuilder row(g);
    rels.push_back(row.term(bot, 1, bot).term(bot, 2, bot, -1).done());
    for (int a = 1; a <= gamma; ++a) {
        rels.push_back(row.term(l(a), 1, bot).term(bot, 2, l(a), -1).done());
        rels.push_back(row.term(bot, 1, r(a)).term(r(a), 2, bot, -1).done());
        rels.push_back(row.term(bot, 1, l(a)).term(bot, 2, r(a), -1).done());
    }
    for (int a = 1; a <= gamma; ++a)
        for (int b = 1; b <= gamma; ++b)
            rels.push_back(row.term(l(a), 1, r(b)).term(r(b), 2, l(a), -1).done());
    for (int a = 1; a <= gamma; ++a)
        for (int b = a + 1; b <= gamma; ++b) {
            rels.push_back(row.term(l(a), 1, l(b)).term(l(a), 2, r(b), -1).done());
            rels.push_back(row.term(r(a), 1, l(b)).term(r(a), 2, r(b), -1).done());
            rels.push_back(row.term(l(b), 1, l(a)).term(l(a), 2, l(b), -1).done());
            rels.push_back(row.term(r(a), 1, r(b)).term(r(b), 2, r(a), -1).done());
        }
    for (int d = 1; d <= gamma; ++d) {
        // Equivalence class of l_d o1 l_d: differences against each member.
        rels.push_back(row.term(l(d), 1, l(d)).term(l(d), 2, bot, -1).done());
        for (int c = 1; c <= d; ++c) {
            rels.push_back(row.term(l(d), 1, l(d)).term(l(d), 2, l(c), -1).done());
            rels.push_back(row.term(l(d), 1, l(d)).term(l(d), 2, r(c), -1).done());
        }
        rels.push_back(row.term(r(d), 2, r(d)).term(r(d), 1, bot, -1).done());
        for (int c = 1; c <= d; ++c) {
            rels.push_back(row.term(r(d), 2, r(d)).term(r(d), 1, l(c), -1).done());
            rels.push_back(row.term(r(d), 2, r(d)).term(r(d), 1, r(c), -1).done());
        }
    }
    return Presentation(std::move(gens), gamma, std::move(rels));
}

Presentation tdendr_presentation(int gamma) {
    GeneratorSet gens = tdendr_generators(gamma);
    const int g = gens.size();
    auto pl = [&](int a) { return a - 1; };
    auto pr = [&](int a) { return gamma + a; };
    const int wdg = gamma;
    std::vector<SparseVec> rels;
    RowBuilder row(g);
    rels.push_back(row.term(wdg, 1, wdg).term(wdg, 2, wdg, -1).done());
    for (int a = 1; a <= gamma; ++a) {
        rels.push_back(row.term(pl(a), 1, wdg).term(wdg, 2, pl(a), -1).done());
        rels.push_back(row.term(wdg, 1, pr(a)).term(pr(a), 2, wdg, -1).done());
        rels.push_back(row.term(wdg, 1, pl(a)).term(wdg, 2, pr(a), -1).done());
    }
    for (int a = 1; a <= gamma; ++a)
        for (int b = 1; b <= gamma; ++b)
            rels.push_back(row.term(pl(a), 1, pr(b)).term(pr(b), 2, pl(a), -1).done());
    for (int a = 1; a <= gamma; ++a)
        for (int b = a + 1; b <= gamma; ++b) {
            rels.push_back(row.term(pl(a), 1, pl(b)).term(pl(a), 2, pr(b), -1).done());
            rels.push_back(row.term(pr(a), 1, pl(b)).term(pr(a), 2, pr(b), -1).done());
            rels.push_back(row.term(pl(b), 1, pl(a)).term(pl(a), 2, pl(b), -1).done());
            rels.push_back(row.term(pr(a), 1, pr(b)).term(pr(b), 2, pr(a), -1).done());
        }
    for (int d = 1; d <= gamma; ++d) {
        row.term(pl(d), 1, pl(d)).term(pl(d), 2, wdg, -1);
        for (int c = 1; c <= d; ++c) row.term(pl(d), 2, pl(c), -1).term(pl(d), 2, pr(c), -1);
        rels.push_back(row.done());
        row.term(pr(d), 1, wdg).term(pr(d), 2, pr(d), -1);
        for (int c = 1; c <= d; ++c) row.term(pr(d), 1, pl(c)).term(pr(d), 1, pr(c));
        rels.push_back(row.done());
    }
    return Presentation(std::move(gens), gamma, std::move(rels));
}

Presentation presentation_by_name(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("presentation name needs ':gamma'");
    const std::string fam = name.substr(0, colon);
    const int gamma = std::stoi(name.substr(colon + 1));
    if (fam == "dias") return dias_presentation(gamma);
    if (fam == "diasK") return dias_kbasis_presentation(gamma);
    if (fam == "dendr") return dendr_presentation(gamma);
    if (fam == "dendrC") return dendr_concise_presentation(gamma);
    if (fam == "as") return as_presentation(gamma);
    if (fam == "das") return das_presentation(gamma);
    if (fam == "dasS") return das_simple_presentation(gamma);
    if (fam == "dup") return dup_presentation(gamma);
    if (fam == "trias") return trias_presentation(gamma);
    if (fam == "tdendr") return tdendr_presentation(gamma);
    throw std::invalid_argument("unknown presentation: " + fam);
}

std::vector<std::string> presentation_names() {
    return {"dias", "diasK", "dendr", "dendrC", "as", "das", "dasS", "dup", "trias", "tdendr"};
}

namespace {

Rat pairing_sign(int g, int idx) {
    int x, pos, y;
    deg2_unindex(g, idx, x, pos, y);
    return pos == 1 ? Rat(1) : Rat(-1);
}

// Clears denominators, removes integer content, makes the leading entry
// positive. Display-friendly and scale-canonical.
void integerize(SparseVec& v) {
    if (v.empty()) return;
    Int lcm_den = 1;
    for (const auto& [c, val] : v) {
        const Int den = val.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    Int content = 0;
    for (auto& [c, val] : v) {
        val *= Rat(lcm_den);
        const Int num = val.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    if (sgn(content) != 0)
        for (auto& [c, val] : v) val /= Rat(content);
    if (sgn(v.front().second) < 0)
        for (auto& [c, val] : v) val = -val;
}

}  // namespace

Presentation koszul_dual(const Presentation& p) {
    const int g = p.gens.size();
    const int dim = 2 * g * g;
    Echelon ech;
    for (const auto& r : p.relations) {
        SparseVec scaled = r;
        for (auto& [c, val] : scaled) val *= pairing_sign(g, c);
        ech.insert(std::move(scaled));
    }
    // Fully reduced pivot rows: eliminate later pivot columns from tails.
    std::map<int, SparseVec> rref;
    for (const auto& [lead, row] : ech.rows()) {
        SparseVec tail(row.begin() + 1, row.end());
        tail = ech.reduce(std::move(tail));
        SparseVec full;
        full.emplace_back(lead, Rat(1));
        full.insert(full.end(), tail.begin(), tail.end());
        rref.emplace(lead, std::move(full));
    }
    std::vector<SparseVec> dual;
    for (int f = 0; f < dim; ++f) {
        if (rref.count(f)) continue;
        std::map<int, Rat> w;
        w[f] = Rat(1);
        for (const auto& [lead, row] : rref)
            for (const auto& [c, val] : row)
                if (c == f) w[lead] -= val;
        SparseVec v;
        for (auto& [c, val] : w)
            if (sgn(val) != 0) v.emplace_back(c, val);
        integerize(v);
        dual.push_back(std::move(v));
    }
    return Presentation(p.gens, p.gamma, std::move(dual));
}

bool spans_equal(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b) {
    Echelon ea, eb, eab;
    int ra = 0, rb = 0, rab = 0;
    for (const auto& r : a) {
        ra += ea.insert(r) ? 1 : 0;
        rab += eab.insert(r) ? 1 : 0;
    }
    for (const auto& r : b) {
        rb += eb.insert(r) ? 1 : 0;
        rab += eab.insert(r) ? 1 : 0;
    }
    return ra == rb && rb == rab;
}

bool spans_equal(const Presentation& a, const Presentation& b) {
    if (a.gens.size() != b.gens.size()) return false;
    return spans_equal(a.relations, b.relations);
}

std::vector<SparseVec> expand_relations(const Presentation& src,
                                        const std::vector<GenComb>& images, int target_gens) {
    if (static_cast<int>(images.size()) != src.gens.size())
        throw std::invalid_argument("need one image per source generator");
    const int gs = src.gens.size();
    std::vector<SparseVec> out;
    for (const auto& rel : src.relations) {
        std::map<int, Rat> m;
        for (const auto& [idx, c] : rel) {
            int x, pos, y;
            deg2_unindex(gs, idx, x, pos, y);
            for (const auto& [i, ci] : images[static_cast<std::size_t>(x)])
                for (const auto& [j, cj] : images[static_cast<std::size_t>(y)])
                    m[deg2_index(target_gens, i, pos, j)] += c * ci * cj;
        }
        SparseVec v;
        for (auto& [c, val] : m)
            if (sgn(val) != 0) v.emplace_back(c, val);
        if (!v.empty()) out.push_back(std::move(v));
    }
    return out;
}

RelationIdeal::RelationIdeal(Presentation p, std::size_t basis_guard)
    : pres_(std::move(p)), guard_(basis_guard) {}

namespace {

// Number of syntax trees of each arity up to n, without materializing them.
std::vector<std::size_t> tree_counts(const GeneratorSet& gens, int n) {
    std::vector<std::size_t> cnt(static_cast<std::size_t>(n) + 1, 0);
    cnt[1] = 1;
    for (int m = 2; m <= n; ++m) {
        std::size_t total = 0;
        for (int gi = 0; gi < gens.size(); ++gi) {
            const int k = gens.at(gi).arity;
            if (k < 2 || k > m) continue;
            // Compositions of m into k parts.
            std::vector<std::size_t> ways(static_cast<std::size_t>(m) + 1, 0);
            ways[0] = 1;
            for (int slot = 0; slot < k; ++slot) {
                std::vector<std::size_t> next(static_cast<std::size_t>(m) + 1, 0);
                for (int have = 0; have <= m; ++have)
                    if (ways[static_cast<std::size_t>(have)])
                        for (int take = 1; have + take <= m; ++take)
                            next[static_cast<std::size_t>(have + take)] +=
                                ways[static_cast<std::size_t>(have)] *
                                cnt[static_cast<std::size_t>(take)];
                ways = std::move(next);
            }
            total += ways[static_cast<std::size_t>(m)];
        }
        cnt[static_cast<std::size_t>(m)] = total;
    }
    return cnt;
}

}  // namespace

RelationIdeal::Level& RelationIdeal::ensure(int n) {
    if (n < 3) throw std::logic_error("ideal levels start at arity 3");
    auto it = levels_.find(n);
    if (it != levels_.end()) return it->second;
    if (tree_counts(pres_.gens, n)[static_cast<std::size_t>(n)] > guard_)
        throw std::runtime_error("size guard exceeded");
    Level lvl;
    lvl.trees = enumerate_trees(pres_.gens, n);
    for (std::size_t i = 0; i < lvl.trees.size(); ++i)
        lvl.index.emplace(lvl.trees[i], static_cast<int>(i));
    auto to_level = [&](const TreeLinComb& c) {
        std::map<int, Rat> m;
        for (const auto& [t, coef] : c.terms) m[lvl.index.at(t)] += coef;
        SparseVec v;
        for (auto& [cc, val] : m)
            if (sgn(val) != 0) v.emplace_back(cc, val);
        return v;
    };
    if (n == 3) {
        for (const auto& r : pres_.relations)
            lvl.echelon.insert(to_level(relation_to_lincomb(pres_.gens, r)));
    } else {
        Level& prev = ensure(n - 1);
        const int g = pres_.gens.size();
        for (const auto& [lead, row] : prev.echelon.rows()) {
            TreeLinComb c;
            for (const auto& [ti, coef] : row)
                c.add(prev.trees[static_cast<std::size_t>(ti)], coef);
            for (int gi = 0; gi < g; ++gi) {
                const SyntaxTree cor = corolla(pres_.gens, gi);
                for (int i = 1; i <= n - 1; ++i) {
                    TreeLinComb comp;
                    for (const auto& [t, coef] : c.terms) comp.add(graft(t, i, cor), coef);
                    lvl.echelon.insert(to_level(comp));
                }
                for (int pos = 1; pos <= 2; ++pos) {
                    TreeLinComb comp;
                    for (const auto& [t, coef] : c.terms) comp.add(graft(cor, pos, t), coef);
                    lvl.echelon.insert(to_level(comp));
                }
            }
        }
    }
    return levels_.emplace(n, std::move(lvl)).first->second;
}

Int RelationIdeal::quotient_dimension(int n) {
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    if (n == 1) return 1;
    if (n == 2) return pres_.gens.size();
    Level& lvl = ensure(n);
    return Int(static_cast<long>(lvl.trees.size())) - lvl.echelon.rank();
}

TreeLinComb RelationIdeal::reduce(const TreeLinComb& x) {
    if (x.is_zero()) return x;
    const int n = x.terms.begin()->first.arity();
    for (const auto& [t, c] : x.terms)
        if (t.arity() != n) throw std::invalid_argument("inhomogeneous combination");
    if (n < 3) return x;
    Level& lvl = ensure(n);
    std::map<int, Rat> m;
    for (const auto& [t, c] : x.terms) {
        auto it = lvl.index.find(t);
        if (it == lvl.index.end()) throw std::invalid_argument("tree not over this presentation");
        m[it->second] += c;
    }
    SparseVec v;
    for (auto& [c, val] : m)
        if (sgn(val) != 0) v.emplace_back(c, val);
    v = lvl.echelon.reduce(std::move(v));
    TreeLinComb out;
    for (const auto& [ti, coef] : v) out.add(lvl.trees[static_cast<std::size_t>(ti)], coef);
    return out;
}

Int quotient_dimension(const Presentation& p, int n) {
    RelationIdeal ideal(p);
    return ideal.quotient_dimension(n);
}

TreeLinComb reduce_mod_relations(const TreeLinComb& x, const Presentation& p) {
    RelationIdeal ideal(p);
    return ideal.reduce(x);
}

bool is_associative(const GenComb& x, const Presentation& p) {
    TreeLinComb diff;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : x) {
            diff.add(deg2_tree(p.gens, i, 1, j), ci * cj);
            diff.add(deg2_tree(p.gens, i, 2, j), -(ci * cj));
        }
    return reduce_mod_relations(diff, p).is_zero();
}

bool morphism_check(const std::vector<GenComb>& images, const Presentation& src,
                    const Presentation& tgt) {
    auto expanded = expand_relations(src, images, tgt.gens.size());
    RelationIdeal ideal(tgt);
    for (const auto& row : expanded)
        if (!ideal.reduce(relation_to_lincomb(tgt.gens, row)).is_zero()) return false;
    return true;
}

int AltSchroderTree::arity() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& k : kids) n += k.arity();
    return n;
}

std::strong_ordering AltSchroderTree::operator<=>(const AltSchroderTree& o) const {
    if (auto c = label <=> o.label; c != 0) return c;
    if (auto c = kids.size() <=> o.kids.size(); c != 0) return c;
    for (std::size_t i = 0; i < kids.size(); ++i)
        if (auto c = kids[i] <=> o.kids[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

AltSchroderTree alt_schroder_corolla(int label, int arity) {
    if (arity < 2) throw std::invalid_argument("corolla arity must be >= 2");
    AltSchroderTree t;
    t.label = label;
    t.kids.assign(static_cast<std::size_t>(arity), AltSchroderTree{});
    return t;
}

bool is_alternating(const AltSchroderTree& t, int gamma) {
    if (t.is_leaf()) return true;
    if (t.label < 1 || t.label > gamma || t.kids.size() < 2) return false;
    for (const auto& k : t.kids) {
        if (!k.is_leaf() && k.label == t.label) return false;
        if (!is_alternating(k, gamma)) return false;
    }
    return true;
}

namespace {

// Replaces the i-th leaf by t; contracts if the leaf's parent matches t's
// root label. `next` counts leaves down to the target.
bool das_graft(AltSchroderTree& s, int& next, const AltSchroderTree& t) {
    for (std::size_t k = 0; k < s.kids.size(); ++k) {
        auto& kid = s.kids[k];
        if (kid.is_leaf()) {
            if (--next == 0) {
                if (!t.is_leaf() && t.label == s.label) {
                    s.kids.erase(s.kids.begin() + static_cast<std::ptrdiff_t>(k));
                    s.kids.insert(s.kids.begin() + static_cast<std::ptrdiff_t>(k),
                                  t.kids.begin(), t.kids.end());
                } else {
                    kid = t;
                }
                return true;
            }
        } else if (das_graft(kid, next, t)) {
            return true;
        }
    }
    return false;
}

}  // namespace

AltSchroderTree das_compose(const AltSchroderTree& s, int i, const AltSchroderTree& t) {
    if (i < 1 || i > s.arity()) throw std::invalid_argument("position out of range");
    if (s.is_leaf()) return t;
    if (t.is_leaf()) return s;
    AltSchroderTree r = s;
    int next = i;
    das_graft(r, next, t);
    return r;
}

std::string to_string(const AltSchroderTree& t) {
    if (t.is_leaf()) return "_";
    std::string s = "(" + std::to_string(t.label);
    for (const auto& k : t.kids) s += " " + to_string(k);
    return s + ")";
}

AltSchroderTree random_alt_schroder(std::mt19937_64& rng, int gamma, int leaves,
                                    int forbidden_label) {
    if (leaves < 2) throw std::invalid_argument("need at least two leaves");
    if (gamma == 1 && forbidden_label == 1) throw std::invalid_argument("gamma too small");
    std::uniform_int_distribution<int> lab(1, gamma);
    int label = forbidden_label;
    while (label == forbidden_label) label = lab(rng);
    AltSchroderTree t;
    t.label = label;
    std::uniform_int_distribution<int> nkids(2, leaves);
    const int k = nkids(rng);
    // Spread the leaves over k slots, each getting at least one.
    std::vector<int> sizes(static_cast<std::size_t>(k), 1);
    for (int extra = leaves - k; extra > 0; --extra) {
        std::uniform_int_distribution<int> slot(0, k - 1);
        ++sizes[static_cast<std::size_t>(slot(rng))];
    }
    for (int sz : sizes) {
        if (sz == 1) {
            t.kids.push_back(AltSchroderTree{});
        } else if (gamma == 1) {
            // Alternation over one label forces leaf children here.
            for (int i = 0; i < sz; ++i) t.kids.push_back(AltSchroderTree{});
        } else {
            t.kids.push_back(random_alt_schroder(rng, gamma, sz, label));
        }
    }
    return t;
}

Corolla as_compose(const Corolla& a, int i, const Corolla& b) {
    if (i < 1 || i > a.arity) throw std::invalid_argument("position out of range");
    return Corolla{a.arity + b.arity - 1, std::max(a.label, b.label)};
}

Corolla eta_image(const GammaWord& x) {
    if (!is_dias_element(x)) throw std::invalid_argument("not a pluriassociative word");
    int m = 0;
    for (int i = 1; i <= x.arity(); ++i) m = std::max(m, x.letter(i));
    return Corolla{x.arity(), m};
}

}  // namespace operadkit
