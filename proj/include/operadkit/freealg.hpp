#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "operadkit/rat.hpp"
#include "operadkit/word.hpp"

namespace operadkit {

/// Replaces every letter of u smaller than a (zero included) by a.
GammaWord h(int a, const GammaWord& u);

/// The free pluriassociative products on single-zero words:
/// left is u . h_a(v), right is h_a(u) . v.
GammaWord pluri_left(int a, const GammaWord& u, const GammaWord& v);
GammaWord pluri_right(int a, const GammaWord& u, const GammaWord& v);

/// Edge label marking a leaf child.
inline constexpr int kInfLabel = std::numeric_limits<int>::max();

/// Binary tree whose internal edges carry labels in [gamma]; edges to leaf
/// children carry kInfLabel. A bare Evbt{} is the formal leaf, not an
/// algebra element.
struct Evbt {
    std::vector<Evbt> kids;  // empty (leaf) or exactly two
    int llab = kInfLabel;
    int rlab = kInfLabel;

    bool is_leaf() const { return kids.empty(); }
    int node_count() const;

    std::strong_ordering operator<=>(const Evbt&) const;
    bool operator==(const Evbt& o) const { return (*this <=> o) == 0; }
};

Evbt evbt_node(Evbt left, int llab, Evbt right, int rlab);
Evbt evbt_single();
bool evbt_valid(const Evbt& t, int gamma);

struct EvbtLinComb {
    std::map<Evbt, Rat> terms;

    void add(const Evbt& t, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const EvbtLinComb&) const = default;
};

EvbtLinComb operator+(EvbtLinComb a, const EvbtLinComb& b);
EvbtLinComb operator-(EvbtLinComb a, const EvbtLinComb& b);

/// The free polydendriform products: s below-left / below-right of t,
/// recursively splitting along spines. Undefined on two leaves.
EvbtLinComb dendr_left(int a, const Evbt& s, const Evbt& t);   // s <_a t
EvbtLinComb dendr_right(int a, const Evbt& s, const Evbt& t);  // s >_a t

/// The free multiplicial products: under relabels x's rightmost path by
/// min with a and grafts y there; over is the mirror. Single-tree results.
Evbt dup_under(int a, const Evbt& x, const Evbt& y);  // x under_a y
Evbt dup_over(int a, const Evbt& x, const Evbt& y);   // x over_a y

/// Text format: leaf "_", node "( <left> :<llab> <right> :<rlab> )", with
/// "inf" for the leaf-edge label.
std::string to_string(const Evbt& t);
Evbt parse_evbt(const std::string& text);
std::string to_string(const EvbtLinComb& c);

Evbt random_evbt(std::mt19937_64& rng, int gamma, int nodes);

// Multiprojection algebras: a carrier with associative products star_a and
// projections proj_a satisfying proj_a(proj_b(x)) = proj_{max(a,b)}(x).
// Each instance below is a value type; products derived through the
// construction below turn any of them into a pluriassociative algebra.

template <class A>
typename A::Elem m_left(const A& alg, int a, const typename A::Elem& x,
                        const typename A::Elem& y) {
    return alg.star(a, x, alg.proj(a, y));
}

template <class A>
typename A::Elem m_right(const A& alg, int a, const typename A::Elem& x,
                         const typename A::Elem& y) {
    return alg.star(a, alg.proj(a, x), y);
}

struct PosAlgebra {
    int gamma = 1;
    using Elem = int;  // positive integer
    Elem star(int, Elem x, Elem y) const { return std::max(x, y); }
    Elem proj(int a, Elem x) const { return std::max(a, x); }
};

struct SetsAlgebra {
    int gamma = 1;
    using Elem = std::vector<int>;  // strictly increasing positive integers
    Elem star(int, const Elem& x, const Elem& y) const;
    Elem proj(int a, const Elem& x) const;  // intersect with [a, gamma]
};

struct WordsAlgebra {
    int gamma = 1;
    using Elem = std::vector<int>;  // positive letters
    Elem star(int, const Elem& x, const Elem& y) const;
    Elem proj(int a, const Elem& x) const;  // subword of letters >= a
};

struct MarkedWordsAlgebra {
    int gamma = 1;
    struct Letter {
        int value = 1;
        bool marked = false;
        auto operator<=>(const Letter&) const = default;
    };
    using Elem = std::vector<Letter>;  // at least one marked letter
    Elem star(int a, const Elem& x, const Elem& y) const;
    Elem proj(int a, const Elem& x) const;
};

struct FreeWordsAlgebra {
    int gamma = 1;
    using Elem = GammaWord;
    Elem star(int, const Elem& x, const Elem& y) const;  // concatenation
    Elem proj(int a, const Elem& x) const { return h(a, x); }
};

template <class A>
bool is_bar_unit(const A& alg, int a, const typename A::Elem& e,
                 const std::vector<typename A::Elem>& sample) {
    for (const auto& x : sample)
        if (!(m_left(alg, a, x, e) == x) || !(m_right(alg, a, e, x) == x)) return false;
    return true;
}

template <class A>
bool is_wire_unit(const A& alg, int a, const typename A::Elem& e,
                  const std::vector<typename A::Elem>& sample) {
    for (const auto& x : sample)
        if (!(m_left(alg, a, e, x) == x) || !(m_right(alg, a, x, e) == x)) return false;
    return true;
}

std::string to_string(const MarkedWordsAlgebra::Elem& w);

}  // namespace operadkit
