#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "operadkit/rat.hpp"

namespace operadkit {

// Largest supported alphabet parameter. The interesting examples stop at 5;
// the cap only guards the uint8_t letter storage.
inline constexpr int kMaxGamma = 64;

/// A word over the alphabet {0,...,gamma}. Carrier of the word operads: the
/// subsets with exactly one zero (pluriassociative) and with at least one
/// zero (pluritriassociative) are singled out by the predicates below.
struct GammaWord {
    int gamma = 0;
    std::vector<std::uint8_t> letters;

    GammaWord() = default;
    GammaWord(int g, std::vector<std::uint8_t> ls);
    /// Convenience: letters given as ints, validated against gamma.
    GammaWord(int g, std::initializer_list<int> ls);

    int arity() const { return static_cast<int>(letters.size()); }
    int letter(int i) const { return letters[static_cast<std::size_t>(i - 1)]; }  // 1-based

    bool operator==(const GammaWord& o) const = default;
    auto operator<=>(const GammaWord& o) const = default;
};

bool is_dias_element(const GammaWord& w);
bool is_trias_element(const GammaWord& w);

/// Insertion composition of T(M_gamma): replaces the i-th letter of u by the
/// left-multiplied (max) copy of v. 1-based position.
GammaWord tm_compose(const GammaWord& u, int i, const GammaWord& v);

/// Simultaneous composition u o (v_1,...,v_n).
GammaWord tm_compose_all(const GammaWord& u, const std::vector<GammaWord>& vs);

GammaWord mirror(const GammaWord& w);

/// 1-based position of the unique zero. Requires a pluriassociative word.
int root_position(const GammaWord& w);

enum class WordFamily { Dias, Trias };

/// All arity-n words of the family, lexicographically sorted (0 < 1 < ... < gamma).
std::vector<GammaWord> enumerate_words(WordFamily family, int gamma, int n);

/// Finite formal sum of words of one arity with exact rational coefficients.
/// Zero coefficients are never stored; keys are kept in lexicographic order
/// (std::map) so serialization is deterministic.
struct WordLinComb {
    int gamma = 0;
    std::map<GammaWord, Rat> terms;

    void add(const GammaWord& w, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const WordLinComb& o) const = default;
};

WordLinComb operator+(WordLinComb a, const WordLinComb& b);
WordLinComb operator-(WordLinComb a, const WordLinComb& b);
WordLinComb operator*(const Rat& c, WordLinComb a);

/// K-basis element of x written in the word basis: the signed sum over all
/// ways of incrementing letters of x lying strictly between 0 and gamma.
WordLinComb kbasis_expand(const GammaWord& x);

/// Rewrites a word-basis combination in the K-basis (Moebius inversion):
/// the result maps K-index words to coefficients.
WordLinComb kbasis_contract(const WordLinComb& c);
WordLinComb kbasis_contract(const GammaWord& x);

/// Partial composition over the K-basis; closed three-case form. Both inputs
/// are K-basis indices, the output maps K-basis indices to coefficients.
WordLinComb kbasis_compose(const GammaWord& x, int i, const GammaWord& y);

/// Text format: bare digits when gamma <= 9 ("20413"), comma-separated
/// otherwise ("10,0,12").
std::string to_string(const GammaWord& w);
GammaWord parse_word(int gamma, const std::string& text);

}  // namespace operadkit
