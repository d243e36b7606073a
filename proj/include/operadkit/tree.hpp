#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "operadkit/rat.hpp"
#include "operadkit/word.hpp"

namespace operadkit {

struct Generator {
    std::string name;
    int arity = 2;
    bool operator==(const Generator&) const = default;
};

/// Ordered list of named generators; the position in the list is the
/// generator index used everywhere (coordinates, comparisons, duals).
struct GeneratorSet {
    std::vector<Generator> entries;

    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Generator> es);

    int size() const { return static_cast<int>(entries.size()); }
    const Generator& at(int i) const { return entries[static_cast<std::size_t>(i)]; }
    /// Index of a generator name, -1 if absent.
    int index_of(const std::string& name) const;
    bool operator==(const GeneratorSet&) const = default;
};

/// Planar rooted tree with generator-labeled internal nodes. gen < 0 marks a
/// leaf. Total order: preorder comparison (generator index, then children).
struct SyntaxTree {
    int gen = -1;
    std::vector<SyntaxTree> kids;

    bool is_leaf() const { return gen < 0; }
    int arity() const;   // number of leaves
    int degree() const;  // number of internal nodes

    std::strong_ordering operator<=>(const SyntaxTree& o) const;
    bool operator==(const SyntaxTree& o) const { return (*this <=> o) == 0; }
};

inline SyntaxTree leaf() { return SyntaxTree{}; }
SyntaxTree corolla(const GeneratorSet& gens, int gen_index);

/// Grafts t onto the i-th leaf of s (leaves numbered 1..arity left to right).
SyntaxTree graft(const SyntaxTree& s, int i, const SyntaxTree& t);

/// g oi h for generator indices, as a degree-2 syntax tree.
SyntaxTree deg2_tree(const GeneratorSet& gens, int x, int pos, int y);

/// All syntax trees of the given arity over gens, sorted.
std::vector<SyntaxTree> enumerate_trees(const GeneratorSet& gens, int n);

/// Formal sum of equal-arity syntax trees with rational coefficients.
struct TreeLinComb {
    std::map<SyntaxTree, Rat> terms;

    void add(const SyntaxTree& t, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const TreeLinComb&) const = default;
};

TreeLinComb operator+(TreeLinComb a, const TreeLinComb& b);
TreeLinComb operator-(TreeLinComb a, const TreeLinComb& b);
TreeLinComb operator*(const Rat& c, TreeLinComb a);
TreeLinComb graft(const TreeLinComb& a, int i, const TreeLinComb& b);

// Generator sets of the operads in play. Naming convention for tree
// serialization: l/r (pluriassociative), bot (the extra triassociative
// generator), kl/kr (K-basis pluriassociative), pl/pr (polydendriform),
// wdg (polytridendriform middle), lt/gt (concise polydendriform), st
// (multiassociative), dd (dual multiassociative), d (its simple form),
// u/o (multiplicial under/over).
GeneratorSet dias_generators(int gamma);
GeneratorSet dias_kbasis_generators(int gamma);
GeneratorSet trias_generators(int gamma);
GeneratorSet dendr_generators(int gamma);
GeneratorSet dendr_concise_generators(int gamma);
GeneratorSet tdendr_generators(int gamma);
GeneratorSet as_generators(int gamma);
GeneratorSet das_generators(int gamma);
GeneratorSet das_simple_generators(int gamma);
GeneratorSet dup_generators(int gamma);

// Index helpers for the dias/trias alphabets (a is 1-based).
int dias_left_index(int gamma, int a);            // generator sending words to u 0a-insertions
int dias_right_index(int gamma, int a);
int trias_left_index(int gamma, int a);
int trias_bot_index(int gamma);
int trias_right_index(int gamma, int a);

/// Word realization of a tree over the dias or trias generator set: each
/// leaf contributes its greatest eligible letter.
GammaWord word_of_tree(const SyntaxTree& t, int gamma, bool trias = false);

/// The hook tree of a pluriassociative word u0v: right comb of r-labels for
/// u feeding the bottom-left of a left comb of l-labels for v.
SyntaxTree hook_tree(const GammaWord& x);

/// Extended hook of a pluritriassociative word u 0v1 0v2 ... 0vl: hook of u
/// under a left chain of bot nodes, each carrying a left comb for its block.
SyntaxTree extended_hook_tree(const GammaWord& x);

bool is_hook_tree(const SyntaxTree& t, int gamma);
bool is_extended_hook_tree(const SyntaxTree& t, int gamma);

/// S-expression format: leaf "_", node "(name child1 child2 ...)".
std::string to_string(const GeneratorSet& gens, const SyntaxTree& t);
SyntaxTree parse_tree(const GeneratorSet& gens, const std::string& text);

std::string to_string(const GeneratorSet& gens, const TreeLinComb& c);

}  // namespace operadkit
