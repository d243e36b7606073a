#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "operadkit/tree.hpp"

namespace operadkit {

/// Sparse exact-rational vector, entries sorted by coordinate index.
using SparseVec = std::vector<std::pair<int, Rat>>;

SparseVec sparse_add(const SparseVec& a, const SparseVec& b, const Rat& scale_b);
void sparse_normalize(SparseVec& v);  // leading coefficient 1

/// Coordinates of the degree-2 tree space over g binary generators:
/// index(x o_pos y) = (x*2 + pos-1)*g + y, so the basis is ordered by
/// (left factor, position, right factor) and the duality pairing is the
/// diagonal form +1 on o1 trees, -1 on o2 trees.
int deg2_index(int g, int x, int pos, int y);
void deg2_unindex(int g, int idx, int& x, int& pos, int& y);

/// Row echelon over the rationals with fully reduced insertions; rows keep
/// leading coefficient 1, so reduce() yields the canonical coset
/// representative supported on non-pivot coordinates.
class Echelon {
  public:
    bool insert(SparseVec row);
    SparseVec reduce(SparseVec v) const;
    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::map<int, SparseVec>& rows() const { return pivots_; }

  private:
    std::map<int, SparseVec> pivots_;
};

/// Binary quadratic presentation: generators plus an independent list of
/// degree-2 relations in the coordinates above.
struct Presentation {
    GeneratorSet gens;
    int gamma = 0;
    std::vector<SparseVec> relations;

    Presentation() = default;
    Presentation(GeneratorSet g, int gamma_, std::vector<SparseVec> rels);

    int generator_count() const { return gens.size(); }
    int relation_dim() const { return static_cast<int>(relations.size()); }
};

TreeLinComb relation_to_lincomb(const GeneratorSet& gens, const SparseVec& row);
SparseVec lincomb_to_relation(const GeneratorSet& gens, const TreeLinComb& c);

Presentation dias_presentation(int gamma);
Presentation dias_kbasis_presentation(int gamma);
Presentation dendr_presentation(int gamma);
Presentation dendr_concise_presentation(int gamma);
Presentation as_presentation(int gamma);
Presentation das_presentation(int gamma);
Presentation das_simple_presentation(int gamma);
Presentation dup_presentation(int gamma);
Presentation trias_presentation(int gamma);
Presentation tdendr_presentation(int gamma);

/// Registry names: dias:G diasK:G dendr:G dendrC:G as:G das:G dasS:G dup:G
/// trias:G tdendr:G.
Presentation presentation_by_name(const std::string& name);
std::vector<std::string> presentation_names();

/// Annihilator presentation under the +1/-1 pairing; generators are kept
/// (identified positionally with the duals).
Presentation koszul_dual(const Presentation& p);

bool spans_equal(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b);
bool spans_equal(const Presentation& a, const Presentation& b);

/// An arity-2 element of the free operad over some generator set: a linear
/// combination of generators.
using GenComb = std::vector<std::pair<int, Rat>>;

/// Substitutes each source generator by an arity-2 element over the target
/// generators and expands the relations bilinearly.
std::vector<SparseVec> expand_relations(const Presentation& src,
                                        const std::vector<GenComb>& images, int target_gens);

/// Degree-graded saturation of the operad ideal generated by the relations,
/// with reduction to canonical coset representatives.
class RelationIdeal {
  public:
    explicit RelationIdeal(Presentation p, std::size_t basis_guard = 200000);

    Int quotient_dimension(int n);
    /// Canonical representative of x modulo the arity-n ideal component.
    TreeLinComb reduce(const TreeLinComb& x);
    bool in_ideal(const TreeLinComb& x) { return reduce(x).is_zero(); }
    const Presentation& presentation() const { return pres_; }

  private:
    struct Level {
        std::vector<SyntaxTree> trees;
        std::map<SyntaxTree, int> index;
        Echelon echelon;
    };
    Level& ensure(int n);

    Presentation pres_;
    std::size_t guard_;
    std::map<int, Level> levels_;
};

Int quotient_dimension(const Presentation& p, int n);
TreeLinComb reduce_mod_relations(const TreeLinComb& x, const Presentation& p);

/// True iff x o1 x - x o2 x vanishes in the quotient, for x a combination
/// of arity-2 generators.
bool is_associative(const GenComb& x, const Presentation& p);

/// Checks that the generator substitution sends every source relation into
/// the target ideal.
bool morphism_check(const std::vector<GenComb>& images, const Presentation& src,
                    const Presentation& tgt);

/// Schroeder tree with internal nodes labeled in [gamma]; an internal node
/// must not repeat the label of an internal child. Leaves carry label 0.
struct AltSchroderTree {
    int label = 0;
    std::vector<AltSchroderTree> kids;

    bool is_leaf() const { return kids.empty(); }
    int arity() const;  // leaf count
    std::strong_ordering operator<=>(const AltSchroderTree&) const;
    bool operator==(const AltSchroderTree& o) const { return (*this <=> o) == 0; }
};

AltSchroderTree alt_schroder_corolla(int label, int arity);
bool is_alternating(const AltSchroderTree& t, int gamma);

/// Partial composition of the alternating-Schroeder realization: grafts and
/// contracts the new edge when the two incident labels agree.
AltSchroderTree das_compose(const AltSchroderTree& s, int i, const AltSchroderTree& t);

std::string to_string(const AltSchroderTree& t);

/// Uniform-ish alternating tree with the given leaf count; leaves >= 2.
AltSchroderTree random_alt_schroder(std::mt19937_64& rng, int gamma, int leaves,
                                    int forbidden_label = 0);

/// Corolla realization of the multiassociative operad: arity and label,
/// composing by max on labels.
struct Corolla {
    int arity = 1;
    int label = 0;
    bool operator==(const Corolla&) const = default;
};

Corolla as_compose(const Corolla& a, int i, const Corolla& b);

/// Image of a pluriassociative word: the corolla of the same arity labeled
/// by the greatest letter.
Corolla eta_image(const GammaWord& x);

}  // namespace operadkit
