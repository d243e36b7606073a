#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "operadkit/tree.hpp"

namespace operadkit {

/// Oriented quadratic rule: both sides are degree-2 trees of arity 3.
struct RewriteRule {
    SyntaxTree lhs;
    SyntaxTree rhs;
};

struct RuleSet {
    GeneratorSet gens;
    std::vector<RewriteRule> rules;

    RuleSet() = default;
    RuleSet(GeneratorSet g, std::vector<RewriteRule> rs);
};

/// A degree-3 tree with two one-step rewrites through overlapping redexes.
struct CriticalPair {
    SyntaxTree peak;
    SyntaxTree left_result;
    SyntaxTree right_result;
};

struct ConfluenceReport {
    bool confluent = false;
    std::vector<CriticalPair> failures;
    int peak_count = 0;
};

/// Every tree reachable from t in exactly one rewriting step.
std::vector<SyntaxTree> rewrite_once(const SyntaxTree& t, const RuleSet& rs);

inline int default_step_budget(const SyntaxTree& t) { return 10 * (t.degree() * t.degree() + 1); }

/// Leftmost-outermost reduction to a normal form. Keeps a visited set;
/// throws on a revisited tree (nonterminating set) or an exhausted budget.
SyntaxTree normal_form(const SyntaxTree& t, const RuleSet& rs, int step_budget);
SyntaxTree normal_form(const SyntaxTree& t, const RuleSet& rs);

/// All degree-3 peaks where two rule redexes overlap (a root redex against a
/// child redex through the shared middle node, or two root redexes through
/// the shared root), in deterministic rule-index order.
std::vector<CriticalPair> critical_pairs(const RuleSet& rs);

/// Reduces both sides of every critical pair and compares normal forms.
ConfluenceReport check_local_confluence(const RuleSet& rs, int step_budget = 1000);

/// Arity-n trees without any redex, sorted.
std::vector<SyntaxTree> enumerate_normal_forms(const RuleSet& rs, int n);
Int count_normal_forms(const RuleSet& rs, int n);

RuleSet dias_rules(int gamma);
RuleSet as_rules(int gamma);
RuleSet dup_rules(int gamma);

/// Built-in rule sets addressable as "dias:G", "as:G", "dup:G".
RuleSet rules_by_name(const std::string& name);

/// Termination measure for the multiplicial rules: (alpha + alpha', beta)
/// where alpha sums internal-node counts of right subtrees of u-nodes,
/// alpha' of left subtrees of o-nodes and beta of right subtrees of o-nodes.
/// Strictly increases lexicographically along every rewrite step.
std::pair<long, long> dup_termination_measure(const SyntaxTree& t, int gamma);

}  // namespace operadkit
