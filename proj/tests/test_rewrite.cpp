#include <doctest.h>

#include <random>

#include "operadkit/rewrite.hpp"
#include "operadkit/series.hpp"

using namespace operadkit;

TEST_CASE("one-step rewriting") {
    const RuleSet rs = dias_rules(1);
    // A left-over-right redex rewrites to the unique left comb.
    const SyntaxTree redex = parse_tree(rs.gens, "(l1 _ (r1 _ _))");
    const auto out = rewrite_once(redex, rs);
    REQUIRE_EQ(out.size(), 1);
    CHECK_EQ(to_string(rs.gens, out[0]), "(l1 (l1 _ _) _)");
    // Rules rewrite their own left side to their right side.
    for (const auto& r : rs.rules) {
        const auto res = rewrite_once(r.lhs, rs);
        REQUIRE_EQ(res.size(), 1);
        CHECK_EQ(res[0], r.rhs);
    }
    CHECK(rewrite_once(hook_tree(parse_word(1, "1011")), rs).empty());
    // Trees over a larger alphabet do not fit the rule set.
    CHECK_THROWS_AS(rewrite_once(parse_tree(trias_generators(1), "(r1 _ _)"), rs),
                    std::invalid_argument);
}

TEST_CASE("normal forms of small trees are hooks") {
    for (int gamma = 1; gamma <= 3; ++gamma) {
        const RuleSet rs = dias_rules(gamma);
        for (const auto& t : enumerate_trees(rs.gens, 3)) {
            const SyntaxTree nf = normal_form(t, rs);
            CHECK(is_hook_tree(nf, gamma));
            CHECK_EQ(nf, hook_tree(word_of_tree(t, gamma)));
            CHECK_EQ(normal_form(nf, rs), nf);
        }
    }
}

TEST_CASE("nontermination is reported") {
    GeneratorSet gens({{"a", 2}, {"b", 2}});
    const SyntaxTree ab = deg2_tree(gens, 0, 1, 1);
    const SyntaxTree ba = deg2_tree(gens, 1, 1, 0);
    const RuleSet swap(gens, {{ab, ba}, {ba, ab}});
    CHECK_THROWS_WITH_AS(normal_form(ab, swap, 100), doctest::Contains("cycle"),
                         std::runtime_error);
    // A growing budgetless run on a terminating system still finishes.
    const RuleSet rs = dias_rules(2);
    const SyntaxTree deep = graft(graft(deg2_tree(rs.gens, 2, 2, 0), 3, deg2_tree(rs.gens, 3, 1, 1)),
                                  1, corolla(rs.gens, 1));
    CHECK_NOTHROW(normal_form(deep, rs));
    CHECK_THROWS_WITH_AS(normal_form(deep, rs, 1), doctest::Contains("budget"),
                         std::runtime_error);
}

TEST_CASE("critical pairs") {
    for (int gamma = 1; gamma <= 3; ++gamma)
        CHECK_EQ(static_cast<int>(critical_pairs(dup_rules(gamma)).size()),
                 4 * gamma * gamma * gamma);
    // Rules whose alphabets cannot overlap produce no peaks.
    GeneratorSet gens({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}});
    const RuleSet disjoint(gens, {{deg2_tree(gens, 0, 1, 1), deg2_tree(gens, 2, 1, 3)}});
    CHECK(critical_pairs(disjoint).empty());
}

TEST_CASE("local confluence of the built-in systems") {
    for (int gamma = 1; gamma <= 3; ++gamma) {
        for (const char* fam : {"dias", "as", "dup"}) {
            const RuleSet rs = rules_by_name(std::string(fam) + ":" + std::to_string(gamma));
            const ConfluenceReport rep = check_local_confluence(rs);
            CHECK_MESSAGE(rep.confluent, fam << " at gamma=" << gamma);
            CHECK(rep.failures.empty());
        }
    }
}

TEST_CASE("a broken orientation is caught") {
    // Two rules sending shared peaks to unrelated alphabets cannot rejoin.
    GeneratorSet gens2({{"a", 2}, {"b", 2}, {"c", 2}});
    const RuleSet broken(gens2, {{deg2_tree(gens2, 0, 1, 0), deg2_tree(gens2, 1, 1, 1)},
                                 {deg2_tree(gens2, 0, 2, 0), deg2_tree(gens2, 2, 2, 2)}});
    const ConfluenceReport rep = check_local_confluence(broken);
    CHECK_FALSE(rep.confluent);
    CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("normal-form counting") {
    CHECK_EQ(count_normal_forms(dias_rules(2), 4), Int(32));
    CHECK_EQ(count_normal_forms(dup_rules(2), 3), Int(20));
    CHECK_EQ(count_normal_forms(as_rules(3), 5), Int(3));
    for (int gamma = 1; gamma <= 3; ++gamma)
        for (int n = 1; n <= 5; ++n) {
            CHECK_EQ(count_normal_forms(dias_rules(gamma), n),
                     dim_formula(OperadFamily::Dias, gamma, n));
            CHECK_EQ(count_normal_forms(as_rules(gamma), n),
                     dim_formula(OperadFamily::As, gamma, n));
            CHECK_EQ(count_normal_forms(dup_rules(gamma), n),
                     dim_formula(OperadFamily::Dup, gamma, n));
        }
    for (const auto& t : enumerate_normal_forms(dias_rules(2), 4)) CHECK(is_hook_tree(t, 2));
}

TEST_CASE("multiplicial termination measure") {
    for (int gamma = 1; gamma <= 3; ++gamma)
        for (const auto& r : dup_rules(gamma).rules) {
            const auto before = dup_termination_measure(r.lhs, gamma);
            const auto after = dup_termination_measure(r.rhs, gamma);
            CHECK(before < after);
        }
}

TEST_CASE("rule set validation and registry") {
    GeneratorSet gens({{"a", 2}});
    CHECK_THROWS_AS(RuleSet(gens, {{corolla(gens, 0), corolla(gens, 0)}}),
                    std::invalid_argument);
    const SyntaxTree deep = graft(deg2_tree(gens, 0, 1, 0), 1, corolla(gens, 0));
    CHECK_THROWS_AS(RuleSet(gens, {{deep, deep}}), std::invalid_argument);
    CHECK_THROWS_AS(rules_by_name("dias"), std::invalid_argument);
    CHECK_THROWS_AS(rules_by_name("nope:2"), std::invalid_argument);
    CHECK_EQ(rules_by_name("dup:2").rules.size(), 12);
}
