#include <doctest.h>

#include <random>

#include "operadkit/rewrite.hpp"
#include "operadkit/tree.hpp"

using namespace operadkit;

TEST_CASE("grafting") {
    const GeneratorSet gens = dias_generators(2);
    const SyntaxTree g = corolla(gens, 0);
    const SyntaxTree h = corolla(gens, 1);
    CHECK_EQ(graft(g, 1, leaf()), g);
    const SyntaxTree comb = graft(g, 1, h);
    CHECK_EQ(comb.arity(), 3);
    CHECK_EQ(comb.degree(), 2);
    CHECK_EQ(comb.kids[0].gen, 1);
    CHECK(comb.kids[1].is_leaf());
    CHECK_EQ(graft(g, 2, h).arity(), g.arity() + h.arity() - 1);
    CHECK_THROWS_AS(graft(g, 3, h), std::invalid_argument);
}

TEST_CASE("grafting satisfies the operad axioms") {
    const GeneratorSet gens = dias_generators(2);
    std::mt19937_64 rng(0xD1A5);
    std::uniform_int_distribution<int> pick(0, gens.size() - 1);
    auto random_tree = [&](auto&& self, int degree) -> SyntaxTree {
        if (degree == 0) return leaf();
        std::uniform_int_distribution<int> split(0, degree - 1);
        SyntaxTree t;
        t.gen = pick(rng);
        const int dl = split(rng);
        t.kids = {self(self, dl), self(self, degree - 1 - dl)};
        return t;
    };
    for (int rep = 0; rep < 50; ++rep) {
        const SyntaxTree x = random_tree(random_tree, 2);
        const SyntaxTree y = random_tree(random_tree, 2);
        const SyntaxTree z = random_tree(random_tree, 1);
        for (int i = 1; i <= x.arity(); ++i) {
            for (int j = 1; j <= y.arity(); ++j)
                CHECK_EQ(graft(graft(x, i, y), i + j - 1, z), graft(x, i, graft(y, j, z)));
            for (int j = i + 1; j <= x.arity(); ++j)
                CHECK_EQ(graft(graft(x, i, y), j + y.arity() - 1, z), graft(graft(x, j, z), i, y));
        }
    }
}

TEST_CASE("leaf images of generator corollas") {
    for (int a = 1; a <= 3; ++a) {
        const GeneratorSet gens = dias_generators(3);
        CHECK_EQ(to_string(word_of_tree(corolla(gens, dias_left_index(3, a)), 3)),
                 "0" + std::to_string(a));
        CHECK_EQ(to_string(word_of_tree(corolla(gens, dias_right_index(3, a)), 3)),
                 std::to_string(a) + "0");
    }
    const GeneratorSet tg = trias_generators(2);
    CHECK_EQ(to_string(word_of_tree(corolla(tg, trias_bot_index(2)), 2, true)), "00");
}

TEST_CASE("leaf images of larger trees") {
    const GeneratorSet gens = dias_generators(4);
    const SyntaxTree t = parse_tree(
        gens,
        "(l2 (r3 (l4 _ _) (l1 _ (l2 _ _))) (r2 _ (r3 (r1 _ _) (l1 (r2 _ _) (r4 _ _)))))");
    CHECK_EQ(to_string(word_of_tree(t, 4)), "340122332242");

    const GeneratorSet tg = trias_generators(4);
    const SyntaxTree t2 = parse_tree(
        tg,
        "(r2 (l4 (r3 (l1 _ _) _) (bot _ _)) (bot (l3 _ (r4 _ _)) (l1 (r2 (r3 _ _) _) _)))");
    CHECK_EQ(to_string(word_of_tree(t2, 4, true)), "332440433201");

    CHECK_THROWS_AS(word_of_tree(corolla(tg, trias_right_index(4, 4)), 4, false),
                    std::invalid_argument);
}

TEST_CASE("hook trees") {
    const GeneratorSet g3 = dias_generators(3);
    for (int a = 1; a <= 3; ++a) {
        CHECK_EQ(hook_tree(GammaWord(3, {0, a})), corolla(g3, dias_left_index(3, a)));
        CHECK_EQ(hook_tree(GammaWord(3, {a, 0})), corolla(g3, dias_right_index(3, a)));
    }
    CHECK_EQ(hook_tree(GammaWord(3, {0})), leaf());
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : enumerate_words(WordFamily::Dias, 3, n)) {
            const SyntaxTree t = hook_tree(w);
            CHECK(is_hook_tree(t, 3));
            CHECK_EQ(word_of_tree(t, 3), w);
        }
    CHECK_THROWS_AS(hook_tree(GammaWord(2, {1, 1})), std::invalid_argument);
}

TEST_CASE("hook trees are normal forms and counted by the dimension") {
    const RuleSet rules = dias_rules(2);
    for (int n = 2; n <= 4; ++n) {
        long hooks = 0;
        for (const auto& w : enumerate_words(WordFamily::Dias, 2, n)) {
            CHECK(rewrite_once(hook_tree(w), rules).empty());
            ++hooks;
        }
        long expect = n;
        for (int k = 1; k < n; ++k) expect *= 2;
        CHECK_EQ(hooks, expect);
    }
    // An r-node above an l-node on the right violates the hook shape.
    const GeneratorSet g1 = dias_generators(1);
    const SyntaxTree bad = graft(corolla(g1, dias_right_index(1, 1)), 2,
                                 corolla(g1, dias_left_index(1, 1)));
    CHECK_FALSE(is_hook_tree(bad, 1));
    CHECK(is_hook_tree(leaf(), 1));
}

TEST_CASE("extended hook trees") {
    const GeneratorSet g2 = trias_generators(2);
    CHECK_EQ(extended_hook_tree(GammaWord(2, {0, 0})), corolla(g2, trias_bot_index(2)));
    // A single-zero word keeps its plain hook, read over the larger alphabet.
    const GammaWord w = parse_word(2, "102");
    const SyntaxTree ext = extended_hook_tree(w);
    CHECK(is_extended_hook_tree(ext, 2));
    CHECK_EQ(word_of_tree(ext, 2, true), w);
    for (int n = 1; n <= 4; ++n)
        for (const auto& x : enumerate_words(WordFamily::Trias, 2, n)) {
            const SyntaxTree t = extended_hook_tree(x);
            CHECK(is_extended_hook_tree(t, 2));
            CHECK_EQ(word_of_tree(t, 2, true), x);
        }
    CHECK_THROWS_AS(extended_hook_tree(GammaWord(2, {1, 2})), std::invalid_argument);
}

TEST_CASE("leaf images are stable under rewriting") {
    for (int gamma = 1; gamma <= 3; ++gamma) {
        const RuleSet rules = dias_rules(gamma);
        for (int arity = 3; arity <= 4; ++arity)
            for (const auto& t : enumerate_trees(rules.gens, arity)) {
                const GammaWord w = word_of_tree(t, gamma);
                for (const auto& t2 : rewrite_once(t, rules))
                    CHECK_EQ(word_of_tree(t2, gamma), w);
            }
    }
}

TEST_CASE("grafting extends bilinearly to combinations") {
    const GeneratorSet gens = dendr_concise_generators(1);
    TreeLinComb a, b;
    a.add(corolla(gens, 0), Rat(2));
    a.add(corolla(gens, 1), Rat(-1));
    b.add(corolla(gens, 0), Rat(1, 3));
    const TreeLinComb ab = graft(a, 1, b);
    CHECK_EQ(ab.terms.size(), 2);
    CHECK_EQ(ab.terms.at(deg2_tree(gens, 0, 1, 0)), Rat(2, 3));
    CHECK_EQ(ab.terms.at(deg2_tree(gens, 1, 1, 0)), Rat(-1, 3));
}

TEST_CASE("tree text format") {
    const GeneratorSet gens = dendr_concise_generators(2);
    const std::string text = "(lt1 _ (gt2 _ _))";
    CHECK_EQ(to_string(gens, parse_tree(gens, text)), text);
    CHECK_EQ(to_string(gens, leaf()), "_");
    CHECK_THROWS_AS(parse_tree(gens, "(bogus _ _)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree(gens, "(lt1 _)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree(gens, "(lt1 _ _"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree(gens, "(lt1 _ _) junk"), std::invalid_argument);
}

TEST_CASE("tree enumeration is sorted and complete") {
    const GeneratorSet gens = as_generators(2);
    const auto trees3 = enumerate_trees(gens, 3);
    CHECK_EQ(trees3.size(), 8);  // two shapes, two labels each node
    for (std::size_t i = 1; i < trees3.size(); ++i) CHECK(trees3[i - 1] < trees3[i]);
    CHECK_EQ(enumerate_trees(gens, 1).size(), 1);
    CHECK_EQ(enumerate_trees(dias_generators(2), 4).size(), 5 * 64);
}
