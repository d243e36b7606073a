#include <doctest.h>

#include "operadkit/io.hpp"
#include "operadkit/word.hpp"

using namespace operadkit;

TEST_CASE("insertion composition") {
    CHECK_EQ(to_string(tm_compose(parse_word(3, "211201"), 4, parse_word(3, "31103"))),
             "2113222301");
    CHECK_EQ(to_string(tm_compose(parse_word(2, "111101"), 3, parse_word(2, "20"))), "1121101");
    CHECK_EQ(to_string(tm_compose(parse_word(3, "1013"), 2, parse_word(3, "210"))), "121013");

    // The arity-1 word is the unit.
    const GammaWord one(3, {0});
    const GammaWord u = parse_word(3, "1013");
    for (int i = 1; i <= u.arity(); ++i) CHECK_EQ(tm_compose(u, i, one), u);
    CHECK_EQ(tm_compose(one, 1, u), u);

    CHECK_THROWS_AS(tm_compose(u, 0, one), std::invalid_argument);
    CHECK_THROWS_AS(tm_compose(u, 5, one), std::invalid_argument);
    CHECK_THROWS_AS(tm_compose(u, 1, parse_word(2, "10")), std::invalid_argument);
}

TEST_CASE("membership predicates") {
    CHECK(is_dias_element(parse_word(3, "121013")));
    CHECK_FALSE(is_dias_element(parse_word(1, "00")));
    CHECK_FALSE(is_dias_element(parse_word(1, "11")));
    CHECK(is_trias_element(parse_word(2, "00")));
    CHECK(is_trias_element(parse_word(4, "332440433201")));
    CHECK_FALSE(is_trias_element(parse_word(2, "22")));
}

TEST_CASE("enumeration") {
    const auto dias23 = enumerate_words(WordFamily::Dias, 2, 3);
    std::vector<std::string> got;
    for (const auto& w : dias23) got.push_back(to_string(w));
    CHECK_EQ(got, std::vector<std::string>{"011", "012", "021", "022", "101", "102", "110", "120",
                                           "201", "202", "210", "220"});
    const auto trias22 = enumerate_words(WordFamily::Trias, 2, 2);
    got.clear();
    for (const auto& w : trias22) got.push_back(to_string(w));
    CHECK_EQ(got, std::vector<std::string>{"00", "01", "02", "10", "20"});
    const auto dias01 = enumerate_words(WordFamily::Dias, 0, 1);
    REQUIRE_EQ(dias01.size(), 1);
    CHECK_EQ(to_string(dias01[0]), "0");

    for (int gamma = 1; gamma <= 3; ++gamma)
        for (int n = 1; n <= 5; ++n) {
            long dias_expect = n;
            long trias_expect = 1;
            for (int k = 1; k < n; ++k) dias_expect *= gamma;
            long p1 = 1, p0 = 1;
            for (int k = 0; k < n; ++k) {
                p1 *= gamma + 1;
                p0 *= gamma;
            }
            trias_expect = p1 - p0;
            CHECK_EQ(static_cast<long>(enumerate_words(WordFamily::Dias, gamma, n).size()),
                     dias_expect);
            CHECK_EQ(static_cast<long>(enumerate_words(WordFamily::Trias, gamma, n).size()),
                     trias_expect);
        }
}

TEST_CASE("mirror") {
    CHECK_EQ(to_string(mirror(parse_word(3, "121013"))), "310121");
    for (int a = 1; a <= 3; ++a) {
        const GammaWord w(3, {0, a});
        CHECK_EQ(mirror(w), GammaWord(3, {a, 0}));
        CHECK_EQ(mirror(mirror(w)), w);
    }
}

TEST_CASE("root position") {
    CHECK_EQ(root_position(parse_word(3, "121013")), 4);
    CHECK_EQ(root_position(parse_word(1, "0")), 1);
    CHECK_THROWS_AS(root_position(parse_word(1, "11")), std::invalid_argument);
}

TEST_CASE("single-parameter specialization reproduces the classical table") {
    // Arity-n elements with the zero at position k compose by the familiar
    // three cases on the marker position.
    auto w = [](int n, int k) {
        std::vector<std::uint8_t> ls(static_cast<std::size_t>(n), 1);
        ls[static_cast<std::size_t>(k - 1)] = 0;
        return GammaWord(1, std::move(ls));
    };
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= m; ++l)
                    for (int i = 1; i <= n; ++i) {
                        const int expect = i < k ? k + m - 1 : i == k ? k + l - 1 : k;
                        CHECK_EQ(tm_compose(w(n, k), i, w(m, l)), w(n + m - 1, expect));
                    }
}

TEST_CASE("K-basis expansion") {
    CHECK_EQ(lincomb_text(kbasis_expand(parse_word(2, "102"))), "+1*102 -1*202");
    CHECK_EQ(lincomb_text(kbasis_expand(parse_word(3, "102"))), "+1*102 -1*103 -1*202 +1*203");
    CHECK_EQ(lincomb_text(kbasis_expand(parse_word(4, "102"))), "+1*102 -1*103 -1*202 +1*203");
    CHECK_EQ(lincomb_text(kbasis_expand(parse_word(3, "23102"))),
             "+1*23102 -1*23103 -1*23202 +1*23203 -1*33102 +1*33103 +1*33202 -1*33203");
    // No letter strictly between 0 and gamma: nothing to increment.
    CHECK_EQ(lincomb_text(kbasis_expand(parse_word(2, "202"))), "+1*202");
    CHECK_THROWS_AS(kbasis_expand(parse_word(2, "22")), std::invalid_argument);
}

TEST_CASE("K-basis contraction") {
    // Inverting the two-by-two triangular expansion by hand: 102 expands to
    // 102 - 202 and 202 stays put, so 102 = K_102 + K_202.
    CHECK_EQ(lincomb_text(kbasis_contract(parse_word(2, "102"))), "+1*102 +1*202");
    CHECK_EQ(lincomb_text(kbasis_contract(parse_word(2, "202"))), "+1*202");
    for (const auto& x : enumerate_words(WordFamily::Dias, 2, 3)) {
        WordLinComb single;
        single.gamma = 2;
        single.add(x, Rat(1));
        CHECK_EQ(kbasis_contract(kbasis_expand(x)), single);
    }
}

TEST_CASE("K-basis composition closed form") {
    const GammaWord x = parse_word(5, "20413"), y = parse_word(5, "304");
    CHECK_EQ(lincomb_text(kbasis_compose(x, 1, y)), "+1*3240413");
    CHECK_EQ(lincomb_text(kbasis_compose(x, 2, y)), "+1*2304413");
    CHECK_EQ(lincomb_text(kbasis_compose(x, 3, y)), "0");
    CHECK_EQ(lincomb_text(kbasis_compose(x, 4, y)), "+1*2043143");
    CHECK_EQ(lincomb_text(kbasis_compose(x, 5, y)), "+1*2041334 +1*2041344 +1*2041354");
    CHECK_THROWS_AS(kbasis_compose(parse_word(5, "0"), 1, y), std::invalid_argument);
    CHECK_THROWS_AS(kbasis_compose(x, 6, y), std::invalid_argument);
}

TEST_CASE("word text format") {
    CHECK_EQ(to_string(parse_word(9, "20413")), "20413");
    const GammaWord w = parse_word(12, "10,0,12");
    CHECK_EQ(w.arity(), 3);
    CHECK_EQ(to_string(w), "10,0,12");
    CHECK_EQ(parse_word(3, "2,0,3"), parse_word(3, "203"));
    CHECK_THROWS_AS(parse_word(12, "1012"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(2, "103"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(2, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(2, "1a2"), std::invalid_argument);
}
