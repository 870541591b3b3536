#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "burntflip/oracle.hpp"
#include "burntflip/signed_permutation.hpp"

using namespace burntflip;

namespace {

SignedPermutation P(const std::string& text) {
    return SignedPermutation::parse(text);
}

}  // namespace

TEST_CASE("parse accepts valid permutations") {
    const SignedPermutation pi = P("-7 3 -1 4 2 8 -6 -5");
    CHECK(pi.size() == 8);
    CHECK(pi.at(1) == -7);
    CHECK(pi.at(8) == -5);

    CHECK(P("1 2 3") == SignedPermutation::identity(3));
    CHECK(P("  1\t-2 \n 3 ") == P("1 -2 3"));
    CHECK(P("+3 2 1") == P("3 2 1"));
}

TEST_CASE("parse reports the offending token") {
    CHECK_THROWS_WITH_AS(P("2 2"),
                         doctest::Contains("duplicate absolute value"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(P("1 -0 2"), doctest::Contains("zero entry"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(P("1 3"), doctest::Contains("'3'"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(P(""), doctest::Contains("empty input"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(P("  \t "), doctest::Contains("empty input"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(P("1 two"), doctest::Contains("'two'"),
                         std::invalid_argument);
    CHECK_THROWS_AS(P("1 2 -2"), std::invalid_argument);
}

TEST_CASE("format emits single spaces and no plus signs") {
    CHECK(P("-7 3 -1 4 2 8 -6 -5").str() == "-7 3 -1 4 2 8 -6 -5");
    CHECK(P("+1 +2").str() == "1 2");
}

TEST_CASE("parse/format round-trips over a full small group") {
    for (const SignedPermutation& pi : all_signed_permutations(4))
        CHECK(SignedPermutation::parse(pi.str()) == pi);
}

TEST_CASE("prefix flip follows the definition") {
    CHECK(P("1 2 3").prefix_flip(3) == P("-3 -2 -1"));
    CHECK(P("1 4 3 2").prefix_flip(2) == P("-4 -1 3 2"));
    CHECK(P("-1").prefix_flip(1) == P("1"));
    CHECK_THROWS_AS(P("1 2").prefix_flip(0), std::domain_error);
    CHECK_THROWS_AS(P("1 2").prefix_flip(3), std::domain_error);
}

TEST_CASE("prefix flip is an involution") {
    for (const SignedPermutation& pi : all_signed_permutations(3))
        for (int k = 1; k <= 3; ++k)
            CHECK(pi.prefix_flip(k).prefix_flip(k) == pi);
}

TEST_CASE("signed reversal follows the definition") {
    CHECK(P("-2 -3 1").signed_reversal(2, 3) == P("-2 -1 3"));
    CHECK(SignedPermutation::identity(4).signed_reversal(1, 4) == P("-4 -3 -2 -1"));
    CHECK(P("1 -2 3").signed_reversal(2, 2) == P("1 2 3"));
    CHECK_THROWS_AS(P("1 2").signed_reversal(2, 1), std::domain_error);
    CHECK_THROWS_AS(P("1 2").signed_reversal(0, 1), std::domain_error);
    CHECK_THROWS_AS(P("1 2").signed_reversal(1, 3), std::domain_error);
}

TEST_CASE("three prefix flips mimic a signed reversal") {
    CHECK(mimic_as_prefix_flips(2, 3, 3) == FlipSequence{3, 2, 3});
    CHECK(mimic_as_prefix_flips(1, 5, 5) == FlipSequence{5});
    CHECK(SignedPermutation::identity(3).apply_flips({3, 2, 3}) == P("1 -3 -2"));
    CHECK(P("-2 -3 1").apply_flips({3, 2, 3}) == P("-2 -1 3"));
    CHECK_THROWS_AS(mimic_as_prefix_flips(3, 2, 3), std::domain_error);
    CHECK_THROWS_AS(mimic_as_prefix_flips(1, 4, 3), std::domain_error);
}

TEST_CASE("mimic equals the reversal on every segment, exhaustively to n=5") {
    for (int n = 1; n <= 5; ++n)
        for (const SignedPermutation& pi : all_signed_permutations(n))
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    CHECK(pi.apply_flips(mimic_as_prefix_flips(i, j, n)) ==
                          pi.signed_reversal(i, j));
}

TEST_CASE("inverse respects the signed convention") {
    CHECK(P("-2 -3 1").inverse() == P("3 -1 -2"));
    CHECK(SignedPermutation::identity(5).inverse() == SignedPermutation::identity(5));
    for (const SignedPermutation& pi : all_signed_permutations(4)) {
        CHECK(pi.inverse().inverse() == pi);
        CHECK(pi.inverse().compose(pi) == SignedPermutation::identity(4));
        CHECK(pi.compose(pi.inverse()) == SignedPermutation::identity(4));
    }
}

TEST_CASE("exchange swaps two positions") {
    CHECK(P("1 2 3").exchange(1, 3) == P("3 2 1"));
    CHECK(P("2 1 3").prefix_exchange(2) == P("1 2 3"));
    CHECK_THROWS_AS(P("1 2").exchange(1, 1), std::domain_error);
    CHECK_THROWS_AS(P("1 2").exchange(2, 1), std::domain_error);
}

TEST_CASE("cycle decomposition of the permutation graph") {
    using Cycles = std::vector<std::vector<int>>;
    CHECK(graph_cycles(P("4 1 6 2 5 7 3")) ==
          Cycles{{1, 4, 2}, {3, 6, 7}, {5}});
    CHECK(graph_cycles(SignedPermutation::identity(3)) ==
          Cycles{{1}, {2}, {3}});
    CHECK(graph_cycles(P("2 1")) == Cycles{{1, 2}});
    CHECK_THROWS_AS(graph_cycles(P("-1 2")), std::domain_error);
}

TEST_CASE("doubling inserts sentinels and value pairs") {
    CHECK(doubled(P("-7 3 -1 4 2 8 -6 -5")) ==
          std::vector<int>{0, 14, 13, 5, 6, 2, 1, 7, 8, 3, 4, 15, 16, 12, 11,
                           10, 9, 17});
    CHECK(doubled(P("1 2 3")) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(doubled(P("-1")) == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("doubling is invertible over a full small group") {
    for (const SignedPermutation& pi : all_signed_permutations(4))
        CHECK(undoubled(doubled(pi)) == pi);
    CHECK_THROWS_AS(undoubled({0, 1, 3, 2, 4, 5}), std::invalid_argument);
}
