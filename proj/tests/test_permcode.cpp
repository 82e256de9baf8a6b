#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "qtsp/permcode.hpp"

using namespace qtsp;

TEST_CASE("decode follows the insertion rule") {
    CHECK(decode(parse_code("1")).order == std::vector<int>{1});
    CHECK(decode(parse_code("1,2,3")).order == std::vector<int>{1, 2, 3});
    CHECK(decode(parse_code("1,1,2")).order == std::vector<int>{2, 3, 1});
    CHECK(decode(parse_code("1,2,1")).order == std::vector<int>{3, 1, 2});
}

TEST_CASE("encode inverts decode on the pinned cases") {
    CHECK(to_string(encode(parse_permutation("1"))) == "1");
    CHECK(to_string(encode(parse_permutation("2,3,1"))) == "1,1,2");
    CHECK(to_string(encode(parse_permutation("1,2,3,4"))) == "1,2,3,4");
}

TEST_CASE("malformed codes and permutations are rejected") {
    CHECK_THROWS_AS(validate(InsertionCode{{2}}), InvalidCodeError);
    CHECK_THROWS_AS(validate(InsertionCode{{1, 3}}), InvalidCodeError);
    CHECK_THROWS_AS(validate(InsertionCode{{1, 0}}), InvalidCodeError);
    CHECK_THROWS_AS(validate(InsertionCode{{}}), InvalidCodeError);
    CHECK_THROWS_AS(validate(Permutation{{1, 1}}), InvalidPermutationError);
    CHECK_THROWS_AS(validate(Permutation{{1, 3}}), InvalidPermutationError);
    CHECK_THROWS_AS(validate(Permutation{{0, 1}}), InvalidPermutationError);
    CHECK_THROWS_AS(validate(Permutation{{}}), InvalidPermutationError);
    CHECK_THROWS_AS(parse_code("1,x,2"), ParseError);
    CHECK_THROWS_AS(parse_permutation(""), ParseError);
}

TEST_CASE("rank is the mixed-radix value of the digits") {
    CHECK(rank(parse_code("1,1,1")) == 0);
    CHECK(rank(parse_code("1,2,3")) == 5);
    CHECK(rank(parse_code("1,1,2")) == 2);
}

TEST_CASE("unrank inverts rank") {
    CHECK(to_string(unrank(0, 3)) == "1,1,1");
    CHECK(to_string(unrank(5, 3)) == "1,2,3");
    CHECK(to_string(unrank(2, 3)) == "1,1,2");
    CHECK_THROWS_AS(unrank(6, 3), RangeError);
    CHECK_THROWS_AS(unrank(0, 0), RangeError);
    for (std::uint64_t r = 0; r < factorial(5); ++r) CHECK(rank(unrank(r, 5)) == r);
}

TEST_CASE("factorial covers the usable range") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(12) == 479001600ull);
    CHECK(factorial(20) == 2432902008176640000ull);
    CHECK_THROWS_AS(factorial(21), RangeError);
    CHECK_THROWS_AS(factorial(-1), RangeError);
}

TEST_CASE("enumeration yields all codes in ascending rank order") {
    CHECK(enumerate_codes(1).size() == 1);

    const auto codes3 = enumerate_codes(3);
    REQUIRE(codes3.size() == 6);
    CHECK(to_string(codes3.front()) == "1,1,1");
    CHECK(to_string(codes3.back()) == "1,2,3");
    for (std::uint64_t r = 0; r < codes3.size(); ++r) CHECK(rank(codes3[r]) == r);

    CHECK_THROWS_AS(enumerate_codes(11), SizeLimitError);
}

TEST_CASE("decoded permutations are pairwise distinct") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> seen;
        for_each_code(n, [&](const InsertionCode& c) { seen.insert(decode(c).order); });
        CHECK(seen.size() == factorial(n));
    }
}

TEST_CASE("round trips are exhaustive against an independent generator") {
    // std::next_permutation produces each permutation without touching the
    // insertion-code machinery, so the two directions cross-check each other.
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> decoded;
        for_each_code(n, [&](const InsertionCode& c) {
            CHECK(encode(decode(c)) == c);
            decoded.insert(decode(c).order);
        });

        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
        std::set<std::vector<int>> reference;
        do {
            reference.insert(order);
            const Permutation perm{order};
            CHECK(decode(encode(perm)).order == order);
        } while (std::next_permutation(order.begin(), order.end()));
        CHECK(decoded == reference);
    }
}

TEST_CASE("codes sharing a prefix decode to the same relative order of small elements") {
    const int n = 6, t = 3;
    const auto restrict_small = [&](const Permutation& perm) {
        std::vector<int> kept;
        for (int v : perm.order)
            if (v <= t) kept.push_back(v);
        return kept;
    };
    for (std::uint64_t prefix_rank = 0; prefix_rank < factorial(t); ++prefix_rank) {
        const InsertionCode prefix = unrank(prefix_rank, t);
        std::vector<int> first;
        // Suffix digits (a_4, a_5, a_6) sweep while the prefix stays fixed.
        for (int a4 = 1; a4 <= 4; ++a4)
            for (int a5 = 1; a5 <= 5; a5 += 2)
                for (int a6 = 1; a6 <= 6; a6 += 3) {
                    InsertionCode code = prefix;
                    code.entries.insert(code.entries.end(), {a4, a5, a6});
                    const auto kept = restrict_small(decode(code));
                    if (first.empty())
                        first = kept;
                    else
                        CHECK(kept == first);
                }
        CHECK(first == decode(prefix).order);
        (void)n;
    }
}

TEST_CASE("serialization round trip") {
    const InsertionCode code = unrank(17, 4);
    CHECK(parse_code(to_string(code)) == code);
    const Permutation perm = decode(code);
    CHECK(parse_permutation(to_string(perm)) == perm);
}
