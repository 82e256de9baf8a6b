#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qtsp/errors.hpp"

namespace qtsp {

// Insertion code (a_1, ..., a_n) with 1 <= a_i <= i. Entry a_i records the
// 1-based position at which element i is inserted into the growing
// arrangement, so the codes of length n are in bijection with the
// permutations of {1, ..., n}.
struct InsertionCode {
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }
    bool operator==(const InsertionCode&) const = default;
};

// A linear arrangement of 1..n. Tour semantics (the cyclic reading) live in
// the geometry module.
struct Permutation {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    bool operator==(const Permutation&) const = default;
};

// Largest n whose n! codes we are willing to enumerate or tabulate.
inline constexpr int kEnumerationLimit = 10;

// Throws InvalidCodeError / InvalidPermutationError on malformed input.
void validate(const InsertionCode& code);
void validate(const Permutation& perm);

std::uint64_t factorial(int n);

// Builds the permutation by inserting element i at position entries[i-1]
// (1 = front, i = back) into the arrangement of 1..i-1.
Permutation decode(const InsertionCode& code);

// Inverse of decode: peel off n, n-1, ... recording each element's position.
InsertionCode encode(const Permutation& perm);

// Mixed-radix rank: sum of (a_i - 1) * (i-1)!, bijective onto [0, n!).
std::uint64_t rank(const InsertionCode& code);
InsertionCode unrank(std::uint64_t r, int n);

// Visits all n! codes in ascending rank order, reusing one buffer.
template <class F>
void for_each_code(int n, F&& fn, int limit = kEnumerationLimit) {
    if (n < 1) throw SizeLimitError("for_each_code: n must be at least 1");
    if (n > limit)
        throw SizeLimitError("for_each_code: n = " + std::to_string(n) +
                             " exceeds enumeration limit " + std::to_string(limit));
    InsertionCode code;
    code.entries.assign(static_cast<std::size_t>(n), 1);
    for (;;) {
        fn(static_cast<const InsertionCode&>(code));
        // Odometer step in rank order: a_2 is the least significant digit.
        int i = 1;
        while (i < n) {
            if (code.entries[static_cast<std::size_t>(i)] < i + 1) {
                ++code.entries[static_cast<std::size_t>(i)];
                break;
            }
            code.entries[static_cast<std::size_t>(i)] = 1;
            ++i;
        }
        if (i == n) return;
    }
}

// Convenience for small n (tests, CLI); prefer for_each_code in loops.
std::vector<InsertionCode> enumerate_codes(int n, int limit = kEnumerationLimit);

// Serialization: comma-separated 1-based integers, e.g. "1,1,2" / "2,3,1".
std::string to_string(const InsertionCode& code);
std::string to_string(const Permutation& perm);
InsertionCode parse_code(std::string_view text);
Permutation parse_permutation(std::string_view text);

}  // namespace qtsp
