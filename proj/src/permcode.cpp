#include "qtsp/permcode.hpp"

#include <algorithm>
#include <charconv>

namespace qtsp {

void validate(const InsertionCode& code) {
    const int n = code.size();
    if (n < 1) throw InvalidCodeError("insertion code must have length >= 1");
    for (int i = 0; i < n; ++i) {
        const int a = code.entries[static_cast<std::size_t>(i)];
        if (a < 1 || a > i + 1)
            throw InvalidCodeError("entry a_" + std::to_string(i + 1) + " = " +
                                   std::to_string(a) + " outside [1, " +
                                   std::to_string(i + 1) + "]");
    }
}

void validate(const Permutation& perm) {
    const int n = perm.size();
    if (n < 1) throw InvalidPermutationError("permutation must have length >= 1");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : perm.order) {
        if (v < 1 || v > n)
            throw InvalidPermutationError("element " + std::to_string(v) +
                                          " outside [1, " + std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(v - 1)]++)
            throw InvalidPermutationError("element " + std::to_string(v) + " repeated");
    }
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw RangeError("factorial: n outside [0, 20]");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation decode(const InsertionCode& code) {
    validate(code);
    const int n = code.size();
    Permutation perm;
    perm.order.reserve(static_cast<std::size_t>(n));
    perm.order.push_back(1);
    for (int i = 2; i <= n; ++i) {
        const int pos = code.entries[static_cast<std::size_t>(i - 1)];
        perm.order.insert(perm.order.begin() + (pos - 1), i);
    }
    return perm;
}

InsertionCode encode(const Permutation& perm) {
    validate(perm);
    const int n = perm.size();
    std::vector<int> work = perm.order;
    InsertionCode code;
    code.entries.assign(static_cast<std::size_t>(n), 1);
    for (int i = n; i >= 2; --i) {
        const auto it = std::find(work.begin(), work.end(), i);
        code.entries[static_cast<std::size_t>(i - 1)] =
            static_cast<int>(it - work.begin()) + 1;
        work.erase(it);
    }
    return code;
}

std::uint64_t rank(const InsertionCode& code) {
    validate(code);
    std::uint64_t r = 0;
    std::uint64_t weight = 1;  // (i-1)!
    for (int i = 1; i <= code.size(); ++i) {
        r += static_cast<std::uint64_t>(code.entries[static_cast<std::size_t>(i - 1)] - 1) * weight;
        weight *= static_cast<std::uint64_t>(i);
    }
    return r;
}

InsertionCode unrank(std::uint64_t r, int n) {
    if (n < 1) throw RangeError("unrank: n must be at least 1");
    if (r >= factorial(n))
        throw RangeError("unrank: rank " + std::to_string(r) + " outside [0, " +
                         std::to_string(n) + "!)");
    InsertionCode code;
    code.entries.assign(static_cast<std::size_t>(n), 1);
    for (int i = 2; i <= n; ++i) {
        code.entries[static_cast<std::size_t>(i - 1)] =
            static_cast<int>(r % static_cast<std::uint64_t>(i)) + 1;
        r /= static_cast<std::uint64_t>(i);
    }
    return code;
}

std::vector<InsertionCode> enumerate_codes(int n, int limit) {
    std::vector<InsertionCode> out;
    out.reserve(factorial(std::min(n, limit)));
    for_each_code(n, [&](const InsertionCode& c) { out.push_back(c); }, limit);
    return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view field = text.substr(pos, comma - pos);
        int value = 0;
        const auto [ptr, ec] =
            std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw ParseError(std::string(what) + ": bad integer field '" +
                             std::string(field) + "'");
        values.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return values;
}

std::string format_int_list(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::string to_string(const InsertionCode& code) { return format_int_list(code.entries); }
std::string to_string(const Permutation& perm) { return format_int_list(perm.order); }

InsertionCode parse_code(std::string_view text) {
    InsertionCode code{parse_int_list(text, "insertion code")};
    validate(code);
    return code;
}

Permutation parse_permutation(std::string_view text) {
    Permutation perm{parse_int_list(text, "permutation")};
    validate(perm);
    return perm;
}

}  // namespace qtsp
