#include "burntflip/signed_permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace burntflip {

namespace {

[[noreturn]] void parse_fail(const std::string& what, const std::string& token) {
    throw std::invalid_argument("parse error: " + what + ": '" + token + "'");
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n == 0)
        throw std::invalid_argument("parse error: empty input");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : entries_) {
        if (v == 0)
            parse_fail("zero entry", "0");
        const int a = std::abs(v);
        if (a > n)
            parse_fail("gap in 1.." + std::to_string(n), std::to_string(v));
        if (seen[static_cast<size_t>(a)])
            parse_fail("duplicate absolute value", std::to_string(v));
        seen[static_cast<size_t>(a)] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    if (n < 1)
        throw std::invalid_argument("permutation length must be positive");
    std::vector<int> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = i + 1;
    return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    std::vector<int> entries;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        std::string body = token;
        if (!body.empty() && body[0] == '+') body.erase(0, 1);
        if (body.empty() || body == "-")
            parse_fail("invalid token", token);
        size_t digits_from = body[0] == '-' ? 1 : 0;
        if (body.size() == digits_from)
            parse_fail("invalid token", token);
        for (size_t i = digits_from; i < body.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(body[i])))
                parse_fail("invalid token", token);
        long long value = 0;
        try {
            value = std::stoll(body);
        } catch (const std::exception&) {
            parse_fail("invalid token", token);
        }
        if (value == 0)
            parse_fail("zero entry", token);
        if (value > 1000000 || value < -1000000)
            parse_fail("entry out of range", token);
        entries.push_back(static_cast<int>(value));
    }
    if (entries.empty())
        throw std::invalid_argument("parse error: empty input");
    // Re-run the invariant checks so the diagnostic carries the token as
    // written, '+' and all.
    const int n = static_cast<int>(entries.size());
    std::vector<int> first_token_for(static_cast<size_t>(n) + 1, -1);
    std::istringstream rescan{std::string(text)};
    std::vector<std::string> tokens;
    while (rescan >> token) tokens.push_back(token);
    for (size_t i = 0; i < entries.size(); ++i) {
        const int a = std::abs(entries[i]);
        if (a > n)
            parse_fail("gap in 1.." + std::to_string(n), tokens[i]);
        if (first_token_for[static_cast<size_t>(a)] >= 0)
            parse_fail("duplicate absolute value", tokens[i]);
        first_token_for[static_cast<size_t>(a)] = static_cast<int>(i);
    }
    return SignedPermutation(std::move(entries));
}

int SignedPermutation::at(int position) const {
    if (position < 1 || position > size())
        throw std::domain_error("position " + std::to_string(position) +
                                " out of range 1.." + std::to_string(size()));
    return entries_[static_cast<size_t>(position - 1)];
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (entries_[static_cast<size_t>(i)] != i + 1) return false;
    return true;
}

bool SignedPermutation::all_positive() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](int v) { return v > 0; });
}

SignedPermutation SignedPermutation::prefix_flip(int k) const {
    if (k < 1 || k > size())
        throw std::domain_error("flip length " + std::to_string(k) +
                                " out of range 1.." + std::to_string(size()));
    std::vector<int> out(entries_);
    for (int i = 0; i < k; ++i)
        out[static_cast<size_t>(i)] = -entries_[static_cast<size_t>(k - 1 - i)];
    return SignedPermutation(std::move(out));
}

SignedPermutation SignedPermutation::signed_reversal(int i, int j) const {
    if (i < 1 || j > size() || i > j)
        throw std::domain_error("reversal bounds (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") invalid for n = " +
                                std::to_string(size()));
    std::vector<int> out(entries_);
    for (int p = i; p <= j; ++p)
        out[static_cast<size_t>(p - 1)] = -entries_[static_cast<size_t>(j + i - p - 1)];
    return SignedPermutation(std::move(out));
}

SignedPermutation SignedPermutation::exchange(int i, int j) const {
    if (i < 1 || j > size() || i >= j)
        throw std::domain_error("exchange positions (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") invalid for n = " +
                                std::to_string(size()));
    std::vector<int> out(entries_);
    std::swap(out[static_cast<size_t>(i - 1)], out[static_cast<size_t>(j - 1)]);
    return SignedPermutation(std::move(out));
}

SignedPermutation SignedPermutation::inverse() const {
    const int n = size();
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int v = entries_[static_cast<size_t>(i - 1)];
        if (v > 0)
            out[static_cast<size_t>(v - 1)] = i;
        else
            out[static_cast<size_t>(-v - 1)] = -i;
    }
    return SignedPermutation(std::move(out));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& inner) const {
    if (inner.size() != size())
        throw std::domain_error("cannot compose permutations of lengths " +
                                std::to_string(size()) + " and " +
                                std::to_string(inner.size()));
    std::vector<int> out(static_cast<size_t>(size()));
    for (int i = 1; i <= size(); ++i) {
        const int v = inner.at(i);
        out[static_cast<size_t>(i - 1)] = v > 0 ? at(v) : -at(-v);
    }
    return SignedPermutation(std::move(out));
}

SignedPermutation SignedPermutation::apply_flips(const FlipSequence& flips) const {
    SignedPermutation cur = *this;
    for (int k : flips) cur = cur.prefix_flip(k);
    return cur;
}

std::string SignedPermutation::str() const {
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(entries_[i]);
    }
    return out;
}

FlipSequence mimic_as_prefix_flips(int i, int j, int n) {
    if (i < 1 || j > n || i > j)
        throw std::domain_error("reversal bounds (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") invalid for n = " +
                                std::to_string(n));
    if (i == 1) return {j};
    return {j, j - i + 1, j};
}

std::vector<std::vector<int>> graph_cycles(const SignedPermutation& pi) {
    if (!pi.all_positive())
        throw std::domain_error("cycle decomposition requires a classical "
                                "permutation, got a negative entry");
    const int n = pi.size();
    std::vector<bool> done(static_cast<size_t>(n) + 1, false);
    std::vector<std::vector<int>> cycles;
    for (int start = 1; start <= n; ++start) {
        if (done[static_cast<size_t>(start)]) continue;
        std::vector<int> cycle;
        int cur = start;
        do {
            done[static_cast<size_t>(cur)] = true;
            cycle.push_back(cur);
            cur = pi.at(cur);
        } while (cur != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;  // leaders ascend because starts are scanned in order
}

std::vector<int> doubled(const SignedPermutation& pi) {
    const int n = pi.size();
    std::vector<int> values;
    values.reserve(static_cast<size_t>(2 * n + 2));
    values.push_back(0);
    for (int v : pi.entries()) {
        if (v > 0) {
            values.push_back(2 * v - 1);
            values.push_back(2 * v);
        } else {
            values.push_back(-2 * v);
            values.push_back(-2 * v - 1);
        }
    }
    values.push_back(2 * n + 1);
    return values;
}

SignedPermutation undoubled(const std::vector<int>& values) {
    if (values.size() < 4 || values.size() % 2 != 0)
        throw std::invalid_argument("doubled sequence must have 2n+2 values");
    const int n = static_cast<int>(values.size()) / 2 - 1;
    if (values.front() != 0 || values.back() != 2 * n + 1)
        throw std::invalid_argument("doubled sequence must be delimited by 0 and 2n+1");
    std::vector<int> entries(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int a = values[static_cast<size_t>(2 * i - 1)];
        const int b = values[static_cast<size_t>(2 * i)];
        if (b == a + 1 && a % 2 == 1)
            entries[static_cast<size_t>(i - 1)] = (a + 1) / 2;
        else if (a == b + 1 && a % 2 == 0)
            entries[static_cast<size_t>(i - 1)] = -a / 2;
        else
            throw std::invalid_argument("value pair (" + std::to_string(a) + ", " +
                                        std::to_string(b) +
                                        ") is not a doubling of one element");
    }
    return SignedPermutation(std::move(entries));
}

}  // namespace burntflip
