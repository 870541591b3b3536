#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace burntflip {

/// Prefix flip lengths, applied left to right to a source permutation.
using FlipSequence = std::vector<int>;

/// An arrangement of {±1, ..., ±n} in which every absolute value occurs
/// exactly once. Positions are 1-based in the public interface, matching
/// the usual convention for permutations written as ⟨π₁ π₂ ... πₙ⟩.
/// Values are immutable after construction; every operation returns a
/// new permutation.
class SignedPermutation {
public:
    /// Validates that |entries| covers {1..n} exactly once, no zeros.
    explicit SignedPermutation(std::vector<int> entries);

    static SignedPermutation identity(int n);

    /// Parses whitespace-separated signed integers. A leading '+' is
    /// accepted on input and never reproduced on output.
    static SignedPermutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }

    /// Element at 1-based position; position must be in 1..n.
    int at(int position) const;

    const std::vector<int>& entries() const { return entries_; }

    bool is_identity() const;
    bool all_positive() const;
    bool fixes_first() const { return !entries_.empty() && entries_[0] == 1; }

    /// Reverses the order of the first k elements and inverts their signs.
    SignedPermutation prefix_flip(int k) const;

    /// Reverses order and signs of the segment between positions i and j,
    /// 1 <= i <= j <= n.
    SignedPermutation signed_reversal(int i, int j) const;

    /// Swaps the elements in positions i and j, 1 <= i < j <= n.
    SignedPermutation exchange(int i, int j) const;
    SignedPermutation prefix_exchange(int j) const { return exchange(1, j); }

    /// Group inverse under the convention pi(-i) = -pi(i), so that
    /// inverse().compose(*this) is the identity.
    SignedPermutation inverse() const;

    /// Function composition (*this ∘ inner), applied right to left.
    SignedPermutation compose(const SignedPermutation& inner) const;

    /// Applies prefix flips left to right.
    SignedPermutation apply_flips(const FlipSequence& flips) const;

    /// Single-space separated entries, no '+' signs.
    std::string str() const;

    bool operator==(const SignedPermutation&) const = default;

private:
    std::vector<int> entries_;
};

/// Prefix flips that together have the effect of the signed reversal on
/// positions i..j: [j] when i = 1, otherwise [j, j-i+1, j]. The sequence
/// is minimal.
FlipSequence mimic_as_prefix_flips(int i, int j, int n);

/// Disjoint cycle decomposition of the classical permutation graph: arc
/// (i, j) whenever pi(i) = j. Requires all entries positive. Each cycle
/// is led by its smallest element and cycles are sorted by leader.
std::vector<std::vector<int>> graph_cycles(const SignedPermutation& pi);

/// Doubled unsigned form with sentinels: 2n+2 values, value 0 first and
/// 2n+1 last; element v maps onto (2v-1, 2v) when positive and
/// (2|v|, 2|v|-1) when negative.
std::vector<int> doubled(const SignedPermutation& pi);

/// Exact inverse of doubled().
SignedPermutation undoubled(const std::vector<int>& values);

}  // namespace burntflip
