#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burntflip/signed_permutation.hpp"

namespace burntflip {

enum class GeneratorSet { prefix_signed_reversals, prefix_exchanges };
const char* to_string(GeneratorSet gens);

/// Dense mixed-radix code of a permutation: reading left to right, each
/// digit is rank-of-|entry|-among-remaining-values, doubled plus the sign
/// bit for signed tables. Codes cover 0 .. 2^n*n!-1 (signed) or 0 .. n!-1
/// (unsigned) and enumerate permutations in lexicographic order under the
/// entry order 1 < -1 < 2 < -2 < ...
std::uint64_t encode_state(const SignedPermutation& pi, bool with_signs);
SignedPermutation decode_state(int n, std::uint64_t code, bool with_signs);

/// Exact distance-to-identity for every state of a small group under a
/// generator set, computed by breadth-first search from the identity with
/// a flat distance array (one byte per state).
class OracleTable {
public:
    static constexpr int kSignedCap = 7;    // 2^7 * 7! = 645,120 states
    static constexpr int kUnsignedCap = 8;  // 8! = 40,320 states

    /// cap = 0 picks the default cap for the generator set. Raising the
    /// cap past the defaults is possible but guarded: the state count must
    /// stay below 2^31.
    static OracleTable build(int n, GeneratorSet gens, int cap = 0);

    int n() const { return n_; }
    GeneratorSet generators() const { return gens_; }
    std::uint64_t state_count() const { return dist_.size(); }
    int max_distance() const { return max_distance_; }

    int distance(const SignedPermutation& pi) const;
    int distance_of_code(std::uint64_t code) const;
    SignedPermutation decode(std::uint64_t code) const;

    const std::vector<std::uint8_t>& distances() const { return dist_; }
    /// Number of states at each BFS depth, 0 .. max_distance().
    std::vector<std::uint64_t> layer_sizes() const;

    /// Binary dump: magic "BFOR", version byte, generator tag byte, n,
    /// reserved byte, little-endian u64 state count, then one distance
    /// byte per state in encoding order.
    void save(const std::string& path) const;
    static OracleTable load(const std::string& path);

private:
    OracleTable(int n, GeneratorSet gens);

    int n_;
    GeneratorSet gens_;
    std::vector<std::uint8_t> dist_;
    int max_distance_ = 0;
};

std::vector<SignedPermutation> all_signed_permutations(int n);

/// Every simple signed permutation of n elements, in encoding order.
std::vector<SignedPermutation> enumerate_simple(int n);

struct CheckResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> examples;  // first few violations, verbatim

    bool ok() const { return violations == 0; }
};

struct VerifyReport {
    int n = 0;
    GeneratorSet gens = GeneratorSet::prefix_signed_reversals;
    std::vector<CheckResult> checks;
    int max_distance = -1;

    bool ok() const;
};

/// Machine-checks the distance results over the full group of size n:
/// with prefix exchanges, the exact formula; with prefix signed reversals,
/// the lower bound on every state plus formula/sorter exactness on every
/// simple state. Violations are report entries, not exceptions.
VerifyReport verify_distances(int n, GeneratorSet gens, int cap = 0);

struct MergeSplitReport {
    int n = 0;
    std::uint64_t starts = 0;
    std::uint64_t states_visited = 0;
    std::uint64_t asserted_states = 0;
    std::uint64_t violations = 0;
    std::uint64_t depth_truncations = 0;
    std::vector<std::string> examples;

    bool ok() const { return violations == 0; }
};

/// From every simple permutation that does not fix 1 and whose leftmost
/// component is nonoriented, explores all sequences of merging/splitting
/// moves up to depth 2*(n+1); at every reached state whose leftmost cycle
/// is a 2-cycle, checks that the state is simple with a nonoriented
/// leftmost component. Depth-bound overruns are reported, not fatal.
MergeSplitReport check_merge_split_invariant(int n, int cap = 5);

}  // namespace burntflip
