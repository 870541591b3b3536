#pragma once

#include <optional>
#include <string>

#include "burntflip/breakpoint_graph.hpp"
#include "burntflip/signed_permutation.hpp"

namespace burntflip {

/// Every intermediate count behind the distance formulas, so callers and
/// tests can check term by term rather than totals only.
struct DistanceReport {
    int n = 0;
    // Classical (all-positive) inputs only: cycle counts of the permutation
    // graph and the prefix exchange distance.
    std::optional<int> c_gamma;
    std::optional<int> c1_gamma;
    std::optional<int> ped;

    int c_bg = 0;
    int c1_bg = 0;
    bool first_element_fixed = false;
    bool simple = false;
    int t = 0;
    int lower_bound = 0;
    /// Exact prefix signed reversal distance; present iff simple.
    std::optional<int> formula_value;
};

/// Exact prefix exchange distance of a classical permutation:
/// n + c(Gamma) - 2*c1(Gamma), minus 2 unless the first element is fixed.
int prefix_exchange_distance(const SignedPermutation& pi);

/// Lower bound g(pi) on the prefix signed reversal distance:
/// n + 1 + c(BG) - 2*c1(BG), minus 2 unless the first element is fixed.
int psrd_lower_bound(const SignedPermutation& pi);
int psrd_lower_bound(const BreakpointGraph& bg);

/// Surcharge term: 1 iff pi does not fix 1 and the leftmost component of
/// the breakpoint graph is nonoriented, else 0.
int orientation_surcharge(const BreakpointGraph& bg);

/// Exact prefix signed reversal distance of a simple permutation:
/// g(pi) + t(pi). Rejects non-simple input.
int psrd_simple(const SignedPermutation& pi);
int psrd_simple(const BreakpointGraph& bg);

DistanceReport distance_report(const SignedPermutation& pi);

}  // namespace burntflip
