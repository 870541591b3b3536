#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burntflip/signed_permutation.hpp"

namespace burntflip {

/// Grey edge g joins values 2g and 2g+1 of the doubled sequence. Its
/// support is the closed interval of positions between its endpoints;
/// the edge is oriented when the support holds an odd number of elements.
struct GreyEdge {
    int index = 0;
    int lo = 0;
    int hi = 0;
    bool oriented = false;
};

/// Cycle alternating black and grey edges. Its length is the number of
/// black edges; a 1-cycle is trivial. Black/grey edge indices are listed
/// in traversal order starting from the smallest black edge.
struct AlternatingCycle {
    std::vector<int> black_edges;
    std::vector<int> grey_edges;
    int support_lo = 0;
    int support_hi = 0;
    bool oriented = false;

    int length() const { return static_cast<int>(black_edges.size()); }
    bool trivial() const { return black_edges.size() == 1; }
};

/// Connected component of the cycle-interleaving graph H(pi).
struct Component {
    std::vector<int> cycles;
    bool oriented = false;
    int extent_lo = 0;
    int extent_hi = 0;
    bool minimal = false;
    /// True when the component consists solely of trivial cycles; such a
    /// component needs no moves and is skipped by the sorter.
    bool sorted = false;
};

struct LeftmostInfo {
    int cycle = -1;      ///< id of the leftmost nontrivial cycle
    int component = -1;  ///< id of its component
    /// True when that cycle contains black edge 0; false when black edge 0
    /// lies in a trivial cycle and the smallest-index nontrivial fallback
    /// was used instead.
    bool strict = false;
};

/// Breakpoint graph of a signed permutation: the doubled sequence with
/// sentinels 0 and 2n+1, black edges {pi'_{2i}, pi'_{2i+1}} for
/// 0 <= i <= n joining adjacent positions, grey edges joining consecutive
/// values {2i, 2i+1}, the alternating-cycle decomposition, and the
/// components of the interleaving graph. Immutable once built.
class BreakpointGraph {
public:
    explicit BreakpointGraph(SignedPermutation pi);

    const SignedPermutation& perm() const { return pi_; }
    int n() const { return pi_.size(); }
    const std::vector<int>& doubled_values() const { return doubled_; }
    int position_of_value(int value) const;

    int black_edge_count() const { return n() + 1; }
    /// Values {pi'_{2i}, pi'_{2i+1}} of black edge i.
    std::pair<int, int> black_edge_values(int i) const;
    /// A black edge is oriented when the two permutation elements flanking
    /// it carry opposite signs; the sentinels count as positive.
    bool black_edge_oriented(int i) const;

    const std::vector<GreyEdge>& grey_edges() const { return grey_; }
    bool grey_edge_oriented(int g) const;

    const std::vector<AlternatingCycle>& cycles() const { return cycles_; }
    int cycle_count() const { return static_cast<int>(cycles_.size()); }
    int trivial_cycle_count() const { return trivial_count_; }
    int cycle_of_black(int i) const;
    int cycle_of_grey(int g) const;

    /// Only cycles of length at most 2.
    bool is_simple() const;

    /// Two distinct cycles interleave when a grey edge of one interleaves
    /// with a grey edge of the other (supports overlap without containment).
    bool cycles_interleave(int c1, int c2) const;

    /// Adjacency lists of H(pi) over cycle ids.
    const std::vector<std::vector<int>>& interleaving_adjacency() const {
        return h_adjacency_;
    }

    const std::vector<Component>& components() const { return components_; }
    int component_of_cycle(int c) const;

    /// Leftmost nontrivial cycle and its component; empty for the identity.
    std::optional<LeftmostInfo> leftmost_structures() const;

    /// Text dump consumed by the CLI `analyze` command and golden tests:
    /// the doubled sequence, every black and grey edge, one line per cycle
    /// and one line per component.
    std::string dump() const;

private:
    SignedPermutation pi_;
    std::vector<int> doubled_;
    std::vector<int> pos_of_value_;
    std::vector<GreyEdge> grey_;
    std::vector<AlternatingCycle> cycles_;
    std::vector<int> cycle_of_black_;
    std::vector<int> cycle_of_grey_;
    std::vector<std::vector<int>> h_adjacency_;
    std::vector<Component> components_;
    std::vector<int> component_of_cycle_;
    int trivial_count_ = 0;

    void build_cycles();
    void build_components();
};

}  // namespace burntflip
