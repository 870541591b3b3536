#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burntflip/breakpoint_graph.hpp"
#include "burntflip/signed_permutation.hpp"

namespace burntflip {

enum class MoveKind {
    proper_split,
    single_flip_orientation,
    double_flip_orientation,
};
const char* to_string(MoveKind kind);

/// One logical move of the sorter: the prefix flips it spent and the
/// (simple) permutation reached afterwards.
struct SortMove {
    MoveKind kind;
    FlipSequence flips;
    SignedPermutation result;
};

/// Certificate of an optimal sort: folding `flips` over `source` yields
/// the identity, the permutation at every checkpoint is simple, and the
/// total flip count equals the exact distance of `source`.
struct SortTrace {
    SignedPermutation source;
    FlipSequence flips;
    std::vector<SortMove> checkpoints;
    SignedPermutation result;
};

/// Positions (i, j) of a signed reversal acting on the two black edges of
/// an oriented 2-cycle; such a reversal is proper (it splits the cycle
/// into two trivial cycles). Empty iff the graph has no oriented cycle.
/// Cycles are tried in canonical order, so the oriented 2-cycle with the
/// smallest left black edge wins. Requires a simple permutation.
std::optional<std::pair<int, int>> find_proper_reversal(const BreakpointGraph& bg);

/// Single flip that orients the leftmost component when pi does not fix 1
/// and no oriented cycle exists: flip up to the second black edge of the
/// leftmost cycle. Leaves the lower bound unchanged.
FlipSequence single_flip_orientation(const BreakpointGraph& bg);

/// Two flips that orient a nonoriented component when pi fixes 1 and no
/// oriented cycle exists: with C1 the leftmost cycle of the leftmost
/// nonoriented component and C2 the lowest-indexed cycle interleaving C1,
/// flip up to each black edge of C2 in turn. Decreases the lower bound by
/// exactly 2 and keeps the permutation simple.
FlipSequence double_flip_orientation(const BreakpointGraph& bg);

/// Flips that turn every black edge of an oriented component into a
/// trivial cycle. Each logical step mimics a proper reversal on an
/// oriented 2-cycle (1 flip when its left black edge is black edge 0,
/// else 3); the total decreases the lower bound by exactly its length.
FlipSequence sort_oriented_component(const BreakpointGraph& bg, int component_id);

/// Optimally sorts a simple permutation by prefix signed reversals:
/// sort an oriented component when one exists (leftmost first), otherwise
/// orient one. Self-verifies the trace invariants before returning.
SortTrace sort_simple(const SignedPermutation& pi);

/// Classification of a single prefix flip against the current graph:
/// merging when it acts on two distinct nontrivial cycles, splitting when
/// it splits the leftmost cycle with at least one trivial product.
enum class MoveClass { merging, splitting, other };
const char* to_string(MoveClass cls);

MoveClass classify_move(const BreakpointGraph& bg, int flip_length);

}  // namespace burntflip
