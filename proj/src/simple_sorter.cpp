#include "burntflip/simple_sorter.hpp"

#include <algorithm>
#include <stdexcept>

#include "burntflip/distances.hpp"

namespace burntflip {

namespace {

void require_simple(const BreakpointGraph& bg, const char* who) {
    if (!bg.is_simple())
        throw std::domain_error(std::string(who) +
                                " requires a simple permutation; '" +
                                bg.perm().str() + "' is not simple");
}

void require_no_oriented_cycle(const BreakpointGraph& bg, const char* who) {
    for (const AlternatingCycle& c : bg.cycles())
        if (c.oriented)
            throw std::domain_error(std::string(who) +
                                    " requires a graph without oriented cycles; '" +
                                    bg.perm().str() + "' has one");
}

[[noreturn]] void corrupted(const std::string& what, const SignedPermutation& pi) {
    throw std::logic_error("internal sorter check failed: " + what +
                           " (state: '" + pi.str() + "')");
}

// Splits every tracked black edge of one component into trivial cycles by
// proper reversals on oriented 2-cycles, mimicked as prefix flips. Greedy
// over candidates in canonical order, backtracking when a choice leaves
// the remaining cycles without an oriented one.
bool split_component(const SignedPermutation& perm, const std::vector<int>& blacks,
                     std::vector<SortMove>& out) {
    if (blacks.empty()) return true;
    BreakpointGraph bg(perm);
    const int before = psrd_lower_bound(bg);
    for (const AlternatingCycle& cycle : bg.cycles()) {
        if (cycle.length() != 2 || !cycle.oriented) continue;
        const int a = std::min(cycle.black_edges[0], cycle.black_edges[1]);
        const int b = std::max(cycle.black_edges[0], cycle.black_edges[1]);
        if (!std::binary_search(blacks.begin(), blacks.end(), a) ||
            !std::binary_search(blacks.begin(), blacks.end(), b))
            continue;
        const FlipSequence flips = mimic_as_prefix_flips(a + 1, b, perm.size());
        const SignedPermutation next = perm.apply_flips(flips);
        if (before - psrd_lower_bound(next) != static_cast<int>(flips.size()))
            corrupted("a proper split did not lower the bound by its flip count",
                      perm);
        std::vector<int> remaining;
        remaining.reserve(blacks.size() - 2);
        for (int p : blacks) {
            if (p == a || p == b) continue;
            remaining.push_back(a < p && p < b ? a + b - p : p);
        }
        std::sort(remaining.begin(), remaining.end());
        out.push_back({MoveKind::proper_split, flips, next});
        if (split_component(next, remaining, out)) return true;
        out.pop_back();
    }
    return false;
}

std::vector<int> component_blacks(const BreakpointGraph& bg, int component_id) {
    std::vector<int> blacks;
    const Component& comp =
        bg.components()[static_cast<size_t>(component_id)];
    for (int c : comp.cycles)
        for (int b : bg.cycles()[static_cast<size_t>(c)].black_edges)
            blacks.push_back(b);
    std::sort(blacks.begin(), blacks.end());
    return blacks;
}

}  // namespace

const char* to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::proper_split: return "proper-split";
        case MoveKind::single_flip_orientation: return "single-flip-orientation";
        case MoveKind::double_flip_orientation: return "double-flip-orientation";
    }
    return "?";
}

const char* to_string(MoveClass cls) {
    switch (cls) {
        case MoveClass::merging: return "merging";
        case MoveClass::splitting: return "splitting";
        case MoveClass::other: return "other";
    }
    return "?";
}

std::optional<std::pair<int, int>> find_proper_reversal(const BreakpointGraph& bg) {
    require_simple(bg, "find_proper_reversal");
    for (const AlternatingCycle& cycle : bg.cycles()) {
        if (cycle.length() != 2 || !cycle.oriented) continue;
        const int a = std::min(cycle.black_edges[0], cycle.black_edges[1]);
        const int b = std::max(cycle.black_edges[0], cycle.black_edges[1]);
        return std::make_pair(a + 1, b);
    }
    return std::nullopt;
}

FlipSequence single_flip_orientation(const BreakpointGraph& bg) {
    require_simple(bg, "single_flip_orientation");
    if (bg.perm().fixes_first())
        throw std::domain_error("the single-flip orientation move applies only when "
                                "the first element is not fixed");
    require_no_oriented_cycle(bg, "single_flip_orientation");
    const AlternatingCycle& leftmost =
        bg.cycles()[static_cast<size_t>(bg.cycle_of_black(0))];
    const int second =
        std::max(leftmost.black_edges[0], leftmost.black_edges[1]);
    return {second};
}

FlipSequence double_flip_orientation(const BreakpointGraph& bg) {
    require_simple(bg, "double_flip_orientation");
    if (!bg.perm().fixes_first())
        throw std::domain_error("the double-flip orientation move applies only when "
                                "the first element is fixed");
    require_no_oriented_cycle(bg, "double_flip_orientation");
    const auto leftmost = bg.leftmost_structures();
    if (!leftmost)
        throw std::domain_error("the double-flip orientation move needs a "
                                "nontrivial component; '" + bg.perm().str() +
                                "' is already sorted");
    const int c1 = leftmost->cycle;
    const auto& neighbours = bg.interleaving_adjacency()[static_cast<size_t>(c1)];
    if (neighbours.empty())
        corrupted("a nontrivial cycle interleaves with no other cycle",
                  bg.perm());
    const AlternatingCycle& c2 = bg.cycles()[static_cast<size_t>(neighbours.front())];
    const int p = std::min(c2.black_edges[0], c2.black_edges[1]);
    const int q = std::max(c2.black_edges[0], c2.black_edges[1]);
    return {p, q};
}

FlipSequence sort_oriented_component(const BreakpointGraph& bg, int component_id) {
    require_simple(bg, "sort_oriented_component");
    if (component_id < 0 ||
        component_id >= static_cast<int>(bg.components().size()))
        throw std::domain_error("component id out of range");
    const Component& comp = bg.components()[static_cast<size_t>(component_id)];
    if (!comp.oriented)
        throw std::domain_error("component " + std::to_string(component_id) +
                                " of '" + bg.perm().str() + "' is nonoriented");
    std::vector<SortMove> moves;
    if (!split_component(bg.perm(), component_blacks(bg, component_id), moves))
        corrupted("an oriented component could not be sorted by proper reversals",
                  bg.perm());
    FlipSequence flips;
    for (const SortMove& move : moves)
        flips.insert(flips.end(), move.flips.begin(), move.flips.end());
    return flips;
}

SortTrace sort_simple(const SignedPermutation& pi) {
    {
        BreakpointGraph bg(pi);
        require_simple(bg, "sort_simple");
    }
    const int expected = psrd_simple(pi);

    SortTrace trace{pi, {}, {}, pi};
    SignedPermutation cur = pi;
    auto record = [&](MoveKind kind, const FlipSequence& flips,
                      const SignedPermutation& next) {
        trace.flips.insert(trace.flips.end(), flips.begin(), flips.end());
        trace.checkpoints.push_back({kind, flips, next});
        cur = next;
    };

    while (!cur.is_identity()) {
        BreakpointGraph bg(cur);
        int oriented_component = -1;
        for (size_t ci = 0; ci < bg.components().size(); ++ci)
            if (bg.components()[ci].oriented) {
                oriented_component = static_cast<int>(ci);
                break;  // component ids ascend with their extent
            }
        if (oriented_component >= 0) {
            std::vector<SortMove> moves;
            if (!split_component(cur, component_blacks(bg, oriented_component),
                                 moves))
                corrupted("an oriented component could not be sorted by proper "
                          "reversals", cur);
            for (const SortMove& move : moves)
                record(move.kind, move.flips, move.result);
        } else if (!cur.fixes_first()) {
            const FlipSequence flips = single_flip_orientation(bg);
            const SignedPermutation next = cur.apply_flips(flips);
            BreakpointGraph nb(next);
            if (!nb.is_simple()) corrupted("single-flip orientation left a non-simple state", next);
            if (psrd_lower_bound(nb) != psrd_lower_bound(bg))
                corrupted("single-flip orientation changed the lower bound", next);
            const auto lm = nb.leftmost_structures();
            if (!lm || !lm->strict ||
                !nb.components()[static_cast<size_t>(lm->component)].oriented)
                corrupted("single-flip orientation failed to orient the leftmost "
                          "component", next);
            record(MoveKind::single_flip_orientation, flips, next);
        } else {
            const FlipSequence flips = double_flip_orientation(bg);
            const SignedPermutation next = cur.apply_flips(flips);
            BreakpointGraph nb(next);
            if (!nb.is_simple()) corrupted("double-flip orientation left a non-simple state", next);
            if (psrd_lower_bound(bg) - psrd_lower_bound(nb) != 2)
                corrupted("double-flip orientation did not lower the bound by 2", next);
            const auto lm = nb.leftmost_structures();
            if (!lm || !lm->strict ||
                !nb.components()[static_cast<size_t>(lm->component)].oriented)
                corrupted("double-flip orientation failed to orient the leftmost "
                          "component", next);
            record(MoveKind::double_flip_orientation, flips, next);
        }
    }

    trace.result = cur;
    if (!pi.apply_flips(trace.flips).is_identity())
        corrupted("flip sequence does not sort the source", pi);
    if (static_cast<int>(trace.flips.size()) != expected)
        corrupted("sorter used " + std::to_string(trace.flips.size()) +
                  " flips where the distance formula gives " +
                  std::to_string(expected), pi);
    for (const SortMove& move : trace.checkpoints)
        if (!BreakpointGraph(move.result).is_simple())
            corrupted("checkpoint is not simple", move.result);
    return trace;
}

MoveClass classify_move(const BreakpointGraph& bg, int flip_length) {
    if (flip_length < 1 || flip_length > bg.n())
        throw std::domain_error("flip length " + std::to_string(flip_length) +
                                " out of range 1.." + std::to_string(bg.n()));
    const int c0 = bg.cycle_of_black(0);
    const int ck = bg.cycle_of_black(flip_length);
    const AlternatingCycle& leftmost = bg.cycles()[static_cast<size_t>(c0)];
    if (c0 != ck) {
        const AlternatingCycle& other = bg.cycles()[static_cast<size_t>(ck)];
        return (!leftmost.trivial() && !other.trivial()) ? MoveClass::merging
                                                         : MoveClass::other;
    }
    // Acting on one cycle: the leftmost. Splitting means one extra cycle
    // with at least one trivial product.
    BreakpointGraph after(bg.perm().prefix_flip(flip_length));
    if (after.cycle_count() == bg.cycle_count() + 1 &&
        after.trivial_cycle_count() >= bg.trivial_cycle_count() + 1)
        return MoveClass::splitting;
    return MoveClass::other;
}

}  // namespace burntflip
