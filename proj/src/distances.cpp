#include "burntflip/distances.hpp"

#include <stdexcept>

namespace burntflip {

int prefix_exchange_distance(const SignedPermutation& pi) {
    if (!pi.all_positive())
        throw std::domain_error("prefix exchange distance requires a classical "
                                "permutation, got a negative entry");
    const auto cycles = graph_cycles(pi);
    int c1 = 0;
    for (const auto& cycle : cycles)
        if (cycle.size() == 1) ++c1;
    const int c = static_cast<int>(cycles.size());
    return pi.size() + c - 2 * c1 - (pi.fixes_first() ? 0 : 2);
}

int psrd_lower_bound(const BreakpointGraph& bg) {
    return bg.n() + 1 + bg.cycle_count() - 2 * bg.trivial_cycle_count() -
           (bg.perm().fixes_first() ? 0 : 2);
}

int psrd_lower_bound(const SignedPermutation& pi) {
    return psrd_lower_bound(BreakpointGraph(pi));
}

int orientation_surcharge(const BreakpointGraph& bg) {
    if (bg.perm().fixes_first()) return 0;
    // The first element is not fixed, so black edge 0 is nontrivial and the
    // leftmost cycle exists in the strict sense.
    const auto leftmost = bg.leftmost_structures();
    const Component& comp =
        bg.components()[static_cast<size_t>(leftmost->component)];
    return comp.oriented ? 0 : 1;
}

int psrd_simple(const BreakpointGraph& bg) {
    if (!bg.is_simple())
        throw std::domain_error("distance formula requires a simple permutation; "
                                "breakpoint graph of '" + bg.perm().str() +
                                "' has a cycle longer than 2");
    return psrd_lower_bound(bg) + orientation_surcharge(bg);
}

int psrd_simple(const SignedPermutation& pi) {
    return psrd_simple(BreakpointGraph(pi));
}

DistanceReport distance_report(const SignedPermutation& pi) {
    BreakpointGraph bg(pi);
    DistanceReport report;
    report.n = pi.size();
    if (pi.all_positive()) {
        const auto cycles = graph_cycles(pi);
        int c1 = 0;
        for (const auto& cycle : cycles)
            if (cycle.size() == 1) ++c1;
        report.c_gamma = static_cast<int>(cycles.size());
        report.c1_gamma = c1;
        report.ped = prefix_exchange_distance(pi);
    }
    report.c_bg = bg.cycle_count();
    report.c1_bg = bg.trivial_cycle_count();
    report.first_element_fixed = pi.fixes_first();
    report.simple = bg.is_simple();
    report.t = orientation_surcharge(bg);
    report.lower_bound = psrd_lower_bound(bg);
    if (report.simple) report.formula_value = report.lower_bound + report.t;
    return report;
}

}  // namespace burntflip
