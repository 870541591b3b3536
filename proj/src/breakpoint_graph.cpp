#include "burntflip/breakpoint_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace burntflip {

namespace {

bool supports_interleave(int lo1, int hi1, int lo2, int hi2) {
    return (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) ||
           (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
}

}  // namespace

BreakpointGraph::BreakpointGraph(SignedPermutation pi)
    : pi_(std::move(pi)), doubled_(doubled(pi_)) {
    const int m = static_cast<int>(doubled_.size());
    pos_of_value_.assign(static_cast<size_t>(m), 0);
    for (int p = 0; p < m; ++p)
        pos_of_value_[static_cast<size_t>(doubled_[static_cast<size_t>(p)])] = p;

    grey_.reserve(static_cast<size_t>(n() + 1));
    for (int g = 0; g <= n(); ++g) {
        const int p = pos_of_value_[static_cast<size_t>(2 * g)];
        const int q = pos_of_value_[static_cast<size_t>(2 * g + 1)];
        GreyEdge edge;
        edge.index = g;
        edge.lo = std::min(p, q);
        edge.hi = std::max(p, q);
        edge.oriented = (edge.hi - edge.lo) % 2 == 0;  // odd element count
        grey_.push_back(edge);
    }

    build_cycles();
    build_components();
}

int BreakpointGraph::position_of_value(int value) const {
    if (value < 0 || value >= static_cast<int>(doubled_.size()))
        throw std::domain_error("value " + std::to_string(value) +
                                " outside the doubled range");
    return pos_of_value_[static_cast<size_t>(value)];
}

std::pair<int, int> BreakpointGraph::black_edge_values(int i) const {
    if (i < 0 || i > n())
        throw std::domain_error("black edge index " + std::to_string(i) +
                                " out of range 0.." + std::to_string(n()));
    return {doubled_[static_cast<size_t>(2 * i)],
            doubled_[static_cast<size_t>(2 * i + 1)]};
}

bool BreakpointGraph::black_edge_oriented(int i) const {
    if (i < 0 || i > n())
        throw std::domain_error("black edge index " + std::to_string(i) +
                                " out of range 0.." + std::to_string(n()));
    // The sentinels flank the permutation as positive virtual elements.
    const bool left_negative = i > 0 && pi_.at(i) < 0;
    const bool right_negative = i < n() && pi_.at(i + 1) < 0;
    return left_negative != right_negative;
}

bool BreakpointGraph::grey_edge_oriented(int g) const {
    if (g < 0 || g > n())
        throw std::domain_error("grey edge index " + std::to_string(g) +
                                " out of range 0.." + std::to_string(n()));
    return grey_[static_cast<size_t>(g)].oriented;
}

void BreakpointGraph::build_cycles() {
    const int blacks = n() + 1;
    cycle_of_black_.assign(static_cast<size_t>(blacks), -1);
    cycle_of_grey_.assign(static_cast<size_t>(blacks), -1);
    trivial_count_ = 0;

    for (int start = 0; start < blacks; ++start) {
        if (cycle_of_black_[static_cast<size_t>(start)] >= 0) continue;
        AlternatingCycle cycle;
        const int id = static_cast<int>(cycles_.size());
        int black = start;
        // Leave the starting black edge through its right vertex; black
        // partners share a position pair (p, p^1) and grey partners share
        // a value pair (v, v^1).
        int vertex = doubled_[static_cast<size_t>(2 * start + 1)];
        do {
            cycle.black_edges.push_back(black);
            cycle_of_black_[static_cast<size_t>(black)] = id;
            const int grey_partner = vertex ^ 1;
            const int grey = vertex >> 1;
            cycle.grey_edges.push_back(grey);
            cycle_of_grey_[static_cast<size_t>(grey)] = id;
            const int p = pos_of_value_[static_cast<size_t>(grey_partner)];
            black = p >> 1;
            vertex = doubled_[static_cast<size_t>(p ^ 1)];
        } while (black != start);

        cycle.support_lo = 2 * *std::min_element(cycle.black_edges.begin(),
                                                 cycle.black_edges.end());
        cycle.support_hi = 2 * *std::max_element(cycle.black_edges.begin(),
                                                 cycle.black_edges.end()) + 1;
        cycle.oriented = std::any_of(cycle.grey_edges.begin(), cycle.grey_edges.end(),
                                     [this](int g) { return grey_edge_oriented(g); });
        if (cycle.trivial()) ++trivial_count_;
        cycles_.push_back(std::move(cycle));
    }
}

int BreakpointGraph::cycle_of_black(int i) const {
    if (i < 0 || i > n())
        throw std::domain_error("black edge index " + std::to_string(i) +
                                " out of range 0.." + std::to_string(n()));
    return cycle_of_black_[static_cast<size_t>(i)];
}

int BreakpointGraph::cycle_of_grey(int g) const {
    if (g < 0 || g > n())
        throw std::domain_error("grey edge index " + std::to_string(g) +
                                " out of range 0.." + std::to_string(n()));
    return cycle_of_grey_[static_cast<size_t>(g)];
}

bool BreakpointGraph::is_simple() const {
    return std::all_of(cycles_.begin(), cycles_.end(),
                       [](const AlternatingCycle& c) { return c.length() <= 2; });
}

bool BreakpointGraph::cycles_interleave(int c1, int c2) const {
    if (c1 < 0 || c1 >= cycle_count() || c2 < 0 || c2 >= cycle_count())
        throw std::domain_error("cycle id out of range");
    if (c1 == c2)
        throw std::domain_error("interleaving is defined for distinct cycles");
    for (int g1 : cycles_[static_cast<size_t>(c1)].grey_edges) {
        const GreyEdge& e1 = grey_[static_cast<size_t>(g1)];
        for (int g2 : cycles_[static_cast<size_t>(c2)].grey_edges) {
            const GreyEdge& e2 = grey_[static_cast<size_t>(g2)];
            if (supports_interleave(e1.lo, e1.hi, e2.lo, e2.hi)) return true;
        }
    }
    return false;
}

void BreakpointGraph::build_components() {
    const int k = cycle_count();
    h_adjacency_.assign(static_cast<size_t>(k), {});
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (cycles_interleave(a, b)) {
                h_adjacency_[static_cast<size_t>(a)].push_back(b);
                h_adjacency_[static_cast<size_t>(b)].push_back(a);
            }

    component_of_cycle_.assign(static_cast<size_t>(k), -1);
    for (int root = 0; root < k; ++root) {
        if (component_of_cycle_[static_cast<size_t>(root)] >= 0) continue;
        const int id = static_cast<int>(components_.size());
        Component comp;
        std::vector<int> stack{root};
        component_of_cycle_[static_cast<size_t>(root)] = id;
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            comp.cycles.push_back(c);
            for (int nb : h_adjacency_[static_cast<size_t>(c)])
                if (component_of_cycle_[static_cast<size_t>(nb)] < 0) {
                    component_of_cycle_[static_cast<size_t>(nb)] = id;
                    stack.push_back(nb);
                }
        }
        std::sort(comp.cycles.begin(), comp.cycles.end());
        comp.oriented = false;
        comp.sorted = true;
        comp.extent_lo = doubled_.empty() ? 0 : static_cast<int>(doubled_.size());
        comp.extent_hi = 0;
        for (int c : comp.cycles) {
            const AlternatingCycle& cyc = cycles_[static_cast<size_t>(c)];
            comp.oriented = comp.oriented || cyc.oriented;
            comp.sorted = comp.sorted && cyc.trivial();
            comp.extent_lo = std::min(comp.extent_lo, cyc.support_lo);
            comp.extent_hi = std::max(comp.extent_hi, cyc.support_hi);
        }
        components_.push_back(std::move(comp));
    }

    // A component is minimal when every cycle whose support fits inside its
    // extent already belongs to it.
    for (size_t ci = 0; ci < components_.size(); ++ci) {
        Component& comp = components_[ci];
        comp.minimal = true;
        for (int c = 0; c < k; ++c) {
            if (component_of_cycle_[static_cast<size_t>(c)] == static_cast<int>(ci))
                continue;
            const AlternatingCycle& cyc = cycles_[static_cast<size_t>(c)];
            if (cyc.support_lo >= comp.extent_lo && cyc.support_hi <= comp.extent_hi) {
                comp.minimal = false;
                break;
            }
        }
    }
}

int BreakpointGraph::component_of_cycle(int c) const {
    if (c < 0 || c >= cycle_count())
        throw std::domain_error("cycle id out of range");
    return component_of_cycle_[static_cast<size_t>(c)];
}

std::optional<LeftmostInfo> BreakpointGraph::leftmost_structures() const {
    LeftmostInfo info;
    const int c0 = cycle_of_black(0);
    if (!cycles_[static_cast<size_t>(c0)].trivial()) {
        info.cycle = c0;
        info.strict = true;
    } else {
        info.strict = false;
        info.cycle = -1;
        for (int b = 1; b <= n(); ++b) {
            const int c = cycle_of_black(b);
            if (!cycles_[static_cast<size_t>(c)].trivial()) {
                info.cycle = c;
                break;
            }
        }
        if (info.cycle < 0) return std::nullopt;  // identity: all trivial
    }
    info.component = component_of_cycle(info.cycle);
    return info;
}

std::string BreakpointGraph::dump() const {
    std::ostringstream out;
    out << "n: " << n() << "\n";
    out << "perm: " << pi_.str() << "\n";
    out << "doubled:";
    for (int v : doubled_) out << ' ' << v;
    out << "\n";
    for (int i = 0; i <= n(); ++i) {
        const auto [a, b] = black_edge_values(i);
        out << "black " << i << ": values {" << a << "," << b << "} "
            << (black_edge_oriented(i) ? "oriented" : "nonoriented") << "\n";
    }
    for (const GreyEdge& g : grey_) {
        out << "grey " << g.index << ": values {" << 2 * g.index << ","
            << 2 * g.index + 1 << "} support [" << g.lo << "," << g.hi << "] "
            << (g.oriented ? "oriented" : "nonoriented") << "\n";
    }
    for (int c = 0; c < cycle_count(); ++c) {
        const AlternatingCycle& cyc = cycles_[static_cast<size_t>(c)];
        out << "cycle " << c << ": blacks";
        for (int b : cyc.black_edges) out << ' ' << b;
        out << " length " << cyc.length() << ' '
            << (cyc.oriented ? "oriented" : "nonoriented")
            << (cyc.trivial() ? " trivial" : "") << "\n";
    }
    for (size_t ci = 0; ci < components_.size(); ++ci) {
        const Component& comp = components_[ci];
        out << "component " << ci << ": cycles";
        for (int c : comp.cycles) out << ' ' << c;
        out << ' ' << (comp.oriented ? "oriented" : "nonoriented")
            << " extent [" << comp.extent_lo << "," << comp.extent_hi << "]"
            << (comp.minimal ? " minimal" : "")
            << (comp.sorted ? " sorted" : "") << "\n";
    }
    out << "c: " << cycle_count() << "\n";
    out << "c1: " << trivial_cycle_count() << "\n";
    out << "simple: " << (is_simple() ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace burntflip
