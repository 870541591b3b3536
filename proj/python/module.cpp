#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "burntflip/breakpoint_graph.hpp"
#include "burntflip/distances.hpp"
#include "burntflip/oracle.hpp"
#include "burntflip/simple_sorter.hpp"

namespace py = pybind11;
using namespace burntflip;

PYBIND11_MODULE(burntflip, m) {
    m.doc() = "Sorting signed permutations by prefix signed reversals: "
              "breakpoint-graph analysis, distance bounds, an optimal sorter "
              "for simple permutations, and exhaustive BFS oracles.";

    py::class_<SignedPermutation>(m, "SignedPermutation")
        .def(py::init<std::vector<int>>(), py::arg("entries"))
        .def_static("parse", &SignedPermutation::parse, py::arg("text"))
        .def_static("identity", &SignedPermutation::identity, py::arg("n"))
        .def("__len__", &SignedPermutation::size)
        .def_property_readonly("n", &SignedPermutation::size)
        .def_property_readonly("entries", &SignedPermutation::entries)
        .def("at", &SignedPermutation::at, py::arg("position"),
             "element at a 1-based position")
        .def("is_identity", &SignedPermutation::is_identity)
        .def("all_positive", &SignedPermutation::all_positive)
        .def("fixes_first", &SignedPermutation::fixes_first)
        .def("prefix_flip", &SignedPermutation::prefix_flip, py::arg("k"))
        .def("signed_reversal", &SignedPermutation::signed_reversal,
             py::arg("i"), py::arg("j"))
        .def("exchange", &SignedPermutation::exchange, py::arg("i"), py::arg("j"))
        .def("prefix_exchange", &SignedPermutation::prefix_exchange, py::arg("j"))
        .def("inverse", &SignedPermutation::inverse)
        .def("compose", &SignedPermutation::compose, py::arg("inner"))
        .def("apply_flips", &SignedPermutation::apply_flips, py::arg("flips"))
        .def("__str__", &SignedPermutation::str)
        .def("__repr__",
             [](const SignedPermutation& pi) {
                 return "SignedPermutation('" + pi.str() + "')";
             })
        .def("__eq__",
             [](const SignedPermutation& a, const SignedPermutation& b) {
                 return a == b;
             })
        .def("__hash__", [](const SignedPermutation& pi) {
            return py::hash(py::str(pi.str()));
        });

    m.def("mimic_as_prefix_flips", &mimic_as_prefix_flips, py::arg("i"),
          py::arg("j"), py::arg("n"),
          "prefix flips with the effect of the signed reversal on i..j");
    m.def("graph_cycles", &graph_cycles, py::arg("pi"),
          "disjoint cycle decomposition of a classical permutation");
    m.def("doubled", &doubled, py::arg("pi"));
    m.def("undoubled", &undoubled, py::arg("values"));

    py::class_<GreyEdge>(m, "GreyEdge")
        .def_readonly("index", &GreyEdge::index)
        .def_readonly("lo", &GreyEdge::lo)
        .def_readonly("hi", &GreyEdge::hi)
        .def_readonly("oriented", &GreyEdge::oriented);

    py::class_<AlternatingCycle>(m, "AlternatingCycle")
        .def_readonly("black_edges", &AlternatingCycle::black_edges)
        .def_readonly("grey_edges", &AlternatingCycle::grey_edges)
        .def_readonly("support_lo", &AlternatingCycle::support_lo)
        .def_readonly("support_hi", &AlternatingCycle::support_hi)
        .def_readonly("oriented", &AlternatingCycle::oriented)
        .def_property_readonly("length", &AlternatingCycle::length)
        .def_property_readonly("trivial", &AlternatingCycle::trivial);

    py::class_<Component>(m, "Component")
        .def_readonly("cycles", &Component::cycles)
        .def_readonly("oriented", &Component::oriented)
        .def_readonly("extent_lo", &Component::extent_lo)
        .def_readonly("extent_hi", &Component::extent_hi)
        .def_readonly("minimal", &Component::minimal)
        .def_readonly("sorted", &Component::sorted);

    py::class_<LeftmostInfo>(m, "LeftmostInfo")
        .def_readonly("cycle", &LeftmostInfo::cycle)
        .def_readonly("component", &LeftmostInfo::component)
        .def_readonly("strict", &LeftmostInfo::strict);

    py::class_<BreakpointGraph>(m, "BreakpointGraph")
        .def(py::init<SignedPermutation>(), py::arg("pi"))
        .def_property_readonly("perm", &BreakpointGraph::perm)
        .def_property_readonly("n", &BreakpointGraph::n)
        .def_property_readonly("doubled", &BreakpointGraph::doubled_values)
        .def("position_of_value", &BreakpointGraph::position_of_value)
        .def_property_readonly("black_edge_count",
                               &BreakpointGraph::black_edge_count)
        .def("black_edge_values", &BreakpointGraph::black_edge_values)
        .def("black_edge_oriented", &BreakpointGraph::black_edge_oriented)
        .def_property_readonly("grey_edges", &BreakpointGraph::grey_edges)
        .def("grey_edge_oriented", &BreakpointGraph::grey_edge_oriented)
        .def_property_readonly("cycles", &BreakpointGraph::cycles)
        .def_property_readonly("cycle_count", &BreakpointGraph::cycle_count)
        .def_property_readonly("trivial_cycle_count",
                               &BreakpointGraph::trivial_cycle_count)
        .def("cycle_of_black", &BreakpointGraph::cycle_of_black)
        .def("cycle_of_grey", &BreakpointGraph::cycle_of_grey)
        .def("is_simple", &BreakpointGraph::is_simple)
        .def("cycles_interleave", &BreakpointGraph::cycles_interleave)
        .def_property_readonly("interleaving_adjacency",
                               &BreakpointGraph::interleaving_adjacency)
        .def_property_readonly("components", &BreakpointGraph::components)
        .def("component_of_cycle", &BreakpointGraph::component_of_cycle)
        .def("leftmost_structures", &BreakpointGraph::leftmost_structures)
        .def("dump", &BreakpointGraph::dump);

    py::class_<DistanceReport>(m, "DistanceReport")
        .def_readonly("n", &DistanceReport::n)
        .def_readonly("c_gamma", &DistanceReport::c_gamma)
        .def_readonly("c1_gamma", &DistanceReport::c1_gamma)
        .def_readonly("ped", &DistanceReport::ped)
        .def_readonly("c_bg", &DistanceReport::c_bg)
        .def_readonly("c1_bg", &DistanceReport::c1_bg)
        .def_readonly("first_element_fixed", &DistanceReport::first_element_fixed)
        .def_readonly("simple", &DistanceReport::simple)
        .def_readonly("t", &DistanceReport::t)
        .def_readonly("lower_bound", &DistanceReport::lower_bound)
        .def_readonly("formula_value", &DistanceReport::formula_value);

    m.def("prefix_exchange_distance", &prefix_exchange_distance, py::arg("pi"));
    m.def("psrd_lower_bound",
          py::overload_cast<const SignedPermutation&>(&psrd_lower_bound),
          py::arg("pi"));
    m.def("psrd_simple",
          py::overload_cast<const SignedPermutation&>(&psrd_simple),
          py::arg("pi"));
    m.def("orientation_surcharge", &orientation_surcharge, py::arg("bg"));
    m.def("distance_report", &distance_report, py::arg("pi"));

    py::enum_<MoveKind>(m, "MoveKind")
        .value("proper_split", MoveKind::proper_split)
        .value("single_flip_orientation", MoveKind::single_flip_orientation)
        .value("double_flip_orientation", MoveKind::double_flip_orientation);

    py::enum_<MoveClass>(m, "MoveClass")
        .value("merging", MoveClass::merging)
        .value("splitting", MoveClass::splitting)
        .value("other", MoveClass::other);

    py::class_<SortMove>(m, "SortMove")
        .def_readonly("kind", &SortMove::kind)
        .def_readonly("flips", &SortMove::flips)
        .def_readonly("result", &SortMove::result);

    py::class_<SortTrace>(m, "SortTrace")
        .def_readonly("source", &SortTrace::source)
        .def_readonly("flips", &SortTrace::flips)
        .def_readonly("checkpoints", &SortTrace::checkpoints)
        .def_readonly("result", &SortTrace::result);

    m.def("find_proper_reversal", &find_proper_reversal, py::arg("bg"));
    m.def("single_flip_orientation", &single_flip_orientation, py::arg("bg"));
    m.def("double_flip_orientation", &double_flip_orientation, py::arg("bg"));
    m.def("sort_oriented_component", &sort_oriented_component, py::arg("bg"),
          py::arg("component_id"));
    m.def("sort_simple", &sort_simple, py::arg("pi"));
    m.def("classify_move", &classify_move, py::arg("bg"), py::arg("flip_length"));

    py::enum_<GeneratorSet>(m, "GeneratorSet")
        .value("prefix_signed_reversals", GeneratorSet::prefix_signed_reversals)
        .value("prefix_exchanges", GeneratorSet::prefix_exchanges);

    py::class_<OracleTable>(m, "OracleTable")
        .def_static("build", &OracleTable::build, py::arg("n"), py::arg("gens"),
                    py::arg("cap") = 0)
        .def_property_readonly("n", &OracleTable::n)
        .def_property_readonly("generators", &OracleTable::generators)
        .def_property_readonly("state_count", &OracleTable::state_count)
        .def_property_readonly("max_distance", &OracleTable::max_distance)
        .def("distance", &OracleTable::distance, py::arg("pi"))
        .def("distance_of_code", &OracleTable::distance_of_code, py::arg("code"))
        .def("decode", &OracleTable::decode, py::arg("code"))
        .def("layer_sizes", &OracleTable::layer_sizes)
        .def("save", &OracleTable::save, py::arg("path"))
        .def_static("load", &OracleTable::load, py::arg("path"));

    m.def("encode_state", &encode_state, py::arg("pi"), py::arg("with_signs"));
    m.def("decode_state", &decode_state, py::arg("n"), py::arg("code"),
          py::arg("with_signs"));
    m.def("all_signed_permutations", &all_signed_permutations, py::arg("n"));
    m.def("enumerate_simple", &enumerate_simple, py::arg("n"));

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("checked", &CheckResult::checked)
        .def_readonly("violations", &CheckResult::violations)
        .def_readonly("examples", &CheckResult::examples)
        .def("ok", &CheckResult::ok);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("n", &VerifyReport::n)
        .def_readonly("gens", &VerifyReport::gens)
        .def_readonly("checks", &VerifyReport::checks)
        .def_readonly("max_distance", &VerifyReport::max_distance)
        .def("ok", &VerifyReport::ok);

    py::class_<MergeSplitReport>(m, "MergeSplitReport")
        .def_readonly("n", &MergeSplitReport::n)
        .def_readonly("starts", &MergeSplitReport::starts)
        .def_readonly("states_visited", &MergeSplitReport::states_visited)
        .def_readonly("asserted_states", &MergeSplitReport::asserted_states)
        .def_readonly("violations", &MergeSplitReport::violations)
        .def_readonly("depth_truncations", &MergeSplitReport::depth_truncations)
        .def_readonly("examples", &MergeSplitReport::examples)
        .def("ok", &MergeSplitReport::ok);

    m.def("verify_distances", &verify_distances, py::arg("n"), py::arg("gens"),
          py::arg("cap") = 0);
    m.def("check_merge_split_invariant", &check_merge_split_invariant,
          py::arg("n"), py::arg("cap") = 5);

#ifdef VERSION_INFO
#define BF_STR(x) #x
#define BF_XSTR(x) BF_STR(x)
    m.attr("__version__") = BF_XSTR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
