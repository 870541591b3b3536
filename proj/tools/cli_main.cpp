// burntflip: analyze and optimally sort signed permutations under prefix
// signed reversals, with exhaustive BFS verification at small sizes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "burntflip/breakpoint_graph.hpp"
#include "burntflip/distances.hpp"
#include "burntflip/oracle.hpp"
#include "burntflip/simple_sorter.hpp"

using json = nlohmann::ordered_json;
using namespace burntflip;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitViolation = 3;

struct CommonArgs {
    std::vector<std::string> perms;
    std::string file;
    bool machine = false;
};

std::vector<SignedPermutation> gather_permutations(const CommonArgs& args) {
    std::vector<SignedPermutation> out;
    for (const std::string& text : args.perms)
        out.push_back(SignedPermutation::parse(text));
    if (!args.file.empty()) {
        std::ifstream in(args.file);
        if (!in)
            throw std::invalid_argument("cannot open '" + args.file + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out.push_back(SignedPermutation::parse(line));
        }
    }
    if (out.empty())
        throw std::invalid_argument("no permutation given; pass it as an "
                                    "argument or via --file");
    return out;
}

json distance_json(const SignedPermutation& pi, const DistanceReport& r) {
    json j;
    j["perm"] = pi.str();
    j["n"] = r.n;
    j["c_bg"] = r.c_bg;
    j["c1_bg"] = r.c1_bg;
    j["first_element_fixed"] = r.first_element_fixed;
    j["simple"] = r.simple;
    j["t"] = r.t;
    j["lower_bound"] = r.lower_bound;
    j["psrd"] = r.formula_value ? json(*r.formula_value) : json(nullptr);
    j["c_gamma"] = r.c_gamma ? json(*r.c_gamma) : json(nullptr);
    j["c1_gamma"] = r.c1_gamma ? json(*r.c1_gamma) : json(nullptr);
    j["ped"] = r.ped ? json(*r.ped) : json(nullptr);
    return j;
}

int cmd_distance(const CommonArgs& args) {
    const auto perms = gather_permutations(args);
    const bool batch = perms.size() > 1 || !args.file.empty();
    for (const SignedPermutation& pi : perms) {
        const DistanceReport r = distance_report(pi);
        if (args.machine) {
            std::cout << distance_json(pi, r).dump() << "\n";
        } else if (batch) {
            std::cout << pi.str() << " | g=" << r.lower_bound;
            if (r.simple)
                std::cout << " simple=yes t=" << r.t << " psrd=" << *r.formula_value;
            else
                std::cout << " not simple: formula unavailable, lower bound only";
            std::cout << "\n";
        } else {
            std::cout << "perm: " << pi.str() << "\n";
            std::cout << "n: " << r.n << "\n";
            std::cout << "c(BG): " << r.c_bg << "\n";
            std::cout << "c1(BG): " << r.c1_bg << "\n";
            std::cout << "first element fixed: "
                      << (r.first_element_fixed ? "yes" : "no") << "\n";
            std::cout << "g (lower bound): " << r.lower_bound << "\n";
            std::cout << "simple: " << (r.simple ? "yes" : "no") << "\n";
            if (r.simple) {
                std::cout << "t: " << r.t << "\n";
                std::cout << "psrd: " << *r.formula_value << "\n";
            } else {
                std::cout << "not simple: formula unavailable, lower bound only\n";
            }
            if (r.ped) {
                std::cout << "c(Gamma): " << *r.c_gamma << "\n";
                std::cout << "c1(Gamma): " << *r.c1_gamma << "\n";
                std::cout << "ped: " << *r.ped << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_sort(const CommonArgs& args, bool with_trace) {
    const auto perms = gather_permutations(args);
    for (const SignedPermutation& pi : perms) {
        if (!BreakpointGraph(pi).is_simple())
            throw std::domain_error("'" + pi.str() +
                                    "' is not simple, so no exact sorter "
                                    "applies; run `distance` for the lower bound");
        const SortTrace trace = sort_simple(pi);
        if (!pi.apply_flips(trace.flips).is_identity())
            throw std::logic_error("flip sequence fails to sort '" + pi.str() +
                                   "'");
        if (args.machine) {
            json j;
            j["perm"] = pi.str();
            j["flips"] = trace.flips;
            j["length"] = trace.flips.size();
            json steps = json::array();
            for (const SortMove& move : trace.checkpoints) {
                json step;
                step["kind"] = to_string(move.kind);
                step["flips"] = move.flips;
                step["result"] = move.result.str();
                steps.push_back(std::move(step));
            }
            j["trace"] = std::move(steps);
            std::cout << j.dump() << "\n";
        } else {
            std::string line;
            for (size_t i = 0; i < trace.flips.size(); ++i) {
                if (i) line += ' ';
                line += std::to_string(trace.flips[i]);
            }
            std::cout << line << "\n";
            if (with_trace) {
                SignedPermutation cur = pi;
                for (const SortMove& move : trace.checkpoints)
                    for (size_t i = 0; i < move.flips.size(); ++i) {
                        cur = cur.prefix_flip(move.flips[i]);
                        std::cout << "flip " << move.flips[i] << " "
                                  << to_string(move.kind) << " -> " << cur.str()
                                  << "\n";
                    }
            }
        }
    }
    return kExitOk;
}

json analyze_json(const BreakpointGraph& bg) {
    json j;
    j["perm"] = bg.perm().str();
    j["n"] = bg.n();
    j["doubled"] = bg.doubled_values();
    json blacks = json::array();
    for (int b = 0; b <= bg.n(); ++b) {
        const auto [x, y] = bg.black_edge_values(b);
        json e;
        e["index"] = b;
        e["values"] = std::vector<int>{x, y};
        e["oriented"] = bg.black_edge_oriented(b);
        blacks.push_back(std::move(e));
    }
    j["black_edges"] = std::move(blacks);
    json greys = json::array();
    for (const GreyEdge& g : bg.grey_edges()) {
        json e;
        e["index"] = g.index;
        e["values"] = std::vector<int>{2 * g.index, 2 * g.index + 1};
        e["support"] = std::vector<int>{g.lo, g.hi};
        e["oriented"] = g.oriented;
        greys.push_back(std::move(e));
    }
    j["grey_edges"] = std::move(greys);
    json cycles = json::array();
    for (int c = 0; c < bg.cycle_count(); ++c) {
        const AlternatingCycle& cyc = bg.cycles()[c];
        json e;
        e["id"] = c;
        e["black_edges"] = cyc.black_edges;
        e["length"] = cyc.length();
        e["oriented"] = cyc.oriented;
        e["trivial"] = cyc.trivial();
        cycles.push_back(std::move(e));
    }
    j["cycles"] = std::move(cycles);
    json comps = json::array();
    for (size_t ci = 0; ci < bg.components().size(); ++ci) {
        const Component& comp = bg.components()[ci];
        json e;
        e["id"] = ci;
        e["cycles"] = comp.cycles;
        e["oriented"] = comp.oriented;
        e["extent"] = std::vector<int>{comp.extent_lo, comp.extent_hi};
        e["minimal"] = comp.minimal;
        e["sorted"] = comp.sorted;
        comps.push_back(std::move(e));
    }
    j["components"] = std::move(comps);
    j["c"] = bg.cycle_count();
    j["c1"] = bg.trivial_cycle_count();
    j["simple"] = bg.is_simple();
    return j;
}

int cmd_analyze(const CommonArgs& args) {
    const auto perms = gather_permutations(args);
    bool first = true;
    for (const SignedPermutation& pi : perms) {
        const BreakpointGraph bg(pi);
        if (args.machine) {
            std::cout << analyze_json(bg).dump() << "\n";
        } else {
            if (!first) std::cout << "\n";
            std::cout << bg.dump();
        }
        first = false;
    }
    return kExitOk;
}

void print_check(const CheckResult& check) {
    std::cout << "check " << check.name << ": " << check.checked << " states, "
              << check.violations << " violations "
              << (check.ok() ? "[pass]" : "[FAIL]") << "\n";
    for (const std::string& example : check.examples)
        std::cout << "  violation: " << example << "\n";
}

int cmd_verify(int n, const std::string& gens, bool lemma9, int max_n,
               bool machine) {
    bool violations = false;
    json out;
    out["n"] = n;
    out["checks"] = json::array();

    std::vector<GeneratorSet> sets;
    if (gens == "signed" || gens == "both")
        sets.push_back(GeneratorSet::prefix_signed_reversals);
    if (gens == "unsigned" || gens == "both")
        sets.push_back(GeneratorSet::prefix_exchanges);

    for (const GeneratorSet set : sets) {
        const VerifyReport report = verify_distances(n, set, max_n);
        violations = violations || !report.ok();
        if (machine) {
            for (const CheckResult& check : report.checks) {
                json c;
                c["generators"] = to_string(set);
                c["name"] = check.name;
                c["states"] = check.checked;
                c["violations"] = check.violations;
                c["examples"] = check.examples;
                out["checks"].push_back(std::move(c));
            }
            out[std::string("max_distance_") +
                (set == GeneratorSet::prefix_signed_reversals ? "signed"
                                                              : "unsigned")] =
                report.max_distance;
        } else {
            std::cout << "generators " << to_string(set) << ": max distance "
                      << report.max_distance << "\n";
            for (const CheckResult& check : report.checks) print_check(check);
        }
    }

    if (lemma9) {
        const MergeSplitReport report = check_merge_split_invariant(n, std::max(5, max_n));
        violations = violations || !report.ok();
        if (machine) {
            json c;
            c["name"] = "merge-split-invariant";
            c["starts"] = report.starts;
            c["states_visited"] = report.states_visited;
            c["asserted_states"] = report.asserted_states;
            c["violations"] = report.violations;
            c["depth_truncations"] = report.depth_truncations;
            c["examples"] = report.examples;
            out["merge_split"] = std::move(c);
        } else {
            std::cout << "check merge-split-invariant: " << report.starts
                      << " starts, " << report.asserted_states
                      << " asserted states, " << report.violations
                      << " violations " << (report.ok() ? "[pass]" : "[FAIL]")
                      << "\n";
            if (report.depth_truncations > 0)
                std::cout << "  note: " << report.depth_truncations
                          << " expansions hit the depth bound\n";
            for (const std::string& example : report.examples)
                std::cout << "  violation: " << example << "\n";
        }
    }

    if (machine) {
        out["ok"] = !violations;
        std::cout << out.dump() << "\n";
    }
    return violations ? kExitViolation : kExitOk;
}

int cmd_enumerate_simple(int n, bool machine) {
    for (const SignedPermutation& pi : enumerate_simple(n)) {
        if (machine) {
            json j;
            j["perm"] = pi.str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << pi.str() << "\n";
        }
    }
    return kExitOk;
}

int cmd_random(int n, std::uint64_t seed, bool simple_only, bool machine) {
    if (n < 1) throw std::domain_error("n must be positive");
    std::mt19937_64 rng(seed);
    const int attempt_cap = 200000;
    for (int attempt = 0; attempt < attempt_cap; ++attempt) {
        std::vector<int> entries(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) entries[static_cast<size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i) {
            const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(entries[static_cast<size_t>(i)], entries[static_cast<size_t>(j)]);
        }
        for (int i = 0; i < n; ++i)
            if (rng() & 1) entries[static_cast<size_t>(i)] *= -1;
        const SignedPermutation pi(std::move(entries));
        if (simple_only && !BreakpointGraph(pi).is_simple()) continue;
        if (machine) {
            json j;
            j["perm"] = pi.str();
            j["n"] = n;
            j["seed"] = seed;
            j["simple"] = BreakpointGraph(pi).is_simple();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << pi.str() << "\n";
        }
        return kExitOk;
    }
    throw std::domain_error("no simple permutation found within " +
                            std::to_string(attempt_cap) +
                            " draws; simple states are rare at this size");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sorting signed permutations by prefix signed reversals: "
                 "breakpoint-graph analysis, distance bounds, an optimal "
                 "sorter for simple permutations, and exhaustive BFS "
                 "verification at small sizes."};
    app.require_subcommand(1);
    app.set_version_flag("--version", "burntflip 0.1.0");

    CommonArgs distance_args, sort_args, analyze_args;
    bool sort_trace = false;

    auto add_common = [](CLI::App* sub, CommonArgs& args) {
        sub->add_option("perm", args.perms,
                        "permutation text, e.g. \"-7 3 -1 4 2 8 -6 -5\"");
        sub->add_option("--file", args.file, "file with one permutation per line");
        sub->add_flag("--machine", args.machine, "machine-readable JSON output");
    };

    CLI::App* distance =
        app.add_subcommand("distance", "lower bound g and, when simple, the "
                                       "exact prefix signed reversal distance");
    add_common(distance, distance_args);

    CLI::App* sort = app.add_subcommand(
        "sort", "optimal flip sequence for a simple permutation");
    add_common(sort, sort_args);
    sort->add_flag("--trace", sort_trace, "print one line per flip");

    CLI::App* analyze =
        app.add_subcommand("analyze", "breakpoint graph dump: edges, cycles, "
                                      "components");
    add_common(analyze, analyze_args);

    int verify_n = 0;
    std::string verify_gens = "both";
    bool verify_lemma9 = false;
    int verify_max_n = 0;
    bool verify_machine = false;
    CLI::App* verify = app.add_subcommand(
        "verify", "check the distance results against exhaustive BFS");
    verify->add_option("--n", verify_n, "group size")->required();
    verify->add_option("--gens", verify_gens, "signed | unsigned | both")
        ->check(CLI::IsMember({"signed", "unsigned", "both"}));
    verify->add_flag("--lemma9", verify_lemma9,
                     "also explore merging/splitting move sequences");
    verify->add_option("--max-n", verify_max_n,
                       "raise the oracle size cap (memory guard)");
    verify->add_flag("--machine", verify_machine, "machine-readable JSON output");

    int enum_n = 0;
    bool enum_machine = false;
    CLI::App* enumerate =
        app.add_subcommand("enumerate-simple", "list every simple permutation "
                                               "of n elements");
    enumerate->add_option("--n", enum_n, "group size")->required();
    enumerate->add_flag("--machine", enum_machine,
                        "machine-readable JSON output");

    int random_n = 0;
    std::uint64_t random_seed = 0;
    bool random_simple = false;
    bool random_machine = false;
    CLI::App* random_cmd = app.add_subcommand(
        "random", "sample a permutation reproducibly from an explicit seed");
    random_cmd->add_option("--n", random_n, "group size")->required();
    random_cmd->add_option("--seed", random_seed, "RNG seed; no hidden entropy")
        ->required();
    random_cmd->add_flag("--simple", random_simple,
                         "rejection-sample until the draw is simple");
    random_cmd->add_flag("--machine", random_machine,
                         "machine-readable JSON output");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(distance)) return cmd_distance(distance_args);
        if (app.got_subcommand(sort)) return cmd_sort(sort_args, sort_trace);
        if (app.got_subcommand(analyze)) return cmd_analyze(analyze_args);
        if (app.got_subcommand(verify))
            return cmd_verify(verify_n, verify_gens, verify_lemma9, verify_max_n,
                              verify_machine);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate_simple(enum_n, enum_machine);
        if (app.got_subcommand(random_cmd))
            return cmd_random(random_n, random_seed, random_simple,
                              random_machine);
        return kExitUsage;
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitDomain;
    } catch (const std::logic_error& err) {
        std::cerr << "internal verification failure: " << err.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
}
