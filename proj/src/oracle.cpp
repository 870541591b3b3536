#include "burntflip/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "burntflip/breakpoint_graph.hpp"
#include "burntflip/distances.hpp"
#include "burntflip/simple_sorter.hpp"

namespace burntflip {

namespace {

constexpr int kMaxOracleN = 12;  // encode/decode work on one machine word
constexpr std::uint64_t kMaxStates = 1ull << 31;
constexpr char kMagic[4] = {'B', 'F', 'O', 'R'};
constexpr std::uint8_t kFormatVersion = 1;

std::uint64_t group_order(int n, bool with_signs) {
    std::uint64_t order = 1;
    for (int i = 1; i <= n; ++i) order *= with_signs ? 2ull * i : i;
    return order;
}

std::uint64_t raw_encode(const int* entries, int n, bool with_signs) {
    std::uint64_t code = 0;
    std::uint32_t used = 0;
    for (int i = 0; i < n; ++i) {
        const int v = entries[i];
        const int a = v < 0 ? -v : v;
        const std::uint32_t below = used & ((1u << (a - 1)) - 1);
        const std::uint64_t rank =
            static_cast<std::uint64_t>(a - 1 - std::popcount(below));
        if (with_signs) {
            code = code * (2ull * (n - i)) + 2 * rank + (v < 0 ? 1 : 0);
        } else {
            code = code * static_cast<std::uint64_t>(n - i) + rank;
        }
        used |= 1u << (a - 1);
    }
    return code;
}

void raw_decode(std::uint64_t code, int n, bool with_signs, int* out) {
    std::array<int, kMaxOracleN> digits{};
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t radix =
            with_signs ? 2ull * (n - i) : static_cast<std::uint64_t>(n - i);
        digits[static_cast<size_t>(i)] = static_cast<int>(code % radix);
        code /= radix;
    }
    std::uint32_t remaining = (1u << n) - 1u;  // n is capped well below 32
    for (int i = 0; i < n; ++i) {
        int rank = digits[static_cast<size_t>(i)];
        const bool negative = with_signs && (rank & 1);
        if (with_signs) rank >>= 1;
        std::uint32_t bits = remaining;
        for (int skip = 0; skip < rank; ++skip) bits &= bits - 1;
        const int value = std::countr_zero(bits) + 1;
        remaining &= ~(1u << (value - 1));
        out[i] = negative ? -value : value;
    }
}

void check_oracle_n(int n, bool with_signs, int cap) {
    if (n < 1)
        throw std::domain_error("group size must be positive");
    if (n > cap)
        throw std::domain_error("n = " + std::to_string(n) +
                                " is over the oracle cap " + std::to_string(cap) +
                                (with_signs ? " for signed states" : " for unsigned states"));
    if (n > kMaxOracleN || group_order(n, with_signs) > kMaxStates)
        throw std::domain_error("n = " + std::to_string(n) +
                                " does not fit the packed state encoding");
}

void write_u64(std::ostream& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i)
        out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint64_t read_u64(std::istream& in) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        const int byte = in.get();
        if (byte < 0) throw std::invalid_argument("oracle file truncated");
        v |= static_cast<std::uint64_t>(byte) << (8 * i);
    }
    return v;
}

}  // namespace

const char* to_string(GeneratorSet gens) {
    return gens == GeneratorSet::prefix_signed_reversals
               ? "prefix-signed-reversals"
               : "prefix-exchanges";
}

std::uint64_t encode_state(const SignedPermutation& pi, bool with_signs) {
    if (!with_signs && !pi.all_positive())
        throw std::domain_error("unsigned encoding cannot hold negative entries");
    if (pi.size() > kMaxOracleN)
        throw std::domain_error("permutation too long for the packed encoding");
    return raw_encode(pi.entries().data(), pi.size(), with_signs);
}

SignedPermutation decode_state(int n, std::uint64_t code, bool with_signs) {
    if (n < 1 || n > kMaxOracleN)
        throw std::domain_error("length out of range for the packed encoding");
    if (code >= group_order(n, with_signs))
        throw std::domain_error("state code out of range");
    std::array<int, kMaxOracleN> buf{};
    raw_decode(code, n, with_signs, buf.data());
    return SignedPermutation(std::vector<int>(buf.begin(), buf.begin() + n));
}

OracleTable::OracleTable(int n, GeneratorSet gens) : n_(n), gens_(gens) {}

OracleTable OracleTable::build(int n, GeneratorSet gens, int cap) {
    const bool with_signs = gens == GeneratorSet::prefix_signed_reversals;
    const int effective_cap = cap > 0 ? cap : (with_signs ? kSignedCap : kUnsignedCap);
    check_oracle_n(n, with_signs, effective_cap);

    OracleTable table(n, gens);
    const std::uint64_t order = group_order(n, with_signs);
    table.dist_.assign(order, 0xFF);

    // The identity has rank-0 digits everywhere, hence code 0.
    table.dist_[0] = 0;
    std::vector<std::uint32_t> frontier{0}, next;
    std::array<int, kMaxOracleN> state{}, moved{};
    int depth = 0;
    while (!frontier.empty()) {
        next.clear();
        for (const std::uint32_t code : frontier) {
            raw_decode(code, n, with_signs, state.data());
            if (with_signs) {
                for (int k = 1; k <= n; ++k) {
                    for (int i = 0; i < k; ++i) moved[i] = -state[k - 1 - i];
                    for (int i = k; i < n; ++i) moved[i] = state[i];
                    const std::uint64_t to = raw_encode(moved.data(), n, true);
                    if (table.dist_[to] == 0xFF) {
                        table.dist_[to] = static_cast<std::uint8_t>(depth + 1);
                        next.push_back(static_cast<std::uint32_t>(to));
                    }
                }
            } else {
                for (int j = 2; j <= n; ++j) {
                    for (int i = 0; i < n; ++i) moved[i] = state[i];
                    std::swap(moved[0], moved[j - 1]);
                    const std::uint64_t to = raw_encode(moved.data(), n, false);
                    if (table.dist_[to] == 0xFF) {
                        table.dist_[to] = static_cast<std::uint8_t>(depth + 1);
                        next.push_back(static_cast<std::uint32_t>(to));
                    }
                }
            }
        }
        if (!next.empty()) ++depth;
        frontier.swap(next);
    }
    table.max_distance_ = depth;
    return table;
}

int OracleTable::distance(const SignedPermutation& pi) const {
    if (pi.size() != n_)
        throw std::domain_error("oracle holds states of length " +
                                std::to_string(n_) + ", queried with length " +
                                std::to_string(pi.size()));
    return distance_of_code(
        encode_state(pi, gens_ == GeneratorSet::prefix_signed_reversals));
}

int OracleTable::distance_of_code(std::uint64_t code) const {
    if (code >= dist_.size())
        throw std::domain_error("state code out of range");
    return dist_[code];
}

SignedPermutation OracleTable::decode(std::uint64_t code) const {
    return decode_state(n_, code,
                        gens_ == GeneratorSet::prefix_signed_reversals);
}

std::vector<std::uint64_t> OracleTable::layer_sizes() const {
    std::vector<std::uint64_t> layers(static_cast<size_t>(max_distance_) + 1, 0);
    for (std::uint8_t d : dist_) ++layers[d];
    return layers;
}

void OracleTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    out.write(kMagic, 4);
    out.put(static_cast<char>(kFormatVersion));
    out.put(gens_ == GeneratorSet::prefix_signed_reversals ? 0 : 1);
    out.put(static_cast<char>(n_));
    out.put(0);
    write_u64(out, dist_.size());
    out.write(reinterpret_cast<const char*>(dist_.data()),
              static_cast<std::streamsize>(dist_.size()));
    if (!out)
        throw std::invalid_argument("failed writing oracle table to '" + path + "'");
}

OracleTable OracleTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "' for reading");
    char magic[4];
    in.read(magic, 4);
    if (!in || !std::equal(magic, magic + 4, kMagic))
        throw std::invalid_argument("'" + path + "' is not an oracle table");
    const int version = in.get();
    if (version != kFormatVersion)
        throw std::invalid_argument("unsupported oracle table version " +
                                    std::to_string(version));
    const int tag = in.get();
    if (tag != 0 && tag != 1)
        throw std::invalid_argument("unknown generator tag in oracle table");
    const int n = in.get();
    in.get();  // reserved
    const std::uint64_t count = read_u64(in);
    const GeneratorSet gens = tag == 0 ? GeneratorSet::prefix_signed_reversals
                                       : GeneratorSet::prefix_exchanges;
    if (n < 1 || n > kMaxOracleN ||
        count != group_order(n, gens == GeneratorSet::prefix_signed_reversals))
        throw std::invalid_argument("oracle table header is inconsistent");
    OracleTable table(n, gens);
    table.dist_.assign(count, 0xFF);
    in.read(reinterpret_cast<char*>(table.dist_.data()),
            static_cast<std::streamsize>(count));
    if (!in || static_cast<std::uint64_t>(in.gcount()) != count)
        throw std::invalid_argument("oracle file truncated");
    table.max_distance_ = *std::max_element(table.dist_.begin(), table.dist_.end());
    return table;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    check_oracle_n(n, true, OracleTable::kSignedCap);
    const std::uint64_t order = group_order(n, true);
    std::vector<SignedPermutation> out;
    out.reserve(order);
    for (std::uint64_t code = 0; code < order; ++code)
        out.push_back(decode_state(n, code, true));
    return out;
}

std::vector<SignedPermutation> enumerate_simple(int n) {
    check_oracle_n(n, true, OracleTable::kSignedCap);
    const std::uint64_t order = group_order(n, true);
    std::vector<SignedPermutation> out;
    for (std::uint64_t code = 0; code < order; ++code) {
        SignedPermutation pi = decode_state(n, code, true);
        if (BreakpointGraph(pi).is_simple()) out.push_back(std::move(pi));
    }
    return out;
}

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.ok(); });
}

namespace {

void note_violation(CheckResult& check, const std::string& text) {
    ++check.violations;
    if (check.examples.size() < 8) check.examples.push_back(text);
}

}  // namespace

VerifyReport verify_distances(int n, GeneratorSet gens, int cap) {
    VerifyReport report;
    report.n = n;
    report.gens = gens;
    const OracleTable table = OracleTable::build(n, gens, cap);
    report.max_distance = table.max_distance();

    if (gens == GeneratorSet::prefix_exchanges) {
        CheckResult formula{"prefix-exchange-formula"};
        for (std::uint64_t code = 0; code < table.state_count(); ++code) {
            const SignedPermutation pi = table.decode(code);
            const int expected = table.distance_of_code(code);
            const int got = prefix_exchange_distance(pi);
            ++formula.checked;
            if (got != expected)
                note_violation(formula, "'" + pi.str() + "': formula " +
                                            std::to_string(got) + ", bfs " +
                                            std::to_string(expected));
        }
        report.checks.push_back(std::move(formula));
        return report;
    }

    CheckResult bound{"psrd-lower-bound"};
    CheckResult formula{"simple-distance-formula"};
    CheckResult sorter{"simple-sorter-optimal"};
    for (std::uint64_t code = 0; code < table.state_count(); ++code) {
        const SignedPermutation pi = table.decode(code);
        const int exact = table.distance_of_code(code);
        const BreakpointGraph bg(pi);
        const int g = psrd_lower_bound(bg);
        ++bound.checked;
        if (g > exact)
            note_violation(bound, "'" + pi.str() + "': bound " + std::to_string(g) +
                                      " exceeds bfs " + std::to_string(exact));
        if (!bg.is_simple()) continue;
        ++formula.checked;
        const int value = psrd_simple(bg);
        if (value != exact)
            note_violation(formula, "'" + pi.str() + "': formula " +
                                        std::to_string(value) + ", bfs " +
                                        std::to_string(exact));
        ++sorter.checked;
        try {
            const SortTrace trace = sort_simple(pi);
            if (static_cast<int>(trace.flips.size()) != exact)
                note_violation(sorter, "'" + pi.str() + "': sorter used " +
                                           std::to_string(trace.flips.size()) +
                                           " flips, bfs " + std::to_string(exact));
        } catch (const std::logic_error& err) {
            note_violation(sorter, "'" + pi.str() + "': " + err.what());
        }
    }
    report.checks.push_back(std::move(bound));
    report.checks.push_back(std::move(formula));
    report.checks.push_back(std::move(sorter));
    return report;
}

MergeSplitReport check_merge_split_invariant(int n, int cap) {
    check_oracle_n(n, true, std::min(cap, OracleTable::kSignedCap));
    MergeSplitReport report;
    report.n = n;
    const int depth_bound = 2 * (n + 1);
    const std::uint64_t order = group_order(n, true);

    for (const SignedPermutation& start : enumerate_simple(n)) {
        if (start.fixes_first()) continue;
        {
            const BreakpointGraph bg(start);
            const auto leftmost = bg.leftmost_structures();
            if (bg.components()[static_cast<size_t>(leftmost->component)].oriented)
                continue;
        }
        ++report.starts;

        std::vector<std::int16_t> seen(order, -1);
        seen[encode_state(start, true)] = 0;
        std::vector<SignedPermutation> frontier{start};
        for (int depth = 0; depth <= depth_bound && !frontier.empty(); ++depth) {
            std::vector<SignedPermutation> next;
            for (const SignedPermutation& state : frontier) {
                ++report.states_visited;
                const BreakpointGraph bg(state);
                const AlternatingCycle& leftmost_cycle =
                    bg.cycles()[static_cast<size_t>(bg.cycle_of_black(0))];
                if (leftmost_cycle.length() == 2) {
                    ++report.asserted_states;
                    const bool simple = bg.is_simple();
                    const bool nonoriented =
                        !bg.components()[static_cast<size_t>(
                                             bg.component_of_cycle(
                                                 bg.cycle_of_black(0)))]
                             .oriented;
                    if (!simple || !nonoriented) {
                        ++report.violations;
                        if (report.examples.size() < 8)
                            report.examples.push_back(
                                "start '" + start.str() + "' reaches '" +
                                state.str() + "' which is " +
                                (simple ? "simple" : "not simple") + " with " +
                                (nonoriented ? "a nonoriented" : "an oriented") +
                                " leftmost component");
                    }
                }
                for (int k = 1; k <= n; ++k) {
                    const MoveClass cls = classify_move(bg, k);
                    if (cls == MoveClass::other) continue;
                    const SignedPermutation to = state.prefix_flip(k);
                    const std::uint64_t code = encode_state(to, true);
                    if (seen[code] >= 0) continue;
                    if (depth == depth_bound) {
                        ++report.depth_truncations;
                        continue;
                    }
                    seen[code] = static_cast<std::int16_t>(depth + 1);
                    next.push_back(to);
                }
            }
            frontier.swap(next);
        }
    }
    return report;
}

}  // namespace burntflip
