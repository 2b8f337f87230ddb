// Acceptance gate: seven end-to-end criteria, one verdict line each.
// Exits 0 only when every criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracle.hpp"
#include "reltop/approximation.hpp"
#include "reltop/harness.hpp"
#include "reltop/topology.hpp"
#include "subprocess.hpp"

using namespace reltop;
using namespace reltop::harness;
using clock_type = std::chrono::steady_clock;

namespace {

const std::string cli = RELTOP_CLI_PATH;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<PropositionReport> sweep(std::vector<PropositionId> props, std::size_t max_n = 4) {
    SweepConfig config;
    config.max_n = max_n;
    config.props = std::move(props);
    return run_suite(config, worker_count());
}

const PropositionReport& report_for(const std::vector<PropositionReport>& reports,
                                    PropositionId id, std::size_t n) {
    for (const auto& report : reports)
        if (report.id == id && report.n == n) return report;
    throw Error("missing report " + to_string(id) + " at n=" + std::to_string(n));
}

const CheckReport& check_named(const PropositionReport& report, const std::string& name) {
    for (const auto& check : report.checks)
        if (check.name == name) return check;
    throw Error("missing check " + name + " in " + to_string(report.id));
}

// Every report must partition the relation pool between satisfied and vacuous,
// per check; any violation is a harness bug regardless of the criterion.
std::string partition_problem(const std::vector<PropositionReport>& reports) {
    for (const auto& report : reports)
        for (const auto& check : report.checks)
            if (check.hypothesis_satisfied + check.vacuous != report.relations_checked)
                return to_string(report.id) + "/" + check.name + " does not partition n=" +
                       std::to_string(report.n);
    return "";
}

std::string holds_problem(const std::vector<PropositionReport>& reports) {
    for (const auto& report : reports)
        if (!report.holds)
            return to_string(report.id) + " found counterexamples at n=" +
                   std::to_string(report.n);
    return partition_problem(reports);
}

// Direct bit-level relation predicates, independent of the library.
bool code_bit(std::uint64_t code, std::size_t n, std::size_t x, std::size_t y) {
    return (code >> (x * n + y)) & 1u;
}

std::uint64_t count_symmetric_either_serial(std::size_t n) {
    std::uint64_t total = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
        bool symmetric = true;
        for (std::size_t x = 0; x < n && symmetric; ++x)
            for (std::size_t y = x + 1; y < n; ++y)
                if (code_bit(code, n, x, y) != code_bit(code, n, y, x)) {
                    symmetric = false;
                    break;
                }
        if (!symmetric) continue;
        bool serial = true, inverse_serial = true;
        for (std::size_t x = 0; x < n; ++x) {
            bool out = false, in = false;
            for (std::size_t y = 0; y < n; ++y) {
                out |= code_bit(code, n, x, y);
                in |= code_bit(code, n, y, x);
            }
            serial &= out;
            inverse_serial &= in;
        }
        if (serial || inverse_serial) ++total;
    }
    return total;
}

std::vector<std::uint64_t> sorted_masks(const SetFamily& family) {
    std::vector<std::uint64_t> masks;
    for (const auto& member : family.members()) masks.push_back(member.bits());
    std::sort(masks.begin(), masks.end());
    return masks;
}

std::vector<std::uint64_t> topology_masks(const Topology& topology) {
    return sorted_masks(topology.opens());
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// ---- criteria ---------------------------------------------------------------

std::string golden_example() {
    auto start = clock_type::now();
    auto result = run_command(cli + " example");
    double elapsed = seconds_since(start);
    if (result.exit_code != 0) return "exit code " + std::to_string(result.exit_code);
    if (result.output.find("all 24 sets match") == std::string::npos)
        return "missing full-match confirmation";
    if (result.output.find("lower(s) = {a,b,c,d} strictly contains upper(s) = {a,b,c}") ==
        std::string::npos)
        return "anomaly not highlighted";
    if (elapsed >= 1.0) return "took " + std::to_string(elapsed) + " s";
    return "";
}

std::string unconditional_laws() {
    auto start = clock_type::now();
    auto reports = sweep({PropositionId::P01, PropositionId::P02, PropositionId::P03,
                          PropositionId::P07, PropositionId::P15});
    double elapsed = seconds_since(start);
    if (auto problem = holds_problem(reports); !problem.empty()) return problem;
    for (const auto& report : reports)
        if (report.relations_checked != std::uint64_t{1} << (report.n * report.n))
            return "incomplete enumeration at n=" + std::to_string(report.n);
    if (elapsed >= 120.0) return "took " + std::to_string(elapsed) + " s";
    return "";
}

std::string conditional_laws() {
    auto reports = sweep({PropositionId::P04, PropositionId::P05, PropositionId::P06,
                          PropositionId::P16, PropositionId::P17, PropositionId::P18,
                          PropositionId::P19, PropositionId::P20});
    if (auto problem = holds_problem(reports); !problem.empty()) return problem;

    for (std::size_t n = 1; n <= 4; ++n) {
        auto expect = [&](PropositionId id, const char* check,
                          std::uint64_t count) -> std::string {
            auto got = check_named(report_for(reports, id, n), check).hypothesis_satisfied;
            if (got != count)
                return to_string(id) + " hypothesis count at n=" + std::to_string(n) + ": got " +
                       std::to_string(got) + ", expected " + std::to_string(count);
            return "";
        };

        std::uint64_t reflexive = std::uint64_t{1} << (n * n - n);
        std::uint64_t symmetric = std::uint64_t{1} << (n * (n + 1) / 2);
        std::uint64_t serial = 1;
        for (std::size_t i = 0; i < n; ++i) serial *= (std::uint64_t{1} << n) - 1;
        // Transitive relations on 1..4 labeled elements (classical sequence).
        const std::uint64_t transitive[] = {2, 13, 171, 3994};
        std::uint64_t tolerance = std::uint64_t{1} << (n * (n - 1) / 2);

        for (const auto& problem :
             {expect(PropositionId::P04, "bounds", reflexive),
              expect(PropositionId::P05, "galois", symmetric),
              expect(PropositionId::P06, "idempotence", transitive[n - 1]),
              expect(PropositionId::P16, "lower-upper", serial),
              expect(PropositionId::P17, "lower-upper", serial),
              expect(PropositionId::P18, "lower-upper", count_symmetric_either_serial(n)),
              expect(PropositionId::P19, "sandwich", reflexive),
              expect(PropositionId::P20, "bounds", tolerance)})
            if (!problem.empty()) return problem;
    }
    return "";
}

std::string subbase_characterizations() {
    auto reports = sweep({PropositionId::P08, PropositionId::P09, PropositionId::P10,
                          PropositionId::P11});
    if (auto problem = partition_problem(reports); !problem.empty()) return problem;
    for (const auto& report : reports) {
        if (!report.gating_holds)
            return to_string(report.id) + " gating direction failed at n=" +
                   std::to_string(report.n);
        for (const auto& check : report.checks)
            if (check.gating && check.counterexample_count != 0)
                return to_string(report.id) + "/" + check.name + " has counterexamples";
    }

    const auto& p11 = report_for(reports, PropositionId::P11, 2);
    const auto& converse = check_named(p11, "converse");
    if (converse.counterexample_count == 0) return "P11 converse found nothing at n=2";
    if (p11.counterexamples.empty()) return "P11 counterexamples not recorded";
    const auto& first = p11.counterexamples.front();
    if (first.check != "converse") return "unexpected first P11 counterexample";
    std::vector<std::pair<std::string, std::string>> arrow{{"1", "2"}};
    if (first.relation.pairs() != arrow)
        return "first P11 counterexample is not {(1,2)}";
    return "";
}

std::string topology_generation() {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto universe = make_indexed_universe(n);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
            auto relation = BinaryRelation::from_bits(universe, code);
            for (auto kind : all_kinds) {
                auto family = neighborhood_family(relation, kind);
                if (!is_cover(family)) continue;
                auto topology = induced_topology(relation, kind);
                if (!is_topology(topology.opens()))
                    return "axioms fail at n=" + std::to_string(n) + " code " +
                           std::to_string(code);
                auto masks = topology_masks(topology);
                if (masks != naive_topology(sorted_masks(family), n))
                    return "powerset oracle disagrees at n=" + std::to_string(n) + " code " +
                           std::to_string(code);
                if (masks != pointwise_topology(sorted_masks(family), n))
                    return "point-base oracle disagrees at n=" + std::to_string(n) + " code " +
                           std::to_string(code);
            }
        }
    }

    // 1,000 seeded random covering subbases on five elements.
    auto universe = make_indexed_universe(5);
    std::mt19937_64 engine(2026);
    for (int round = 0; round < 1000; ++round) {
        std::vector<std::uint64_t> masks;
        std::uint64_t covered = 0;
        while (covered != 31) {
            masks.clear();
            covered = 0;
            std::size_t members = 1 + engine() % 6;
            for (std::size_t i = 0; i < members; ++i) {
                masks.push_back(engine() & 31u);
                covered |= masks.back();
            }
        }
        std::vector<ElementSet> sets;
        for (auto mask : masks) sets.emplace_back(universe, mask);
        SetFamily family(universe, std::move(sets));
        auto topology = generate_topology(family);
        if (!is_topology(topology.opens())) return "axioms fail on random subbase";
        auto opens = topology_masks(topology);
        if (opens != naive_topology(sorted_masks(family), 5))
            return "powerset oracle disagrees on random subbase " + std::to_string(round);
        if (opens != pointwise_topology(sorted_masks(family), 5))
            return "point-base oracle disagrees on random subbase " + std::to_string(round);
    }
    return "";
}

std::string collapse_theorems() {
    auto reports = sweep({PropositionId::P13, PropositionId::P20});
    if (auto problem = holds_problem(reports); !problem.empty()) return problem;
    const std::uint64_t bell[] = {1, 2, 5, 15};  // equivalences on 1..4 elements
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto& quasi =
            check_named(report_for(reports, PropositionId::P13, n), "quasi-discrete");
        if (quasi.hypothesis_satisfied != bell[n - 1])
            return "equivalence count at n=" + std::to_string(n) + ": got " +
                   std::to_string(quasi.hypothesis_satisfied);
    }
    return "";
}

std::string determinism() {
    auto tmp = std::filesystem::temp_directory_path();
    auto paths = std::vector<std::filesystem::path>{
        tmp / "acceptance-run-1.json", tmp / "acceptance-run-2.json",
        tmp / "acceptance-jobs-1.json", tmp / "acceptance-jobs-8.json"};
    std::vector<std::string> commands{
        cli + " verify --max-n 4 --report " + paths[0].string(),
        cli + " verify --max-n 4 --report " + paths[1].string(),
        cli + " verify --max-n 4 --jobs 1 --report " + paths[2].string(),
        cli + " verify --max-n 4 --jobs 8 --report " + paths[3].string()};
    for (const auto& command : commands) {
        auto result = run_command(command);
        if (result.exit_code != 0)
            return "verify exited with " + std::to_string(result.exit_code);
    }
    auto reference = slurp(paths[0]);
    if (reference.empty()) return "empty report";
    for (std::size_t i = 1; i < paths.size(); ++i)
        if (slurp(paths[i]) != reference)
            return "report " + std::to_string(i + 1) + " differs from the first run";
    return "";
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* label;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "golden-example", golden_example},
        {2, "unconditional-laws", unconditional_laws},
        {3, "conditional-laws", conditional_laws},
        {4, "subbase-characterizations", subbase_characterizations},
        {5, "topology-generation", topology_generation},
        {6, "collapse-theorems", collapse_theorems},
        {7, "determinism", determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string problem;
        try {
            problem = criterion.run();
        } catch (const std::exception& e) {
            problem = e.what();
        }
        bool ok = problem.empty();
        if (!ok) ++failures;
        std::cout << "criterion " << criterion.number << " (" << criterion.label
                  << "): " << (ok ? "PASS" : "FAIL") << (ok ? "" : " - " + problem) << "\n";
    }
    return failures == 0 ? 0 : 1;
}
