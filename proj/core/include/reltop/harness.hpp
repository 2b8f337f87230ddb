#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reltop/relation.hpp"

namespace reltop::harness {

// One verified claim. Each proposition decomposes into named checks; checks
// marked gating correspond to directions the underlying theory establishes,
// exploratory checks probe directions that may fail and are only reported.
enum class PropositionId {
    P01, P02, P03, P04, P05, P06, P07, P08, P09, P10, P11,
    P12, P13, P14, P15, P16, P17, P18, P19, P20, P21, P22,
};

inline constexpr std::size_t proposition_count = 22;

std::string to_string(PropositionId id);                      // "P01".."P22"
PropositionId proposition_from_string(std::string_view id);   // throws UnknownProposition

struct PropositionInfo {
    PropositionId id;
    std::string hypothesis;  // "none", "reflexive", "symmetric and serial", ...
    std::string claim;       // one-line statement of what is verified
};

// All 22 entries in id order.
const std::vector<PropositionInfo>& catalog();

struct CheckSpec {
    std::string name;
    bool gating;
};

// The named checks a proposition decomposes into, in evaluation order.
const std::vector<CheckSpec>& proposition_checks(PropositionId id);

// All 2^(n*n) relations on the indexed universe {1..n}, in increasing order of
// the row-major bit encoding. Bounded to n <= 4 (65,536 relations).
class RelationStream {
public:
    explicit RelationStream(std::size_t n);  // throws SizeOutOfRange unless 1 <= n <= 4

    const UniversePtr& universe() const { return universe_; }
    std::uint64_t count() const { return count_; }
    BinaryRelation at(std::uint64_t code) const;

private:
    UniversePtr universe_;
    std::uint64_t count_;
};

struct Counterexample {
    std::string check;
    BinaryRelation relation;
    // Named witness values rendered as labels/sets, e.g. {"X", "{a,c}"}.
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::string observed;
    std::string expected;
};

struct CheckOutcome {
    bool hypothesis_satisfied = false;
    std::optional<Counterexample> counterexample;
};

// Evaluates every check of the proposition on one relation. Outcomes align
// with proposition_checks(id); at most one counterexample per check (the first
// in canonical subset order).
std::vector<CheckOutcome> evaluate_proposition(PropositionId id, const BinaryRelation& relation);

// First counterexample across the proposition's checks, or nothing.
std::optional<Counterexample> check_proposition(PropositionId id, const BinaryRelation& relation);

struct CheckReport {
    std::string name;
    bool gating = false;
    std::uint64_t hypothesis_satisfied = 0;  // relations meeting the hypothesis
    std::uint64_t vacuous = 0;               // relations skipped; satisfied + vacuous = relations_checked
    std::uint64_t counterexample_count = 0;  // exact, independent of the recording cap
    bool holds = true;                       // counterexample_count == 0
};

struct PropositionReport {
    PropositionId id{};
    std::size_t n = 0;
    std::uint64_t relations_checked = 0;
    std::uint64_t subsets_checked = 0;  // size of the subset pool conclusions quantify over (2^n)
    std::vector<CheckReport> checks;
    std::vector<Counterexample> counterexamples;  // capped; ordered by relation encoding, then check
    bool holds = true;         // no check found any counterexample
    bool gating_holds = true;  // no gating check found any counterexample
    double elapsed_ms = 0.0;
};

// PASS (holds), FAIL (a gating check failed), REPORTED (only exploratory
// checks found counterexamples).
std::string report_status(const PropositionReport& report);

enum class SweepMode { exhaustive, sampled };

struct SweepConfig {
    SweepMode mode = SweepMode::exhaustive;
    std::size_t max_n = 4;                // exhaustive: <= 4; sampled: <= 8
    std::vector<PropositionId> props;     // empty = all
    std::uint64_t sample_count = 1000;    // sampled mode: relations drawn per size
    std::optional<std::uint64_t> seed;    // required in sampled mode
    std::size_t max_counterexamples = 5;  // recording cap per proposition report
};

// Runs every selected proposition at every n in 1..max_n and returns reports
// ordered by proposition, then n. Deterministic for a fixed config: the
// relation stream is partitioned across `jobs` workers and partial results are
// merged in encoding order, so the outcome is independent of the worker count.
// Throws InvalidConfig on an out-of-range size, an unknown filter entry, a
// missing seed in sampled mode, or jobs == 0.
std::vector<PropositionReport> run_suite(const SweepConfig& config, unsigned jobs = 1);

// The whole run as one JSON document: {"config": {...}, "reports": [...]}.
// Timings are omitted by default so that equal configs yield byte-identical
// documents.
std::string report_json(const SweepConfig& config, const std::vector<PropositionReport>& reports,
                        bool include_timings = false);

}  // namespace reltop::harness
