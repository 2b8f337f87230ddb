#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "reltop/approximation.hpp"
#include "reltop/errors.hpp"
#include "reltop/harness.hpp"
#include "reltop/topology.hpp"

using namespace reltop;
using namespace reltop::harness;

namespace {

BinaryRelation indexed_relation(std::size_t n, std::uint64_t code) {
    return BinaryRelation::from_bits(make_indexed_universe(n), code);
}

const PropositionReport& report_for(const std::vector<PropositionReport>& reports,
                                    PropositionId id, std::size_t n) {
    for (const auto& report : reports)
        if (report.id == id && report.n == n) return report;
    REQUIRE(false);
    return reports.front();
}

const CheckReport& check_named(const PropositionReport& report, const std::string& name) {
    for (const auto& check : report.checks)
        if (check.name == name) return check;
    REQUIRE(false);
    return report.checks.front();
}

}  // namespace

TEST_CASE("proposition ids round-trip and reject junk") {
    CHECK(to_string(PropositionId::P01) == "P01");
    CHECK(to_string(PropositionId::P22) == "P22");
    for (std::size_t i = 0; i < proposition_count; ++i) {
        auto id = static_cast<PropositionId>(i);
        CHECK(proposition_from_string(to_string(id)) == id);
    }
    CHECK(proposition_from_string("p13") == PropositionId::P13);
    CHECK_THROWS_AS(proposition_from_string("P00"), UnknownProposition);
    CHECK_THROWS_AS(proposition_from_string("P23"), UnknownProposition);
    CHECK_THROWS_AS(proposition_from_string("P7"), UnknownProposition);
    CHECK_THROWS_AS(proposition_from_string("Q01"), UnknownProposition);
    CHECK_THROWS_AS(proposition_from_string(""), UnknownProposition);
}

TEST_CASE("the catalog names every proposition") {
    const auto& entries = catalog();
    REQUIRE(entries.size() == proposition_count);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(entries[i].id == static_cast<PropositionId>(i));
        CHECK(!entries[i].hypothesis.empty());
        CHECK(!entries[i].claim.empty());
    }
    CHECK(entries[0].hypothesis == "none");
    CHECK(entries[3].hypothesis == "reflexive");
    CHECK(entries[12].hypothesis == "symmetric and serial");
}

TEST_CASE("check decompositions are stable") {
    auto names = [](PropositionId id) {
        std::vector<std::string> out;
        for (const auto& spec : proposition_checks(id)) out.push_back(spec.name);
        return out;
    };
    auto gating = [](PropositionId id) {
        std::vector<bool> out;
        for (const auto& spec : proposition_checks(id)) out.push_back(spec.gating);
        return out;
    };

    CHECK(names(PropositionId::P01) == std::vector<std::string>{"duality"});
    CHECK(names(PropositionId::P11) == std::vector<std::string>{"forward", "converse"});
    CHECK(gating(PropositionId::P08) == std::vector<bool>{true, true});
    CHECK(gating(PropositionId::P11) == std::vector<bool>{true, false});
    CHECK(names(PropositionId::P13) ==
          std::vector<std::string>{"families", "topologies", "quasi-discrete"});
    CHECK(names(PropositionId::P14) ==
          std::vector<std::string>{
              "reflexive-families", "reflexive-topologies-subset", "reflexive-topologies-refine",
              "serial-families", "serial-topologies-subset", "serial-topologies-refine",
              "inverse-serial-families", "inverse-serial-topologies-subset",
              "inverse-serial-topologies-refine"});
    CHECK(gating(PropositionId::P14) ==
          std::vector<bool>{true, false, false, true, false, false, true, false, false});
    CHECK(names(PropositionId::P22) ==
          std::vector<std::string>{"successor", "predecessor", "succ-and-pred", "succ-or-pred"});
    CHECK(gating(PropositionId::P22) == std::vector<bool>{true, true, true, false});
}

TEST_CASE("the relation stream enumerates all encodings in order") {
    RelationStream stream(2);
    CHECK(stream.count() == 16);
    CHECK(stream.universe()->labels() == std::vector<std::string>{"1", "2"});
    CHECK(stream.at(0).pair_count() == 0);
    CHECK(stream.at(2).pairs() ==
          std::vector<std::pair<std::string, std::string>>{{"1", "2"}});
    CHECK(stream.at(15).pair_count() == 4);
    CHECK(stream.at(15).to_bits() == 15);
    CHECK(RelationStream(4).count() == 65536);
    CHECK_THROWS_AS(RelationStream(0), SizeOutOfRange);
    CHECK_THROWS_AS(RelationStream(5), SizeOutOfRange);
    CHECK_THROWS_AS(stream.at(16), SizeOutOfRange);
}

TEST_CASE("evaluating single propositions on golden relations") {
    SUBCASE("an unsatisfied hypothesis is recorded, not checked") {
        auto outcomes = evaluate_proposition(PropositionId::P16, worked_example());
        REQUIRE(outcomes.size() == 2);
        for (const auto& outcome : outcomes) {
            CHECK(!outcome.hypothesis_satisfied);
            CHECK(!outcome.counterexample.has_value());
        }
    }

    SUBCASE("the identity relation satisfies the reflexive bounds") {
        auto identity = indexed_relation(2, 0b1001);  // (1,1) and (2,2)
        auto outcomes = evaluate_proposition(PropositionId::P04, identity);
        REQUIRE(outcomes.size() == 1);
        CHECK(outcomes[0].hypothesis_satisfied);
        CHECK(!outcomes[0].counterexample.has_value());
        CHECK(!check_proposition(PropositionId::P04, identity).has_value());
    }

    SUBCASE("a covering family without the matching relation property") {
        // {(1,2)} is neither serial nor inverse serial, yet its succ-or-pred
        // family covers the universe; the exploratory converse check reports it.
        auto arrow = indexed_relation(2, 2);
        auto outcomes = evaluate_proposition(PropositionId::P11, arrow);
        REQUIRE(outcomes.size() == 2);
        CHECK(!outcomes[0].hypothesis_satisfied);  // forward needs the property
        CHECK(outcomes[1].hypothesis_satisfied);   // converse needs the cover
        REQUIRE(outcomes[1].counterexample.has_value());
        const auto& found = *outcomes[1].counterexample;
        CHECK(found.check == "converse");
        CHECK(found.relation.to_bits() == 2);
        CHECK(found.expected == "serial or inverse serial");

        auto first = check_proposition(PropositionId::P11, arrow);
        REQUIRE(first.has_value());
        CHECK(first->check == "converse");
    }

    SUBCASE("idempotence holds for transitive relations on the three plain kinds") {
        auto arrow = indexed_relation(2, 2);  // {(1,2)} is vacuously transitive
        auto outcomes = evaluate_proposition(PropositionId::P06, arrow);
        REQUIRE(outcomes.size() == 1);
        CHECK(outcomes[0].hypothesis_satisfied);
        CHECK(!outcomes[0].counterexample.has_value());

        // The union kind is excluded for a reason: transitivity does not
        // transfer to R united with its transpose. For this relation,
        // lower(s-or-p) is not idempotent.
        const auto& u = arrow.universe();
        auto once = lower_approx(arrow, NeighborhoodKind::succ_or_pred, ElementSet(u, 0b01));
        auto twice = lower_approx(arrow, NeighborhoodKind::succ_or_pred, once);
        CHECK(once.bits() == 0b10);
        CHECK(twice.bits() == 0b01);
        CHECK(!once.is_subset_of(twice));
    }

    SUBCASE("a preorder whose union family is not a base") {
        auto preorder = make_relation(make_indexed_universe(3),
                                      {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "2"}, {"1", "3"}});
        CHECK(relation_profile(preorder).preorder);
        auto outcomes = evaluate_proposition(PropositionId::P22, preorder);
        REQUIRE(outcomes.size() == 4);
        CHECK(!outcomes[0].counterexample.has_value());
        CHECK(!outcomes[1].counterexample.has_value());
        CHECK(!outcomes[2].counterexample.has_value());
        REQUIRE(outcomes[3].counterexample.has_value());
        CHECK(outcomes[3].counterexample->check == "succ-or-pred");
    }

    SUBCASE("equivalences are quasi-discrete") {
        auto equivalence = make_relation(make_indexed_universe(3),
                                         {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "2"}, {"2", "1"}});
        CHECK(!check_proposition(PropositionId::P13, equivalence).has_value());
        // Directly: every open of the induced topology is also closed.
        auto topology = induced_topology(equivalence, NeighborhoodKind::successor);
        CHECK(topology.size() == 4);  // {}, {1,2}, {3}, U
        for (const auto& open : topology.opens().members())
            CHECK(topology.is_open(complement(open)));
    }

    SUBCASE("oversized universes are rejected") {
        auto big = make_indexed_universe(9);
        CHECK_THROWS_AS(evaluate_proposition(PropositionId::P01, make_relation(big, {})),
                        SizeOutOfRange);
    }
}

TEST_CASE("report status distinguishes gating from exploratory failures") {
    PropositionReport report;
    report.holds = true;
    report.gating_holds = true;
    CHECK(report_status(report) == "PASS");
    report.holds = false;
    CHECK(report_status(report) == "REPORTED");
    report.gating_holds = false;
    CHECK(report_status(report) == "FAIL");
}

TEST_CASE("an exhaustive sweep over the two smallest sizes") {
    SweepConfig config;
    config.max_n = 2;
    auto reports = run_suite(config);
    REQUIRE(reports.size() == proposition_count * 2);

    // Ordered by proposition, then n.
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].id == static_cast<PropositionId>(i / 2));
        CHECK(reports[i].n == 1 + i % 2);
    }

    for (const auto& report : reports) {
        CHECK(report.relations_checked == (report.n == 1 ? 2u : 16u));
        CHECK(report.subsets_checked == (std::uint64_t{1} << report.n));
        CHECK(report.gating_holds);  // every gating check holds at these sizes
        for (const auto& check : report.checks)
            CHECK(check.hypothesis_satisfied + check.vacuous == report.relations_checked);
    }

    const auto& p01 = report_for(reports, PropositionId::P01, 2);
    CHECK(p01.holds);
    CHECK(report_status(p01) == "PASS");
    CHECK(p01.counterexamples.empty());

    // Reflexivity fixes the diagonal: 2^(n*n - n) relations satisfy it.
    const auto& p04 = report_for(reports, PropositionId::P04, 2);
    CHECK(check_named(p04, "bounds").hypothesis_satisfied == 4);
    CHECK(check_named(p04, "bounds").vacuous == 12);

    // Symmetry fixes the upper triangle: 2^(n*(n+1)/2) relations satisfy it.
    const auto& p05 = report_for(reports, PropositionId::P05, 2);
    CHECK(check_named(p05, "galois").hypothesis_satisfied == 8);

    // Bell(2) = 2 equivalences on two elements.
    const auto& p13 = report_for(reports, PropositionId::P13, 2);
    CHECK(check_named(p13, "quasi-discrete").hypothesis_satisfied == 2);

    // The two one-arrow relations cover via s-or-p without either property.
    const auto& p11 = report_for(reports, PropositionId::P11, 2);
    CHECK(report_status(p11) == "REPORTED");
    CHECK(check_named(p11, "forward").counterexample_count == 0);
    CHECK(check_named(p11, "converse").counterexample_count == 2);
    REQUIRE(p11.counterexamples.size() == 2);
    CHECK(p11.counterexamples[0].relation.to_bits() == 2);
    CHECK(p11.counterexamples[1].relation.to_bits() == 4);

    const auto& p10 = report_for(reports, PropositionId::P10, 2);
    CHECK(check_named(p10, "converse").counterexample_count == 2);

    const auto& p21 = report_for(reports, PropositionId::P21, 2);
    CHECK(check_named(p21, "converse").counterexample_count == 6);
}

TEST_CASE("the recording cap bounds storage but not the count") {
    SweepConfig config;
    config.max_n = 3;
    config.props = {PropositionId::P21};
    config.max_counterexamples = 5;
    auto reports = run_suite(config);
    REQUIRE(reports.size() == 3);
    const auto& at3 = report_for(reports, PropositionId::P21, 3);
    CHECK(check_named(at3, "converse").counterexample_count == 322);
    CHECK(at3.counterexamples.size() == 5);

    config.max_counterexamples = 400;
    auto uncapped = run_suite(config);
    const auto& full = report_for(uncapped, PropositionId::P21, 3);
    CHECK(full.counterexamples.size() == 322);
    // The capped list is a prefix of the uncapped one.
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(full.counterexamples[i].relation.to_bits() ==
              at3.counterexamples[i].relation.to_bits());
        CHECK(full.counterexamples[i].check == at3.counterexamples[i].check);
    }
}

TEST_CASE("recorded counterexamples replay against the library") {
    SweepConfig config;
    config.max_n = 2;
    config.props = {PropositionId::P11};
    auto reports = run_suite(config);
    const auto& at2 = report_for(reports, PropositionId::P11, 2);
    REQUIRE(!at2.counterexamples.empty());
    for (const auto& found : at2.counterexamples) {
        auto replayed = check_proposition(PropositionId::P11, found.relation);
        REQUIRE(replayed.has_value());
        CHECK(replayed->check == found.check);
        CHECK(replayed->observed == found.observed);
    }
}

TEST_CASE("worker count never changes the output") {
    SweepConfig config;
    config.max_n = 3;
    auto solo = run_suite(config, 1);
    auto parallel = run_suite(config, 4);
    auto lopsided = run_suite(config, 7);
    CHECK(report_json(config, solo) == report_json(config, parallel));
    CHECK(report_json(config, solo) == report_json(config, lopsided));
    // More workers than relations at n=1 is fine too.
    SweepConfig tiny;
    tiny.max_n = 1;
    CHECK(report_json(tiny, run_suite(tiny, 1)) == report_json(tiny, run_suite(tiny, 64)));
}

TEST_CASE("sampled sweeps are reproducible and reach larger universes") {
    SweepConfig config;
    config.mode = SweepMode::sampled;
    config.max_n = 5;
    config.props = {PropositionId::P01, PropositionId::P07};
    config.sample_count = 200;
    config.seed = 42;

    auto first = run_suite(config, 2);
    auto second = run_suite(config, 2);
    CHECK(report_json(config, first) == report_json(config, second));

    REQUIRE(first.size() == 10);  // 2 props x n in 1..5
    for (const auto& report : first) {
        CHECK(report.holds);
        CHECK(report.relations_checked <= 200);
        CHECK(report.relations_checked > 0);
    }
    // At n=1 there are only two relations, so deduplication must bite.
    CHECK(report_for(first, PropositionId::P01, 1).relations_checked == 2);

    SweepConfig reseeded = config;
    reseeded.seed = 43;
    CHECK(report_json(config, first) != report_json(reseeded, run_suite(reseeded, 2)));
}

TEST_CASE("invalid sweep configurations are rejected up front") {
    SweepConfig config;
    CHECK_THROWS_AS(run_suite(config, 0), InvalidConfig);

    config.max_n = 0;
    CHECK_THROWS_AS(run_suite(config), InvalidConfig);

    config.max_n = 5;  // exhaustive stops at 4
    CHECK_THROWS_AS(run_suite(config), InvalidConfig);
    CHECK_THROWS_WITH(run_suite(config), doctest::Contains("up to 4"));

    config.mode = SweepMode::sampled;
    config.max_n = 9;  // sampled stops at 8
    config.seed = 1;
    CHECK_THROWS_AS(run_suite(config), InvalidConfig);

    config.max_n = 5;
    config.seed.reset();
    CHECK_THROWS_AS(run_suite(config), InvalidConfig);
    config.seed = 1;
    config.sample_count = 0;
    CHECK_THROWS_AS(run_suite(config), InvalidConfig);
}

TEST_CASE("the json report exposes the full run") {
    SweepConfig config;
    config.max_n = 2;
    config.props = {PropositionId::P04, PropositionId::P11};
    auto reports = run_suite(config);
    auto doc = nlohmann::json::parse(report_json(config, reports));

    CHECK(doc["config"]["mode"] == "exhaustive");
    CHECK(doc["config"]["max_n"] == 2);
    CHECK(doc["config"]["props"] == nlohmann::json::array({"P04", "P11"}));
    CHECK(doc["config"]["max_counterexamples"] == 5);
    CHECK(!doc["config"].contains("seed"));
    CHECK(!doc["config"].contains("sample_count"));

    REQUIRE(doc["reports"].size() == 4);
    const auto& p11 = doc["reports"][3];
    CHECK(p11["prop"] == "P11");
    CHECK(p11["n"] == 2);
    CHECK(p11["relations_checked"] == 16);
    CHECK(p11["subsets_checked"] == 4);
    CHECK(p11["holds"] == false);
    CHECK(p11["gating_holds"] == true);
    CHECK(p11["status"] == "REPORTED");
    CHECK(p11["counterexample_total"] == 2);
    REQUIRE(p11["checks"].size() == 2);
    CHECK(p11["checks"][1]["name"] == "converse");
    CHECK(p11["checks"][1]["gating"] == false);
    CHECK(p11["checks"][1]["counterexample_count"] == 2);
    CHECK(p11["checks"][1]["holds"] == false);
    REQUIRE(p11["counterexamples"].size() == 2);
    const auto& entry = p11["counterexamples"][0];
    CHECK(entry["check"] == "converse");
    CHECK(entry["relation"]["universe"] == nlohmann::json::array({"1", "2"}));
    CHECK(entry["relation"]["pairs"] == nlohmann::json::array({{"1", "2"}}));
    CHECK(entry["witnesses"].is_object());
    CHECK(entry["witnesses"]["kind"] == "s-or-p");
    CHECK(!entry["observed"].get<std::string>().empty());
    CHECK(entry["expected"] == "serial or inverse serial");
    CHECK(!p11.contains("elapsed_ms"));

    auto timed = nlohmann::json::parse(report_json(config, reports, true));
    for (const auto& report : timed["reports"]) {
        REQUIRE(report.contains("elapsed_ms"));
        CHECK(report["elapsed_ms"].get<double>() >= 0.0);
    }

    // The whole-suite default selection echoes all 22 ids.
    SweepConfig everything;
    everything.max_n = 1;
    auto all_doc = nlohmann::json::parse(report_json(everything, run_suite(everything)));
    CHECK(all_doc["config"]["props"].size() == proposition_count);
    CHECK(all_doc["reports"].size() == proposition_count);
}
