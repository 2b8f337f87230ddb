#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "reltop/approximation.hpp"
#include "reltop/errors.hpp"
#include "reltop/harness.hpp"
#include "reltop/neighborhood.hpp"
#include "reltop/relation_io.hpp"
#include "reltop/topology.hpp"

namespace {

using nlohmann::ordered_json;
using namespace reltop;

ElementSet parse_set(const UniversePtr& universe, const std::string& spec) {
    std::uint64_t bits = 0;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        if (comma == std::string::npos) comma = spec.size();
        std::string label = spec.substr(start, comma - start);
        if (!label.empty()) bits |= std::uint64_t{1} << universe->index(label);
        start = comma + 1;
    }
    return ElementSet(universe, bits);
}

std::vector<NeighborhoodKind> selected_kinds(const std::string& filter) {
    if (filter == "all") return {all_kinds.begin(), all_kinds.end()};
    return {*kind_from_token(filter)};
}

std::string profile_line(const RelationProfile& p) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string out;
    out += "serial=";
    out += b(p.serial);
    out += " inverse_serial=";
    out += b(p.inverse_serial);
    out += " reflexive=";
    out += b(p.reflexive);
    out += " symmetric=";
    out += b(p.symmetric);
    out += " transitive=";
    out += b(p.transitive);
    out += " preorder=";
    out += b(p.preorder);
    out += " tolerance=";
    out += b(p.tolerance);
    out += " equivalence=";
    out += b(p.equivalence);
    return out;
}

ordered_json profile_json(const RelationProfile& p) {
    ordered_json j;
    j["serial"] = p.serial;
    j["inverse_serial"] = p.inverse_serial;
    j["reflexive"] = p.reflexive;
    j["symmetric"] = p.symmetric;
    j["transitive"] = p.transitive;
    j["preorder"] = p.preorder;
    j["tolerance"] = p.tolerance;
    j["equivalence"] = p.equivalence;
    return j;
}

ordered_json relation_json(const BinaryRelation& relation) {
    ordered_json j;
    j["universe"] = relation.universe()->labels();
    auto& pairs = j["pairs"] = ordered_json::array();
    for (const auto& [from, to] : relation.pairs()) pairs.push_back({from, to});
    return j;
}

void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    for (const auto& row : rows) {
        os << " ";
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << " " << row[i];
            if (i + 1 < row.size()) os << std::string(widths[i] - row[i].size(), ' ');
        }
        os << "\n";
    }
}

// ---- analyze -----------------------------------------------------------------

int cmd_analyze(const std::string& file, const std::string& set_spec, const std::string& filter,
                const std::string& format) {
    BinaryRelation relation = load_relation_file(file);
    const UniversePtr& universe = relation.universe();
    ElementSet x = parse_set(universe, set_spec);
    auto kinds = selected_kinds(filter);
    RelationProfile profile = relation_profile(relation);

    if (format == "json") {
        ordered_json doc = relation_json(relation);
        doc["profile"] = profile_json(profile);
        auto& nbrs = doc["neighborhoods"] = ordered_json::object();
        for (auto kind : kinds) {
            auto& per_kind = nbrs[std::string(kind_token(kind))] = ordered_json::object();
            for (std::size_t i = 0; i < universe->size(); ++i)
                per_kind[universe->label(i)] = neighborhood(relation, kind, i).labels();
        }
        doc["set"] = x.labels();
        auto& approx = doc["approximations"] = ordered_json::object();
        for (auto kind : kinds) {
            auto& per_kind = approx[std::string(kind_token(kind))] = ordered_json::object();
            per_kind["lower"] = lower_approx(relation, kind, x).labels();
            per_kind["upper"] = upper_approx(relation, kind, x).labels();
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "universe: " << ElementSet(universe, full_mask(universe->size())).to_string()
              << "\n";
    std::cout << "pairs: " << relation.pair_count() << "\n";
    std::cout << "profile: " << profile_line(profile) << "\n";
    std::cout << "neighborhoods:\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"x"};
    for (auto kind : kinds) header.emplace_back(kind_token(kind));
    rows.push_back(std::move(header));
    for (std::size_t i = 0; i < universe->size(); ++i) {
        std::vector<std::string> row{universe->label(i)};
        for (auto kind : kinds) row.push_back(neighborhood(relation, kind, i).to_string());
        rows.push_back(std::move(row));
    }
    print_table(std::cout, rows);
    std::cout << "set: " << x.to_string() << "\n";
    std::cout << "approximations:\n";
    rows.clear();
    rows.push_back({"kind", "lower", "upper"});
    for (auto kind : kinds) {
        rows.push_back({std::string(kind_token(kind)),
                        lower_approx(relation, kind, x).to_string(),
                        upper_approx(relation, kind, x).to_string()});
    }
    print_table(std::cout, rows);
    return 0;
}

// ---- topology ----------------------------------------------------------------

void print_dot(std::ostream& os, const Topology& topology) {
    const auto& opens = topology.opens().members();
    os << "digraph topology {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < opens.size(); ++i)
        os << "  n" << i << " [label=\"" << opens[i].to_string() << "\"];\n";
    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = 0; j < opens.size(); ++j) {
            if (i == j) continue;
            std::uint64_t a = opens[i].bits();
            std::uint64_t b = opens[j].bits();
            if (a == b || (a & ~b)) continue;  // need a strictly inside b
            bool covering = true;
            for (std::size_t k = 0; k < opens.size() && covering; ++k) {
                if (k == i || k == j) continue;
                std::uint64_t c = opens[k].bits();
                if (c != a && c != b && (a & ~c) == 0 && (c & ~b) == 0) covering = false;
            }
            if (covering) os << "  n" << i << " -> n" << j << ";\n";
        }
    }
    os << "}\n";
}

int cmd_topology(const std::string& file, const std::string& kind_token_arg, bool check_base,
                 bool dot, const std::string& format) {
    BinaryRelation relation = load_relation_file(file);
    NeighborhoodKind kind = *kind_from_token(kind_token_arg);
    SetFamily family = neighborhood_family(relation, kind);
    bool criterion = subbase_criterion(relation, kind);
    bool covers = is_cover(family);

    if (format == "json") {
        ordered_json doc;
        doc["kind"] = kind_token_arg;
        auto& fam = doc["family"] = ordered_json::array();
        for (const auto& member : family.members()) fam.push_back(member.labels());
        doc["subbase_criterion"] = criterion;
        doc["cover"] = covers;
        if (!covers) {
            doc["uncovered"] = uncovered(family);
            std::cout << doc.dump(2) << "\n";
            return 2;
        }
        Topology topology = generate_topology(family);
        auto& opens = doc["opens"] = ordered_json::array();
        for (const auto& open : topology.opens().members()) opens.push_back(open.labels());
        if (check_base) {
            BaseConditions bc = base_conditions(family);
            auto& conditions = doc["base_conditions"] = ordered_json::object();
            conditions["covers"] = bc.covers;
            conditions["refinement"] = bc.refinement;
            conditions["is_base"] = is_base(family, topology);
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    if (!covers) {
        std::cout << "kind: " << kind_token_arg << "\n";
        std::cout << "family: " << family.to_string() << "\n";
        std::cout << "subbase-criterion: " << (criterion ? "satisfied" : "not satisfied") << "\n";
        std::cout << "cover: no (uncovered:";
        for (const auto& label : uncovered(family)) std::cout << " " << label;
        std::cout << ")\n";
        return 2;
    }
    Topology topology = generate_topology(family);
    if (dot) {
        print_dot(std::cout, topology);
        return 0;
    }
    std::cout << "kind: " << kind_token_arg << "\n";
    std::cout << "family: " << family.to_string() << "\n";
    std::cout << "subbase-criterion: " << (criterion ? "satisfied" : "not satisfied") << "\n";
    std::cout << "cover: yes\n";
    std::cout << "opens (" << topology.size() << "):\n";
    for (const auto& open : topology.opens().members()) std::cout << "  " << open.to_string() << "\n";
    if (check_base) {
        BaseConditions bc = base_conditions(family);
        std::cout << "base-conditions: B1=" << (bc.covers ? "yes" : "no")
                  << " B2=" << (bc.refinement ? "yes" : "no")
                  << " is-base=" << (is_base(family, topology) ? "yes" : "no") << "\n";
    }
    return 0;
}

// ---- verify ------------------------------------------------------------------

int cmd_verify(const harness::SweepConfig& config, unsigned jobs, const std::string& report_path,
               bool expect_hold, bool timings) {
    auto reports = harness::run_suite(config, jobs);

    bool all_gating = true;
    for (const auto& report : reports) {
        std::uint64_t total = 0;
        for (const auto& check : report.checks) total += check.counterexample_count;
        std::cout << to_string(report.id) << " n=" << report.n << " "
                  << harness::report_status(report) << " relations=" << report.relations_checked
                  << " counterexamples=" << total << "\n";
        all_gating = all_gating && report.gating_holds;
    }
    std::cout << "gating: " << (all_gating ? "all hold" : "failures present") << "\n";

    std::string json = harness::report_json(config, reports, timings);
    if (report_path.empty()) {
        std::cout << json << "\n";
    } else {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw Error("cannot write report file: " + report_path);
        out << json << "\n";
        std::cout << "report written to " << report_path << "\n";
    }
    if (expect_hold && !all_gating) return 3;
    return 0;
}

// ---- example -----------------------------------------------------------------

// The built-in worked example: a four-element universe with five pairs chosen
// so that no standard relation property holds, and the target subset {a,c,d}.
BinaryRelation example_relation() {
    auto universe = make_universe({"a", "b", "c", "d"});
    return make_relation(universe,
                         {{"a", "a"}, {"a", "c"}, {"b", "c"}, {"c", "a"}, {"c", "d"}});
}

struct ExampleExpectations {
    // Rendered in canonical form, elements a..d per kind.
    std::array<std::array<std::string_view, 4>, 4> neighborhoods;
    std::array<std::pair<std::string_view, std::string_view>, 4> approximations;  // lower, upper
};

constexpr ExampleExpectations example_expected = {
    {{
        {{"{a,c}", "{c}", "{a,d}", "{}"}},     // s
        {{"{a,c}", "{}", "{a,b}", "{c}"}},     // p
        {{"{a,c}", "{}", "{a}", "{}"}},        // s-and-p
        {{"{a,c}", "{c}", "{a,b,d}", "{c}"}},  // s-or-p
    }},
    {{
        {"{a,b,c,d}", "{a,b,c}"},    // s
        {"{a,b,d}", "{a,c,d}"},      // p
        {"{a,b,c,d}", "{a,c}"},      // s-and-p
        {"{a,b,d}", "{a,b,c,d}"},    // s-or-p
    }},
};

int cmd_example(const std::string& format) {
    BinaryRelation relation = example_relation();
    const UniversePtr& universe = relation.universe();
    ElementSet x = parse_set(universe, "a,c,d");

    std::size_t mismatches = 0;
    ordered_json doc;
    std::vector<std::vector<std::string>> nbr_rows{{"x", "kind", "computed", "expected", ""}};
    std::vector<std::vector<std::string>> approx_rows{
        {"kind", "op", "computed", "expected", ""}};
    ordered_json nbr_json = ordered_json::array();
    ordered_json approx_json = ordered_json::array();

    for (std::size_t k = 0; k < all_kinds.size(); ++k) {
        for (std::size_t i = 0; i < universe->size(); ++i) {
            std::string computed = neighborhood(relation, all_kinds[k], i).to_string();
            std::string expected(example_expected.neighborhoods[k][i]);
            bool match = computed == expected;
            if (!match) ++mismatches;
            nbr_rows.push_back({universe->label(i), std::string(kind_token(all_kinds[k])),
                                computed, expected, match ? "ok" : "MISMATCH"});
            ordered_json entry;
            entry["x"] = universe->label(i);
            entry["kind"] = std::string(kind_token(all_kinds[k]));
            entry["computed"] = computed;
            entry["expected"] = expected;
            entry["match"] = match;
            nbr_json.push_back(std::move(entry));
        }
    }

    ApproximationTable table = approximation_table(relation, x);
    for (std::size_t k = 0; k < all_kinds.size(); ++k) {
        const auto& pair = table.pairs()[k];
        const auto& [expected_lower, expected_upper] = example_expected.approximations[k];
        for (int op = 0; op < 2; ++op) {
            std::string computed = (op == 0 ? pair.lower : pair.upper).to_string();
            std::string expected(op == 0 ? expected_lower : expected_upper);
            bool match = computed == expected;
            if (!match) ++mismatches;
            approx_rows.push_back({std::string(kind_token(all_kinds[k])),
                                   op == 0 ? "lower" : "upper", computed, expected,
                                   match ? "ok" : "MISMATCH"});
            ordered_json entry;
            entry["kind"] = std::string(kind_token(all_kinds[k]));
            entry["op"] = op == 0 ? "lower" : "upper";
            entry["computed"] = computed;
            entry["expected"] = expected;
            entry["match"] = match;
            approx_json.push_back(std::move(entry));
        }
    }

    const auto& s_pair = table.pair(NeighborhoodKind::successor);
    bool anomaly = s_pair.upper.is_subset_of(s_pair.lower) && !(s_pair.lower == s_pair.upper);

    if (format == "json") {
        doc["relation"] = relation_json(relation);
        doc["set"] = x.labels();
        doc["neighborhoods"] = std::move(nbr_json);
        doc["approximations"] = std::move(approx_json);
        doc["lower_s_strictly_contains_upper_s"] = anomaly;
        doc["mismatches"] = mismatches;
        doc["all_match"] = mismatches == 0;
        std::cout << doc.dump(2) << "\n";
        return mismatches == 0 ? 0 : 3;
    }

    std::cout << "relation: " << relation_to_text(relation);
    std::cout << "set: " << x.to_string() << "\n";
    std::cout << "neighborhoods:\n";
    print_table(std::cout, nbr_rows);
    std::cout << "approximations:\n";
    print_table(std::cout, approx_rows);
    if (anomaly) {
        std::cout << "note: lower(s) = " << s_pair.lower.to_string()
                  << " strictly contains upper(s) = " << s_pair.upper.to_string()
                  << " (empty successor neighborhoods enter every lower approximation"
                     " and no upper approximation)\n";
    }
    if (mismatches == 0) {
        std::cout << "all 24 sets match\n";
        return 0;
    }
    std::cout << mismatches << " mismatch(es)\n";
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"neighborhood operators, rough approximations, and relation-induced topologies"};
    app.require_subcommand(1);

    std::string relation_file;
    std::string set_spec;
    std::string kind_filter = "all";
    std::string kind_choice;
    std::string format = "text";
    bool check_base = false;
    bool dot = false;

    auto* analyze = app.add_subcommand(
        "analyze", "Profile a relation and print neighborhoods and approximations of a set");
    analyze->add_option("--relation", relation_file, "relation file (JSON or text form)")
        ->required();
    analyze->add_option("--set", set_spec, "comma-separated element labels; empty string = {}")
        ->required();
    analyze->add_option("--kind", kind_filter, "restrict to one neighborhood kind")
        ->check(CLI::IsMember({"all", "s", "p", "s-and-p", "s-or-p"}));
    analyze->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* topology = app.add_subcommand(
        "topology", "Generate the topology induced by one neighborhood family");
    topology->add_option("--relation", relation_file, "relation file (JSON or text form)")
        ->required();
    topology->add_option("--kind", kind_choice, "neighborhood kind")
        ->required()
        ->check(CLI::IsMember({"s", "p", "s-and-p", "s-or-p"}));
    topology->add_flag("--check-base", check_base, "also report the base conditions");
    topology->add_flag("--dot", dot, "emit the inclusion Hasse diagram in DOT instead of text");
    topology->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    harness::SweepConfig config;
    unsigned jobs = 1;
    std::string mode = "exhaustive";
    std::vector<std::string> props;
    std::uint64_t seed = 0;
    std::string report_path;
    bool expect_hold = false;
    bool timings = false;

    auto* verify = app.add_subcommand("verify", "Sweep the proposition suite over all small relations");
    verify->add_option("--max-n", config.max_n, "largest universe size (exhaustive <= 4, sampled <= 8)");
    verify->add_option("--props", props, "propositions to run, e.g. P01,P11 (default: all)")
        ->delimiter(',');
    verify->add_option("--mode", mode, "sweep mode")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--samples", config.sample_count, "relations drawn per size in sampled mode");
    auto* seed_option = verify->add_option("--seed", seed, "RNG seed (required in sampled mode)");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--max-counterexamples", config.max_counterexamples,
                       "recording cap per proposition report");
    verify->add_option("--report", report_path, "write the JSON report to this file");
    verify->add_flag("--expect-hold", expect_hold,
                     "exit 3 if any gating check finds a counterexample");
    verify->add_flag("--timings", timings, "include elapsed_ms in the report");

    auto* example = app.add_subcommand(
        "example", "Run the built-in worked example and compare against its known values");
    example->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(relation_file, set_spec, kind_filter, format);
        if (topology->parsed())
            return cmd_topology(relation_file, kind_choice, check_base, dot, format);
        if (verify->parsed()) {
            config.mode = mode == "sampled" ? harness::SweepMode::sampled
                                            : harness::SweepMode::exhaustive;
            if (seed_option->count() > 0) config.seed = seed;
            for (const auto& prop : props)
                config.props.push_back(harness::proposition_from_string(prop));
            return cmd_verify(config, jobs, report_path, expect_hold, timings);
        }
        if (example->parsed()) return cmd_example(format);
    } catch (const NotACover& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
