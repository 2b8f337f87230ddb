#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "reltop/approximation.hpp"
#include "reltop/harness.hpp"
#include "reltop/relation.hpp"
#include "reltop/topology.hpp"

using namespace reltop;

namespace {

// Fixed pseudo-random reflexive relation on eight elements. Reflexivity keeps
// every neighborhood family a cover, so the topology path never bails out.
BinaryRelation dense_relation() {
    auto universe = make_indexed_universe(8);
    std::mt19937_64 engine(7);
    std::uint64_t code = engine();
    for (std::size_t x = 0; x < 8; ++x) code |= std::uint64_t{1} << (x * 8 + x);
    return BinaryRelation::from_bits(universe, code);
}

void profile_all_n4_relations(benchmark::State& state) {
    auto universe = make_indexed_universe(4);
    std::uint64_t code = 0;
    for (auto _ : state) {
        auto profile = relation_profile(BinaryRelation::from_bits(universe, code));
        benchmark::DoNotOptimize(profile);
        code = (code + 1) & 0xFFFF;
    }
}
BENCHMARK(profile_all_n4_relations);

void approximation_table_n8(benchmark::State& state) {
    auto relation = dense_relation();
    const auto& universe = relation.universe();
    std::uint64_t mask = 1;
    for (auto _ : state) {
        auto table = approximation_table(relation, ElementSet(universe, mask));
        benchmark::DoNotOptimize(table);
        mask = (mask * 0x9E3779B97F4A7C15ULL + 1) & full_mask(8);
    }
}
BENCHMARK(approximation_table_n8);

void induced_topology_n8(benchmark::State& state) {
    auto relation = dense_relation();
    for (auto _ : state) {
        auto topology = induced_topology(relation, NeighborhoodKind::successor);
        benchmark::DoNotOptimize(topology);
    }
}
BENCHMARK(induced_topology_n8);

void sweep_bounds_to_n3(benchmark::State& state) {
    harness::SweepConfig config;
    config.max_n = 3;
    config.props = {harness::PropositionId::P04};
    for (auto _ : state) {
        auto reports = harness::run_suite(config);
        benchmark::DoNotOptimize(reports);
    }
}
BENCHMARK(sweep_bounds_to_n3);

}  // namespace

BENCHMARK_MAIN();
