#include <benchmark/benchmark.h>

#include "bes/constructors.hpp"
#include "bes/driver.hpp"
#include "bes/embedding.hpp"
#include "bes/erdos_rado.hpp"
#include "bes/generators.hpp"
#include "bes/io.hpp"
#include "bes/lower_bounds.hpp"
#include "bes/oracle.hpp"
#include "bes/rng.hpp"
#include "bes/structure.hpp"

namespace {

using namespace bes;

void BM_BuildTower(benchmark::State& state) {
    const auto e = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_tower(TowerConfig{16, 16, e}));
}
BENCHMARK(BM_BuildTower)->Arg(1024)->Arg(8192)->Unit(benchmark::kMillisecond);

void BM_GoodSetK44(benchmark::State& state) {
    auto f = build_kst_plus(4, 4);
    AnalysisOptions options;
    options.method = state.range(0) ? SearchMethod::exhaustive : SearchMethod::automatic;
    for (auto _ : state) benchmark::DoNotOptimize(is_good_set(f.hypergraph, f.witness->a, options));
}
BENCHMARK(BM_GoodSetK44)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Oracle63OnRS(benchmark::State& state) {
    auto h = rs_hypergraph(behrend_set(state.range(0)));
    OracleOptions options;
    options.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_configuration(h, 6, 3, options));
    state.counters["edges"] = static_cast<double>(h.edge_count());
}
BENCHMARK(BM_Oracle63OnRS)->Args({50, 1})->Args({200, 1})->Args({200, 4})->Unit(benchmark::kMillisecond);

void BM_EnumerateK22Plus(benchmark::State& state) {
    auto host = random_linear(static_cast<std::size_t>(state.range(0)), 0.5, 1);
    auto pattern = kst_plus_hypergraph(2, 2);
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_embeddings(host, pattern, nullptr, 1'000'000, threads));
    }
}
BENCHMARK(BM_EnumerateK22Plus)->Args({40, 1})->Args({40, 4})->Unit(benchmark::kMillisecond);

void BM_ErdosRado(benchmark::State& state) {
    Rng rng(3);
    std::vector<std::vector<Vertex>> sets;
    for (int i = 0; i < state.range(0); ++i) {
        std::vector<Vertex> s;
        while (s.size() < 4) {
            auto x = static_cast<Vertex>(rng.below(60));
            if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
        }
        std::sort(s.begin(), s.end());
        sets.push_back(std::move(s));
    }
    for (auto _ : state) benchmark::DoNotOptimize(erdos_rado(sets, 4));
}
BENCHMARK(BM_ErdosRado)->Arg(100)->Arg(1000);

void BM_ParseSerialize(benchmark::State& state) {
    auto text = serialize_hypergraph(random_linear(2000, 0.2, 5));
    for (auto _ : state) benchmark::DoNotOptimize(serialize_hypergraph(parse_hypergraph(text)));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseSerialize)->Unit(benchmark::kMillisecond);

void BM_FindBesPlanted(benchmark::State& state) {
    PlantedConfig pc;
    pc.n = 300;
    pc.density = 0.2;
    pc.e = static_cast<std::uint64_t>(state.range(0));
    pc.seed = 1;
    auto h = planted_host(pc);
    DriverConfig cfg;
    cfg.seed_s = 3;
    cfg.seed_t = 4;
    cfg.relaxed_degree_conditions = true;
    for (auto _ : state) benchmark::DoNotOptimize(find_bes(h, static_cast<std::int64_t>(pc.e), cfg));
}
BENCHMARK(BM_FindBesPlanted)->Arg(12)->Arg(48)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
