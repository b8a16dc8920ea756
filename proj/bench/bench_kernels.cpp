// Serial reference vs OpenMP kernel for each parallel stage.
//   ./licterm_bench --benchmark_filter=Matrix

#include <benchmark/benchmark.h>

#include "licterm/matrix.hpp"
#include "licterm/miner.hpp"
#include "licterm/scan.hpp"
#include "support/generators.hpp"

namespace {

using namespace licterm;

const Dataset& dataset(std::size_t n) {
  static std::map<std::size_t, Dataset> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    testing::Rng rng(n);
    it = cache.emplace(n, testing::random_dataset(rng, n)).first;
  }
  return it->second;
}

const std::vector<VersionRecord>& snapshot(std::size_t n) {
  static std::map<std::size_t, std::vector<VersionRecord>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, testing::synthetic_snapshot(n, n).records).first;
  return it->second;
}

template <ConflictMatrix (*F)(const Dataset&, const RuleOptions&)>
void BM_Matrix(benchmark::State& state) {
  const auto& ds = dataset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F(ds, RuleOptions{}));
  state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) - 1));
}
BENCHMARK_TEMPLATE(BM_Matrix, build_matrix_serial)->Arg(100)->Arg(453)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Matrix, build_matrix)->Arg(100)->Arg(453)->Unit(benchmark::kMillisecond);

template <std::vector<FrequentPattern> (*F)(const Dataset&, std::int64_t)>
void BM_Mine(benchmark::State& state) {
  const auto& ds = dataset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F(ds, state.range(0) / 4));
}
BENCHMARK_TEMPLATE(BM_Mine, mine_serial)->Arg(100)->Arg(453)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Mine, mine)->Arg(100)->Arg(453)->Unit(benchmark::kMillisecond);

template <DependencyGraph (*F)(const std::vector<VersionRecord>&)>
void BM_BuildGraph(benchmark::State& state) {
  const auto& recs = snapshot(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F(recs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_TEMPLATE(BM_BuildGraph, build_graph_serial)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_BuildGraph, build_graph)->Arg(3000)->Unit(benchmark::kMillisecond);

template <ScanReport (*F)(const DependencyGraph&, const ScanContext&)>
void BM_Scan(benchmark::State& state) {
  static const Dataset ds = seed_dataset();
  static const AliasTable aliases = seed_aliases();
  static const KnownLicenses known = [] {
    auto k = seed_known_licenses();
    k.merge(ds);
    return k;
  }();
  const auto g = build_graph(snapshot(static_cast<std::size_t>(state.range(0))));
  const ScanContext ctx{ds, aliases, known, {}};
  for (auto _ : state) benchmark::DoNotOptimize(F(g, ctx));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edges.size()));
}
BENCHMARK_TEMPLATE(BM_Scan, scan_serial)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Scan, scan)->Arg(3000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
