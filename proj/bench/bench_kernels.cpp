#include <benchmark/benchmark.h>

#include "rloops/center.hpp"
#include "rloops/fixtures.hpp"
#include "rloops/kernels.hpp"
#include "rloops/transversal.hpp"

using namespace rloops;

namespace {

RightLoop sym_table(std::size_t n) {
  std::vector<Perm> gens{parse_cycles("(1,2)", n)};
  std::string cyc = "(";
  for (std::size_t i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? "," : ")");
  gens.push_back(parse_cycles(cyc, n));
  return RightLoop::from_group(PermGroup::generate(n, gens));
}

RightLoop random_loop(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x) rows[x][0] = x;
  for (Elem y = 1; y < n; ++y) {
    std::vector<Elem> rest;
    for (Elem v = 0; v < n; ++v)
      if (v != y) rest.push_back(v);
    for (std::size_t i = rest.size(); i > 1; --i) std::swap(rest[i - 1], rest[rng.below(i)]);
    rows[0][y] = y;
    for (Elem x = 1; x < n; ++x) rows[x][y] = rest[x - 1];
  }
  return RightLoop::from_table(rows);
}

// Associative tables force a full n^3 scan.
void BM_TripleScanSerial(benchmark::State& st) {
  const RightLoop s = sym_table(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::nonassociative_triple_serial(s));
  st.SetItemsProcessed(st.iterations() * s.order() * s.order() * s.order());
}
void BM_TripleScanOmp(benchmark::State& st) {
  const RightLoop s = sym_table(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::nonassociative_triple_omp(s));
  st.SetItemsProcessed(st.iterations() * s.order() * s.order() * s.order());
}

void BM_PrincipalSerial(benchmark::State& st) {
  const RightLoop s = random_loop(static_cast<std::size_t>(st.range(0)), 7);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::principal_congruence_labels_serial(s));
}
void BM_PrincipalOmp(benchmark::State& st) {
  const RightLoop s = random_loop(static_cast<std::size_t>(st.range(0)), 7);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::principal_congruence_labels_omp(s));
}

void run_search(benchmark::State& st, Exec exec) {
  const auto pair = fixtures::alt5_cyclic_pair();
  SearchSpec spec;
  spec.mode = SearchMode::sampled;
  spec.samples = static_cast<std::size_t>(st.range(0));
  spec.seed = 1;
  spec.analyze_center = true;
  spec.exec = exec;
  for (auto _ : st) benchmark::DoNotOptimize(search_transversals(pair, spec));
}
void BM_SearchSerial(benchmark::State& st) { run_search(st, Exec::serial); }
void BM_SearchOmp(benchmark::State& st) { run_search(st, Exec::parallel); }

void BM_CenterSerial(benchmark::State& st) {
  const RightLoop s = fixtures::sym8_nilpotent_transversal().loop();
  for (auto _ : st) benchmark::DoNotOptimize(center_congruence(s, kDefaultCenterCap, Exec::serial));
}
void BM_CenterOmp(benchmark::State& st) {
  const RightLoop s = fixtures::sym8_nilpotent_transversal().loop();
  for (auto _ : st) benchmark::DoNotOptimize(center_congruence(s, kDefaultCenterCap, Exec::parallel));
}

}  // namespace

BENCHMARK(BM_TripleScanSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TripleScanOmp)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PrincipalSerial)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrincipalOmp)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchOmp)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CenterSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CenterOmp)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
