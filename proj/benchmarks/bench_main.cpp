#include <benchmark/benchmark.h>

#include <random>

#include "kashaev/braid.hpp"
#include "kashaev/corpus.hpp"
#include "kashaev/invariants.hpp"
#include "kashaev/linalg.hpp"
#include "kashaev/matrices.hpp"
#include "kashaev/oracle.hpp"

namespace {

using namespace kashaev;

ColoredDiagram eight_crossing_diagram() {
  std::mt19937_64 rng(5);
  RandomDiagramOptions opts;
  opts.min_strands = 4;
  for (;;) {
    auto d = random_connected_diagram(rng, opts);
    if (d.num_crossings() == 8 && d.num_colors() >= 2) return d;
  }
}

void BM_ParsePd(benchmark::State& state) {
  const std::string text(corpus_text("whitehead"));
  for (auto _ : state) benchmark::DoNotOptimize(parse_pd(text));
}
BENCHMARK(BM_ParsePd);

void BM_BareissDet(benchmark::State& state) {
  const auto d = eight_crossing_diagram();
  const auto r = compute_regions(d);
  const auto k = delete_marked(build_K(d, r), d, r);
  for (auto _ : state) benchmark::DoNotOptimize(det_symbolic(k));
}
BENCHMARK(BM_BareissDet);

void BM_TauSymbolic(benchmark::State& state) {
  const auto d = eight_crossing_diagram();
  const auto r = compute_regions(d);
  for (auto _ : state) benchmark::DoNotOptimize(build_tau_symbolic(d, r));
}
BENCHMARK(BM_TauSymbolic);

void BM_Conway(benchmark::State& state) {
  const auto d = eight_crossing_diagram();
  for (auto _ : state) benchmark::DoNotOptimize(conway(d));
}
BENCHMARK(BM_Conway)->Unit(benchmark::kMillisecond);

void BM_FoxAlexander(benchmark::State& state) {
  const auto d = eight_crossing_diagram();
  for (auto _ : state) benchmark::DoNotOptimize(alexander_via_fox(wirtinger(d)));
}
BENCHMARK(BM_FoxAlexander)->Unit(benchmark::kMillisecond);

void BM_SignatureGrid(benchmark::State& state) {
  const auto d = corpus_diagram("torus24_kink");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signature_grid(d, n));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n));
}
BENCHMARK(BM_SignatureGrid)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
