#include <benchmark/benchmark.h>

#include "heckebound/coxeter.hpp"
#include "heckebound/hecke.hpp"
#include "heckebound/kl.hpp"
#include "heckebound/registry.hpp"
#include "heckebound/verifier.hpp"
#include "heckebound/word_problem.hpp"

using namespace heckebound;

namespace {

void bm_table_build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CoxeterGroup group({7, 3});
    benchmark::DoNotOptimize(group.enumerate_up_to(n).size());
  }
}
BENCHMARK(bm_table_build)->Arg(8)->Arg(12)->Arg(16);

void bm_tits_reduce(benchmark::State& state) {
  WordProblem wp({7, 3});
  const Word w = parse_word("rsrsrsttsrsrsrts");
  for (auto _ : state) benchmark::DoNotOptimize(wp.reduce(w).normal_form.size());
}
BENCHMARK(bm_tits_reduce);

void bm_product(benchmark::State& state) {
  CoxeterGroup group({7, 3});
  const int n = static_cast<int>(state.range(0));
  const auto elements = group.elements_of_length(n);
  for (auto _ : state) {
    for (const Element& x : elements) benchmark::DoNotOptimize(max_degree(product(x, elements.front())));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(elements.size()));
}
BENCHMARK(bm_product)->Arg(4)->Arg(6)->Arg(8);

void bm_pair_scan(benchmark::State& state) {
  CoxeterGroup group({7, 3});
  VerifierOptions options;
  options.jobs = static_cast<unsigned>(state.range(1));
  options.memo = true;
  Verifier verifier(group, options);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verifier.check_degree_bound(n, 7).items_scanned);
  }
}
BENCHMARK(bm_pair_scan)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

void bm_kl_window(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CoxeterGroup group({7, 3});
    Verifier verifier(group);
    benchmark::DoNotOptimize(verifier.check_kl_window(n).items_scanned);
  }
}
BENCHMARK(bm_kl_window)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
