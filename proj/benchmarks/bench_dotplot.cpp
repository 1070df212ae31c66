#include <benchmark/benchmark.h>

#include "kvec/dotplot.hpp"
#include "synthetic.hpp"

namespace {

void BM_DotplotExact(benchmark::State& state) {
  kvec::testing::BitextSpec spec;
  spec.src_tokens = static_cast<std::size_t>(state.range(0));
  spec.tgt_tokens = spec.src_tokens * 9 / 8;
  const auto bitext = kvec::testing::make_bijective_bitext(spec);
  const auto src = kvec::Corpus::build(bitext.src);
  const auto tgt = kvec::Corpus::build(bitext.tgt);
  kvec::DotplotConfig cfg;
  cfg.grid = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kvec::dotplot_exact(src, tgt, cfg));
}
BENCHMARK(BM_DotplotExact)->Args({20000, 512})->Args({100000, 512})->Unit(benchmark::kMillisecond);

}  // namespace
