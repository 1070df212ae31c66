#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "kvec/lexicon.hpp"
#include "synthetic.hpp"

namespace {

// Zipf-ish text roughly shaped like a Hansard fragment.
kvec::Corpus zipf_corpus(std::size_t n, const std::string& prefix, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto rank = static_cast<std::size_t>(std::pow(20000.0, u(rng)));
    tokens.push_back(prefix + std::to_string(rank));
  }
  return kvec::Corpus::build(tokens);
}

void BM_ExtractSynthetic(benchmark::State& state) {
  kvec::testing::BitextSpec spec;
  spec.src_tokens = static_cast<std::size_t>(state.range(0));
  spec.tgt_tokens = spec.src_tokens * 9 / 8;
  const auto bitext = kvec::testing::make_bijective_bitext(spec);
  const auto src = kvec::Corpus::build(bitext.src);
  const auto tgt = kvec::Corpus::build(bitext.tgt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kvec::extract_lexicon(src, tgt, kvec::BandConfig{}));
  }
}
BENCHMARK(BM_ExtractSynthetic)->Arg(6400)->Arg(40000)->Unit(benchmark::kMillisecond);

void BM_ExtractZipf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto src = zipf_corpus(n, "f", 1);
  const auto tgt = zipf_corpus(n + n / 8, "e", 2);
  const auto workers = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kvec::extract_lexicon(src, tgt, kvec::BandConfig{}, workers));
  }
  state.counters["pairs"] = static_cast<double>(
      kvec::band_words(src, kvec::BandConfig{}).size() * kvec::band_words(tgt, kvec::BandConfig{}).size());
}
BENCHMARK(BM_ExtractZipf)
    ->Args({50000, 1})
    ->Args({165160, 1})
    ->Args({165160, 4})
    ->Unit(benchmark::kMillisecond);

void BM_BuildCorpus(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<std::string> tokens;
  for (int i = 0; i < 165160; ++i) tokens.push_back("w" + std::to_string(rng() % 15000));
  for (auto _ : state) benchmark::DoNotOptimize(kvec::Corpus::build(tokens));
}
BENCHMARK(BM_BuildCorpus)->Unit(benchmark::kMillisecond);

}  // namespace
