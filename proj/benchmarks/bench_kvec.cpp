#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "kvec/kvec.hpp"

namespace {

std::vector<kvec::KVec> random_vectors(std::size_t count, std::size_t k, std::size_t ones) {
  std::mt19937_64 rng(1);
  std::vector<kvec::KVec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    kvec::KVec v{kvec::PieceCount(k)};
    for (std::size_t j = 0; j < ones; ++j) v.set(rng() % k);
    out.push_back(std::move(v));
  }
  return out;
}

void BM_Contingency(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto vecs = random_vectors(256, k, 10);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& f = vecs[i % vecs.size()];
    const auto& p = vecs[(i * 7 + 3) % vecs.size()];
    benchmark::DoNotOptimize(kvec::contingency(f, p));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Contingency)->Arg(64)->Arg(406)->Arg(4096)->Arg(1 << 16);

void BM_Score(benchmark::State& state) {
  kvec::Contingency table{5, 1, 0, 94};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kvec::score(table));
    table.a = 5 + (table.a + 1) % 3;
    table.d = 100 - table.a - table.b - table.c;
  }
}
BENCHMARK(BM_Score);

void BM_PieceOf(benchmark::State& state) {
  const std::size_t n = 165160;
  const kvec::PieceCount k(406);
  std::size_t offset = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kvec::piece_of(offset, n, k));
    offset = (offset + 7919) % n;
  }
}
BENCHMARK(BM_PieceOf);

}  // namespace
