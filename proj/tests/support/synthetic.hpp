#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kvec/lexicon.hpp"

namespace kvec::testing {

// k must be at least 64 for a word seen in 3 pieces to reach t = 1.65
// (sqrt(3) * (1 - 3/k) >= 1.65); the default lengths give k = 80.
struct BitextSpec {
  std::size_t pairs = 20;
  std::size_t src_tokens = 6400;
  std::size_t tgt_tokens = 7200;
  std::size_t min_freq = 3;
  std::size_t max_freq = 10;
  std::size_t filler_words = 30;
  // Largest number of pieces two different true words may share.
  std::size_t max_overlap = 2;
  std::uint64_t seed = 1;
};

/// Parallel texts where source word i and target word i occupy exactly the
/// same pieces (k = default_k of the two lengths), one occurrence per piece.
/// Every other token is a filler word far above max_freq.
struct Bitext {
  std::vector<std::string> src;
  std::vector<std::string> tgt;
  GoldLexicon gold;
  std::size_t k = 0;
  std::vector<std::size_t> pieces_per_pair;  // = frequency of each true word
};

Bitext make_bijective_bitext(const BitextSpec& spec);

/// Writes `tokens` space-separated to `path`.
void write_tokens(const std::string& path, const std::vector<std::string>& tokens);

}  // namespace kvec::testing
