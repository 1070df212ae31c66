#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kvec/corpus.hpp"

namespace kvec {

/// Number of pieces a text is cut into. Always >= 1.
class PieceCount {
 public:
  /// Throws ParameterError for k == 0.
  explicit PieceCount(std::size_t k);

  std::size_t value() const noexcept { return k_; }

  friend bool operator==(PieceCount, PieceCount) = default;

 private:
  std::size_t k_;
};

/// Throws ParameterError unless 1 <= k <= n.
void check_pieces(std::size_t n, PieceCount k);

/// Piece holding token `offset` of an n-token text: floor(offset * k / n).
/// Pieces are contiguous and their sizes differ by at most one.
std::size_t piece_of(std::size_t offset, std::size_t n, PieceCount k);

/// K-bit presence vector: bit p is set when the word occurs in piece p.
class KVec {
 public:
  using Block = std::uint64_t;
  static constexpr std::size_t kBlockBits = 64;

  explicit KVec(PieceCount k);

  std::size_t size() const noexcept { return k_; }
  std::size_t ones() const noexcept { return ones_; }

  bool test(std::size_t piece) const;
  /// Sets bit `piece`; throws ParameterError when piece >= size().
  void set(std::size_t piece);

  std::span<const Block> blocks() const noexcept { return blocks_; }

  /// Indices of set bits, ascending.
  std::vector<std::size_t> pieces() const;

  friend bool operator==(const KVec&, const KVec&) = default;

 private:
  std::size_t k_;
  std::size_t ones_ = 0;
  std::vector<Block> blocks_;
};

/// Presence vector of `word` in `corpus`. Throws ParameterError when k is not
/// in [1, token_count] and LookupError for an unknown word.
KVec build_kvec(const Corpus& corpus, WordId word, PieceCount k);

/// Piece co-occurrence table of a source word f and a target word p.
struct Contingency {
  std::size_t a = 0;  // pieces holding both
  std::size_t b = 0;  // only f
  std::size_t c = 0;  // only p
  std::size_t d = 0;  // neither

  std::size_t k() const noexcept { return a + b + c + d; }

  friend bool operator==(const Contingency&, const Contingency&) = default;
};

/// |f AND p| via popcount. Throws ParameterError when the sizes differ.
Contingency contingency(const KVec& f, const KVec& p);

/// Intersection size of two equal-length block spans.
inline std::size_t and_popcount(std::span<const KVec::Block> x,
                                std::span<const KVec::Block> y) noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) n += std::popcount(x[i] & y[i]);
  return n;
}

struct AssocScore {
  double mi_bits = 0.0;      // -infinity when a == 0
  std::optional<double> t;   // empty when a == 0
  double p_joint = 0.0;
  double p_src = 0.0;
  double p_tgt = 0.0;
};

/// log2(prob(f,p) / (prob(f) prob(p))) = log2(a k / ((a+b)(a+c))).
/// Returns -infinity when a == 0. Throws ParameterError when either word is
/// absent (a+b == 0 or a+c == 0).
double mutual_information(const Contingency& table);

/// (prob(f,p) - prob(f) prob(p)) / sqrt(prob(f,p) / k); nullopt when a == 0.
std::optional<double> t_score(const Contingency& table);

/// Probabilities, MI and t in one pass. Same preconditions as
/// mutual_information().
AssocScore score(const Contingency& table);

/// MI of two identical vectors with n set bits: log2(k / n).
/// Throws ParameterError unless 1 <= n <= k.
double mi_identical(std::size_t n, PieceCount k);

/// floor(sqrt(min(n_src, n_tgt))), at least 1.
PieceCount default_k(std::size_t n_src, std::size_t n_tgt);

}  // namespace kvec
