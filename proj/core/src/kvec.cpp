#include "kvec/kvec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kvec/error.hpp"

namespace kvec {

PieceCount::PieceCount(std::size_t k) : k_(k) {
  if (k == 0) throw ParameterError("number of pieces must be >= 1");
}

void check_pieces(std::size_t n, PieceCount k) {
  if (k.value() > n) {
    throw ParameterError("number of pieces (" + std::to_string(k.value()) +
                         ") exceeds token count (" + std::to_string(n) + ")");
  }
}

std::size_t piece_of(std::size_t offset, std::size_t n, PieceCount k) {
  check_pieces(n, k);
  if (offset >= n) {
    throw ParameterError("offset " + std::to_string(offset) +
                         " outside text of " + std::to_string(n) + " tokens");
  }
  using Wide = unsigned __int128;
  return static_cast<std::size_t>(static_cast<Wide>(offset) * k.value() / n);
}

KVec::KVec(PieceCount k)
    : k_(k.value()), blocks_((k.value() + kBlockBits - 1) / kBlockBits, 0) {}

bool KVec::test(std::size_t piece) const {
  if (piece >= k_) return false;
  return (blocks_[piece / kBlockBits] >> (piece % kBlockBits)) & 1U;
}

void KVec::set(std::size_t piece) {
  if (piece >= k_) {
    throw ParameterError("piece " + std::to_string(piece) + " out of range");
  }
  Block& block = blocks_[piece / kBlockBits];
  const Block mask = Block{1} << (piece % kBlockBits);
  if ((block & mask) == 0) {
    block |= mask;
    ++ones_;
  }
}

std::vector<std::size_t> KVec::pieces() const {
  std::vector<std::size_t> out;
  out.reserve(ones_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    Block block = blocks_[i];
    while (block != 0) {
      out.push_back(i * kBlockBits + std::countr_zero(block));
      block &= block - 1;
    }
  }
  return out;
}

KVec build_kvec(const Corpus& corpus, WordId word, PieceCount k) {
  const std::size_t n = corpus.token_count();
  check_pieces(n, k);
  KVec vec(k);
  for (std::size_t offset : corpus.positions(word)) {
    vec.set(piece_of(offset, n, k));
  }
  return vec;
}

Contingency contingency(const KVec& f, const KVec& p) {
  if (f.size() != p.size()) {
    throw ParameterError("K-vecs of different length (" +
                         std::to_string(f.size()) + " vs " +
                         std::to_string(p.size()) + ")");
  }
  Contingency table;
  table.a = and_popcount(f.blocks(), p.blocks());
  table.b = f.ones() - table.a;
  table.c = p.ones() - table.a;
  table.d = f.size() - table.a - table.b - table.c;
  return table;
}

namespace {

void check_marginals(const Contingency& table) {
  if (table.a + table.b == 0 || table.a + table.c == 0) {
    throw ParameterError("mutual information undefined: a word never occurs");
  }
}

}  // namespace

double mutual_information(const Contingency& table) {
  check_marginals(table);
  if (table.a == 0) return -std::numeric_limits<double>::infinity();
  const double ratio =
      static_cast<double>(table.a) * static_cast<double>(table.k()) /
      (static_cast<double>(table.a + table.b) *
       static_cast<double>(table.a + table.c));
  return std::log(ratio) / std::log(2.0);
}

std::optional<double> t_score(const Contingency& table) {
  if (table.a == 0) return std::nullopt;
  const double k = static_cast<double>(table.k());
  const double joint = static_cast<double>(table.a) / k;
  const double src = static_cast<double>(table.a + table.b) / k;
  const double tgt = static_cast<double>(table.a + table.c) / k;
  return (joint - src * tgt) / std::sqrt(joint / k);
}

AssocScore score(const Contingency& table) {
  AssocScore s;
  s.mi_bits = mutual_information(table);
  s.t = t_score(table);
  const double k = static_cast<double>(table.k());
  s.p_joint = static_cast<double>(table.a) / k;
  s.p_src = static_cast<double>(table.a + table.b) / k;
  s.p_tgt = static_cast<double>(table.a + table.c) / k;
  return s;
}

double mi_identical(std::size_t n, PieceCount k) {
  if (n == 0 || n > k.value()) {
    throw ParameterError("set-bit count must be in [1, k]");
  }
  return mutual_information(Contingency{n, 0, 0, k.value() - n});
}

PieceCount default_k(std::size_t n_src, std::size_t n_tgt) {
  const std::size_t n = std::min(n_src, n_tgt);
  auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  return PieceCount(std::max<std::size_t>(root, 1));
}

}  // namespace kvec
