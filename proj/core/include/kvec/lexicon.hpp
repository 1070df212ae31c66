#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kvec/corpus.hpp"
#include "kvec/kvec.hpp"

namespace kvec {

/// Candidate pruning and significance settings for lexicon extraction.
struct BandConfig {
  static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

  std::size_t min_freq = 3;
  std::size_t max_freq = 10;
  double t_threshold = 1.65;
  std::optional<PieceCount> k;         // default_k() of the two corpora when empty
  std::optional<std::size_t> top_n;    // unlimited when empty

  /// Throws ParameterError unless 1 <= min_freq <= max_freq and t_threshold >= 0.
  void validate() const;

  /// Explicit k, or default_k(src, tgt).
  PieceCount pieces_for(const Corpus& src, const Corpus& tgt) const;

  bool in_band(std::size_t freq) const noexcept {
    return freq >= min_freq && freq <= max_freq;
  }
};

using WordPair = std::pair<WordId, WordId>;

/// Ids of `corpus` whose frequency lies in the band, ascending.
std::vector<WordId> band_words(const Corpus& corpus, const BandConfig& cfg);

/// Calls `visit(src_id, tgt_id)` for every in-band pair in ascending id order.
void for_each_candidate(const Corpus& src, const Corpus& tgt,
                        const BandConfig& cfg,
                        const std::function<void(WordId, WordId)>& visit);

/// Materialized form of for_each_candidate().
std::vector<WordPair> candidate_pairs(const Corpus& src, const Corpus& tgt,
                                      const BandConfig& cfg);

struct PairScore {
  Contingency table;
  AssocScore score;
};

/// Builds both K-vecs and scores the pair.
PairScore score_pair(const Corpus& src, const Corpus& tgt, WordPair pair,
                     PieceCount k);

struct LexiconEntry {
  std::string src_word;
  std::string tgt_word;
  double mi_bits = 0.0;
  double t = 0.0;
  std::size_t a = 0, b = 0, c = 0, d = 0;
  std::size_t freq_src = 0;
  std::size_t freq_tgt = 0;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// Ranking order: MI descending, then t descending, then (src, tgt) ascending.
bool ranks_before(const LexiconEntry& x, const LexiconEntry& y);

/// Significant pairs (finite MI, t >= threshold), ranked and truncated to
/// top_n. `workers` > 1 scores source words on several threads; the result
/// does not depend on it.
///
/// Throws ParameterError for an invalid config or a k that does not fit
/// either corpus.
std::vector<LexiconEntry> extract_lexicon(const Corpus& src, const Corpus& tgt,
                                          const BandConfig& cfg,
                                          std::size_t workers = 1);

/// Set of (source surface, target surface) pairs.
using SurfacePairs = std::set<std::pair<std::string, std::string>>;
using GoldLexicon = SurfacePairs;

SurfacePairs to_surface_pairs(const std::vector<LexiconEntry>& entries);

/// Parses `src<TAB>tgt` lines; blank and '#' lines are skipped. Throws
/// ParameterError naming the line number for a line without a tab.
GoldLexicon parse_gold(std::istream& in);

GoldLexicon load_gold(const std::filesystem::path& path);

/// Fraction of the first min(n, |entries|) entries found in `gold`; 0 for an
/// empty lexicon. Throws ParameterError for n == 0.
double evaluate_against_gold(const std::vector<LexiconEntry>& entries,
                             const GoldLexicon& gold, std::size_t n);

}  // namespace kvec
