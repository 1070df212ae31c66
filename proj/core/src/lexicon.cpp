#include "kvec/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <thread>

#include "kvec/error.hpp"

namespace kvec {

void BandConfig::validate() const {
  if (min_freq < 1) throw ParameterError("min_freq must be >= 1");
  if (min_freq > max_freq) throw ParameterError("min_freq exceeds max_freq");
  if (!(t_threshold >= 0.0)) throw ParameterError("t_threshold must be >= 0");
}

PieceCount BandConfig::pieces_for(const Corpus& src, const Corpus& tgt) const {
  if (k) return *k;
  if (src.empty() || tgt.empty()) throw ParameterError("empty corpus");
  return default_k(src.token_count(), tgt.token_count());
}

std::vector<WordId> band_words(const Corpus& corpus, const BandConfig& cfg) {
  std::vector<WordId> out;
  for (WordId w = 0; w < corpus.vocab_size(); ++w) {
    if (cfg.in_band(corpus.frequency(w))) out.push_back(w);
  }
  return out;
}

void for_each_candidate(const Corpus& src, const Corpus& tgt,
                        const BandConfig& cfg,
                        const std::function<void(WordId, WordId)>& visit) {
  const std::vector<WordId> src_words = band_words(src, cfg);
  const std::vector<WordId> tgt_words = band_words(tgt, cfg);
  for (WordId f : src_words) {
    for (WordId p : tgt_words) visit(f, p);
  }
}

std::vector<WordPair> candidate_pairs(const Corpus& src, const Corpus& tgt,
                                      const BandConfig& cfg) {
  std::vector<WordPair> out;
  for_each_candidate(src, tgt, cfg,
                     [&](WordId f, WordId p) { out.emplace_back(f, p); });
  return out;
}

PairScore score_pair(const Corpus& src, const Corpus& tgt, WordPair pair,
                     PieceCount k) {
  const KVec f = build_kvec(src, pair.first, k);
  const KVec p = build_kvec(tgt, pair.second, k);
  PairScore out;
  out.table = contingency(f, p);
  out.score = score(out.table);
  return out;
}

bool ranks_before(const LexiconEntry& x, const LexiconEntry& y) {
  if (x.mi_bits != y.mi_bits) return x.mi_bits > y.mi_bits;
  if (x.t != y.t) return x.t > y.t;
  if (x.src_word != y.src_word) return x.src_word < y.src_word;
  return x.tgt_word < y.tgt_word;
}

namespace {

// Band words of one corpus with the pieces each occupies.
struct BandIndex {
  std::vector<WordId> words;
  std::vector<std::vector<std::size_t>> pieces;  // parallel to words

  BandIndex(const Corpus& corpus, const BandConfig& cfg, PieceCount k)
      : words(band_words(corpus, cfg)) {
    pieces.reserve(words.size());
    for (WordId w : words) pieces.push_back(build_kvec(corpus, w, k).pieces());
  }
};

class Scorer {
 public:
  Scorer(const Corpus& src, const Corpus& tgt, const BandConfig& cfg,
         PieceCount k)
      : src_(src), tgt_(tgt), cfg_(cfg), k_(k.value()),
        src_band_(src, cfg, k), tgt_band_(tgt, cfg, k), by_piece_(k_) {
    for (std::size_t j = 0; j < tgt_band_.words.size(); ++j) {
      for (std::size_t piece : tgt_band_.pieces[j]) by_piece_[piece].push_back(j);
    }
  }

  std::size_t source_count() const { return src_band_.words.size(); }

  // Scores source band words [begin, end) against every target band word
  // sharing at least one piece with them.
  std::vector<LexiconEntry> run(std::size_t begin, std::size_t end) const {
    std::vector<LexiconEntry> out;
    std::vector<std::size_t> overlap(tgt_band_.words.size(), 0);
    std::vector<std::size_t> touched;

    for (std::size_t i = begin; i < end; ++i) {
      const auto& src_pieces = src_band_.pieces[i];
      for (std::size_t piece : src_pieces) {
        for (std::size_t j : by_piece_[piece]) {
          if (overlap[j]++ == 0) touched.push_back(j);
        }
      }
      std::sort(touched.begin(), touched.end());
      for (std::size_t j : touched) {
        Contingency table;
        table.a = overlap[j];
        table.b = src_pieces.size() - table.a;
        table.c = tgt_band_.pieces[j].size() - table.a;
        table.d = k_ - table.a - table.b - table.c;
        overlap[j] = 0;

        const std::optional<double> t = t_score(table);
        if (!t || *t < cfg_.t_threshold) continue;

        const WordId f = src_band_.words[i];
        const WordId p = tgt_band_.words[j];
        LexiconEntry entry;
        entry.src_word = src_.surface(f);
        entry.tgt_word = tgt_.surface(p);
        entry.mi_bits = mutual_information(table);
        entry.t = *t;
        entry.a = table.a;
        entry.b = table.b;
        entry.c = table.c;
        entry.d = table.d;
        entry.freq_src = src_.frequency(f);
        entry.freq_tgt = tgt_.frequency(p);
        out.push_back(std::move(entry));
      }
      touched.clear();
    }
    return out;
  }

 private:
  const Corpus& src_;
  const Corpus& tgt_;
  const BandConfig& cfg_;
  std::size_t k_;
  BandIndex src_band_;
  BandIndex tgt_band_;
  std::vector<std::vector<std::size_t>> by_piece_;  // piece -> target band slots
};

}  // namespace

std::vector<LexiconEntry> extract_lexicon(const Corpus& src, const Corpus& tgt,
                                          const BandConfig& cfg,
                                          std::size_t workers) {
  cfg.validate();
  const PieceCount k = cfg.pieces_for(src, tgt);
  check_pieces(src.token_count(), k);
  check_pieces(tgt.token_count(), k);

  const Scorer scorer(src, tgt, cfg, k);
  const std::size_t n = scorer.source_count();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));

  std::vector<std::vector<LexiconEntry>> parts(workers);
  if (workers == 1) {
    parts[0] = scorer.run(0, n);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = n * w / workers;
      const std::size_t end = n * (w + 1) / workers;
      threads.emplace_back(
          [&parts, &scorer, w, begin, end] { parts[w] = scorer.run(begin, end); });
    }
  }

  std::vector<LexiconEntry> entries;
  for (auto& part : parts) {
    std::move(part.begin(), part.end(), std::back_inserter(entries));
  }
  std::sort(entries.begin(), entries.end(), ranks_before);
  if (cfg.top_n && entries.size() > *cfg.top_n) entries.resize(*cfg.top_n);
  return entries;
}

SurfacePairs to_surface_pairs(const std::vector<LexiconEntry>& entries) {
  SurfacePairs out;
  for (const auto& e : entries) out.emplace(e.src_word, e.tgt_word);
  return out;
}

GoldLexicon parse_gold(std::istream& in) {
  GoldLexicon gold;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParameterError("gold lexicon line " + std::to_string(line_no) +
                           ": expected src<TAB>tgt");
    }
    std::string tgt = line.substr(tab + 1);
    if (auto extra = tgt.find('\t'); extra != std::string::npos) tgt.resize(extra);
    gold.emplace(line.substr(0, tab), std::move(tgt));
  }
  return gold;
}

GoldLexicon load_gold(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return parse_gold(in);
}

double evaluate_against_gold(const std::vector<LexiconEntry>& entries,
                             const GoldLexicon& gold, std::size_t n) {
  if (n == 0) throw ParameterError("precision cutoff must be >= 1");
  const std::size_t cutoff = std::min(n, entries.size());
  if (cutoff == 0) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < cutoff; ++i) {
    if (gold.contains({entries[i].src_word, entries[i].tgt_word})) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(cutoff);
}

}  // namespace kvec
