#include "kvec_cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kvec/concord.hpp"
#include "kvec/corpus.hpp"
#include "kvec/dotplot.hpp"
#include "kvec/error.hpp"
#include "kvec/kvec.hpp"
#include "kvec/lexicon.hpp"

namespace kvec::cli {
namespace {

struct Common {
  bool fold_case = false;
  Encoding encoding = Encoding::kAuto;
  std::string output;
};

struct Band {
  std::optional<std::size_t> pieces;
  std::size_t min_freq = 3;
  std::size_t max_freq = 10;
  double t_threshold = 1.65;
  std::size_t top = 30;
  std::size_t workers = 1;

  BandConfig config() const {
    BandConfig cfg;
    cfg.min_freq = min_freq;
    cfg.max_freq = max_freq;
    cfg.t_threshold = t_threshold;
    if (pieces) cfg.k = PieceCount(*pieces);
    if (top > 0) cfg.top_n = top;
    return cfg;
  }
};

void add_common(CLI::App& cmd, Common& common) {
  static const std::map<std::string, Encoding> kEncodings{
      {"auto", Encoding::kAuto}, {"utf8", Encoding::kUtf8}, {"latin1", Encoding::kLatin1}};
  cmd.add_flag("--fold-case", common.fold_case, "Lower-case all tokens");
  cmd.add_option("--encoding", common.encoding, "Input encoding: auto, utf8, latin1")
      ->transform(CLI::CheckedTransformer(kEncodings, CLI::ignore_case).description(""))
      ->type_name("{auto,utf8,latin1}");
  cmd.add_option("-o,--output", common.output, "Output file (default: stdout)");
}

void add_band(CLI::App& cmd, Band& band, std::size_t default_top) {
  band.top = default_top;
  cmd.add_option("--pieces", band.pieces, "Number of pieces K (default: isqrt of the smaller text)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--min-freq", band.min_freq, "Lowest candidate word frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--max-freq", band.max_freq, "Highest candidate word frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--t-threshold", band.t_threshold, "Minimum t-score")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--top", band.top, "Keep the N best pairs (0: all)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd.add_option("--workers", band.workers, "Scoring threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// Writes to the -o file when given, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open " + path + " for writing");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

std::string fixed4(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

TokenizeOptions tokenize_options(const Common& common) {
  return TokenizeOptions{common.fold_case, common.encoding};
}

void run_lexicon(const Common& common, const Band& band, const std::string& src_path,
                 const std::string& tgt_path, const std::string& gold_path,
                 std::ostream& out) {
  const Corpus src = load_corpus(src_path, tokenize_options(common));
  const Corpus tgt = load_corpus(tgt_path, tokenize_options(common));
  std::optional<GoldLexicon> gold;
  if (!gold_path.empty()) gold = load_gold(gold_path);

  const BandConfig cfg = band.config();
  const PieceCount k = cfg.pieces_for(src, tgt);
  const auto entries = extract_lexicon(src, tgt, cfg, band.workers);

  Sink sink(common.output, out);
  std::ostream& os = sink.stream();
  os << "# k=" << k.value() << '\n';
  os << "mi\tt\ta\tfreq_src\tfreq_tgt\tsrc\ttgt\n";
  for (const auto& e : entries) {
    os << fixed4(e.mi_bits) << '\t' << fixed4(e.t) << '\t' << e.a << '\t'
       << e.freq_src << '\t' << e.freq_tgt << '\t' << e.src_word << '\t'
       << e.tgt_word << '\n';
  }
  if (gold) {
    const std::size_t n = cfg.top_n.value_or(std::max<std::size_t>(entries.size(), 1));
    os << "# precision@" << n << '=' << fixed4(evaluate_against_gold(entries, *gold, n))
       << '\n';
  }
  os.flush();
  if (!os) throw IoError("failed to write lexicon output");
}

void run_concord(const Common& common, const std::string& path, const std::string& word,
                 std::size_t width, bool bracket, std::ostream& out) {
  const Corpus corpus = load_corpus(path, tokenize_options(common));
  const std::string query = common.fold_case ? fold_case(word) : word;
  const KeywordStyle style = bracket ? KeywordStyle::kBracket : KeywordStyle::kUpper;

  Sink sink(common.output, out);
  std::ostream& os = sink.stream();
  for (const auto& line : kwic(corpus, query, width)) os << format_line(line, style) << '\n';
  os.flush();
  if (!os) throw IoError("failed to write concordance output");
}

void run_dotplot(const Common& common, const Band& band, const std::string& src_path,
                 const std::string& tgt_path, std::size_t size, double gamma, bool assoc,
                 std::ostream& out) {
  const Corpus src = load_corpus(src_path, tokenize_options(common));
  const Corpus tgt = load_corpus(tgt_path, tokenize_options(common));

  DotplotConfig cfg;
  cfg.grid = size;
  cfg.gamma = gamma;
  if (assoc) {
    cfg.mode = DotplotMode::kAssoc;
    cfg.assoc_lexicon = to_surface_pairs(extract_lexicon(src, tgt, band.config(), band.workers));
  }
  const DensityImage image = dotplot(src, tgt, cfg);

  Sink sink(common.output, out);
  render_pgm(image, sink.stream());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bilingual lexicon induction from unaligned parallel texts", "kvec"};
  app.require_subcommand(1);

  Common common;
  Band lexicon_band;
  Band plot_band;

  std::string src_path;
  std::string tgt_path;
  std::string gold_path;
  auto* lexicon = app.add_subcommand("lexicon", "Extract a ranked bilingual lexicon (TSV)");
  lexicon->add_option("source", src_path, "Source-language text")->required();
  lexicon->add_option("target", tgt_path, "Target-language text")->required();
  lexicon->add_option("--gold", gold_path, "Gold lexicon TSV; appends precision");
  add_common(*lexicon, common);
  add_band(*lexicon, lexicon_band, 30);

  std::string concord_path;
  std::string word;
  std::size_t width = 10;
  bool bracket = false;
  auto* concord = app.add_subcommand("concord", "Keyword-in-context listing");
  concord->add_option("text", concord_path, "Text file")->required();
  concord->add_option("word", word, "Keyword")->required();
  concord->add_option("--width", width, "Context tokens on each side")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  concord->add_flag("--bracket", bracket, "Mark the keyword as [word] instead of upper-casing");
  add_common(*concord, common);

  std::size_t size = 512;
  double gamma = 1.0;
  bool assoc = false;
  auto* plot = app.add_subcommand("dotplot", "Render a dotplot of source ++ target as PGM");
  plot->add_option("source", src_path, "Source-language text")->required();
  plot->add_option("target", tgt_path, "Target-language text")->required();
  plot->add_option("--size", size, "Image side in pixels")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  plot->add_option("--gamma", gamma, "Intensity exponent")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  plot->add_flag("--assoc", assoc, "Add dots for significantly associated word pairs");
  add_common(*plot, common);
  add_band(*plot, plot_band, 0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*lexicon) {
      run_lexicon(common, lexicon_band, src_path, tgt_path, gold_path, out);
    } else if (*concord) {
      run_concord(common, concord_path, word, width, bracket, out);
    } else {
      run_dotplot(common, plot_band, src_path, tgt_path, size, gamma, assoc, out);
    }
  } catch (const kvec::Error& e) {
    err << "kvec: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "kvec: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace kvec::cli
