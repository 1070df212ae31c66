#include "kvec/dotplot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <utility>

#include "kvec/error.hpp"

namespace kvec {
namespace {

// (bin, count) runs of a sorted position list.
using Runs = std::vector<std::pair<std::size_t, std::uint64_t>>;

void add_runs(Runs& runs, std::span<const std::size_t> positions,
              std::size_t base, std::size_t m, std::size_t side) {
  for (std::size_t pos : positions) {
    const std::size_t bin = bin_of(base + pos, m, side);
    if (!runs.empty() && runs.back().first == bin) {
      ++runs.back().second;
    } else {
      runs.emplace_back(bin, 1);
    }
  }
}

void accumulate(std::vector<std::uint64_t>& cells, std::size_t side,
                const Runs& rows, const Runs& cols) {
  for (const auto& [row, row_count] : rows) {
    std::uint64_t* line = cells.data() + row * side;
    for (const auto& [col, col_count] : cols) line[col] += row_count * col_count;
  }
}

DensityImage make_image(std::size_t side) {
  DensityImage image;
  image.side = side;
  image.cells.assign(side * side, 0);
  return image;
}

void exact_dots(const Corpus& src, const Corpus& tgt, DensityImage& image) {
  const std::size_t n_src = src.token_count();
  const std::size_t m = n_src + tgt.token_count();
  const std::size_t side = image.side;

  std::vector<bool> shared(src.vocab_size(), false);
  Runs runs;
  for (WordId w = 0; w < tgt.vocab_size(); ++w) {
    runs.clear();
    if (auto s = src.find(tgt.surface(w))) {
      shared[*s] = true;
      add_runs(runs, src.positions(*s), 0, m, side);
    }
    add_runs(runs, tgt.positions(w), n_src, m, side);
    accumulate(image.cells, side, runs, runs);
  }
  for (WordId w = 0; w < src.vocab_size(); ++w) {
    if (shared[w]) continue;
    runs.clear();
    add_runs(runs, src.positions(w), 0, m, side);
    accumulate(image.cells, side, runs, runs);
  }
}

}  // namespace

void DotplotConfig::validate() const {
  if (grid == 0) throw ParameterError("dotplot grid must be >= 1");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("dotplot gamma must be a positive number");
  }
  if (mode == DotplotMode::kAssoc && !assoc_lexicon) {
    throw ParameterError("association dotplot needs a lexicon");
  }
}

std::size_t bin_of(std::size_t i, std::size_t m, std::size_t side) {
  using Wide = unsigned __int128;
  return static_cast<std::size_t>(static_cast<Wide>(i) * side / m);
}

std::vector<std::uint8_t> render(std::span<const std::uint64_t> cells,
                                 double gamma) {
  std::vector<std::uint8_t> pixels(cells.size(), 0);
  const std::uint64_t max = cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end());
  if (max == 0) return pixels;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] == 0) continue;
    const double level = std::pow(static_cast<double>(cells[i]) /
                                      static_cast<double>(max),
                                  gamma);
    const auto value = static_cast<int>(std::floor(255.0 * level));
    pixels[i] = static_cast<std::uint8_t>(std::clamp(value, 1, 255));
  }
  return pixels;
}

DensityImage dotplot_exact(const Corpus& src, const Corpus& tgt,
                           const DotplotConfig& cfg) {
  cfg.validate();
  if (src.token_count() + tgt.token_count() == 0) {
    throw ParameterError("dotplot of two empty texts");
  }
  DensityImage image = make_image(cfg.grid);
  exact_dots(src, tgt, image);
  image.rendered = render(image.cells, cfg.gamma);
  return image;
}

DensityImage dotplot_assoc(const Corpus& src, const Corpus& tgt,
                           const SurfacePairs& lexicon,
                           const DotplotConfig& cfg) {
  DotplotConfig exact_cfg = cfg;
  exact_cfg.mode = DotplotMode::kExact;
  exact_cfg.validate();
  const std::size_t n_src = src.token_count();
  const std::size_t m = n_src + tgt.token_count();
  if (m == 0) throw ParameterError("dotplot of two empty texts");

  DensityImage image = make_image(cfg.grid);
  exact_dots(src, tgt, image);

  Runs rows;
  Runs cols;
  for (const auto& [src_word, tgt_word] : lexicon) {
    // Identical surfaces are already exact matches.
    if (src_word == tgt_word) continue;
    rows.clear();
    cols.clear();
    add_runs(rows, src.positions(src.id(src_word)), 0, m, image.side);
    add_runs(cols, tgt.positions(tgt.id(tgt_word)), n_src, m, image.side);
    accumulate(image.cells, image.side, rows, cols);
    accumulate(image.cells, image.side, cols, rows);
  }
  image.rendered = render(image.cells, cfg.gamma);
  return image;
}

DensityImage dotplot(const Corpus& src, const Corpus& tgt,
                     const DotplotConfig& cfg) {
  cfg.validate();
  if (cfg.mode == DotplotMode::kAssoc) {
    return dotplot_assoc(src, tgt, *cfg.assoc_lexicon, cfg);
  }
  return dotplot_exact(src, tgt, cfg);
}

void render_pgm(const DensityImage& image, std::ostream& sink) {
  const std::string header = "P5\n" + std::to_string(image.side) + " " +
                             std::to_string(image.side) + "\n255\n";
  sink.write(header.data(), static_cast<std::streamsize>(header.size()));
  sink.write(reinterpret_cast<const char*>(image.rendered.data()),
             static_cast<std::streamsize>(image.rendered.size()));
  sink.flush();
  if (!sink) throw IoError("failed to write PGM image");
}

void write_pgm(const DensityImage& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  try {
    render_pgm(image, out);
  } catch (const IoError&) {
    throw IoError("failed to write " + path.string());
  }
}

}  // namespace kvec
