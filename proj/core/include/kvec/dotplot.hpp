#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "kvec/corpus.hpp"
#include "kvec/lexicon.hpp"

namespace kvec {

enum class DotplotMode { kExact, kAssoc };

struct DotplotConfig {
  std::size_t grid = 512;
  DotplotMode mode = DotplotMode::kExact;
  double gamma = 1.0;
  std::optional<SurfacePairs> assoc_lexicon;  // required for kAssoc

  /// Throws ParameterError for grid == 0, gamma <= 0, or kAssoc without a
  /// lexicon.
  void validate() const;
};

/// Dot counts binned onto a side x side grid, plus their 8-bit rendering.
/// Row-major; row = bin of position i, column = bin of position j.
struct DensityImage {
  std::size_t side = 0;
  std::vector<std::uint64_t> cells;
  std::vector<std::uint8_t> rendered;

  std::uint64_t at(std::size_t row, std::size_t col) const {
    return cells[row * side + col];
  }
};

/// Pixel values: floor(255 * (count / max)^gamma), with nonzero counts
/// lifted to at least 1 so that only empty cells are black.
std::vector<std::uint8_t> render(std::span<const std::uint64_t> cells,
                                 double gamma);

/// Grid bin of position i in a sequence of m positions.
std::size_t bin_of(std::size_t i, std::size_t m, std::size_t side);

/// Self-similarity of src ++ tgt: a dot at (i, j) whenever tokens i and j
/// have the same surface.
DensityImage dotplot_exact(const Corpus& src, const Corpus& tgt,
                           const DotplotConfig& cfg);

/// dotplot_exact plus a dot at (i, j) and (j, i) whenever i is in the source,
/// j is in the target, and (token i, token j) is in `lexicon`.
/// Throws LookupError for a pair naming a surface absent from its corpus.
DensityImage dotplot_assoc(const Corpus& src, const Corpus& tgt,
                           const SurfacePairs& lexicon,
                           const DotplotConfig& cfg);

/// Dispatches on cfg.mode.
DensityImage dotplot(const Corpus& src, const Corpus& tgt,
                     const DotplotConfig& cfg);

/// Binary PGM (P5, maxval 255). Throws IoError when the stream fails.
void render_pgm(const DensityImage& image, std::ostream& sink);

void write_pgm(const DensityImage& image, const std::filesystem::path& path);

}  // namespace kvec
