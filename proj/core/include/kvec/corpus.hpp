#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kvec {

using WordId = std::uint32_t;

enum class Encoding {
  kAuto,    // UTF-8, falling back to Latin-1 when the bytes are not valid UTF-8
  kUtf8,    // strict UTF-8; invalid input raises IngestError
  kLatin1,  // every byte is one code point
};

struct TokenizeOptions {
  bool fold_case = false;
  Encoding encoding = Encoding::kAuto;
};

/// Splits raw text into tokens: maximal runs of letters/digits (combining
/// marks attach to the run), every other non-whitespace character as a
/// one-character token. Whitespace only separates. Output is UTF-8.
///
/// Throws IngestError when `encoding` is kUtf8 and the input is malformed.
std::vector<std::string> tokenize(std::string_view raw,
                                  const TokenizeOptions& options = {});

/// Per-code-point lower-casing, as applied by tokenize() with fold_case.
/// `text` must be valid UTF-8.
std::string fold_case(std::string_view text);

/// Per-code-point upper-casing. `text` must be valid UTF-8.
std::string upper_case(std::string_view text);

/// Token stream of one language plus its vocabulary and inverted index.
///
/// Ids are dense and assigned in order of first appearance. Immutable once
/// built, so a Corpus can be shared across threads without locking.
class Corpus {
 public:
  Corpus() = default;

  /// Builds from an ordered sequence of surfaces. Empty surfaces are rejected.
  static Corpus build(std::span<const std::string> surfaces);

  std::size_t token_count() const noexcept { return tokens_.size(); }
  std::size_t vocab_size() const noexcept { return surfaces_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  std::span<const WordId> tokens() const noexcept { return tokens_; }

  std::optional<WordId> find(std::string_view surface) const;

  /// Throws LookupError if `surface` is not in the vocabulary.
  WordId id(std::string_view surface) const;

  /// Throws LookupError for an unknown id.
  const std::string& surface(WordId word) const;

  /// Sorted token offsets of `word`. Throws LookupError for an unknown id.
  std::span<const std::size_t> positions(WordId word) const;

  /// Number of occurrences. Throws LookupError for an unknown id.
  std::size_t frequency(WordId word) const;

 private:
  struct SurfaceHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  void check(WordId word) const;

  std::vector<WordId> tokens_;
  std::vector<std::string> surfaces_;
  std::unordered_map<std::string, WordId, SurfaceHash, std::equal_to<>> ids_;
  // CSR layout: occurrences of word w are postings_[starts_[w] .. starts_[w+1]).
  std::vector<std::size_t> starts_;
  std::vector<std::size_t> postings_;
};

inline Corpus build_corpus(std::span<const std::string> surfaces) {
  return Corpus::build(surfaces);
}

inline std::size_t frequency(const Corpus& corpus, WordId word) {
  return corpus.frequency(word);
}

/// Reads a whole file as bytes. Throws IoError naming the path on failure.
std::string read_file(const std::filesystem::path& path);

/// read_file + tokenize + build.
Corpus load_corpus(const std::filesystem::path& path,
                   const TokenizeOptions& options = {});

}  // namespace kvec
