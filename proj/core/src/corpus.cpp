#include "kvec/corpus.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <fstream>
#include <sstream>

#include "kvec/error.hpp"

namespace kvec {
namespace {

enum class CharClass { kSpace, kWord, kOther };

CharClass classify(UChar32 c) {
  if (u_isUWhiteSpace(c)) return CharClass::kSpace;
  if (u_isalnum(c)) return CharClass::kWord;
  if ((U_GET_GC_MASK(c) & U_GC_M_MASK) != 0) return CharClass::kWord;
  return CharClass::kOther;
}

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  U8_APPEND_UNSAFE(buf, len, c);
  out.append(buf, static_cast<std::size_t>(len));
}

// Decodes to code points. Returns the byte offset of the first malformed
// sequence through `bad_offset` (and an incomplete result) on failure.
bool decode_utf8(std::string_view raw, std::vector<UChar32>& out,
                 std::size_t& bad_offset) {
  const auto* s = reinterpret_cast<const uint8_t*>(raw.data());
  const auto length = static_cast<int64_t>(raw.size());
  int64_t i = 0;
  if (length >= 3 && s[0] == 0xEF && s[1] == 0xBB && s[2] == 0xBF) i = 3;
  while (i < length) {
    const int64_t start = i;
    UChar32 c = 0;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      bad_offset = static_cast<std::size_t>(start);
      return false;
    }
    out.push_back(c);
  }
  return true;
}

std::vector<UChar32> decode(std::string_view raw, Encoding encoding) {
  std::vector<UChar32> cps;
  cps.reserve(raw.size());
  if (encoding != Encoding::kLatin1) {
    std::size_t bad = 0;
    if (decode_utf8(raw, cps, bad)) return cps;
    if (encoding == Encoding::kUtf8) {
      throw IngestError("invalid UTF-8 at byte offset " + std::to_string(bad),
                        bad);
    }
    cps.clear();
  }
  for (unsigned char byte : raw) cps.push_back(static_cast<UChar32>(byte));
  return cps;
}

template <typename Map>
std::string map_code_points(std::string_view text, Map map) {
  std::vector<UChar32> cps;
  std::size_t bad = 0;
  if (!decode_utf8(text, cps, bad)) {
    throw IngestError("invalid UTF-8 at byte offset " + std::to_string(bad),
                      bad);
  }
  std::string out;
  out.reserve(text.size());
  for (UChar32 c : cps) append_utf8(out, map(c));
  return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view raw,
                                  const TokenizeOptions& options) {
  const std::vector<UChar32> cps = decode(raw, options.encoding);

  std::vector<std::string> tokens;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) {
      tokens.push_back(std::move(word));
      word.clear();
    }
  };

  for (UChar32 c : cps) {
    if (options.fold_case) c = u_tolower(c);
    switch (classify(c)) {
      case CharClass::kSpace:
        flush();
        break;
      case CharClass::kWord:
        append_utf8(word, c);
        break;
      case CharClass::kOther: {
        flush();
        std::string single;
        append_utf8(single, c);
        tokens.push_back(std::move(single));
        break;
      }
    }
  }
  flush();
  return tokens;
}

std::string fold_case(std::string_view text) {
  return map_code_points(text, [](UChar32 c) { return u_tolower(c); });
}

std::string upper_case(std::string_view text) {
  return map_code_points(text, [](UChar32 c) { return u_toupper(c); });
}

Corpus Corpus::build(std::span<const std::string> surfaces) {
  Corpus corpus;
  corpus.tokens_.reserve(surfaces.size());
  std::vector<std::size_t> counts;

  for (const std::string& s : surfaces) {
    if (s.empty()) throw ParameterError("empty token surface");
    auto [it, inserted] =
        corpus.ids_.try_emplace(s, static_cast<WordId>(corpus.surfaces_.size()));
    if (inserted) {
      corpus.surfaces_.push_back(s);
      counts.push_back(0);
    }
    ++counts[it->second];
    corpus.tokens_.push_back(it->second);
  }

  corpus.starts_.assign(corpus.surfaces_.size() + 1, 0);
  for (std::size_t w = 0; w < counts.size(); ++w) {
    corpus.starts_[w + 1] = corpus.starts_[w] + counts[w];
  }
  corpus.postings_.resize(corpus.tokens_.size());
  std::vector<std::size_t> fill(corpus.starts_.begin(), corpus.starts_.end() - 1);
  for (std::size_t offset = 0; offset < corpus.tokens_.size(); ++offset) {
    corpus.postings_[fill[corpus.tokens_[offset]]++] = offset;
  }
  return corpus;
}

std::optional<WordId> Corpus::find(std::string_view surface) const {
  auto it = ids_.find(surface);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

WordId Corpus::id(std::string_view surface) const {
  if (auto word = find(surface)) return *word;
  throw LookupError("word not in vocabulary: " + std::string(surface));
}

void Corpus::check(WordId word) const {
  if (word >= surfaces_.size()) {
    throw LookupError("unknown word id " + std::to_string(word));
  }
}

const std::string& Corpus::surface(WordId word) const {
  check(word);
  return surfaces_[word];
}

std::span<const std::size_t> Corpus::positions(WordId word) const {
  check(word);
  return std::span<const std::size_t>(postings_)
      .subspan(starts_[word], starts_[word + 1] - starts_[word]);
}

std::size_t Corpus::frequency(WordId word) const {
  check(word);
  return starts_[word + 1] - starts_[word];
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return std::move(buf).str();
}

Corpus load_corpus(const std::filesystem::path& path,
                   const TokenizeOptions& options) {
  const std::vector<std::string> surfaces = tokenize(read_file(path), options);
  return Corpus::build(surfaces);
}

}  // namespace kvec
