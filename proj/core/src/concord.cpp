#include "kvec/concord.hpp"

#include <algorithm>

namespace kvec {
namespace {

std::string join(const Corpus& corpus, std::size_t begin, std::size_t end) {
  std::string out;
  const auto tokens = corpus.tokens();
  for (std::size_t i = begin; i < end; ++i) {
    if (i != begin) out += ' ';
    out += corpus.surface(tokens[i]);
  }
  return out;
}

}  // namespace

std::vector<ConcordanceLine> kwic(const Corpus& corpus, std::string_view word,
                                  std::size_t width) {
  std::vector<ConcordanceLine> lines;
  const auto id = corpus.find(word);
  if (!id) return lines;

  const std::size_t n = corpus.token_count();
  for (std::size_t offset : corpus.positions(*id)) {
    ConcordanceLine line;
    line.offset = offset;
    line.left = join(corpus, offset - std::min(offset, width), offset);
    line.keyword = corpus.surface(*id);
    line.right = join(corpus, offset + 1, std::min(n, offset + 1 + width));
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string format_line(const ConcordanceLine& line, KeywordStyle style) {
  std::string out = std::to_string(line.offset);
  out += '\t';
  if (!line.left.empty()) {
    out += line.left;
    out += ' ';
  }
  if (style == KeywordStyle::kUpper) {
    out += upper_case(line.keyword);
  } else {
    out += '[';
    out += line.keyword;
    out += ']';
  }
  if (!line.right.empty()) {
    out += ' ';
    out += line.right;
  }
  return out;
}

}  // namespace kvec
