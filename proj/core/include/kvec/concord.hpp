#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kvec/corpus.hpp"

namespace kvec {

struct ConcordanceLine {
  std::size_t offset = 0;  // token offset of the keyword
  std::string left;        // up to `width` tokens, space-joined
  std::string keyword;
  std::string right;
};

/// One line per occurrence of `word`, in offset order. Contexts are cut at
/// the corpus boundaries. An unknown word yields no lines.
std::vector<ConcordanceLine> kwic(const Corpus& corpus, std::string_view word,
                                  std::size_t width = 10);

enum class KeywordStyle { kUpper, kBracket };

/// `<offset>\t<left> <KEYWORD> <right>`; empty contexts contribute no space.
std::string format_line(const ConcordanceLine& line,
                        KeywordStyle style = KeywordStyle::kUpper);

}  // namespace kvec
