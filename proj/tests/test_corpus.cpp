#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kvec/corpus.hpp"
#include "kvec/error.hpp"

using kvec::Corpus;
using kvec::Encoding;
using kvec::TokenizeOptions;
using Tokens = std::vector<std::string>;

TEST_CASE("tokenize splits punctuation off word runs") {
  CHECK(kvec::tokenize("Fisheries and Oceans ( Mr . Siddon )") ==
        Tokens{"Fisheries", "and", "Oceans", "(", "Mr", ".", "Siddon", ")"});
  CHECK(kvec::tokenize("Fisheries and Oceans (Mr. Siddon)") ==
        Tokens{"Fisheries", "and", "Oceans", "(", "Mr", ".", "Siddon", ")"});
  CHECK(kvec::tokenize("l'hon") == Tokens{"l", "'", "hon"});
  CHECK(kvec::tokenize("").empty());
  CHECK(kvec::tokenize(" \t\n ").empty());
  CHECK(kvec::tokenize("1981 ,,") == Tokens{"1981", ",", ","});
}

TEST_CASE("tokenize handles accented letters in UTF-8 and Latin-1") {
  CHECK(kvec::tokenize("les p\xC3\xAA" "ches") == Tokens{"les", "p\xC3\xAA" "ches"});
  // Same text in Latin-1: invalid UTF-8, decoded by the fallback.
  CHECK(kvec::tokenize("les p\xEA" "ches") == Tokens{"les", "p\xC3\xAA" "ches"});
  CHECK(kvec::tokenize("p\xEA" "ches", {false, Encoding::kLatin1}) ==
        Tokens{"p\xC3\xAA" "ches"});
  // Combining circumflex stays inside the word.
  CHECK(kvec::tokenize("pe\xCC\x82" "ches") == Tokens{"pe\xCC\x82" "ches"});
  // Leading BOM is not a token.
  CHECK(kvec::tokenize("\xEF\xBB\xBFword") == Tokens{"word"});
}

TEST_CASE("strict UTF-8 reports the offending byte offset") {
  try {
    kvec::tokenize("abc p\xEA" "ches", {false, Encoding::kUtf8});
    FAIL("expected IngestError");
  } catch (const kvec::IngestError& e) {
    CHECK(e.byte_offset() == 5);
  }
}

TEST_CASE("fold_case lower-cases and merges surfaces") {
  const auto tokens = kvec::tokenize("Fisheries fisheries P\xC3\x8A" "CHES", {true});
  CHECK(tokens == Tokens{"fisheries", "fisheries", "p\xC3\xAA" "ches"});
  const Corpus corpus = Corpus::build(tokens);
  CHECK(corpus.vocab_size() == 2);
  CHECK(corpus.frequency(corpus.id("fisheries")) == 2);
  CHECK(kvec::fold_case("Santé") == "santé");
  CHECK(kvec::upper_case("pêches") == "PÊCHES");
}

TEST_CASE("build_corpus assigns ids by first appearance") {
  const Corpus corpus = Corpus::build(Tokens{"a", "b", "a"});
  CHECK(corpus.token_count() == 3);
  CHECK(corpus.id("a") == 0);
  CHECK(corpus.id("b") == 1);
  const auto a = corpus.positions(0);
  CHECK(std::vector<std::size_t>(a.begin(), a.end()) == std::vector<std::size_t>{0, 2});
  const auto b = corpus.positions(1);
  CHECK(std::vector<std::size_t>(b.begin(), b.end()) == std::vector<std::size_t>{1});
  CHECK(kvec::frequency(corpus, 0) == 2);

  const Corpus empty = Corpus::build(Tokens{});
  CHECK(empty.token_count() == 0);
  CHECK(empty.vocab_size() == 0);
}

TEST_CASE("lookup errors") {
  const Corpus corpus = Corpus::build(Tokens{"a"});
  CHECK_THROWS_AS(corpus.frequency(7), kvec::LookupError);
  CHECK_THROWS_AS(corpus.id("absent"), kvec::LookupError);
  CHECK_FALSE(corpus.find("absent").has_value());
  CHECK_THROWS_AS(Corpus::build(Tokens{"a", ""}), kvec::ParameterError);
}

TEST_CASE("frequency of a word with 19 occurrences") {
  Tokens tokens;
  for (int i = 0; i < 19; ++i) {
    tokens.insert(tokens.end(), {"the", "fisheries", "."});
  }
  const Corpus corpus = Corpus::build(tokens);
  CHECK(corpus.frequency(corpus.id("fisheries")) == 19);
}

TEST_CASE("property: corpus index is consistent with the token stream") {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = rng() % 60;
    const std::size_t vocab = 1 + rng() % 8;
    Tokens tokens;
    std::map<std::string, std::size_t> multiset;
    for (std::size_t i = 0; i < n; ++i) {
      tokens.push_back("w" + std::to_string(rng() % vocab));
      ++multiset[tokens.back()];
    }
    const Corpus corpus = Corpus::build(tokens);
    REQUIRE(corpus.token_count() == n);

    std::size_t total = 0;
    for (kvec::WordId w = 0; w < corpus.vocab_size(); ++w) {
      const auto pos = corpus.positions(w);
      total += pos.size();
      CHECK(corpus.frequency(w) == multiset[corpus.surface(w)]);
      CHECK(std::is_sorted(pos.begin(), pos.end()));
      CHECK(std::adjacent_find(pos.begin(), pos.end()) == pos.end());
      for (std::size_t p : pos) {
        REQUIRE(p < n);
        CHECK(tokens[p] == corpus.surface(w));
      }
    }
    CHECK(total == n);
  }
}

TEST_CASE("property: tokens are contiguous substrings, deterministic, fold-safe") {
  const std::string alphabet[] = {"a", "B", "z", "9", " ", "\n", "'", ".", "(", "é",
                                  "Ê", "-", "\t", "Q", "ß"};
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    std::string text;
    const std::size_t len = rng() % 40;
    for (std::size_t i = 0; i < len; ++i) text += alphabet[rng() % std::size(alphabet)];

    const Tokens tokens = kvec::tokenize(text);
    CHECK(tokens == kvec::tokenize(text));
    std::size_t cursor = 0;
    for (const auto& token : tokens) {
      CHECK_FALSE(token.empty());
      const auto at = text.find(token, cursor);
      REQUIRE(at != std::string::npos);
      // Only whitespace may be skipped between tokens.
      for (std::size_t i = cursor; i < at; ++i) {
        CHECK(std::string(" \n\t").find(text[i]) != std::string::npos);
      }
      cursor = at + token.size();
    }

    for (const auto& token : kvec::tokenize(text, {true})) {
      CHECK(token == kvec::fold_case(token));
      CHECK(token.find_first_of("BQ") == std::string::npos);
      CHECK(token.find("Ê") == std::string::npos);
    }
  }
}
