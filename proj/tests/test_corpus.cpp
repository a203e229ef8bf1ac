#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "doctest.h"
#include "morphpairs/corpus.hpp"
#include "morphpairs/errors.hpp"

using namespace morphpairs;

namespace {

std::vector<std::vector<std::string>> article_strings(const TokenizedCorpus& c) {
  std::vector<std::vector<std::string>> out;
  for (const Article& a : c.articles) {
    std::vector<std::string> tokens;
    for (WordId id : a.tokens) tokens.push_back(c.words.word(id));
    out.push_back(std::move(tokens));
  }
  return out;
}

}  // namespace

TEST_CASE("tokenize splits on punctuation and digits") {
  const TokenizedCorpus c = tokenize("rot, rote!", ArticleDelimiter::none());
  CHECK(article_strings(c) == std::vector<std::vector<std::string>>{{"rot", "rote"}});

  const TokenizedCorpus d = tokenize("a1b", ArticleDelimiter::none());
  CHECK(article_strings(d) == std::vector<std::vector<std::string>>{{"a", "b"}});
}

TEST_CASE("umlauted words are single tokens") {
  const TokenizedCorpus c =
      tokenize("die Anschl\xc3\xa4ge waren", ArticleDelimiter::none());
  REQUIRE(c.articles.size() == 1);
  CHECK(c.words.word(c.articles[0].tokens[1]) == "Anschl\xc3\xa4ge");
}

TEST_CASE("tokens are case-sensitive vocabulary entries") {
  const TokenizedCorpus c = tokenize("dog Dog dog", ArticleDelimiter::none());
  CHECK(c.words.size() == 2);
}

TEST_CASE("marker lines split articles; empty articles are dropped") {
  const std::string text = "one two\n<doc>\n<doc>\nthree\n<doc>\n";
  const TokenizedCorpus c = tokenize(text, ArticleDelimiter::line("<doc>"));
  CHECK(article_strings(c) ==
        std::vector<std::vector<std::string>>{{"one", "two"}, {"three"}});
}

TEST_CASE("blank-line delimiter") {
  const TokenizedCorpus c = tokenize("a b\n\nc\n", ArticleDelimiter::line(""));
  CHECK(article_strings(c) ==
        std::vector<std::vector<std::string>>{{"a", "b"}, {"c"}});
}

TEST_CASE("undecodable corpus reports the byte offset") {
  try {
    tokenize("ok \xff", ArticleDelimiter::none());
    FAIL("expected DecodeError");
  } catch (const DecodeError& e) {
    CHECK(e.byte_offset == 3);
  }
}

TEST_CASE("retokenizing space-joined tokens is a fixed point") {
  const std::string text = "It's 1999, and co-operation failed!\nNo?  Yes.";
  const TokenizedCorpus once = tokenize(text, ArticleDelimiter::none());
  std::string joined;
  for (WordId id : once.articles.at(0).tokens) {
    if (!joined.empty()) joined += ' ';
    joined += once.words.word(id);
  }
  const TokenizedCorpus twice = tokenize(joined, ArticleDelimiter::none());
  CHECK(article_strings(once) == article_strings(twice));
}

TEST_CASE("build_vocabulary counts exactly") {
  const TokenizedCorpus c = tokenize("a b a", ArticleDelimiter::none());
  const Vocabulary v = build_vocabulary(c);
  CHECK(v.total_tokens == 3);
  CHECK(v.freq[*c.words.find("a")] == 2);
  CHECK(v.freq[*c.words.find("b")] == 1);
}

TEST_CASE("empty corpus gives an empty vocabulary") {
  const TokenizedCorpus c = tokenize("", ArticleDelimiter::none());
  const Vocabulary v = build_vocabulary(c);
  CHECK(v.total_tokens == 0);
  CHECK(c.words.size() == 0);
}

TEST_CASE("vocabulary counts match a naive recount on a random corpus") {
  std::mt19937_64 rng(7);
  std::string text;
  std::vector<std::string> words = {"alpha", "beta", "gamma", "delta", "eps"};
  std::unordered_map<std::string, std::uint64_t> expected;
  for (int i = 0; i < 5000; ++i) {
    const std::string& w = words[rng() % words.size()];
    ++expected[w];
    text += w;
    text += rng() % 7 == 0 ? '\n' : ' ';
  }
  const CorpusIndex index = ingest(text, ArticleDelimiter::none());
  CHECK(index.vocab.total_tokens == 5000);
  for (const auto& [word, count] : expected) {
    const auto id = index.corpus.words.find(word);
    REQUIRE(id.has_value());
    CHECK(index.vocab.freq[*id] == count);
  }
}

TEST_CASE("content-word frequency threshold is strict") {
  // freq/N == max_freq_ratio exactly: excluded.
  std::string text;
  for (int i = 0; i < 9999; ++i) text += "filler ";
  text += "rare";
  CorpusIndex index = ingest(text, ArticleDelimiter::none());
  REQUIRE(index.vocab.total_tokens == 10000);

  ContentFilter filter;
  filter.max_freq_ratio = 1e-4;  // rare has freq 1 = 10000 * 1e-4
  const std::vector<WordId> content = extract_content_words(index, filter);
  CHECK(content.empty());

  filter.max_freq_ratio = 2e-4;
  const std::vector<WordId> content2 = extract_content_words(index, filter);
  REQUIRE(content2.size() == 1);
  CHECK(index.word(content2[0]) == "rare");
}

TEST_CASE("max length filter measures characters, not bytes") {
  CorpusIndex index = ingest(
      "Wirtschaftsforschungsinstitut kurz sch\xc3\xb6n",
      ArticleDelimiter::none());
  ContentFilter filter;
  filter.max_freq_ratio = 1.0;
  filter.max_len = 9;
  const std::vector<WordId> content = extract_content_words(index, filter);
  std::vector<std::string> words;
  for (WordId id : content) words.push_back(index.word(id));
  std::sort(words.begin(), words.end());
  CHECK(words == std::vector<std::string>{"kurz", "sch\xc3\xb6n"});
}

TEST_CASE("lexicon filter keeps only listed words") {
  CorpusIndex index = ingest("park parks xyzzy", ArticleDelimiter::none());
  ContentFilter filter;
  filter.max_freq_ratio = 1.0;
  filter.lexicon = std::unordered_set<std::string>{"park", "parks"};
  const std::vector<WordId> content = extract_content_words(index, filter);
  std::vector<std::string> words;
  for (WordId id : content) words.push_back(index.word(id));
  std::sort(words.begin(), words.end());
  CHECK(words == std::vector<std::string>{"park", "parks"});
}

TEST_CASE("frequency ratio bounds are validated") {
  CorpusIndex index = ingest("a b", ArticleDelimiter::none());
  ContentFilter filter;
  filter.max_freq_ratio = 0.0;
  CHECK_THROWS_AS(extract_content_words(index, filter), ConfigError);
  filter.max_freq_ratio = 1.5;
  CHECK_THROWS_AS(extract_content_words(index, filter), ConfigError);
}

TEST_CASE("content extraction is invariant under article permutation") {
  const std::string fwd = "a b c\n\nd e a\n\nf g a\n";
  const std::string rev = "f g a\n\nd e a\n\na b c\n";
  CorpusIndex i1 = ingest(fwd, ArticleDelimiter::line(""));
  CorpusIndex i2 = ingest(rev, ArticleDelimiter::line(""));
  ContentFilter filter;
  filter.max_freq_ratio = 0.3;
  std::vector<std::string> w1, w2;
  for (WordId id : extract_content_words(i1, filter)) w1.push_back(i1.word(id));
  for (WordId id : extract_content_words(i2, filter)) w2.push_back(i2.word(id));
  std::sort(w1.begin(), w1.end());
  std::sort(w2.begin(), w2.end());
  CHECK(w1 == w2);
}

TEST_CASE("missing lexicon file raises an I/O error") {
  CHECK_THROWS_AS(load_lexicon("/nonexistent/lexicon.txt"), IoError);
}
