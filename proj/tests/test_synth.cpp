#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "morphpairs/corpus.hpp"
#include "morphpairs/errors.hpp"
#include "morphpairs/ortho.hpp"
#include "morphpairs/synth.hpp"

using namespace morphpairs;

TEST_CASE("generation is deterministic for a fixed seed") {
  SynthSpec spec;
  spec.lemmas = 40;
  spec.decoy_pairs = 10;
  const SynthResult a = generate_synthetic_corpus(spec);
  const SynthResult b = generate_synthetic_corpus(spec);
  CHECK(a.text == b.text);
  CHECK(a.gold == b.gold);

  SynthSpec other = spec;
  other.seed = 2;
  const SynthResult c = generate_synthetic_corpus(other);
  CHECK(a.text != c.text);
}

TEST_CASE("suffix-only gold pairs differ by a trailing s") {
  SynthSpec spec;
  spec.lemmas = 25;
  spec.decoy_pairs = 5;
  spec.rules = {SynthRule::suffix_s};
  const SynthResult result = generate_synthetic_corpus(spec);
  REQUIRE(result.gold.size() == 25);
  for (const auto& [a, b] : result.gold) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(b == a + "s");
  }
}

TEST_CASE("gold pairs pass the similarity floor") {
  SynthSpec spec;
  spec.lemmas = 60;
  const SynthResult result = generate_synthetic_corpus(spec);
  REQUIRE(result.gold.size() == 60);
  for (const auto& [a, b] : result.gold) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(ortho_similarity(a, b) >= 0.5);
  }
}

TEST_CASE("the gold list is canonical, sorted, and self-free") {
  SynthSpec spec;
  spec.lemmas = 50;
  const SynthResult result = generate_synthetic_corpus(spec);
  REQUIRE(!result.gold.empty());
  for (const auto& [a, b] : result.gold) CHECK(a < b);
  CHECK(std::is_sorted(result.gold.begin(), result.gold.end()));
  const std::set<std::pair<std::string, std::string>> unique(
      result.gold.begin(), result.gold.end());
  CHECK(unique.size() == result.gold.size());
}

TEST_CASE("both planted forms appear in the same article") {
  SynthSpec spec;
  spec.lemmas = 30;
  spec.decoy_pairs = 8;
  const SynthResult result = generate_synthetic_corpus(spec);
  // Blank lines delimit articles, the ingestion default.
  const TokenizedCorpus corpus = tokenize(result.text, ArticleDelimiter::line(""));
  std::vector<std::set<std::string>> articles;
  for (const Article& article : corpus.articles) {
    std::set<std::string> words;
    for (WordId id : article.tokens) words.insert(corpus.words.word(id));
    articles.push_back(std::move(words));
  }
  REQUIRE(articles.size() == 30);
  for (const auto& [a, b] : result.gold) {
    const bool together = std::any_of(
        articles.begin(), articles.end(), [&](const std::set<std::string>& s) {
          return s.count(a) != 0 && s.count(b) != 0;
        });
    CHECK(together);
  }
}

TEST_CASE("invalid specifications are rejected") {
  SynthSpec tiny;
  tiny.lemmas = 10;
  tiny.article_tokens = 5;  // cannot fit the planted occurrences
  CHECK_THROWS_AS(generate_synthetic_corpus(tiny), ConfigError);

  SynthSpec no_rules;
  no_rules.lemmas = 10;
  no_rules.rules.clear();
  CHECK_THROWS_AS(generate_synthetic_corpus(no_rules), ConfigError);

  SynthSpec bad_band;
  bad_band.lemmas = 10;
  bad_band.min_dist = 9;
  bad_band.max_dist = 9;
  CHECK_THROWS_AS(generate_synthetic_corpus(bad_band), ConfigError);

  SynthSpec no_forms;
  no_forms.lemmas = 10;
  no_forms.form_occurrences = 0;
  CHECK_THROWS_AS(generate_synthetic_corpus(no_forms), ConfigError);
}

TEST_CASE("zero lemmas produce an empty corpus") {
  SynthSpec spec;
  spec.lemmas = 0;
  const SynthResult result = generate_synthetic_corpus(spec);
  CHECK(result.text.empty());
  CHECK(result.gold.empty());
}
