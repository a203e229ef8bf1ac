#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "morphpairs/corpus.hpp"
#include "morphpairs/errors.hpp"
#include "morphpairs/ortho.hpp"
#include "morphpairs/unicode.hpp"
#include "oracles.hpp"

using namespace morphpairs;

namespace {

std::u32string random_word(std::mt19937_64& rng, std::size_t max_len,
                           char32_t alphabet_size) {
  const std::size_t len = rng() % (max_len + 1);
  std::u32string word;
  for (std::size_t i = 0; i < len; ++i)
    word += static_cast<char32_t>(U'a' + rng() % alphabet_size);
  return word;
}

struct PairRow {
  std::string a, b;
  double score;
};

std::vector<PairRow> pair_rows(const CorpusIndex& index,
                               const std::vector<OrthoPair>& pairs) {
  std::vector<PairRow> rows;
  for (const OrthoPair& p : pairs)
    rows.push_back({index.word(p.a), index.word(p.b), p.score});
  return rows;
}

}  // namespace

TEST_CASE("edit distance matches the published examples") {
  CHECK(edit_distance("man", "men") == 1);
  CHECK(edit_distance("dog", "Dog") == 1);
  CHECK(edit_distance("bat", "mat") == 1);
  CHECK(edit_distance("day", "dry") == 1);
  CHECK(edit_distance("dog", "dog") == 0);
  CHECK(edit_distance("kitten", "sitting") == 3);
  CHECK(edit_distance("", "abc") == 3);
  CHECK(edit_distance("", "") == 0);
}

TEST_CASE("edit distance equals the exponential recursive oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::u32string a = random_word(rng, 8, 4);
    const std::u32string b = random_word(rng, 8, 4);
    CAPTURE(uni::encode(a));
    CAPTURE(uni::encode(b));
    CHECK(edit_distance(a, b) == oracles::lev_recursive(a, b));
  }
}

TEST_CASE("edit distance invariants hold on random strings") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const std::u32string a = random_word(rng, 12, 4);
    const std::u32string b = random_word(rng, 12, 4);
    const std::u32string c = random_word(rng, 12, 4);
    const std::size_t ab = edit_distance(a, b);
    CHECK(ab == edit_distance(b, a));
    const std::size_t gap = a.size() > b.size() ? a.size() - b.size()
                                                : b.size() - a.size();
    CHECK(ab >= gap);
    CHECK(edit_distance(a, c) <= ab + edit_distance(b, c));
  }
}

TEST_CASE("bounded edit distance agrees with the full computation") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const std::u32string a = random_word(rng, 10, 3);
    const std::u32string b = random_word(rng, 10, 3);
    const std::size_t bound = rng() % 6;
    const std::size_t exact = oracles::lev_matrix(a, b);
    const auto bounded = edit_distance_within(a, b, bound);
    if (exact <= bound) {
      REQUIRE(bounded.has_value());
      CHECK(*bounded == exact);
    } else {
      CHECK_FALSE(bounded.has_value());
    }
  }
}

TEST_CASE("orthographic similarity matches the published values") {
  CHECK(ortho_similarity("woman", "women") == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(ortho_similarity("park", "parks") == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(ortho_similarity("nucleus", "nuclei") ==
        doctest::Approx(5.0 / 7.0).epsilon(1e-12));
  CHECK(ortho_similarity("friends", "trends") ==
        doctest::Approx(5.0 / 7.0).epsilon(1e-12));
  CHECK(ortho_similarity("bench", "benches") ==
        doctest::Approx(5.0 / 7.0).epsilon(1e-12));
  CHECK(ortho_similarity("abc", "xyz") == doctest::Approx(0.0));
  CHECK(ortho_similarity("same", "same") == doctest::Approx(1.0));
}

TEST_CASE("similarity is undefined for two empty strings") {
  CHECK_THROWS_AS(ortho_similarity("", ""), UndefinedScoreError);
}

TEST_CASE("similarity is symmetric in argument order") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    std::u32string a = random_word(rng, 9, 5);
    std::u32string b = random_word(rng, 9, 5);
    if (a.empty() && b.empty()) continue;
    CHECK(ortho_similarity(a, b) == ortho_similarity(b, a));
  }
}

TEST_CASE("pair generation: published trio") {
  const CorpusIndex index = ingest("park parks blue", ArticleDelimiter::none());
  ContentFilter filter;
  filter.max_freq_ratio = 1.0;
  const std::vector<WordId> content = extract_content_words(index, filter);
  const std::vector<OrthoPair> pairs =
      generate_ortho_pairs(index, content, {});
  REQUIRE(pairs.size() == 1);
  CHECK(index.word(pairs[0].a) == "park");
  CHECK(index.word(pairs[0].b) == "parks");
  CHECK(pairs[0].score == doctest::Approx(0.8));
}

TEST_CASE("a pair at exactly the floor is included") {
  // ab/cb: one substitution over length two lands exactly on 0.5.
  const CorpusIndex index = ingest("ab cb", ArticleDelimiter::none());
  ContentFilter filter;
  filter.max_freq_ratio = 1.0;
  const std::vector<OrthoPair> pairs = generate_ortho_pairs(
      index, extract_content_words(index, filter), {});
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].score == doctest::Approx(0.5));
}

TEST_CASE("invalid floor is rejected") {
  const CorpusIndex index = ingest("a b", ArticleDelimiter::none());
  ContentFilter filter;
  filter.max_freq_ratio = 1.0;
  const std::vector<WordId> content = extract_content_words(index, filter);
  OrthoOptions options;
  options.floor = 0.0;
  CHECK_THROWS_AS(generate_ortho_pairs(index, content, options), ConfigError);
  options.floor = 1.1;
  CHECK_THROWS_AS(generate_ortho_pairs(index, content, options), ConfigError);
}

TEST_CASE("pruned generation equals brute force on a random vocabulary") {
  std::mt19937_64 rng(23);
  std::string text;
  for (int i = 0; i < 300; ++i) {
    text += uni::encode(random_word(rng, 9, 5));
    text += ' ';
  }
  const CorpusIndex index = ingest(text, ArticleDelimiter::none());
  ContentFilter filter;
  filter.max_freq_ratio = 1.0;
  const std::vector<WordId> content = extract_content_words(index, filter);

  for (const double floor : {0.3, 0.5, 0.75, 1.0}) {
    CAPTURE(floor);
    OrthoOptions pruned;
    pruned.floor = floor;
    OrthoOptions brute;
    brute.floor = floor;
    brute.prune = false;
    brute.threads = 1;
    const auto fast = pair_rows(index, generate_ortho_pairs(index, content, pruned));
    const auto slow = pair_rows(index, generate_ortho_pairs(index, content, brute));
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(fast[i].a == slow[i].a);
      CHECK(fast[i].b == slow[i].b);
      CHECK(fast[i].score == doctest::Approx(slow[i].score).epsilon(1e-12));
    }
  }
}

TEST_CASE("pair generation is thread-count independent") {
  std::mt19937_64 rng(29);
  std::string text;
  for (int i = 0; i < 200; ++i) {
    text += uni::encode(random_word(rng, 8, 4));
    text += ' ';
  }
  const CorpusIndex index = ingest(text, ArticleDelimiter::none());
  ContentFilter filter;
  filter.max_freq_ratio = 1.0;
  const std::vector<WordId> content = extract_content_words(index, filter);

  OrthoOptions one;
  one.threads = 1;
  OrthoOptions many;
  many.threads = 7;
  const auto a = pair_rows(index, generate_ortho_pairs(index, content, one));
  const auto b = pair_rows(index, generate_ortho_pairs(index, content, many));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].a == b[i].a);
    CHECK(a[i].b == b[i].b);
    CHECK(a[i].score == b[i].score);
  }
}
