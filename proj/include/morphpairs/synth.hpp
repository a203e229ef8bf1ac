#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace morphpairs {

enum class SynthRule { suffix_s, suffix_en, umlaut_e, prefix_un };

struct SynthSpec {
  std::uint32_t lemmas = 500;
  std::uint32_t article_tokens = 400;
  // Base occurrences per planted form; actual count cycles base-1..base+1.
  std::uint32_t form_occurrences = 6;
  // Orthographically close pairs split across articles so they never
  // co-occur: ortho-only distractors.
  std::uint32_t decoy_pairs = 150;
  std::uint32_t distractors_per_article = 4;
  std::uint32_t min_dist = 3;
  std::uint32_t max_dist = 500;
  std::uint64_t seed = 1;
  std::vector<SynthRule> rules = {SynthRule::suffix_s, SynthRule::suffix_en,
                                  SynthRule::umlaut_e, SynthRule::prefix_un};
};

struct SynthResult {
  std::string text;  // blank-line-delimited articles, one per lemma
  std::vector<std::pair<std::string, std::string>> gold;  // canonical, sorted
};

// Deterministic corpus with planted morphological pairs. Both forms of a
// lemma live in one article, spaced beyond min_dist, so every gold pair
// passes the 0.5 ortho floor and co-occurs well inside the band; decoys and
// one-off distractors exercise the orthographic and semantic filters.
SynthResult generate_synthetic_corpus(const SynthSpec& spec);

}  // namespace morphpairs
