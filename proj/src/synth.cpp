#include "morphpairs/synth.hpp"

#include <algorithm>
#include <random>
#include <string_view>
#include <unordered_set>

#include "morphpairs/errors.hpp"

namespace morphpairs {

namespace {

// mt19937_64 output is pinned by the standard; std::uniform_int_distribution
// is not, so draw by modulo (the bias is irrelevant here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(engine_() % bound);
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::string_view kLemmaConsonants = "bcdfglmnprst";
constexpr std::string_view kLemmaVowels = "aeiou";
constexpr std::string_view kNonUmlautVowels = "eiou";
// Disjoint from the lemma alphabet, so a distractor never resembles a
// planted form.
constexpr std::string_view kDistractorLetters = "hjkqvwxz";

const char* const kFillers[] = {"the", "of",  "and", "to", "in",  "it",
                                "is",  "was", "for", "on", "as",  "with"};
constexpr std::uint32_t kFillerCount = 12;

std::string make_stem(Rng& rng, bool need_a) {
  const std::uint32_t syllables = 3 + rng.below(2);
  const std::uint32_t a_at = need_a ? rng.below(syllables) : syllables;
  std::string stem;
  for (std::uint32_t s = 0; s < syllables; ++s) {
    stem += kLemmaConsonants[rng.below(kLemmaConsonants.size())];
    if (s == a_at)
      stem += 'a';
    else if (need_a)
      stem += kNonUmlautVowels[rng.below(kNonUmlautVowels.size())];
    else
      stem += kLemmaVowels[rng.below(kLemmaVowels.size())];
  }
  return stem;
}

std::string inflect(const std::string& stem, SynthRule rule) {
  switch (rule) {
    case SynthRule::suffix_s:
      return stem + "s";
    case SynthRule::suffix_en:
      return stem + "en";
    case SynthRule::umlaut_e: {
      std::string form = stem;
      const std::size_t a = form.rfind('a');
      form.replace(a, 1, "\xc3\xa4");  // a -> ä
      return form + "e";
    }
    case SynthRule::prefix_un:
      return "un" + stem;
  }
  throw ConfigError("unknown synthesis rule");
}

std::string make_distractor(Rng& rng, std::uint32_t len) {
  std::string word;
  for (std::uint32_t i = 0; i < len; ++i)
    word += kDistractorLetters[rng.below(kDistractorLetters.size())];
  return word;
}

}  // namespace

SynthResult generate_synthetic_corpus(const SynthSpec& spec) {
  if (spec.min_dist >= spec.max_dist)
    throw ConfigError("synthesis requires min_dist < max_dist");
  if (spec.lemmas == 0) return {};
  if (spec.rules.empty())
    throw ConfigError("synthesis requires at least one inflection rule");
  if (spec.form_occurrences == 0)
    throw ConfigError("form_occurrences must be at least 1");
  // Worst-case planted span: start <= 4, up to 2*(base+1) tokens stepped by
  // at most min_dist + 5.
  const std::uint64_t span = 4 +
      (2ull * (spec.form_occurrences + 1) - 1) * (spec.min_dist + 5) + 1;
  const std::uint64_t extras_per_article =
      (2ull * spec.decoy_pairs + spec.lemmas - 1) / spec.lemmas;
  if (spec.article_tokens <
      span + spec.distractors_per_article + extras_per_article)
    throw ConfigError(
        "article_tokens too small to plant the band-separated occurrences");

  Rng rng(spec.seed);
  std::unordered_set<std::string> used;
  std::vector<std::pair<std::string, std::string>> lemma_forms;
  lemma_forms.reserve(spec.lemmas);

  // Planted words may resemble each other across lemmas; each lives in a
  // single article, so a cross-lemma pair never co-occurs and cannot reach
  // the intersection. Only exact duplicates must be avoided.
  for (std::uint32_t i = 0; i < spec.lemmas; ++i) {
    const SynthRule rule = spec.rules[i % spec.rules.size()];
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 1000)
        throw ConfigError("cannot generate enough distinct lemmas");
      std::string stem = make_stem(rng, rule == SynthRule::umlaut_e);
      std::string form = inflect(stem, rule);
      if (used.count(stem) || used.count(form)) continue;
      used.insert(stem);
      used.insert(form);
      lemma_forms.emplace_back(std::move(stem), std::move(form));
      break;
    }
  }

  // Decoy pairs pass the ortho floor by construction; the two members go to
  // different articles, so their in-band co-occurrence count stays 0.
  std::vector<std::vector<std::string>> extras(spec.lemmas);
  for (std::uint32_t d = 0; d < spec.decoy_pairs; ++d) {
    std::string a, b;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 1000)
        throw ConfigError("cannot generate enough distinct decoys");
      a = make_distractor(rng, 5 + rng.below(4));
      b = a;
      if (rng.below(2) == 0) {
        const std::uint32_t at = rng.below(static_cast<std::uint32_t>(b.size()));
        char repl = b[at];
        while (repl == b[at])
          repl = kDistractorLetters[rng.below(kDistractorLetters.size())];
        b[at] = repl;
      } else {
        b += kDistractorLetters[rng.below(kDistractorLetters.size())];
      }
      if (!used.count(a) && !used.count(b)) break;
    }
    used.insert(a);
    used.insert(b);
    extras[(2 * d) % spec.lemmas].push_back(std::move(a));
    extras[(2 * d + 1) % spec.lemmas].push_back(std::move(b));
  }

  std::string text;
  for (std::uint32_t i = 0; i < spec.lemmas; ++i) {
    std::vector<std::string> tokens(spec.article_tokens);
    std::vector<char> taken(spec.article_tokens, 0);

    const std::uint32_t occurrences =
        std::max<std::uint32_t>(1, spec.form_occurrences + (i % 3) - 1);
    std::uint32_t pos = 2 + rng.below(3);
    for (std::uint32_t k = 0; k < 2 * occurrences; ++k) {
      tokens[pos] = k % 2 == 0 ? lemma_forms[i].first : lemma_forms[i].second;
      taken[pos] = 1;
      pos += spec.min_dist + 2 + rng.below(4);
    }

    std::vector<std::uint32_t> free_slots;
    for (std::uint32_t p = 0; p < spec.article_tokens; ++p)
      if (!taken[p]) free_slots.push_back(p);

    auto place = [&](std::string word) {
      const std::uint32_t at =
          rng.below(static_cast<std::uint32_t>(free_slots.size()));
      tokens[free_slots[at]] = std::move(word);
      free_slots.erase(free_slots.begin() + at);
    };
    for (std::string& decoy : extras[i]) place(std::move(decoy));
    for (std::uint32_t d = 0; d < spec.distractors_per_article; ++d) {
      std::string w;
      do {
        w = make_distractor(rng, 4 + rng.below(6));
      } while (used.count(w));
      used.insert(w);
      place(std::move(w));
    }
    for (std::uint32_t slot : free_slots) tokens[slot] = kFillers[rng.below(kFillerCount)];

    if (i > 0) text += '\n';
    for (std::uint32_t p = 0; p < spec.article_tokens; ++p) {
      text += tokens[p];
      text += (p + 1) % 13 == 0 || p + 1 == spec.article_tokens ? '\n' : ' ';
    }
  }

  SynthResult result;
  result.text = std::move(text);
  result.gold.reserve(lemma_forms.size());
  for (auto& [a, b] : lemma_forms) {
    if (b < a) std::swap(a, b);
    result.gold.emplace_back(std::move(a), std::move(b));
  }
  std::sort(result.gold.begin(), result.gold.end());
  return result;
}

}  // namespace morphpairs
