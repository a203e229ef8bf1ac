#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "morphpairs/errors.hpp"

namespace morphpairs {

using WordId = std::uint32_t;

/// One article: token identifiers in text order. Positions are implicit by
/// index and never span articles.
struct Article {
  std::vector<WordId> tokens;
};

/// Interning table mapping case-sensitive word strings to dense identifiers.
class WordTable {
 public:
  WordId intern(std::string_view word);
  std::optional<WordId> find(std::string_view word) const;
  const std::string& word(WordId id) const { return *words_[id]; }
  std::size_t size() const { return words_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, WordId, Hash, std::equal_to<>> index_;
  std::vector<const std::string*> words_;  // points at index_ keys
};

struct TokenizedCorpus {
  std::vector<Article> articles;
  WordTable words;
};

/// Article boundary spec: a literal marker line, or none (whole input is one
/// article).
struct ArticleDelimiter {
  std::optional<std::string> marker;

  static ArticleDelimiter none() { return {}; }
  static ArticleDelimiter line(std::string m) { return {std::move(m)}; }
};

/// Splits text into articles of case-sensitive alphabetic tokens. Tokens are
/// maximal runs of Unicode letters; every other character separates. Articles
/// with no tokens are dropped. Throws DecodeError on malformed UTF-8.
TokenizedCorpus tokenize(std::string_view text, const ArticleDelimiter& delim);

/// Appends articles tokenized from `text` to an existing corpus, sharing its
/// word table. An article boundary is implied at the call boundary.
void tokenize_into(TokenizedCorpus& corpus, std::string_view text,
                   const ArticleDelimiter& delim);

struct Vocabulary {
  std::vector<std::uint64_t> freq;  // indexed by WordId
  std::uint64_t total_tokens = 0;
};

Vocabulary build_vocabulary(const TokenizedCorpus& corpus);

struct CorpusIndex {
  TokenizedCorpus corpus;
  Vocabulary vocab;

  const std::string& word(WordId id) const { return corpus.words.word(id); }
};

CorpusIndex ingest(std::string_view text, const ArticleDelimiter& delim);

/// Filters applied when selecting candidate content words.
struct ContentFilter {
  double max_freq_ratio = 1e-4;  // keep words with freq/N strictly below this
  std::optional<std::uint32_t> max_len;  // in code points
  std::optional<std::unordered_set<std::string>> lexicon;
};

/// Vocabulary identifiers passing every configured filter, ascending by id.
std::vector<WordId> extract_content_words(const CorpusIndex& index,
                                          const ContentFilter& filter);

/// Loads a lexicon file: one word per line, blank lines ignored.
std::unordered_set<std::string> load_lexicon(const std::string& path);

}  // namespace morphpairs
