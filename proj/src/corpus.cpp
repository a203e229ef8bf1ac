#include "morphpairs/corpus.hpp"

#include <fstream>
#include <sstream>

#include "morphpairs/unicode.hpp"

namespace morphpairs {

WordId WordTable::intern(std::string_view word) {
  auto it = index_.find(word);
  if (it != index_.end()) return it->second;
  WordId id = static_cast<WordId>(words_.size());
  auto [pos, inserted] = index_.emplace(std::string(word), id);
  words_.push_back(&pos->first);
  return id;
}

std::optional<WordId> WordTable::find(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Tokenizes one line (no newline inside) into the current article.
// `line_offset` is the line's byte offset in the whole input, used to report
// decode errors against the full stream.
void tokenize_line(std::string_view line, std::size_t line_offset,
                   WordTable& words, Article& article) {
  std::size_t pos = 0;
  std::size_t token_start = 0;
  bool in_token = false;
  while (pos < line.size()) {
    const std::size_t cp_start = pos;
    char32_t cp;
    try {
      cp = uni::decode_next(line, pos);
    } catch (const DecodeError& e) {
      throw DecodeError("invalid UTF-8 at byte offset " +
                            std::to_string(line_offset + e.byte_offset),
                        line_offset + e.byte_offset);
    }
    if (uni::is_letter(cp)) {
      if (!in_token) {
        token_start = cp_start;
        in_token = true;
      }
    } else if (in_token) {
      article.tokens.push_back(
          words.intern(line.substr(token_start, cp_start - token_start)));
      in_token = false;
    }
  }
  if (in_token)
    article.tokens.push_back(words.intern(line.substr(token_start)));
}

}  // namespace

void tokenize_into(TokenizedCorpus& corpus, std::string_view text,
                   const ArticleDelimiter& delim) {
  Article current;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      corpus.articles.push_back(std::move(current));
      current = Article{};
    }
  };

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(line_start)
                                : text.substr(line_start, nl - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (delim.marker && line == *delim.marker) {
      flush();
    } else {
      tokenize_line(line, line_start, corpus.words, current);
    }

    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  flush();
}

TokenizedCorpus tokenize(std::string_view text, const ArticleDelimiter& delim) {
  TokenizedCorpus corpus;
  tokenize_into(corpus, text, delim);
  return corpus;
}

Vocabulary build_vocabulary(const TokenizedCorpus& corpus) {
  Vocabulary vocab;
  vocab.freq.assign(corpus.words.size(), 0);
  for (const Article& article : corpus.articles) {
    for (WordId id : article.tokens) ++vocab.freq[id];
    vocab.total_tokens += article.tokens.size();
  }
  return vocab;
}

CorpusIndex ingest(std::string_view text, const ArticleDelimiter& delim) {
  CorpusIndex index;
  index.corpus = tokenize(text, delim);
  index.vocab = build_vocabulary(index.corpus);
  return index;
}

std::vector<WordId> extract_content_words(const CorpusIndex& index,
                                          const ContentFilter& filter) {
  if (!(filter.max_freq_ratio > 0.0 && filter.max_freq_ratio <= 1.0))
    throw ConfigError("max_freq_ratio must be in (0, 1]");

  std::vector<WordId> out;
  const auto n = static_cast<double>(index.vocab.total_tokens);
  for (WordId id = 0; id < index.corpus.words.size(); ++id) {
    if (index.vocab.freq[id] == 0) continue;
    const std::string& w = index.corpus.words.word(id);
    // Strict inequality: frequency below the threshold ratio.
    if (!(static_cast<double>(index.vocab.freq[id]) / n <
          filter.max_freq_ratio))
      continue;
    if (filter.max_len && uni::length(w) > *filter.max_len) continue;
    if (filter.lexicon && !filter.lexicon->count(w)) continue;
    out.push_back(id);
  }
  return out;
}

std::unordered_set<std::string> load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon file: " + path);
  std::unordered_set<std::string> lexicon;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lexicon.insert(line);
  }
  return lexicon;
}

}  // namespace morphpairs
