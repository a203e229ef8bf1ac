#include "morphpairs/cooc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <thread>

namespace morphpairs {

namespace {

unsigned resolve_threads(unsigned requested) {
  unsigned n = requested ? requested : std::thread::hardware_concurrency();
  return n ? n : 1;
}

struct Occurrence {
  std::size_t pos;
  WordId word;
};

void count_article(const Article& article, const std::vector<char>& is_content,
                   const PairSet* tracked, const CoocOptions& options,
                   std::unordered_map<PairKey, std::uint64_t>& counts) {
  // Window entries are content tokens only; positions run over all tokens.
  std::deque<Occurrence> window;
  for (std::size_t pos = 0; pos < article.tokens.size(); ++pos) {
    const WordId word = article.tokens[pos];
    if (!is_content[word]) continue;
    while (!window.empty() && window.front().pos + options.max_dist < pos)
      window.pop_front();
    // Eligible partners (distance > min_dist) form a prefix of the window.
    for (const Occurrence& occ : window) {
      if (occ.pos + options.min_dist >= pos) break;
      if (occ.word == word) continue;
      if (tracked && !tracked->contains(occ.word, word)) continue;
      ++counts[pair_key(occ.word, word)];
    }
    window.push_back({pos, word});
  }
}

}  // namespace

CoocTable count_cooccurrences(const CorpusIndex& index,
                              std::span<const WordId> content_words,
                              const PairSet* tracked,
                              const CoocOptions& options) {
  if (options.min_dist >= options.max_dist)
    throw ConfigError("co-occurrence band requires min_dist < max_dist");

  CoocTable table;
  table.min_dist = options.min_dist;
  table.max_dist = options.max_dist;
  table.total_tokens = index.vocab.total_tokens;

  std::vector<char> is_content(index.corpus.words.size(), 0);
  for (WordId id : content_words) is_content[id] = 1;

  const auto& articles = index.corpus.articles;
  const unsigned threads =
      std::min<std::size_t>(resolve_threads(options.threads),
                            std::max<std::size_t>(articles.size(), 1));
  if (threads <= 1) {
    for (const Article& article : articles)
      count_article(article, is_content, tracked, options, table.counts);
    return table;
  }

  std::vector<std::unordered_map<PairKey, std::uint64_t>> partial(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned slot) {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= articles.size()) break;
      count_article(articles[i], is_content, tracked, options, partial[slot]);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();

  // Merging by addition is associative, so the table is thread-count
  // independent.
  for (auto& part : partial)
    for (const auto& [key, n] : part) table.counts[key] += n;
  return table;
}

double mutual_information(const CoocTable& table, const Vocabulary& vocab,
                          WordId a, WordId b) {
  const std::uint64_t joint = table.count(a, b);
  const std::uint64_t ca = vocab.freq[a];
  const std::uint64_t cb = vocab.freq[b];
  if (joint == 0 || ca == 0 || cb == 0)
    throw UndefinedScoreError(
        "mutual information undefined for zero joint or marginal count");
  const double n = static_cast<double>(table.total_tokens);
  return std::log2(static_cast<double>(joint) * n /
                   (static_cast<double>(ca) * static_cast<double>(cb)));
}

std::vector<SemPair> generate_sem_pairs(const CorpusIndex& index,
                                        const CoocTable& table,
                                        std::uint64_t min_cooc) {
  if (min_cooc < 1) throw ConfigError("min_cooc must be at least 1");
  std::vector<SemPair> pairs;
  for (const auto& [key, n] : table.counts) {
    if (n < min_cooc) continue;
    const WordId a = static_cast<WordId>(key >> 32);
    const WordId b = static_cast<WordId>(key & 0xffffffffu);
    // Canonical order is by word string, not id.
    WordId lo = a, hi = b;
    if (index.word(hi) < index.word(lo)) std::swap(lo, hi);
    pairs.push_back({lo, hi, n, mutual_information(table, index.vocab, a, b)});
  }
  std::sort(pairs.begin(), pairs.end(),
            [&index](const SemPair& x, const SemPair& y) {
              if (x.mi != y.mi) return x.mi > y.mi;
              const std::string& xa = index.word(x.a);
              const std::string& ya = index.word(y.a);
              if (xa != ya) return xa < ya;
              return index.word(x.b) < index.word(y.b);
            });
  return pairs;
}

}  // namespace morphpairs
