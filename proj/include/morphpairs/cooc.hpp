#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "morphpairs/corpus.hpp"
#include "morphpairs/errors.hpp"

namespace morphpairs {

// Canonical key for an unordered word pair.
using PairKey = std::uint64_t;

inline PairKey pair_key(WordId a, WordId b) {
  if (b < a) std::swap(a, b);
  return (static_cast<PairKey>(a) << 32) | b;
}

class PairSet {
 public:
  void insert(WordId a, WordId b) { keys_.insert(pair_key(a, b)); }
  bool contains(WordId a, WordId b) const {
    return keys_.count(pair_key(a, b)) != 0;
  }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }

 private:
  std::unordered_set<PairKey> keys_;
};

struct CoocOptions {
  std::uint32_t min_dist = 3;   // exclusive: distance must exceed this
  std::uint32_t max_dist = 500; // inclusive
  unsigned threads = 0;         // 0 = hardware concurrency
};

struct CoocTable {
  std::unordered_map<PairKey, std::uint64_t> counts;
  std::uint32_t min_dist = 3;
  std::uint32_t max_dist = 500;
  std::uint64_t total_tokens = 0;

  std::uint64_t count(WordId a, WordId b) const {
    auto it = counts.find(pair_key(a, b));
    return it == counts.end() ? 0 : it->second;
  }
};

// Counts in-band co-occurrences of distinct content words. Distances are
// token-stream positions within one article; the band is
// min_dist < |i - j| <= max_dist. With `tracked` non-null only those pairs
// are tabulated, otherwise every content-word pair is.
CoocTable count_cooccurrences(const CorpusIndex& index,
                              std::span<const WordId> content_words,
                              const PairSet* tracked,
                              const CoocOptions& options);

// I(A,B) = log2(c(A,B) * N / (c(A) * c(B))).
double mutual_information(const CoocTable& table, const Vocabulary& vocab,
                          WordId a, WordId b);

struct SemPair {
  WordId a;
  WordId b;
  std::uint64_t cooc;
  double mi;
};

// Pairs with c(A,B) >= min_cooc, sorted by descending MI then pair words.
std::vector<SemPair> generate_sem_pairs(const CorpusIndex& index,
                                        const CoocTable& table,
                                        std::uint64_t min_cooc);

}  // namespace morphpairs
