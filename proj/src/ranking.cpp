#include "morphpairs/ranking.hpp"

#include <algorithm>

namespace morphpairs {

std::vector<ScoredPair> intersect_pairs(std::span<const OrthoPair> ortho,
                                        std::span<const SemPair> sem) {
  std::unordered_map<PairKey, double> ortho_by_key;
  ortho_by_key.reserve(ortho.size());
  for (const OrthoPair& p : ortho) ortho_by_key.emplace(pair_key(p.a, p.b), p.score);

  std::vector<ScoredPair> out;
  for (const SemPair& s : sem) {
    auto it = ortho_by_key.find(pair_key(s.a, s.b));
    if (it == ortho_by_key.end()) continue;
    out.push_back({s.a, s.b, it->second, s.mi, s.cooc, 0.0});
  }
  return out;
}

Weights calibrate_weights(std::span<const ScoredPair> intersection) {
  if (intersection.empty())
    throw CalibrationError(
        "cannot calibrate weights on an empty intersection; supply manual "
        "weights");
  double max_ortho = intersection.front().ortho;
  double max_mi = intersection.front().mi;
  for (const ScoredPair& p : intersection) {
    max_ortho = std::max(max_ortho, p.ortho);
    max_mi = std::max(max_mi, p.mi);
  }
  if (!(max_mi > 0.0))
    throw CalibrationError(
        "maximum MI score is not positive; supply manual weights");
  return {1.0, max_ortho / max_mi};
}

RankedPairList rank_pairs(const CorpusIndex& index,
                          std::vector<ScoredPair> intersection,
                          const Weights& weights) {
  for (ScoredPair& p : intersection)
    p.combined = weights.ortho * p.ortho + weights.sem * p.mi;
  std::sort(intersection.begin(), intersection.end(),
            [&index](const ScoredPair& x, const ScoredPair& y) {
              if (x.combined != y.combined) return x.combined > y.combined;
              const std::string& xa = index.word(x.a);
              const std::string& ya = index.word(y.a);
              if (xa != ya) return xa < ya;
              return index.word(x.b) < index.word(y.b);
            });
  return {std::move(intersection), weights};
}

std::vector<RankedRow> to_rows(const CorpusIndex& index,
                               const RankedPairList& ranked) {
  std::vector<RankedRow> rows;
  rows.reserve(ranked.pairs.size());
  for (const ScoredPair& p : ranked.pairs)
    rows.push_back({index.word(p.a), index.word(p.b), p.ortho, p.mi, p.combined});
  return rows;
}

}  // namespace morphpairs
