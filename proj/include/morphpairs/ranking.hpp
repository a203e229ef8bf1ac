#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "morphpairs/cooc.hpp"
#include "morphpairs/corpus.hpp"
#include "morphpairs/errors.hpp"
#include "morphpairs/ortho.hpp"

namespace morphpairs {

struct ScoredPair {
  WordId a;
  WordId b;
  double ortho;
  double mi;
  std::uint64_t cooc;
  double combined = 0.0;
};

struct Weights {
  double ortho = 1.0;
  double sem = 1.0;
};

// Pairs present in both lists, carrying both scores. Input lists use
// canonical unordered pair keys; output follows the semantic list's order.
std::vector<ScoredPair> intersect_pairs(std::span<const OrthoPair> ortho,
                                        std::span<const SemPair> sem);

// wOrtho = 1, wSem = max(ortho)/max(mi): the two weighted maxima coincide.
// Throws CalibrationError when the intersection is empty or max MI <= 0;
// manual weights are the escape hatch.
Weights calibrate_weights(std::span<const ScoredPair> intersection);

struct RankedPairList {
  std::vector<ScoredPair> pairs;  // non-increasing combined; ties lexicographic
  Weights weights;
};

RankedPairList rank_pairs(const CorpusIndex& index,
                          std::vector<ScoredPair> intersection,
                          const Weights& weights);

// String-level row of the ranked list, the shape downstream stages and the
// ranked TSV work with.
struct RankedRow {
  std::string a;
  std::string b;
  double ortho = 0.0;
  double mi = 0.0;
  double combined = 0.0;
};

std::vector<RankedRow> to_rows(const CorpusIndex& index,
                               const RankedPairList& ranked);

}  // namespace morphpairs
