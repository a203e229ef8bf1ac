#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "morphpairs/corpus.hpp"

namespace morphpairs {

/// Scores within this distance of the floor are still included, so a pair
/// landing exactly on the floor is reliably kept.
inline constexpr double kFloorTolerance = 1e-12;

/// Unit-cost minimum edit distance (insert/delete/substitute) over code
/// points.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);

/// UTF-8 convenience overload; decodes both arguments.
std::size_t edit_distance(std::string_view a, std::string_view b);

/// Banded variant: the exact distance if it is <= `bound`, nullopt otherwise.
std::optional<std::size_t> edit_distance_within(std::u32string_view a,
                                                std::u32string_view b,
                                                std::size_t bound);

/// 1 - MED(a,b) / max(|a|,|b|), lengths in code points. Ranges [0,1]; 1 iff
/// the strings are equal. Throws UndefinedScoreError when both are empty.
double ortho_similarity(std::u32string_view a, std::u32string_view b);
double ortho_similarity(std::string_view a, std::string_view b);

/// Unordered candidate pair; word(a) precedes word(b) lexicographically.
struct OrthoPair {
  WordId a;
  WordId b;
  double score;
};

struct OrthoOptions {
  double floor = 0.5;
  bool prune = true;     // length pre-filter + banded DP; result set identical
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// All unordered content-word pairs with similarity >= floor, sorted by
/// descending score then lexicographic (wordA, wordB). Deterministic for any
/// thread count.
std::vector<OrthoPair> generate_ortho_pairs(const CorpusIndex& index,
                                            std::span<const WordId> content,
                                            const OrthoOptions& options);

}  // namespace morphpairs
