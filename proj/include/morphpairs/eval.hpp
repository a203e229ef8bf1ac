#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "morphpairs/ranking.hpp"

namespace morphpairs {

// Gold membership oracle: either explicit unordered pairs, or a stem lexicon
// where two words are related iff their stem sets intersect.
class ReferenceSet {
 public:
  static ReferenceSet from_pairs(
      std::span<const std::pair<std::string, std::string>> pairs);
  // TSV `wordA<TAB>wordB`, one pair per line.
  static ReferenceSet pairs_from_file(const std::string& path);
  // TSV `word<TAB>stem[<TAB>stem...]`, one word per line.
  static ReferenceSet stems_from_file(const std::string& path);

  bool related(std::string_view a, std::string_view b) const;
  std::size_t size() const;

 private:
  enum class Mode { pairs, stems };
  Mode mode_ = Mode::pairs;
  std::unordered_set<std::string> pairs_;  // canonical "a\tb"
  std::unordered_map<std::string, std::vector<std::string>> stems_;
};

struct PrecisionReport {
  std::vector<std::pair<std::uint64_t, double>> rows;  // (cutoff, precision)
  std::uint64_t total_pairs = 0;
};

inline constexpr std::uint64_t kDefaultCutoffs[] = {500,  1000, 1500, 2000,
                                                    3000, 4000, 5000};

// precision(k) = |top-k in reference| / k, cutoffs clamped to the list
// length, deduplicated, ascending. Empty ranked list yields no rows.
PrecisionReport precision_at_cutoffs(std::span<const RankedRow> ranked,
                                     const ReferenceSet& ref,
                                     std::span<const std::uint64_t> cutoffs);

}  // namespace morphpairs
