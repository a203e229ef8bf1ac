#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morphpairs/ranking.hpp"

namespace morphpairs {

enum class RuleKind { prefix, suffix };

std::string_view rule_kind_name(RuleKind kind);

struct EdgeLens {
  std::size_t left = 0;   // longest common case-insensitive prefix, code points
  std::size_t right = 0;  // longest common case-insensitive suffix, code points
};

EdgeLens longest_common_edges(std::string_view a, std::string_view b);

struct ParsedRule {
  RuleKind kind;
  std::string lhs;  // diverging substring of the lexicographically first word
  std::string rhs;  // of the second; never both empty
};

// Longest-stem parse: suffix stem = left edge, prefix stem = right edge,
// tie goes to suffix. Words are taken in lexicographic order so both
// argument orders produce the identical rule. Returns nullopt (residual)
// when both edges are empty, or when the words differ only by case.
std::optional<ParsedRule> parse_pair(std::string_view a, std::string_view b);

struct CorrespondenceRule {
  RuleKind kind;
  std::string lhs;
  std::string rhs;
  std::uint64_t frequency = 0;
  double cumulative = 0.0;  // summed combined scores of contributing pairs
  std::string example_a;    // highest-ranked contributing pair
  std::string example_b;
};

enum class RuleRanking { frequency, cumulative };

struct RuleReport {
  std::vector<CorrespondenceRule> rules;
  std::vector<std::pair<std::string, std::string>> residuals;  // rank order
};

// Aggregates rules over the first `limit` rows (all when absent). Sum of
// rule frequencies plus residual count equals the number of rows consumed.
RuleReport extract_rules(std::span<const RankedRow> ranked,
                         std::optional<std::size_t> limit = std::nullopt,
                         RuleRanking ranking = RuleRanking::frequency);

}  // namespace morphpairs
