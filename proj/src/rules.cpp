#include "morphpairs/rules.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "morphpairs/errors.hpp"
#include "morphpairs/unicode.hpp"

namespace morphpairs {

std::string_view rule_kind_name(RuleKind kind) {
  return kind == RuleKind::prefix ? "prefix" : "suffix";
}

EdgeLens longest_common_edges(std::string_view a, std::string_view b) {
  const std::u32string fa = uni::fold_case(uni::decode(a));
  const std::u32string fb = uni::fold_case(uni::decode(b));
  const std::size_t limit = std::min(fa.size(), fb.size());
  EdgeLens edges;
  while (edges.left < limit && fa[edges.left] == fb[edges.left]) ++edges.left;
  while (edges.right < limit &&
         fa[fa.size() - 1 - edges.right] == fb[fb.size() - 1 - edges.right])
    ++edges.right;
  return edges;
}

std::optional<ParsedRule> parse_pair(std::string_view a, std::string_view b) {
  if (a.empty() || b.empty())
    throw ConfigError("parse_pair requires nonempty words");
  if (a == b) throw ConfigError("parse_pair requires distinct words");
  if (b < a) std::swap(a, b);  // canonical pair order

  const EdgeLens edges = longest_common_edges(a, b);
  if (edges.left == 0 && edges.right == 0) return std::nullopt;

  const std::u32string ua = uni::decode(a);
  const std::u32string ub = uni::decode(b);
  if (edges.left >= edges.right) {  // suffix parse wins ties
    std::string lhs = uni::encode(
        std::u32string_view(ua).substr(edges.left));
    std::string rhs = uni::encode(
        std::u32string_view(ub).substr(edges.left));
    // Words differing only by case fold to equal strings; an empty<->empty
    // rule is meaningless, so such pairs are residuals.
    if (lhs.empty() && rhs.empty()) return std::nullopt;
    return ParsedRule{RuleKind::suffix, std::move(lhs), std::move(rhs)};
  }
  std::string lhs = uni::encode(
      std::u32string_view(ua).substr(0, ua.size() - edges.right));
  std::string rhs = uni::encode(
      std::u32string_view(ub).substr(0, ub.size() - edges.right));
  return ParsedRule{RuleKind::prefix, std::move(lhs), std::move(rhs)};
}

RuleReport extract_rules(std::span<const RankedRow> ranked,
                         std::optional<std::size_t> limit,
                         RuleRanking ranking) {
  struct Agg {
    std::uint64_t frequency = 0;
    double cumulative = 0.0;
    std::size_t first = 0;
  };
  // Ordered map keyed by (kind, lhs, rhs) doubles as the tie-break order.
  std::map<std::tuple<std::string_view, std::string, std::string>, Agg> byRule;

  RuleReport report;
  const std::size_t n =
      limit ? std::min(*limit, ranked.size()) : ranked.size();
  for (std::size_t i = 0; i < n; ++i) {
    const RankedRow& row = ranked[i];
    const std::optional<ParsedRule> parsed = parse_pair(row.a, row.b);
    if (!parsed) {
      report.residuals.emplace_back(row.a, row.b);
      continue;
    }
    auto [it, inserted] = byRule.try_emplace(
        {rule_kind_name(parsed->kind), parsed->lhs, parsed->rhs}, Agg{});
    if (inserted) it->second.first = i;
    ++it->second.frequency;
    it->second.cumulative += row.combined;
  }

  report.rules.reserve(byRule.size());
  for (const auto& [key, agg] : byRule) {
    const RankedRow& example = ranked[agg.first];
    report.rules.push_back(
        {std::get<0>(key) == "prefix" ? RuleKind::prefix : RuleKind::suffix,
         std::get<1>(key), std::get<2>(key), agg.frequency, agg.cumulative,
         example.a, example.b});
  }
  // Map order already breaks ties by (kind, lhs, rhs); a stable sort on the
  // ranking key alone keeps that.
  std::stable_sort(report.rules.begin(), report.rules.end(),
                   [ranking](const CorrespondenceRule& x,
                             const CorrespondenceRule& y) {
                     if (ranking == RuleRanking::frequency)
                       return x.frequency > y.frequency;
                     return x.cumulative > y.cumulative;
                   });
  return report;
}

}  // namespace morphpairs
