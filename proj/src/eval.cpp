#include "morphpairs/eval.hpp"

#include <algorithm>

#include "morphpairs/errors.hpp"
#include "morphpairs/io.hpp"

namespace morphpairs {

namespace {

std::string canonical_key(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  std::string key(a);
  key += '\t';
  key += b;
  return key;
}

}  // namespace

ReferenceSet ReferenceSet::from_pairs(
    std::span<const std::pair<std::string, std::string>> pairs) {
  ReferenceSet ref;
  ref.mode_ = Mode::pairs;
  for (const auto& [a, b] : pairs) ref.pairs_.insert(canonical_key(a, b));
  return ref;
}

ReferenceSet ReferenceSet::pairs_from_file(const std::string& path) {
  ReferenceSet ref;
  ref.mode_ = Mode::pairs;
  const std::string text = io::read_file(path);
  io::for_each_line(text, [&ref](std::string_view line, std::size_t line_no) {
    if (line.empty()) return;
    const auto fields = io::split_tabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      throw ParseError("expected two tab-separated words", line_no);
    ref.pairs_.insert(canonical_key(fields[0], fields[1]));
  });
  return ref;
}

ReferenceSet ReferenceSet::stems_from_file(const std::string& path) {
  ReferenceSet ref;
  ref.mode_ = Mode::stems;
  const std::string text = io::read_file(path);
  io::for_each_line(text, [&ref](std::string_view line, std::size_t line_no) {
    if (line.empty()) return;
    const auto fields = io::split_tabs(line);
    if (fields.size() < 2)
      throw ParseError("expected a word and at least one stem", line_no);
    for (std::string_view field : fields)
      if (field.empty()) throw ParseError("empty field", line_no);
    auto& stems = ref.stems_[std::string(fields[0])];
    for (std::size_t i = 1; i < fields.size(); ++i)
      stems.emplace_back(fields[i]);
  });
  return ref;
}

bool ReferenceSet::related(std::string_view a, std::string_view b) const {
  if (mode_ == Mode::pairs) return pairs_.count(canonical_key(a, b)) != 0;
  const auto ia = stems_.find(std::string(a));
  if (ia == stems_.end()) return false;
  const auto ib = stems_.find(std::string(b));
  if (ib == stems_.end()) return false;
  for (const std::string& stem : ia->second)
    if (std::find(ib->second.begin(), ib->second.end(), stem) !=
        ib->second.end())
      return true;
  return false;
}

std::size_t ReferenceSet::size() const {
  return mode_ == Mode::pairs ? pairs_.size() : stems_.size();
}

PrecisionReport precision_at_cutoffs(std::span<const RankedRow> ranked,
                                     const ReferenceSet& ref,
                                     std::span<const std::uint64_t> cutoffs) {
  for (std::uint64_t cutoff : cutoffs)
    if (cutoff == 0) throw ConfigError("cutoffs must be positive");

  PrecisionReport report;
  report.total_pairs = ranked.size();
  if (ranked.empty()) return report;

  std::vector<std::uint64_t> grid(cutoffs.begin(), cutoffs.end());
  for (std::uint64_t& cutoff : grid)
    cutoff = std::min<std::uint64_t>(cutoff, ranked.size());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::size_t next = 0;
  std::uint64_t hits = 0;
  for (std::uint64_t k = 1; k <= ranked.size() && next < grid.size(); ++k) {
    const RankedRow& row = ranked[k - 1];
    if (ref.related(row.a, row.b)) ++hits;
    while (next < grid.size() && grid[next] == k) {
      report.rows.emplace_back(k, static_cast<double>(hits) /
                                      static_cast<double>(k));
      ++next;
    }
  }
  return report;
}

}  // namespace morphpairs
