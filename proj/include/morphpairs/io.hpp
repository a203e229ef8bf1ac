#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphpairs/corpus.hpp"
#include "morphpairs/cooc.hpp"
#include "morphpairs/eval.hpp"
#include "morphpairs/ortho.hpp"
#include "morphpairs/ranking.hpp"
#include "morphpairs/rules.hpp"

namespace morphpairs::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

std::uint64_t fnv1a64(std::string_view bytes);

// Fixed 9-digit float form used by every TSV artifact.
std::string fixed9(double value);
// Shortest round-trippable form, used by config files.
std::string g17(double value);

std::vector<std::string_view> split_tabs(std::string_view line);

// Calls fn(line, 1-based line number) per line, tolerating \r\n and a
// missing final newline.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (!(line.empty() && end == text.size())) fn(line, line_no);
    start = end + 1;
  }
}

// Empty rule patterns are serialized as this literal (U+03B5).
inline constexpr std::string_view kEpsilon = "\xce\xb5";

std::string render_vocab(const CorpusIndex& index);
std::string render_ortho_pairs(const CorpusIndex& index,
                               std::span<const OrthoPair> pairs);
std::string render_sem_pairs(const CorpusIndex& index,
                             std::span<const SemPair> pairs);

// Ranked list with a `# wOrtho=... wSem=...` comment header; `weights` may
// be null for the empty, uncalibrated case.
std::string render_ranked(std::span<const RankedRow> rows,
                          const Weights* weights);
struct RankedFile {
  std::vector<RankedRow> rows;
  bool has_weights = false;
  Weights weights;
};
RankedFile parse_ranked(std::string_view text);
RankedFile read_ranked(const std::string& path);

std::string render_rules(std::span<const CorrespondenceRule> rules);
std::string render_residuals(
    std::span<const std::pair<std::string, std::string>> residuals);
std::string render_precision(const PrecisionReport& report);

}  // namespace morphpairs::io
