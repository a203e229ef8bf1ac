#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morphpairs/ranking.hpp"

namespace morphpairs {

enum class RefMode { pairs, stems };

struct PipelineConfig {
  std::vector<std::string> corpus_paths;
  // Article boundaries: a marker line (empty string = blank line), unless
  // single_article treats each input file as one article.
  std::string article_marker;
  bool single_article = false;

  double max_freq_ratio = 1e-4;
  std::optional<std::uint32_t> max_word_len;
  std::optional<std::string> lexicon_path;

  double ortho_floor = 0.5;
  bool prune = true;

  std::uint32_t min_dist = 3;
  std::uint32_t max_dist = 500;
  std::uint64_t min_cooc = 3;
  bool full_cooc = false;  // count all content pairs, not just ortho survivors

  std::optional<Weights> manual_weights;  // absent = auto calibration

  std::optional<std::string> reference_path;
  RefMode ref_mode = RefMode::pairs;
  std::vector<std::uint64_t> cutoffs;  // empty = default grid + full length

  std::optional<std::uint64_t> rules_limit;
  bool rules_cumulative = false;

  std::string out_dir = ".";
  unsigned threads = 0;
  bool dump_ortho = false;
  bool dump_sem = false;
};

// Lossless key=value round-trip.
std::string save_config(const PipelineConfig& config);
PipelineConfig load_config_text(std::string_view text);
PipelineConfig load_config(const std::string& path);

struct PipelineSummary {
  std::uint64_t total_tokens = 0;
  std::size_t vocab_size = 0;
  std::size_t content_words = 0;
  std::size_t ortho_pairs = 0;
  std::size_t sem_pairs = 0;
  std::size_t ranked_pairs = 0;
  std::size_t rule_count = 0;
  std::size_t residual_count = 0;
  std::optional<Weights> weights;  // absent when nothing to calibrate
  std::uint64_t corpus_checksum = 0;
};

// Runs ingest -> ortho -> cooc/MI -> intersect -> calibrate -> rank ->
// rules [-> precision] and writes vocab.tsv, ranked_pairs.tsv, rules.tsv,
// residuals.tsv, optional dumps, precision.tsv when a reference is given,
// and manifest.txt into config.out_dir.
PipelineSummary run_pipeline(const PipelineConfig& config);

}  // namespace morphpairs
