#include "morphpairs/pipeline.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>

#include "morphpairs/cooc.hpp"
#include "morphpairs/corpus.hpp"
#include "morphpairs/errors.hpp"
#include "morphpairs/eval.hpp"
#include "morphpairs/io.hpp"
#include "morphpairs/ortho.hpp"
#include "morphpairs/rules.hpp"

namespace morphpairs {

namespace {

void put(std::string& out, std::string_view key, std::string_view value) {
  out += key;
  out += '=';
  out += value;
  out += '\n';
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("malformed count '" + std::string(text) + "'");
  return value;
}

double parse_f64(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ConfigError("malformed number '" + std::string(text) + "'");
  return value;
}

bool parse_bool(std::string_view text) {
  if (text == "1") return true;
  if (text == "0") return false;
  throw ConfigError("malformed flag '" + std::string(text) + "' (use 0/1)");
}

}  // namespace

std::string save_config(const PipelineConfig& c) {
  std::string out;
  for (const std::string& path : c.corpus_paths) put(out, "corpus", path);
  put(out, "article_marker", c.article_marker);
  put(out, "single_article", c.single_article ? "1" : "0");
  put(out, "max_freq_ratio", io::g17(c.max_freq_ratio));
  if (c.max_word_len) put(out, "max_word_len", std::to_string(*c.max_word_len));
  if (c.lexicon_path) put(out, "lexicon", *c.lexicon_path);
  put(out, "ortho_floor", io::g17(c.ortho_floor));
  put(out, "prune", c.prune ? "1" : "0");
  put(out, "min_dist", std::to_string(c.min_dist));
  put(out, "max_dist", std::to_string(c.max_dist));
  put(out, "min_cooc", std::to_string(c.min_cooc));
  put(out, "full_cooc", c.full_cooc ? "1" : "0");
  if (c.manual_weights)
    put(out, "weights",
        io::g17(c.manual_weights->ortho) + "," + io::g17(c.manual_weights->sem));
  if (c.reference_path) put(out, "reference", *c.reference_path);
  put(out, "ref_mode", c.ref_mode == RefMode::pairs ? "pairs" : "stems");
  if (!c.cutoffs.empty()) {
    std::string joined;
    for (std::uint64_t cutoff : c.cutoffs) {
      if (!joined.empty()) joined += ',';
      joined += std::to_string(cutoff);
    }
    put(out, "cutoffs", joined);
  }
  if (c.rules_limit) put(out, "rules_limit", std::to_string(*c.rules_limit));
  put(out, "rules_cumulative", c.rules_cumulative ? "1" : "0");
  put(out, "out_dir", c.out_dir);
  put(out, "threads", std::to_string(c.threads));
  put(out, "dump_ortho", c.dump_ortho ? "1" : "0");
  put(out, "dump_sem", c.dump_sem ? "1" : "0");
  return out;
}

PipelineConfig load_config_text(std::string_view text) {
  PipelineConfig c;
  io::for_each_line(text, [&c](std::string_view line, std::size_t line_no) {
    if (line.empty() || line.front() == '#') return;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key=value");
    const std::string_view key = line.substr(0, eq);
    const std::string_view value = line.substr(eq + 1);
    if (key == "corpus") {
      c.corpus_paths.emplace_back(value);
    } else if (key == "article_marker") {
      c.article_marker = std::string(value);
    } else if (key == "single_article") {
      c.single_article = parse_bool(value);
    } else if (key == "max_freq_ratio") {
      c.max_freq_ratio = parse_f64(value);
    } else if (key == "max_word_len") {
      c.max_word_len = static_cast<std::uint32_t>(parse_u64(value));
    } else if (key == "lexicon") {
      c.lexicon_path = std::string(value);
    } else if (key == "ortho_floor") {
      c.ortho_floor = parse_f64(value);
    } else if (key == "prune") {
      c.prune = parse_bool(value);
    } else if (key == "min_dist") {
      c.min_dist = static_cast<std::uint32_t>(parse_u64(value));
    } else if (key == "max_dist") {
      c.max_dist = static_cast<std::uint32_t>(parse_u64(value));
    } else if (key == "min_cooc") {
      c.min_cooc = parse_u64(value);
    } else if (key == "full_cooc") {
      c.full_cooc = parse_bool(value);
    } else if (key == "weights") {
      const std::size_t comma = value.find(',');
      if (comma == std::string_view::npos)
        throw ConfigError("weights expects wOrtho,wSem");
      c.manual_weights = Weights{parse_f64(value.substr(0, comma)),
                                 parse_f64(value.substr(comma + 1))};
    } else if (key == "reference") {
      c.reference_path = std::string(value);
    } else if (key == "ref_mode") {
      if (value == "pairs")
        c.ref_mode = RefMode::pairs;
      else if (value == "stems")
        c.ref_mode = RefMode::stems;
      else
        throw ConfigError("ref_mode must be pairs or stems");
    } else if (key == "cutoffs") {
      c.cutoffs.clear();
      std::size_t start = 0;
      std::string_view rest = value;
      while (start <= rest.size()) {
        std::size_t comma = rest.find(',', start);
        if (comma == std::string_view::npos) comma = rest.size();
        c.cutoffs.push_back(parse_u64(rest.substr(start, comma - start)));
        start = comma + 1;
      }
    } else if (key == "rules_limit") {
      c.rules_limit = parse_u64(value);
    } else if (key == "rules_cumulative") {
      c.rules_cumulative = parse_bool(value);
    } else if (key == "out_dir") {
      c.out_dir = std::string(value);
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(parse_u64(value));
    } else if (key == "dump_ortho") {
      c.dump_ortho = parse_bool(value);
    } else if (key == "dump_sem") {
      c.dump_sem = parse_bool(value);
    } else {
      throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
  });
  return c;
}

PipelineConfig load_config(const std::string& path) {
  return load_config_text(io::read_file(path));
}

PipelineSummary run_pipeline(const PipelineConfig& config) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec)
    throw IoError("cannot create output directory " + config.out_dir + ": " +
                  ec.message());
  const auto out_path = [&config](std::string_view name) {
    return (fs::path(config.out_dir) / name).string();
  };

  // Ingest. Each file contributes its own articles; single_article mode
  // makes one article per file.
  const ArticleDelimiter delimiter =
      config.single_article ? ArticleDelimiter::none()
                            : ArticleDelimiter::line(config.article_marker);
  PipelineSummary summary;
  TokenizedCorpus corpus;
  std::uint64_t checksum = 0xcbf29ce484222325ull;
  for (const std::string& path : config.corpus_paths) {
    const std::string text = io::read_file(path);
    for (unsigned char byte : text) {
      checksum ^= byte;
      checksum *= 0x100000001b3ull;
    }
    tokenize_into(corpus, text, delimiter);
  }
  summary.corpus_checksum = checksum;

  CorpusIndex index{std::move(corpus), {}};
  index.vocab = build_vocabulary(index.corpus);
  summary.total_tokens = index.vocab.total_tokens;
  summary.vocab_size = index.corpus.words.size();

  ContentFilter filter;
  filter.max_freq_ratio = config.max_freq_ratio;
  filter.max_len = config.max_word_len;
  if (config.lexicon_path) filter.lexicon = load_lexicon(*config.lexicon_path);
  const std::vector<WordId> content = extract_content_words(index, filter);
  summary.content_words = content.size();

  OrthoOptions ortho_options;
  ortho_options.floor = config.ortho_floor;
  ortho_options.prune = config.prune;
  ortho_options.threads = config.threads;
  const std::vector<OrthoPair> ortho =
      generate_ortho_pairs(index, content, ortho_options);
  summary.ortho_pairs = ortho.size();

  CoocOptions cooc_options;
  cooc_options.min_dist = config.min_dist;
  cooc_options.max_dist = config.max_dist;
  cooc_options.threads = config.threads;
  PairSet tracked;
  for (const OrthoPair& p : ortho) tracked.insert(p.a, p.b);
  const CoocTable table = count_cooccurrences(
      index, content, config.full_cooc ? nullptr : &tracked, cooc_options);
  const std::vector<SemPair> sem =
      generate_sem_pairs(index, table, config.min_cooc);
  summary.sem_pairs = sem.size();

  std::vector<ScoredPair> intersection = intersect_pairs(ortho, sem);
  std::optional<Weights> weights = config.manual_weights;
  if (!weights && !intersection.empty())
    weights = calibrate_weights(intersection);
  summary.weights = weights;

  RankedPairList ranked = rank_pairs(index, std::move(intersection),
                                     weights.value_or(Weights{1.0, 1.0}));
  const std::vector<RankedRow> rows = to_rows(index, ranked);
  summary.ranked_pairs = rows.size();

  const RuleReport report = extract_rules(
      rows,
      config.rules_limit
          ? std::optional<std::size_t>(static_cast<std::size_t>(*config.rules_limit))
          : std::nullopt,
      config.rules_cumulative ? RuleRanking::cumulative
                              : RuleRanking::frequency);
  summary.rule_count = report.rules.size();
  summary.residual_count = report.residuals.size();

  io::write_file(out_path("vocab.tsv"), io::render_vocab(index));
  if (config.dump_ortho)
    io::write_file(out_path("ortho_pairs.tsv"),
                   io::render_ortho_pairs(index, ortho));
  if (config.dump_sem)
    io::write_file(out_path("sem_pairs.tsv"), io::render_sem_pairs(index, sem));
  io::write_file(out_path("ranked_pairs.tsv"),
                 io::render_ranked(rows, weights ? &*weights : nullptr));
  io::write_file(out_path("rules.tsv"), io::render_rules(report.rules));
  io::write_file(out_path("residuals.tsv"),
                 io::render_residuals(report.residuals));

  std::optional<PrecisionReport> precision;
  if (config.reference_path) {
    const ReferenceSet ref =
        config.ref_mode == RefMode::pairs
            ? ReferenceSet::pairs_from_file(*config.reference_path)
            : ReferenceSet::stems_from_file(*config.reference_path);
    std::vector<std::uint64_t> cutoffs = config.cutoffs;
    if (cutoffs.empty()) {
      cutoffs.assign(std::begin(kDefaultCutoffs), std::end(kDefaultCutoffs));
      if (!rows.empty()) cutoffs.push_back(rows.size());
    }
    precision = precision_at_cutoffs(rows, ref, cutoffs);
    io::write_file(out_path("precision.tsv"), io::render_precision(*precision));
  }

  std::string manifest = "morphpairs pipeline manifest\n";
  manifest += "corpus_checksum_fnv1a64=";
  {
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(checksum));
    manifest += hex;
  }
  manifest += '\n';
  manifest += "total_tokens=" + std::to_string(summary.total_tokens) + '\n';
  manifest += "vocab_size=" + std::to_string(summary.vocab_size) + '\n';
  manifest += "content_words=" + std::to_string(summary.content_words) + '\n';
  manifest += "ortho_pairs=" + std::to_string(summary.ortho_pairs) + '\n';
  manifest += "sem_pairs=" + std::to_string(summary.sem_pairs) + '\n';
  manifest += "ranked_pairs=" + std::to_string(summary.ranked_pairs) + '\n';
  manifest += "rules=" + std::to_string(summary.rule_count) + '\n';
  manifest += "residuals=" + std::to_string(summary.residual_count) + '\n';
  if (weights)
    manifest += "weights=" + io::g17(weights->ortho) + "," +
                io::g17(weights->sem) +
                (config.manual_weights ? " (manual)\n" : " (auto)\n");
  else
    manifest += "weights=none\n";
  // Echo the analysis configuration only. Execution knobs (threads, out_dir)
  // never influence the artifacts, so they would break byte-identity between
  // otherwise equal runs.
  manifest += "config:\n";
  io::for_each_line(save_config(config),
                    [&manifest](std::string_view line, std::size_t) {
                      if (line.starts_with("threads=") ||
                          line.starts_with("out_dir="))
                        return;
                      manifest += line;
                      manifest += '\n';
                    });
  io::write_file(out_path("manifest.txt"), manifest);

  return summary;
}

}  // namespace morphpairs
