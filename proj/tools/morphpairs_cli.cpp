// Command-line front end: pairs / rules / eval / synth / stats.
//
// Exit codes: 0 success, 1 usage or configuration, 2 I/O or malformed
// input, 3 computation (calibration, undefined scores).

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morphpairs/cooc.hpp"
#include "morphpairs/corpus.hpp"
#include "morphpairs/errors.hpp"
#include "morphpairs/eval.hpp"
#include "morphpairs/io.hpp"
#include "morphpairs/ortho.hpp"
#include "morphpairs/pipeline.hpp"
#include "morphpairs/rules.hpp"
#include "morphpairs/synth.hpp"

namespace mp = morphpairs;

namespace {

constexpr const char* kVersion = "morphpairs 0.1.0";

std::string out_path(const std::string& dir, std::string_view name) {
  return (std::filesystem::path(dir) / name).string();
}

void apply_out_dir_env(std::string& out_dir) {
  if (const char* env = std::getenv("MORPHPAIRS_OUT"))
    if (*env) out_dir = env;
}

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw mp::IoError("cannot create output directory " + dir + ": " +
                      ec.message());
}

mp::CorpusIndex ingest_corpora(const std::vector<std::string>& paths,
                               const std::string& marker, bool single) {
  const mp::ArticleDelimiter delimiter =
      single ? mp::ArticleDelimiter::none() : mp::ArticleDelimiter::line(marker);
  mp::TokenizedCorpus corpus;
  for (const std::string& path : paths)
    mp::tokenize_into(corpus, mp::io::read_file(path), delimiter);
  mp::CorpusIndex index{std::move(corpus), {}};
  index.vocab = build_vocabulary(index.corpus);
  return index;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morphpairs: discover morphologically related word pairs from "
               "raw text by combining edit-distance and mutual-information "
               "scores"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // ---- pairs ----
  auto* pairs_cmd = app.add_subcommand(
      "pairs", "run the full pipeline: ingest, score, intersect, rank");
  std::string cfg_path;
  auto* opt_cfg = pairs_cmd->add_option("--config", cfg_path,
                                        "key=value config file; explicit "
                                        "flags override its values");
  std::vector<std::string> corpus_paths;
  auto* opt_corpus =
      pairs_cmd->add_option("--corpus", corpus_paths, "corpus text file(s)");
  std::string article_marker;
  auto* opt_marker = pairs_cmd->add_option(
      "--article-marker", article_marker,
      "line that separates articles (default: blank line)");
  auto* opt_single = pairs_cmd->add_flag(
      "--single-article", "treat each corpus file as one article");
  double max_freq_ratio = 1e-4;
  auto* opt_ratio = pairs_cmd->add_option(
      "--max-freq-ratio", max_freq_ratio,
      "content words must have freq/N strictly below this");
  std::uint32_t max_word_len = 0;
  auto* opt_maxlen = pairs_cmd->add_option(
      "--max-word-len", max_word_len, "drop words longer than this many "
                                      "characters");
  std::string lexicon_path;
  auto* opt_lexicon = pairs_cmd->add_option(
      "--lexicon", lexicon_path, "keep only words listed in this file");
  double ortho_floor = 0.5;
  auto* opt_floor = pairs_cmd->add_option("--ortho-floor", ortho_floor,
                                          "orthographic similarity floor");
  auto* opt_noprune = pairs_cmd->add_flag(
      "--no-prune", "disable banded pruning (oracle-equivalence testing)");
  std::uint32_t min_dist = 3, max_dist = 500;
  auto* opt_mind = pairs_cmd->add_option(
      "--min-dist", min_dist, "co-occurrence band lower bound (exclusive)");
  auto* opt_maxd = pairs_cmd->add_option(
      "--max-dist", max_dist, "co-occurrence band upper bound (inclusive)");
  std::uint64_t min_cooc = 3;
  auto* opt_cooc = pairs_cmd->add_option("--min-cooc", min_cooc,
                                         "minimum co-occurrence count");
  auto* opt_full = pairs_cmd->add_flag(
      "--full-cooc", "count all content pairs, not just ortho candidates");
  std::vector<double> weights_in;
  auto* opt_weights =
      pairs_cmd->add_option("--weights", weights_in,
                            "manual wOrtho wSem (skips auto calibration)")
          ->expected(2);
  std::string reference_path;
  auto* opt_ref = pairs_cmd->add_option("--reference", reference_path,
                                        "reference set for precision");
  std::string ref_mode = "pairs";
  auto* opt_refmode =
      pairs_cmd->add_option("--ref-mode", ref_mode, "pairs or stems")
          ->check(CLI::IsMember({"pairs", "stems"}));
  std::vector<std::uint64_t> cutoffs;
  auto* opt_cutoffs = pairs_cmd->add_option("--cutoffs", cutoffs,
                                            "precision cutoffs")
                          ->delimiter(',');
  std::uint64_t rules_limit = 0;
  auto* opt_rlimit = pairs_cmd->add_option(
      "--rules-limit", rules_limit, "extract rules from the top N pairs only");
  auto* opt_rcum = pairs_cmd->add_flag(
      "--rules-cumulative", "rank rules by cumulative combined score");
  std::string out_dir = ".";
  auto* opt_out = pairs_cmd->add_option(
      "--out-dir", out_dir,
      "output directory (MORPHPAIRS_OUT overrides)");
  unsigned threads = 0;
  auto* opt_threads =
      pairs_cmd->add_option("--threads", threads, "worker threads (0 = auto)");
  auto* opt_dortho = pairs_cmd->add_flag("--dump-ortho",
                                         "also write ortho_pairs.tsv");
  auto* opt_dsem = pairs_cmd->add_flag("--dump-sem", "also write sem_pairs.tsv");
  std::string save_cfg_path;
  auto* opt_savecfg = pairs_cmd->add_option(
      "--save-config", save_cfg_path, "write the effective config here");

  // ---- rules ----
  auto* rules_cmd = app.add_subcommand(
      "rules", "extract correspondence rules from a ranked pair list");
  std::string rules_ranked;
  rules_cmd->add_option("--ranked", rules_ranked, "ranked_pairs.tsv to read")
      ->required();
  std::uint64_t rules_cmd_limit = 0;
  auto* opt_rules_limit = rules_cmd->add_option(
      "--limit", rules_cmd_limit, "use only the top N pairs");
  auto* opt_rules_cum = rules_cmd->add_flag(
      "--cumulative", "rank rules by cumulative combined score");
  std::string rules_out = ".";
  rules_cmd->add_option("--out-dir", rules_out,
                        "output directory (MORPHPAIRS_OUT overrides)");
  std::uint64_t rules_top = 10;
  rules_cmd->add_option("--top", rules_top, "print the top N rules");

  // ---- eval ----
  auto* eval_cmd = app.add_subcommand(
      "eval", "precision at cutoffs against a reference set");
  std::string eval_ranked;
  eval_cmd->add_option("--ranked", eval_ranked, "ranked_pairs.tsv to read")
      ->required();
  std::string eval_reference;
  eval_cmd->add_option("--reference", eval_reference, "reference set file")
      ->required();
  std::string eval_mode = "pairs";
  eval_cmd->add_option("--mode", eval_mode, "pairs or stems")
      ->check(CLI::IsMember({"pairs", "stems"}));
  std::vector<std::uint64_t> eval_cutoffs;
  eval_cmd->add_option("--cutoffs", eval_cutoffs, "precision cutoffs")
      ->delimiter(',');
  std::string eval_out = ".";
  eval_cmd->add_option("--out-dir", eval_out,
                       "output directory (MORPHPAIRS_OUT overrides)");

  // ---- synth ----
  auto* synth_cmd = app.add_subcommand(
      "synth", "generate a synthetic corpus with known gold pairs");
  mp::SynthSpec synth_spec;
  synth_cmd->add_option("--lemmas", synth_spec.lemmas, "number of lemmas");
  synth_cmd->add_option("--article-tokens", synth_spec.article_tokens,
                        "tokens per article");
  synth_cmd->add_option("--form-occurrences", synth_spec.form_occurrences,
                        "planted occurrences per form");
  synth_cmd->add_option("--decoy-pairs", synth_spec.decoy_pairs,
                        "orthographic decoy pairs");
  synth_cmd->add_option("--distractors", synth_spec.distractors_per_article,
                        "one-off distractors per article");
  synth_cmd->add_option("--min-dist", synth_spec.min_dist,
                        "band lower bound the corpus must respect");
  synth_cmd->add_option("--max-dist", synth_spec.max_dist,
                        "band upper bound");
  synth_cmd->add_option("--seed", synth_spec.seed, "generator seed");
  std::vector<std::string> synth_rules;
  synth_cmd
      ->add_option("--rules", synth_rules,
                   "subset of s,en,umlaut,un (default: all)")
      ->delimiter(',');
  std::string synth_out = ".";
  synth_cmd->add_option("--out-dir", synth_out,
                        "writes corpus.txt and gold.tsv here "
                        "(MORPHPAIRS_OUT overrides)");

  // ---- stats ----
  auto* stats_cmd = app.add_subcommand(
      "stats", "vocabulary and co-occurrence dumps for a corpus");
  std::vector<std::string> stats_corpus;
  stats_cmd->add_option("--corpus", stats_corpus, "corpus text file(s)")
      ->required();
  std::string stats_marker;
  stats_cmd->add_option("--article-marker", stats_marker,
                        "line that separates articles (default: blank line)");
  auto* stats_single = stats_cmd->add_flag(
      "--single-article", "treat each corpus file as one article");
  double stats_ratio = 1e-4;
  stats_cmd->add_option("--max-freq-ratio", stats_ratio,
                        "content-word frequency threshold");
  std::uint32_t stats_maxlen = 0;
  auto* opt_stats_maxlen = stats_cmd->add_option(
      "--max-word-len", stats_maxlen, "content-word length bound");
  std::string stats_lexicon;
  auto* opt_stats_lexicon = stats_cmd->add_option(
      "--lexicon", stats_lexicon, "content-word lexicon filter");
  auto* stats_cooc = stats_cmd->add_flag(
      "--cooc", "also write cooc_pairs.tsv (full-mode counts over content "
                "words)");
  std::uint32_t stats_mind = 3, stats_maxd = 500;
  stats_cmd->add_option("--min-dist", stats_mind, "band lower bound");
  stats_cmd->add_option("--max-dist", stats_maxd, "band upper bound");
  std::uint64_t stats_mincooc = 3;
  stats_cmd->add_option("--min-cooc", stats_mincooc,
                        "minimum co-occurrence count for the dump");
  std::uint64_t stats_top = 10;
  stats_cmd->add_option("--top", stats_top, "print the top N words");
  std::string stats_out = ".";
  stats_cmd->add_option("--out-dir", stats_out,
                        "output directory (MORPHPAIRS_OUT overrides)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (pairs_cmd->parsed()) {
      mp::PipelineConfig cfg;
      if (opt_cfg->count()) cfg = mp::load_config(cfg_path);
      if (opt_corpus->count()) cfg.corpus_paths = corpus_paths;
      if (opt_marker->count()) cfg.article_marker = article_marker;
      if (opt_single->count()) cfg.single_article = true;
      if (opt_ratio->count()) cfg.max_freq_ratio = max_freq_ratio;
      if (opt_maxlen->count()) cfg.max_word_len = max_word_len;
      if (opt_lexicon->count()) cfg.lexicon_path = lexicon_path;
      if (opt_floor->count()) cfg.ortho_floor = ortho_floor;
      if (opt_noprune->count()) cfg.prune = false;
      if (opt_mind->count()) cfg.min_dist = min_dist;
      if (opt_maxd->count()) cfg.max_dist = max_dist;
      if (opt_cooc->count()) cfg.min_cooc = min_cooc;
      if (opt_full->count()) cfg.full_cooc = true;
      if (opt_weights->count())
        cfg.manual_weights = mp::Weights{weights_in[0], weights_in[1]};
      if (opt_ref->count()) cfg.reference_path = reference_path;
      if (opt_refmode->count())
        cfg.ref_mode =
            ref_mode == "stems" ? mp::RefMode::stems : mp::RefMode::pairs;
      if (opt_cutoffs->count()) cfg.cutoffs = cutoffs;
      if (opt_rlimit->count()) cfg.rules_limit = rules_limit;
      if (opt_rcum->count()) cfg.rules_cumulative = true;
      if (opt_out->count()) cfg.out_dir = out_dir;
      if (opt_threads->count()) cfg.threads = threads;
      if (opt_dortho->count()) cfg.dump_ortho = true;
      if (opt_dsem->count()) cfg.dump_sem = true;
      apply_out_dir_env(cfg.out_dir);
      if (cfg.corpus_paths.empty())
        throw mp::ConfigError("no corpus given (use --corpus or --config)");
      if (opt_savecfg->count())
        mp::io::write_file(save_cfg_path, mp::save_config(cfg));

      const mp::PipelineSummary s = mp::run_pipeline(cfg);
      std::cout << "tokens " << s.total_tokens << ", vocabulary "
                << s.vocab_size << ", content words " << s.content_words
                << '\n'
                << "ortho pairs " << s.ortho_pairs << ", sem pairs "
                << s.sem_pairs << ", ranked " << s.ranked_pairs << '\n'
                << "rules " << s.rule_count << ", residuals "
                << s.residual_count << '\n';
      if (s.weights)
        std::cout << "weights wOrtho=" << mp::io::fixed9(s.weights->ortho)
                  << " wSem=" << mp::io::fixed9(s.weights->sem) << '\n';
      else
        std::cout << "weights none (empty intersection)\n";
      std::cout << "artifacts in " << cfg.out_dir << '\n';
      return 0;
    }

    if (rules_cmd->parsed()) {
      apply_out_dir_env(rules_out);
      ensure_out_dir(rules_out);
      const mp::io::RankedFile file = mp::io::read_ranked(rules_ranked);
      const mp::RuleReport report = mp::extract_rules(
          file.rows,
          opt_rules_limit->count()
              ? std::optional<std::size_t>(
                    static_cast<std::size_t>(rules_cmd_limit))
              : std::nullopt,
          opt_rules_cum->count() ? mp::RuleRanking::cumulative
                                 : mp::RuleRanking::frequency);
      mp::io::write_file(out_path(rules_out, "rules.tsv"),
                         mp::io::render_rules(report.rules));
      mp::io::write_file(out_path(rules_out, "residuals.tsv"),
                         mp::io::render_residuals(report.residuals));
      std::cout << report.rules.size() << " rules, "
                << report.residuals.size() << " residuals\n";
      const std::size_t shown =
          std::min<std::size_t>(rules_top, report.rules.size());
      for (std::size_t i = 0; i < shown; ++i) {
        const mp::CorrespondenceRule& r = report.rules[i];
        std::cout << "  " << mp::rule_kind_name(r.kind) << ' '
                  << (r.lhs.empty() ? std::string(mp::io::kEpsilon) : r.lhs)
                  << "<->"
                  << (r.rhs.empty() ? std::string(mp::io::kEpsilon) : r.rhs)
                  << "  fq " << r.frequency << "  (" << r.example_a << " "
                  << r.example_b << ")\n";
      }
      return 0;
    }

    if (eval_cmd->parsed()) {
      apply_out_dir_env(eval_out);
      ensure_out_dir(eval_out);
      const mp::io::RankedFile file = mp::io::read_ranked(eval_ranked);
      const mp::ReferenceSet ref =
          eval_mode == "stems"
              ? mp::ReferenceSet::stems_from_file(eval_reference)
              : mp::ReferenceSet::pairs_from_file(eval_reference);
      std::vector<std::uint64_t> grid = eval_cutoffs;
      if (grid.empty()) {
        grid.assign(std::begin(mp::kDefaultCutoffs),
                    std::end(mp::kDefaultCutoffs));
        if (!file.rows.empty()) grid.push_back(file.rows.size());
      }
      const mp::PrecisionReport report =
          mp::precision_at_cutoffs(file.rows, ref, grid);
      mp::io::write_file(out_path(eval_out, "precision.tsv"),
                         mp::io::render_precision(report));
      std::cout << "cutoff\tprecision\n";
      for (const auto& [cutoff, precision] : report.rows)
        std::cout << cutoff << '\t' << mp::io::fixed9(precision) << '\n';
      std::cout << "total ranked pairs: " << report.total_pairs << '\n';
      return 0;
    }

    if (synth_cmd->parsed()) {
      if (!synth_rules.empty()) {
        synth_spec.rules.clear();
        for (const std::string& name : synth_rules) {
          if (name == "s")
            synth_spec.rules.push_back(mp::SynthRule::suffix_s);
          else if (name == "en")
            synth_spec.rules.push_back(mp::SynthRule::suffix_en);
          else if (name == "umlaut")
            synth_spec.rules.push_back(mp::SynthRule::umlaut_e);
          else if (name == "un")
            synth_spec.rules.push_back(mp::SynthRule::prefix_un);
          else
            throw mp::ConfigError("unknown synthesis rule '" + name +
                                  "' (use s,en,umlaut,un)");
        }
      }
      apply_out_dir_env(synth_out);
      ensure_out_dir(synth_out);
      const mp::SynthResult result = mp::generate_synthetic_corpus(synth_spec);
      mp::io::write_file(out_path(synth_out, "corpus.txt"), result.text);
      std::string gold;
      for (const auto& [a, b] : result.gold) {
        gold += a;
        gold += '\t';
        gold += b;
        gold += '\n';
      }
      mp::io::write_file(out_path(synth_out, "gold.tsv"), gold);
      std::cout << "wrote corpus.txt and gold.tsv (" << result.gold.size()
                << " gold pairs) to " << synth_out << '\n';
      return 0;
    }

    if (stats_cmd->parsed()) {
      apply_out_dir_env(stats_out);
      ensure_out_dir(stats_out);
      const mp::CorpusIndex index =
          ingest_corpora(stats_corpus, stats_marker, stats_single->count() > 0);
      mp::io::write_file(out_path(stats_out, "vocab.tsv"),
                         mp::io::render_vocab(index));
      mp::ContentFilter filter;
      filter.max_freq_ratio = stats_ratio;
      if (opt_stats_maxlen->count()) filter.max_len = stats_maxlen;
      if (opt_stats_lexicon->count())
        filter.lexicon = mp::load_lexicon(stats_lexicon);
      const std::vector<mp::WordId> content =
          mp::extract_content_words(index, filter);
      if (stats_cooc->count()) {
        mp::CoocOptions options;
        options.min_dist = stats_mind;
        options.max_dist = stats_maxd;
        const mp::CoocTable table =
            mp::count_cooccurrences(index, content, nullptr, options);
        const std::vector<mp::SemPair> sem =
            mp::generate_sem_pairs(index, table, stats_mincooc);
        mp::io::write_file(out_path(stats_out, "cooc_pairs.tsv"),
                           mp::io::render_sem_pairs(index, sem));
        std::cout << "cooc pairs (count >= " << stats_mincooc
                  << "): " << sem.size() << '\n';
      }
      std::cout << "tokens " << index.vocab.total_tokens << ", vocabulary "
                << index.corpus.words.size() << ", content words "
                << content.size() << '\n';
      const std::string vocab_tsv = mp::io::render_vocab(index);
      std::size_t shown = 0, pos = 0;
      while (shown < stats_top && pos < vocab_tsv.size()) {
        const std::size_t end = vocab_tsv.find('\n', pos);
        std::cout << "  " << vocab_tsv.substr(pos, end - pos) << '\n';
        pos = end + 1;
        ++shown;
      }
      return 0;
    }
  } catch (const mp::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const mp::DecodeError& e) {
    std::cerr << "error: " << e.what() << " (byte offset " << e.byte_offset
              << ")\n";
    return 2;
  } catch (const mp::ParseError& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line_number << ")\n";
    return 2;
  } catch (const mp::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const mp::CalibrationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const mp::UndefinedScoreError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
