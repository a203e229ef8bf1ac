#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "morphpairs/errors.hpp"
#include "morphpairs/io.hpp"
#include "morphpairs/pipeline.hpp"
#include "morphpairs/synth.hpp"

using namespace morphpairs;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  REQUIRE(out.good());
}

// Small planted corpus shared by the pipeline tests.
struct Fixture {
  fs::path dir;
  fs::path corpus;
  fs::path reference;
  SynthResult synth;

  explicit Fixture(const std::string& name) : dir(fresh_dir(name)) {
    SynthSpec spec;
    spec.lemmas = 15;
    spec.article_tokens = 300;
    spec.decoy_pairs = 6;
    spec.seed = 5;
    synth = generate_synthetic_corpus(spec);
    corpus = dir / "corpus.txt";
    write_text(corpus, synth.text);
    std::string gold;
    for (const auto& [a, b] : synth.gold) gold += a + "\t" + b + "\n";
    reference = dir / "gold.tsv";
    write_text(reference, gold);
  }

  PipelineConfig config(const std::string& out_name) const {
    PipelineConfig c;
    c.corpus_paths = {corpus.string()};
    c.max_freq_ratio = 0.01;
    c.reference_path = reference.string();
    c.cutoffs = {5, 10, 15};
    c.out_dir = (dir / out_name).string();
    c.threads = 1;
    return c;
  }
};

std::string slurp(const fs::path& path) {
  return io::read_file(path.string());
}

}  // namespace

TEST_CASE("config files round-trip losslessly") {
  PipelineConfig c;
  c.corpus_paths = {"a.txt", "b.txt"};
  c.article_marker = "<doc>";
  c.single_article = false;
  c.max_freq_ratio = 0.1;  // not exactly representable
  c.max_word_len = 24;
  c.lexicon_path = "lex.txt";
  c.ortho_floor = 2.0 / 3.0;
  c.prune = false;
  c.min_dist = 2;
  c.max_dist = 77;
  c.min_cooc = 5;
  c.full_cooc = true;
  c.manual_weights = Weights{1.0, 1.0 / 3.0};
  c.reference_path = "gold.tsv";
  c.ref_mode = RefMode::stems;
  c.cutoffs = {10, 100, 1000};
  c.rules_limit = 250;
  c.rules_cumulative = true;
  c.out_dir = "out";
  c.threads = 3;
  c.dump_ortho = true;
  c.dump_sem = true;

  const PipelineConfig r = load_config_text(save_config(c));
  CHECK(r.corpus_paths == c.corpus_paths);
  CHECK(r.article_marker == c.article_marker);
  CHECK(r.single_article == c.single_article);
  CHECK(r.max_freq_ratio == c.max_freq_ratio);
  REQUIRE(r.max_word_len.has_value());
  CHECK(*r.max_word_len == 24);
  REQUIRE(r.lexicon_path.has_value());
  CHECK(*r.lexicon_path == "lex.txt");
  CHECK(r.ortho_floor == c.ortho_floor);
  CHECK(r.prune == c.prune);
  CHECK(r.min_dist == c.min_dist);
  CHECK(r.max_dist == c.max_dist);
  CHECK(r.min_cooc == c.min_cooc);
  CHECK(r.full_cooc == c.full_cooc);
  REQUIRE(r.manual_weights.has_value());
  CHECK(r.manual_weights->ortho == c.manual_weights->ortho);
  CHECK(r.manual_weights->sem == c.manual_weights->sem);
  REQUIRE(r.reference_path.has_value());
  CHECK(*r.reference_path == "gold.tsv");
  CHECK(r.ref_mode == RefMode::stems);
  CHECK(r.cutoffs == c.cutoffs);
  REQUIRE(r.rules_limit.has_value());
  CHECK(*r.rules_limit == 250);
  CHECK(r.rules_cumulative == c.rules_cumulative);
  CHECK(r.out_dir == c.out_dir);
  CHECK(r.threads == c.threads);
  CHECK(r.dump_ortho == c.dump_ortho);
  CHECK(r.dump_sem == c.dump_sem);

  // Defaults survive a save/load cycle too.
  const PipelineConfig d = load_config_text(save_config(PipelineConfig{}));
  CHECK(d.max_freq_ratio == PipelineConfig{}.max_freq_ratio);
  CHECK_FALSE(d.max_word_len.has_value());
  CHECK_FALSE(d.manual_weights.has_value());
  CHECK(d.cutoffs.empty());
}

TEST_CASE("malformed config input is rejected") {
  CHECK_THROWS_AS(load_config_text("mystery=1\n"), ConfigError);
  CHECK_THROWS_AS(load_config_text("no equals sign\n"), ConfigError);
  CHECK_THROWS_AS(load_config_text("min_dist=abc\n"), ConfigError);
  CHECK_THROWS_AS(load_config_text("prune=maybe\n"), ConfigError);
  // Comments and blank lines are tolerated.
  const PipelineConfig c = load_config_text("# comment\n\nmin_dist=7\n");
  CHECK(c.min_dist == 7);
}

TEST_CASE("an empty corpus runs to completion with empty artifacts") {
  const fs::path dir = fresh_dir("mp_pipe_empty");
  const fs::path corpus = dir / "empty.txt";
  write_text(corpus, "");
  PipelineConfig config;
  config.corpus_paths = {corpus.string()};
  config.out_dir = (dir / "out").string();
  const PipelineSummary summary = run_pipeline(config);
  CHECK(summary.total_tokens == 0);
  CHECK(summary.ranked_pairs == 0);
  CHECK_FALSE(summary.weights.has_value());
  CHECK(fs::exists(dir / "out" / "vocab.tsv"));
  CHECK(fs::exists(dir / "out" / "ranked_pairs.tsv"));
  CHECK(fs::exists(dir / "out" / "rules.tsv"));
  CHECK(fs::exists(dir / "out" / "residuals.tsv"));
  CHECK(fs::exists(dir / "out" / "manifest.txt"));
  const io::RankedFile ranked =
      io::read_ranked((dir / "out" / "ranked_pairs.tsv").string());
  CHECK(ranked.rows.empty());
  CHECK_FALSE(ranked.has_weights);
  fs::remove_all(dir);
}

TEST_CASE("a planted corpus flows through every stage") {
  const Fixture fx("mp_pipe_run");
  PipelineConfig config = fx.config("out");
  config.dump_ortho = true;
  config.dump_sem = true;
  const PipelineSummary summary = run_pipeline(config);

  CHECK(summary.total_tokens > 0);
  CHECK(summary.ortho_pairs > 0);
  CHECK(summary.sem_pairs > 0);
  CHECK(summary.ranked_pairs > 0);
  REQUIRE(summary.weights.has_value());
  CHECK(summary.weights->ortho == 1.0);
  CHECK(summary.weights->sem > 0.0);
  CHECK(summary.corpus_checksum != 0);

  const fs::path out = fs::path(config.out_dir);
  for (const char* name :
       {"vocab.tsv", "ortho_pairs.tsv", "sem_pairs.tsv", "ranked_pairs.tsv",
        "rules.tsv", "residuals.tsv", "precision.tsv", "manifest.txt"})
    CHECK(fs::exists(out / name));

  // The planted pairs are exactly the intersection on this corpus.
  const io::RankedFile ranked =
      io::read_ranked((out / "ranked_pairs.tsv").string());
  CHECK(ranked.rows.size() == fx.synth.gold.size());
  REQUIRE(ranked.has_weights);
  CHECK(ranked.weights.ortho == doctest::Approx(1.0));

  // Re-rendering the parsed file reproduces it byte for byte.
  const std::string original = slurp(out / "ranked_pairs.tsv");
  CHECK(io::render_ranked(ranked.rows, &ranked.weights) == original);

  // The manifest records the corpus checksum and no execution knobs.
  const std::string manifest = slurp(out / "manifest.txt");
  CHECK(manifest.find("corpus_checksum_fnv1a64=") != std::string::npos);
  CHECK(manifest.find("threads=") == std::string::npos);
  CHECK(manifest.find("out_dir=") == std::string::npos);
  fs::remove_all(fx.dir);
}

TEST_CASE("artifacts are byte-identical across thread counts") {
  const Fixture fx("mp_pipe_threads");
  PipelineConfig one = fx.config("out1");
  one.threads = 1;
  PipelineConfig four = fx.config("out4");
  four.threads = 4;
  run_pipeline(one);
  run_pipeline(four);
  for (const char* name : {"vocab.tsv", "ranked_pairs.tsv", "rules.tsv",
                           "residuals.tsv", "precision.tsv", "manifest.txt"}) {
    CAPTURE(name);
    CHECK(slurp(fs::path(one.out_dir) / name) ==
          slurp(fs::path(four.out_dir) / name));
  }
  fs::remove_all(fx.dir);
}

TEST_CASE("missing corpus files raise IoError") {
  PipelineConfig config;
  config.corpus_paths = {"/nonexistent/corpus.txt"};
  config.out_dir =
      (fs::temp_directory_path() / "mp_pipe_missing").string();
  CHECK_THROWS_AS(run_pipeline(config), IoError);
  fs::remove_all(config.out_dir);
}

TEST_CASE("malformed ranked files report their line") {
  CHECK_THROWS_AS(io::parse_ranked("# wOrtho=1 wSem=1\nonly\tthree\tfields\n"),
                  ParseError);
  try {
    io::parse_ranked("# wOrtho=1 wSem=1\n1\ta\tb\t0.5\t1.0\t1.5\nbad line\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("3") != std::string::npos);
  }
}
