// Python bindings for the core operations. In-memory only: corpus text goes
// in as a string, artifacts come back as python structures.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "morphpairs/cooc.hpp"
#include "morphpairs/corpus.hpp"
#include "morphpairs/eval.hpp"
#include "morphpairs/ortho.hpp"
#include "morphpairs/ranking.hpp"
#include "morphpairs/rules.hpp"
#include "morphpairs/synth.hpp"

namespace py = pybind11;
namespace mp = morphpairs;

namespace {

mp::ArticleDelimiter make_delimiter(const std::optional<std::string>& marker,
                                    bool single_article) {
  if (single_article) return mp::ArticleDelimiter::none();
  return mp::ArticleDelimiter::line(marker.value_or(""));
}

std::vector<std::vector<std::string>> tokenize_py(
    const std::string& text, const std::optional<std::string>& marker,
    bool single_article) {
  const mp::TokenizedCorpus corpus =
      mp::tokenize(text, make_delimiter(marker, single_article));
  std::vector<std::vector<std::string>> articles;
  articles.reserve(corpus.articles.size());
  for (const mp::Article& article : corpus.articles) {
    std::vector<std::string> tokens;
    tokens.reserve(article.tokens.size());
    for (mp::WordId id : article.tokens) tokens.push_back(corpus.words.word(id));
    articles.push_back(std::move(tokens));
  }
  return articles;
}

py::object parse_pair_py(const std::string& a, const std::string& b) {
  const std::optional<mp::ParsedRule> parsed = mp::parse_pair(a, b);
  if (!parsed) return py::none();
  return py::make_tuple(std::string(mp::rule_kind_name(parsed->kind)),
                        parsed->lhs, parsed->rhs);
}

py::dict rank_text_py(const std::string& text,
                      const std::optional<std::string>& marker,
                      bool single_article, double max_freq_ratio,
                      std::optional<std::uint32_t> max_word_len,
                      double ortho_floor, std::uint32_t min_dist,
                      std::uint32_t max_dist, std::uint64_t min_cooc,
                      std::optional<std::pair<double, double>> weights,
                      unsigned threads) {
  mp::TokenizedCorpus corpus =
      mp::tokenize(text, make_delimiter(marker, single_article));
  mp::CorpusIndex index{std::move(corpus), {}};
  index.vocab = mp::build_vocabulary(index.corpus);

  mp::ContentFilter filter;
  filter.max_freq_ratio = max_freq_ratio;
  filter.max_len = max_word_len;
  const std::vector<mp::WordId> content =
      mp::extract_content_words(index, filter);

  mp::OrthoOptions ortho_options;
  ortho_options.floor = ortho_floor;
  ortho_options.threads = threads;
  const std::vector<mp::OrthoPair> ortho =
      mp::generate_ortho_pairs(index, content, ortho_options);

  mp::CoocOptions cooc_options;
  cooc_options.min_dist = min_dist;
  cooc_options.max_dist = max_dist;
  cooc_options.threads = threads;
  mp::PairSet tracked;
  for (const mp::OrthoPair& p : ortho) tracked.insert(p.a, p.b);
  const mp::CoocTable table =
      mp::count_cooccurrences(index, content, &tracked, cooc_options);
  const std::vector<mp::SemPair> sem =
      mp::generate_sem_pairs(index, table, min_cooc);

  std::vector<mp::ScoredPair> intersection = mp::intersect_pairs(ortho, sem);
  std::optional<mp::Weights> used;
  if (weights)
    used = mp::Weights{weights->first, weights->second};
  else if (!intersection.empty())
    used = mp::calibrate_weights(intersection);

  const mp::RankedPairList ranked = mp::rank_pairs(
      index, std::move(intersection), used.value_or(mp::Weights{1.0, 1.0}));

  py::list rows;
  for (const mp::ScoredPair& p : ranked.pairs)
    rows.append(py::make_tuple(index.word(p.a), index.word(p.b), p.ortho,
                               p.mi, p.combined));
  py::dict out;
  out["pairs"] = rows;
  out["weights"] = used ? py::object(py::make_tuple(used->ortho, used->sem))
                        : py::object(py::none());
  out["tokens"] = index.vocab.total_tokens;
  out["content_words"] = content.size();
  return out;
}

py::dict extract_rules_py(
    const std::vector<std::tuple<std::string, std::string, double>>& pairs,
    std::optional<std::size_t> limit, bool cumulative) {
  std::vector<mp::RankedRow> rows;
  rows.reserve(pairs.size());
  for (const auto& [a, b, combined] : pairs)
    rows.push_back({a, b, 0.0, 0.0, combined});
  const mp::RuleReport report = mp::extract_rules(
      rows, limit,
      cumulative ? mp::RuleRanking::cumulative : mp::RuleRanking::frequency);
  py::list rules;
  for (const mp::CorrespondenceRule& r : report.rules)
    rules.append(py::make_tuple(std::string(mp::rule_kind_name(r.kind)),
                                r.lhs, r.rhs, r.frequency,
                                py::make_tuple(r.example_a, r.example_b)));
  py::dict out;
  out["rules"] = rules;
  out["residuals"] = report.residuals;
  return out;
}

py::list precision_py(
    const std::vector<std::pair<std::string, std::string>>& ranked,
    const std::vector<std::pair<std::string, std::string>>& reference,
    const std::vector<std::uint64_t>& cutoffs) {
  std::vector<mp::RankedRow> rows;
  rows.reserve(ranked.size());
  for (const auto& [a, b] : ranked) rows.push_back({a, b, 0.0, 0.0, 0.0});
  const mp::ReferenceSet ref = mp::ReferenceSet::from_pairs(reference);
  const mp::PrecisionReport report =
      mp::precision_at_cutoffs(rows, ref, cutoffs);
  py::list out;
  for (const auto& [cutoff, precision] : report.rows)
    out.append(py::make_tuple(cutoff, precision));
  return out;
}

py::tuple synth_py(std::uint32_t lemmas, std::uint32_t article_tokens,
                   std::uint32_t form_occurrences, std::uint64_t seed) {
  mp::SynthSpec spec;
  spec.lemmas = lemmas;
  spec.article_tokens = article_tokens;
  spec.form_occurrences = form_occurrences;
  spec.seed = seed;
  mp::SynthResult result = mp::generate_synthetic_corpus(spec);
  return py::make_tuple(result.text, result.gold);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "morphology pair discovery core";

  py::register_exception<mp::ConfigError>(m, "ConfigError");
  py::register_exception<mp::CalibrationError>(m, "CalibrationError");
  py::register_exception<mp::UndefinedScoreError>(m, "UndefinedScoreError");

  m.def(
      "edit_distance",
      [](const std::string& a, const std::string& b) {
        return mp::edit_distance(std::string_view(a), std::string_view(b));
      },
      py::arg("a"), py::arg("b"),
      "unit-cost minimum edit distance over code points");
  m.def(
      "ortho_similarity",
      [](const std::string& a, const std::string& b) {
        return mp::ortho_similarity(std::string_view(a), std::string_view(b));
      },
      py::arg("a"), py::arg("b"),
      "1 - MED / max(len); raises for two empty strings");
  m.def(
      "longest_common_edges",
      [](const std::string& a, const std::string& b) {
        const mp::EdgeLens edges = mp::longest_common_edges(a, b);
        return py::make_tuple(edges.left, edges.right);
      },
      py::arg("a"), py::arg("b"),
      "(left, right) longest case-insensitive common edge lengths");
  m.def("parse_pair", &parse_pair_py, py::arg("a"), py::arg("b"),
        "(kind, lhs, rhs) or None for residual pairs");
  m.def("tokenize", &tokenize_py, py::arg("text"),
        py::arg("article_marker") = std::nullopt,
        py::arg("single_article") = false,
        "articles as lists of alphabetic tokens");
  m.def("extract_rules", &extract_rules_py, py::arg("pairs"),
        py::arg("limit") = std::nullopt, py::arg("cumulative") = false,
        "aggregate correspondence rules over (a, b, combined) triples");
  m.def("precision_at_cutoffs", &precision_py, py::arg("ranked"),
        py::arg("reference"), py::arg("cutoffs"),
        "[(cutoff, precision)] against an explicit gold pair list");
  m.def("rank_text", &rank_text_py, py::arg("text"),
        py::arg("article_marker") = std::nullopt,
        py::arg("single_article") = false, py::arg("max_freq_ratio") = 1e-4,
        py::arg("max_word_len") = std::nullopt, py::arg("ortho_floor") = 0.5,
        py::arg("min_dist") = 3, py::arg("max_dist") = 500,
        py::arg("min_cooc") = 3, py::arg("weights") = std::nullopt,
        py::arg("threads") = 0,
        "full in-memory pipeline; returns pairs, weights, counters");
  m.def("generate_synthetic_corpus", &synth_py, py::arg("lemmas") = 500,
        py::arg("article_tokens") = 400, py::arg("form_occurrences") = 6,
        py::arg("seed") = 1, "(corpus_text, gold_pairs)");
}
