#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "morphpairs/errors.hpp"
#include "morphpairs/ranking.hpp"
#include "morphpairs/rules.hpp"
#include "morphpairs/unicode.hpp"

using namespace morphpairs;

namespace {

RankedRow row(std::string a, std::string b, double combined = 1.0) {
  return {std::move(a), std::move(b), 0.0, 0.0, combined};
}

}  // namespace

TEST_CASE("longest common edges are case-insensitive and measured in code points") {
  const EdgeLens shared = longest_common_edges("established", "establishing");
  CHECK(shared.left == 9);
  CHECK(shared.right == 0);

  const EdgeLens ordinal = longest_common_edges("Erstens", "Drittens");
  CHECK(ordinal.left == 0);
  CHECK(ordinal.right == 4);

  const EdgeLens none = longest_common_edges("Alter", "\xc3\xa4lteren");
  CHECK(none.left == 0);
  CHECK(none.right == 0);

  const EdgeLens folded = longest_common_edges("Dog", "dogs");
  CHECK(folded.left == 3);

  const EdgeLens umlaut = longest_common_edges("Anschlag", "Anschl\xc3\xa4ge");
  CHECK(umlaut.left == 6);
  CHECK(umlaut.right == 0);
}

TEST_CASE("parse_pair reproduces the documented rules") {
  SUBCASE("plain suffix") {
    const auto r = parse_pair("rot", "rote");
    REQUIRE(r.has_value());
    CHECK(r->kind == RuleKind::suffix);
    CHECK(r->lhs == "");
    CHECK(r->rhs == "e");
  }
  SUBCASE("suffix with material on both sides") {
    const auto r = parse_pair("Anschlag", "Anschl\xc3\xa4ge");
    REQUIRE(r.has_value());
    CHECK(r->kind == RuleKind::suffix);
    CHECK(r->lhs == "ag");
    CHECK(r->rhs == "\xc3\xa4ge");
  }
  SUBCASE("prefix rule") {
    const auto r = parse_pair("structured", "unstructured");
    REQUIRE(r.has_value());
    CHECK(r->kind == RuleKind::prefix);
    CHECK(r->lhs == "");
    CHECK(r->rhs == "un");
  }
  SUBCASE("plural s") {
    const auto r = parse_pair("allotment", "allotments");
    REQUIRE(r.has_value());
    CHECK(r->kind == RuleKind::suffix);
    CHECK(r->lhs == "");
    CHECK(r->rhs == "s");
  }
  SUBCASE("prefix stem keeps the right edge") {
    const auto r = parse_pair("Mutter", "M\xc3\xbctter");
    REQUIRE(r.has_value());
    CHECK(r->kind == RuleKind::prefix);
    CHECK(r->lhs == "Mu");
    CHECK(r->rhs == "M\xc3\xbc");
  }
  SUBCASE("shared tail only") {
    const auto r = parse_pair("Erstens", "Drittens");
    REQUIRE(r.has_value());
    CHECK(r->kind == RuleKind::prefix);
    CHECK(r->lhs == "Drit");
    CHECK(r->rhs == "Ers");
  }
  SUBCASE("argument order does not matter") {
    const auto forward = parse_pair("rot", "rote");
    const auto backward = parse_pair("rote", "rot");
    REQUIRE(forward.has_value());
    REQUIRE(backward.has_value());
    CHECK(forward->kind == backward->kind);
    CHECK(forward->lhs == backward->lhs);
    CHECK(forward->rhs == backward->rhs);
  }
}

TEST_CASE("pairs without usable edges are residuals") {
  CHECK_FALSE(parse_pair("Alter", "\xc3\xa4lteren").has_value());
  CHECK_FALSE(parse_pair("dog", "Dog").has_value());
  CHECK_FALSE(parse_pair("abc", "xyz").has_value());
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(parse_pair("", "rote"), ConfigError);
  CHECK_THROWS_AS(parse_pair("rot", ""), ConfigError);
  CHECK_THROWS_AS(parse_pair("rot", "rot"), ConfigError);
}

TEST_CASE("rule extraction aggregates identical rules") {
  const std::vector<RankedRow> ranked = {
      row("rot", "rote", 3.0),
      row("Papst", "Papstes", 2.5),
      row("gut", "gute", 2.0),
      row("Alter", "\xc3\xa4lteren", 1.5),
      row("Jelzin", "Jelzins", 1.0),
  };
  const RuleReport report = extract_rules(ranked);
  REQUIRE(report.rules.size() == 3);

  // frequency ranking: the epsilon/e rule appears twice.
  CHECK(report.rules[0].kind == RuleKind::suffix);
  CHECK(report.rules[0].lhs == "");
  CHECK(report.rules[0].rhs == "e");
  CHECK(report.rules[0].frequency == 2);
  CHECK(report.rules[0].example_a == "rot");
  CHECK(report.rules[0].example_b == "rote");
  CHECK(report.rules[0].cumulative == doctest::Approx(5.0));

  std::map<std::string, std::uint64_t> by_rhs;
  for (const auto& rule : report.rules) by_rhs[rule.rhs] = rule.frequency;
  CHECK(by_rhs.at("es") == 1);
  CHECK(by_rhs.at("s") == 1);

  REQUIRE(report.residuals.size() == 1);
  CHECK(report.residuals[0].first == "Alter");
  CHECK(report.residuals[0].second == "\xc3\xa4lteren");
}

TEST_CASE("cumulative ranking orders by summed combined score") {
  const std::vector<RankedRow> ranked = {
      row("walk", "walks", 1.0),
      row("talk", "talks", 1.0),
      row("big", "biggest", 9.0),
  };
  const RuleReport by_freq = extract_rules(ranked, std::nullopt,
                                           RuleRanking::frequency);
  REQUIRE(by_freq.rules.size() == 2);
  CHECK(by_freq.rules[0].rhs == "s");

  const RuleReport by_mass = extract_rules(ranked, std::nullopt,
                                           RuleRanking::cumulative);
  REQUIRE(by_mass.rules.size() == 2);
  CHECK(by_mass.rules[0].rhs == "gest");
  CHECK(by_mass.rules[0].cumulative == doctest::Approx(9.0));
}

TEST_CASE("the limit restricts extraction to the top of the ranking") {
  const std::vector<RankedRow> ranked = {
      row("rot", "rote", 3.0),
      row("gut", "gute", 2.0),
      row("Jelzin", "Jelzins", 1.0),
  };
  const RuleReport top2 = extract_rules(ranked, 2);
  REQUIRE(top2.rules.size() == 1);
  CHECK(top2.rules[0].frequency == 2);
  CHECK(top2.rules[0].rhs == "e");
}

TEST_CASE("frequencies plus residuals conserve the row count") {
  std::mt19937_64 rng(67);
  const std::vector<std::string> stems = {"walk", "jump", "look", "help",
                                          "rein", "blau", "hoch"};
  const std::vector<std::string> suffixes = {"", "s", "ed", "ing", "en"};
  std::vector<RankedRow> ranked;
  for (int i = 0; i < 200; ++i) {
    const std::string& stem = stems[rng() % stems.size()];
    std::string a = stem + suffixes[rng() % suffixes.size()];
    std::string b = stem + suffixes[rng() % suffixes.size()];
    if (a == b) continue;
    ranked.push_back(row(a, b, 1.0 + 0.01 * static_cast<double>(i)));
  }
  const RuleReport report = extract_rules(ranked);
  std::uint64_t total = 0;
  for (const auto& rule : report.rules) total += rule.frequency;
  CHECK(total + report.residuals.size() == ranked.size());
}

TEST_CASE("one synthetic rule dominates a uniform list") {
  std::vector<RankedRow> ranked;
  for (int i = 0; i < 100; ++i) {
    const std::string stem = "stem" + std::to_string(i);
    ranked.push_back(row(stem, stem + "s", 2.0));
  }
  const RuleReport report = extract_rules(ranked);
  REQUIRE(report.rules.size() == 1);
  CHECK(report.rules[0].kind == RuleKind::suffix);
  CHECK(report.rules[0].lhs == "");
  CHECK(report.rules[0].rhs == "s");
  CHECK(report.rules[0].frequency == 100);
  CHECK(report.rules[0].cumulative == doctest::Approx(200.0));
  CHECK(report.residuals.empty());
}

TEST_CASE("extracted rules reapply to their example pairs") {
  // Applying lhs -> rhs to the stem side of the example reproduces the other
  // word, up to the case folding used for edge detection.
  std::mt19937_64 rng(71);
  const std::vector<std::string> stems = {"licht", "berg", "wald", "gras"};
  const std::vector<std::string> endings = {"e", "es", "en", "chen"};
  std::vector<RankedRow> ranked;
  for (const auto& stem : stems)
    for (const auto& ending : endings)
      ranked.push_back(row(stem, stem + ending, 1.0));
  const RuleReport report = extract_rules(ranked);
  for (const auto& rule : report.rules) {
    REQUIRE(rule.kind == RuleKind::suffix);
    const std::string& a = rule.example_a;
    const std::string& b = rule.example_b;
    REQUIRE(a.size() >= rule.lhs.size());
    const std::string stem_a = a.substr(0, a.size() - rule.lhs.size());
    CHECK(stem_a + rule.rhs == b);
  }
}

TEST_CASE("empty input produces an empty report") {
  const RuleReport report = extract_rules({});
  CHECK(report.rules.empty());
  CHECK(report.residuals.empty());
}
