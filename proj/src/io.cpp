#include "morphpairs/io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "morphpairs/errors.hpp"

namespace morphpairs::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + ": " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path);
  return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path + ": " + std::strerror(errno));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string fixed9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  return buf;
}

std::string g17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

namespace {

double parse_double(std::string_view text, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("malformed number '" + std::string(text) + "'", line_no);
  return value;
}

std::uint64_t parse_count(std::string_view text, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("malformed count '" + std::string(text) + "'", line_no);
  return value;
}

}  // namespace

std::string render_vocab(const CorpusIndex& index) {
  struct Row {
    const std::string* word;
    std::uint64_t freq;
  };
  std::vector<Row> rows;
  rows.reserve(index.corpus.words.size());
  for (WordId id = 0; id < index.corpus.words.size(); ++id)
    rows.push_back({&index.word(id), index.vocab.freq[id]});
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.freq != y.freq) return x.freq > y.freq;
    return *x.word < *y.word;
  });
  std::string out;
  for (const Row& row : rows) {
    out += *row.word;
    out += '\t';
    out += std::to_string(row.freq);
    out += '\n';
  }
  return out;
}

std::string render_ortho_pairs(const CorpusIndex& index,
                               std::span<const OrthoPair> pairs) {
  std::string out;
  for (const OrthoPair& p : pairs) {
    out += index.word(p.a);
    out += '\t';
    out += index.word(p.b);
    out += '\t';
    out += fixed9(p.score);
    out += '\n';
  }
  return out;
}

std::string render_sem_pairs(const CorpusIndex& index,
                             std::span<const SemPair> pairs) {
  std::string out;
  for (const SemPair& p : pairs) {
    out += index.word(p.a);
    out += '\t';
    out += index.word(p.b);
    out += '\t';
    out += std::to_string(p.cooc);
    out += '\t';
    out += fixed9(p.mi);
    out += '\n';
  }
  return out;
}

std::string render_ranked(std::span<const RankedRow> rows,
                          const Weights* weights) {
  std::string out = "# wOrtho=";
  out += weights ? fixed9(weights->ortho) : "none";
  out += " wSem=";
  out += weights ? fixed9(weights->sem) : "none";
  out += '\n';
  std::uint64_t rank = 0;
  for (const RankedRow& row : rows) {
    out += std::to_string(++rank);
    out += '\t';
    out += row.a;
    out += '\t';
    out += row.b;
    out += '\t';
    out += fixed9(row.ortho);
    out += '\t';
    out += fixed9(row.mi);
    out += '\t';
    out += fixed9(row.combined);
    out += '\n';
  }
  return out;
}

RankedFile parse_ranked(std::string_view text) {
  RankedFile file;
  for_each_line(text, [&file](std::string_view line, std::size_t line_no) {
    if (line.empty()) return;
    if (line.front() == '#') {
      const std::size_t wo = line.find("wOrtho=");
      const std::size_t ws = line.find("wSem=");
      if (wo != std::string_view::npos && ws != std::string_view::npos) {
        std::string_view ortho = line.substr(wo + 7);
        ortho = ortho.substr(0, ortho.find(' '));
        std::string_view sem = line.substr(ws + 5);
        sem = sem.substr(0, sem.find(' '));
        if (ortho != "none" && sem != "none") {
          file.weights.ortho = parse_double(ortho, line_no);
          file.weights.sem = parse_double(sem, line_no);
          file.has_weights = true;
        }
      }
      return;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 6)
      throw ParseError("expected 6 tab-separated fields", line_no);
    if (fields[1].empty() || fields[2].empty())
      throw ParseError("empty word field", line_no);
    parse_count(fields[0], line_no);  // rank column, value re-derivable
    file.rows.push_back({std::string(fields[1]), std::string(fields[2]),
                         parse_double(fields[3], line_no),
                         parse_double(fields[4], line_no),
                         parse_double(fields[5], line_no)});
  });
  return file;
}

RankedFile read_ranked(const std::string& path) {
  return parse_ranked(read_file(path));
}

std::string render_rules(std::span<const CorrespondenceRule> rules) {
  std::string out;
  for (const CorrespondenceRule& rule : rules) {
    out += rule_kind_name(rule.kind);
    out += '\t';
    out += rule.lhs.empty() ? std::string(kEpsilon) : rule.lhs;
    out += '\t';
    out += rule.rhs.empty() ? std::string(kEpsilon) : rule.rhs;
    out += '\t';
    out += std::to_string(rule.frequency);
    out += '\t';
    out += rule.example_a;
    out += '\t';
    out += rule.example_b;
    out += '\n';
  }
  return out;
}

std::string render_residuals(
    std::span<const std::pair<std::string, std::string>> residuals) {
  std::string out;
  for (const auto& [a, b] : residuals) {
    out += a;
    out += '\t';
    out += b;
    out += '\n';
  }
  return out;
}

std::string render_precision(const PrecisionReport& report) {
  std::string out;
  for (const auto& [cutoff, precision] : report.rows) {
    out += std::to_string(cutoff);
    out += '\t';
    out += fixed9(precision);
    out += '\n';
  }
  return out;
}

}  // namespace morphpairs::io
