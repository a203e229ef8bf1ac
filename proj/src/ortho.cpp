#include "morphpairs/ortho.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "morphpairs/unicode.hpp"

namespace morphpairs {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 2;

unsigned resolve_threads(unsigned requested) {
  unsigned n = requested ? requested : std::thread::hardware_concurrency();
  return n ? n : 1;
}

// Banded DP with caller-provided row buffer; returns the exact distance when
// it is <= bound, kInf otherwise.
std::size_t banded_distance(std::u32string_view a, std::u32string_view b,
                            std::size_t bound, std::vector<std::size_t>& row) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t m = a.size(), n = b.size();
  if (m - n > bound) return kInf;  // MED >= length difference
  if (n == 0) return m <= bound ? m : kInf;

  // Cells outside the half-width `bound` band around the main diagonal can
  // only hold values > bound, so they stay at kInf.
  row.assign(n + 1, kInf);
  for (std::size_t j = 0; j <= std::min(n, bound); ++j) row[j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t jlo = i > bound ? i - bound : 0;
    const std::size_t jhi = std::min(n, i + bound);
    std::size_t diag;
    std::size_t left = kInf;
    std::size_t row_min = kInf;
    if (jlo == 0) {
      diag = row[0];
      row[0] = i;
      left = i;
      row_min = i;
    } else {
      diag = row[jlo - 1];
      row[jlo - 1] = kInf;  // fell out of the band
    }
    for (std::size_t j = std::max<std::size_t>(jlo, 1); j <= jhi; ++j) {
      const std::size_t sub = diag + (a[i - 1] != b[j - 1]);
      diag = row[j];
      std::size_t val = sub;
      if (diag + 1 < val) val = diag + 1;
      if (left + 1 < val) val = left + 1;
      row[j] = val;
      left = val;
      if (val < row_min) row_min = val;
    }
    if (row_min > bound) return kInf;
  }
  return row[n] <= bound ? row[n] : kInf;
}

}  // namespace

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);  // b is the shorter
  const std::size_t m = a.size(), n = b.size();
  if (n == 0) return m;

  std::vector<std::size_t> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t sub = diag + (a[i - 1] != b[j - 1]);
      diag = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
    }
  }
  return row[n];
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  return edit_distance(uni::decode(a), uni::decode(b));
}

std::optional<std::size_t> edit_distance_within(std::u32string_view a,
                                                std::u32string_view b,
                                                std::size_t bound) {
  std::vector<std::size_t> row;
  const std::size_t d = banded_distance(a, b, bound, row);
  if (d == kInf) return std::nullopt;
  return d;
}

double ortho_similarity(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0)
    throw UndefinedScoreError(
        "orthographic similarity undefined for two empty strings");
  const std::size_t med = edit_distance(a, b);
  return 1.0 - static_cast<double>(med) / static_cast<double>(longest);
}

double ortho_similarity(std::string_view a, std::string_view b) {
  return ortho_similarity(uni::decode(a), uni::decode(b));
}

namespace {

struct Candidate {
  WordId id;
  std::u32string chars;
  const std::string* word;
};

// Largest distance still scoring >= floor (minus tolerance) against the
// longer length.
std::size_t max_distance_for(std::size_t longest, double floor) {
  double budget =
      (1.0 - floor + kFloorTolerance) * static_cast<double>(longest);
  if (budget < 0.0) return 0;
  return static_cast<std::size_t>(budget);
}

void emit_pair(const Candidate& x, const Candidate& y, double score,
               std::vector<OrthoPair>& out) {
  if (*x.word < *y.word)
    out.push_back({x.id, y.id, score});
  else
    out.push_back({y.id, x.id, score});
}

}  // namespace

std::vector<OrthoPair> generate_ortho_pairs(const CorpusIndex& index,
                                            std::span<const WordId> content,
                                            const OrthoOptions& options) {
  if (!(options.floor > 0.0 && options.floor <= 1.0))
    throw ConfigError("ortho floor must be in (0, 1]");

  std::vector<Candidate> cands;
  cands.reserve(content.size());
  for (WordId id : content)
    cands.push_back({id, uni::decode(index.word(id)), &index.word(id)});
  // Length-sorted order makes the length pre-filter a contiguous scan.
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& x, const Candidate& y) {
              if (x.chars.size() != y.chars.size())
                return x.chars.size() < y.chars.size();
              return *x.word < *y.word;
            });

  const unsigned threads = resolve_threads(options.threads);
  std::vector<std::vector<OrthoPair>> partial(threads);
  std::atomic<std::size_t> next{0};

  auto worker = [&](unsigned slot) {
    std::vector<OrthoPair>& out = partial[slot];
    std::vector<std::size_t> scratch;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cands.size()) break;
      const Candidate& x = cands[i];
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        const Candidate& y = cands[j];
        const std::size_t longest = y.chars.size();
        const double denom = static_cast<double>(longest);
        if (options.prune) {
          const std::size_t bound = max_distance_for(longest, options.floor);
          if (longest - x.chars.size() > bound) break;  // gap grows with j
          const std::size_t med =
              banded_distance(x.chars, y.chars, bound, scratch);
          if (med == kInf) continue;
          const double score = 1.0 - static_cast<double>(med) / denom;
          if (score >= options.floor - kFloorTolerance)
            emit_pair(x, y, score, out);
        } else {
          const std::size_t med = edit_distance(x.chars, y.chars);
          const double score = 1.0 - static_cast<double>(med) / denom;
          if (score >= options.floor - kFloorTolerance)
            emit_pair(x, y, score, out);
        }
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::vector<OrthoPair> result;
  std::size_t total = 0;
  for (const auto& p : partial) total += p.size();
  result.reserve(total);
  for (auto& p : partial) result.insert(result.end(), p.begin(), p.end());

  std::sort(result.begin(), result.end(),
            [&index](const OrthoPair& x, const OrthoPair& y) {
              if (x.score != y.score) return x.score > y.score;
              const std::string& xa = index.word(x.a);
              const std::string& ya = index.word(y.a);
              if (xa != ya) return xa < ya;
              return index.word(x.b) < index.word(y.b);
            });
  return result;
}

}  // namespace morphpairs
