#include "cwc/mindist.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>

#include "cwc/errors.hpp"
#include "cwc/graygen.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cwc {
namespace {

using Clock = std::chrono::steady_clock;

// Rows packed back to back, `stride` words each.
struct PackedRows {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t stride = 0;
  std::vector<Word> data;

  explicit PackedRows(const GeneratorMatrix& m) : n(m.n()), k(m.k()), stride(words_for(m.n())) {
    data.reserve(k * stride);
    for (const auto& r : m.rows()) data.insert(data.end(), r.words().begin(), r.words().end());
  }

  const Word* row(std::size_t i) const { return data.data() + i * stride; }
};

inline void xor_into(Word* acc, const Word* row, std::size_t stride) {
  for (std::size_t w = 0; w < stride; ++w) acc[w] ^= row[w];
}

inline std::size_t popcount_words(const Word* acc, std::size_t stride) {
  return weight(std::span<const Word>(acc, stride));
}

void check_enumerable(const GeneratorMatrix& m, const MinDistanceOptions& opts) {
  if (m.k() == 0) throw std::invalid_argument("the zero code has no nonzero codeword");
  if (m.k() > opts.max_k) {
    throw LimitError("minimum distance needs 2^" + std::to_string(m.k()) + " codewords; limit is k <= " +
                     std::to_string(opts.max_k));
  }
  if (m.k() > static_cast<std::size_t>(kMaxGrayLength)) throw LimitError("k exceeds the Gray generator width");
}

// Best codeword seen in one walk: ordered by (weight, class, rank).
struct Best {
  std::size_t weight = std::numeric_limits<std::size_t>::max();
  int t = 0;
  std::uint64_t rank = 0;

  bool better_than(const Best& o) const {
    if (weight != o.weight) return weight < o.weight;
    if (t != o.t) return t < o.t;
    return rank < o.rank;
  }
};

struct ChunkResult {
  Best best;
  std::uint64_t row_ops = 0;
  std::uint64_t codewords = 0;
};

// Walks ranks [lo, hi] of weight class t. The seed costs t row ops, each later
// codeword two.
ChunkResult walk_chunk(const PackedRows& rows, int t, std::uint64_t lo, std::uint64_t hi,
                       std::vector<std::uint64_t>* histogram = nullptr) {
  const int k = static_cast<int>(rows.k);
  ChunkResult res;
  std::vector<Word> acc(rows.stride, 0);

  ConstantWeightIterator it = lo == 1 ? ConstantWeightIterator(k, t) : ConstantWeightIterator::resume(k, t, unrank(k, t, lo));
  for (int p : support(it.word())) xor_into(acc.data(), rows.row(static_cast<std::size_t>(p - 1)), rows.stride);
  res.row_ops += static_cast<std::uint64_t>(t);

  std::uint64_t r = lo;
  while (true) {
    const std::size_t w = popcount_words(acc.data(), rows.stride);
    ++res.codewords;
    if (histogram) ++(*histogram)[w];
    if (w < res.best.weight) res.best = {w, t, r};
    if (r == hi) break;
    const auto d = it.next();
    xor_into(acc.data(), rows.row(static_cast<std::size_t>(d->out_pos - 1)), rows.stride);
    xor_into(acc.data(), rows.row(static_cast<std::size_t>(d->in_pos - 1)), rows.stride);
    res.row_ops += 2;
    ++r;
  }
  return res;
}

Codeword witness_from(const GeneratorMatrix& m, const Best& best) {
  std::vector<std::size_t> idx;
  for (int p : support(unrank(static_cast<int>(m.k()), best.t, best.rank))) idx.push_back(static_cast<std::size_t>(p - 1));
  return xor_combine(std::span<const Codeword>(m.rows()), idx);
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Lexicographic t-subsets of {0..k-1}, the nested loops of the direct approach.
template <typename Body>
void for_each_subset(std::size_t k, std::size_t t, Body&& body) {
  std::vector<std::size_t> idx(t);
  for (std::size_t j = 0; j < t; ++j) idx[j] = j;
  while (true) {
    body(idx);
    std::size_t j = t;
    while (j > 0 && idx[j - 1] == k - t + j - 1) --j;
    if (j == 0) return;
    ++idx[j - 1];
    for (std::size_t l = j; l < t; ++l) idx[l] = idx[l - 1] + 1;
  }
}

}  // namespace

std::uint64_t direct_row_ops(std::size_t k) {
  std::uint64_t total = 0;
  for (std::size_t t = 1; t <= k; ++t) total += t * binomial(static_cast<int>(k), static_cast<int>(t));
  return total;
}

std::uint64_t gray_row_ops(std::size_t k) {
  std::uint64_t total = 0;
  for (std::size_t t = 1; t <= k; ++t) total += t + 2 * (binomial(static_cast<int>(k), static_cast<int>(t)) - 1);
  return total;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranks(std::uint64_t total, int workers) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
  const auto w = static_cast<std::uint64_t>(workers);
  const std::uint64_t base = total / w;
  const std::uint64_t extra = total % w;
  std::uint64_t lo = 1;
  for (std::uint64_t c = 0; c < w; ++c) {
    const std::uint64_t len = base + (c < extra ? 1 : 0);
    if (len == 0) break;
    chunks.emplace_back(lo, lo + len - 1);
    lo += len;
  }
  return chunks;
}

DistanceReport min_distance_direct(const GeneratorMatrix& m, const MinDistanceOptions& opts) {
  check_enumerable(m, opts);
  const auto start = Clock::now();
  const PackedRows rows(m);
  DistanceReport rep;
  rep.n = m.n();
  rep.k = m.k();

  std::vector<Word> acc(rows.stride);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best_idx;
  for (std::size_t t = 1; t <= m.k(); ++t) {
    for_each_subset(m.k(), t, [&](const std::vector<std::size_t>& idx) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i : idx) xor_into(acc.data(), rows.row(i), rows.stride);
      rep.xor_row_ops += t;
      ++rep.codewords_enumerated;
      const std::size_t w = popcount_words(acc.data(), rows.stride);
      if (w < best) {
        best = w;
        best_idx = idx;
      }
    });
    if (opts.stop_at && best <= *opts.stop_at) break;
  }
  rep.d = best;
  rep.witness = xor_combine(std::span<const Codeword>(m.rows()), best_idx);
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

DistanceReport min_distance_gray(const GeneratorMatrix& m, const MinDistanceOptions& opts) {
  check_enumerable(m, opts);
  const auto start = Clock::now();
  const PackedRows rows(m);
  DistanceReport rep;
  rep.n = m.n();
  rep.k = m.k();

  Best best;
  const int k = static_cast<int>(m.k());
  for (int t = 1; t <= k; ++t) {
    const auto res = walk_chunk(rows, t, 1, binomial(k, t));
    rep.xor_row_ops += res.row_ops;
    rep.codewords_enumerated += res.codewords;
    if (res.best.better_than(best)) best = res.best;
    if (opts.stop_at && best.weight <= *opts.stop_at) break;
  }
  rep.d = best.weight;
  rep.witness = witness_from(m, best);
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

DistanceReport min_distance_parallel(const GeneratorMatrix& m, int workers, const MinDistanceOptions& opts) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  check_enumerable(m, opts);
  const auto start = Clock::now();
  const PackedRows rows(m);
  DistanceReport rep;
  rep.n = m.n();
  rep.k = m.k();
  rep.workers = workers;

  Best best;
  const int k = static_cast<int>(m.k());
  for (int t = 1; t <= k; ++t) {
    const auto chunks = partition_ranks(binomial(k, t), workers);
    std::vector<ChunkResult> results(chunks.size());
    const auto count = static_cast<std::ptrdiff_t>(chunks.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
    for (std::ptrdiff_t c = 0; c < count; ++c) {
      results[static_cast<std::size_t>(c)] = walk_chunk(rows, t, chunks[static_cast<std::size_t>(c)].first,
                                                        chunks[static_cast<std::size_t>(c)].second);
    }
    for (const auto& res : results) {
      rep.xor_row_ops += res.row_ops;
      rep.codewords_enumerated += res.codewords;
      if (res.best.better_than(best)) best = res.best;
    }
    if (opts.stop_at && best.weight <= *opts.stop_at) break;
  }
  rep.d = best.weight;
  rep.witness = witness_from(m, best);
  rep.wall_time_ms = elapsed_ms(start);
  return rep;
}

ClassHistograms weight_classes_direct(const GeneratorMatrix& m, std::size_t max_k) {
  check_enumerable(m, MinDistanceOptions{max_k, std::nullopt});
  const PackedRows rows(m);
  ClassHistograms hist(m.k() + 1, std::vector<std::uint64_t>(m.n() + 1, 0));
  std::vector<Word> acc(rows.stride);
  for (std::size_t t = 1; t <= m.k(); ++t) {
    for_each_subset(m.k(), t, [&](const std::vector<std::size_t>& idx) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i : idx) xor_into(acc.data(), rows.row(i), rows.stride);
      ++hist[t][popcount_words(acc.data(), rows.stride)];
    });
  }
  return hist;
}

ClassHistograms weight_classes_gray(const GeneratorMatrix& m, std::size_t max_k) {
  check_enumerable(m, MinDistanceOptions{max_k, std::nullopt});
  const PackedRows rows(m);
  ClassHistograms hist(m.k() + 1, std::vector<std::uint64_t>(m.n() + 1, 0));
  const int k = static_cast<int>(m.k());
  for (int t = 1; t <= k; ++t) walk_chunk(rows, t, 1, binomial(k, t), &hist[static_cast<std::size_t>(t)]);
  return hist;
}

}  // namespace cwc
