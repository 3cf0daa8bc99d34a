#pragma once

// Minimum distance of a binary linear code by exhaustive enumeration of all
// 2^k - 1 nonzero codewords, grouped into weight classes t = 1..k (codewords
// that combine exactly t generator rows).
//
//   min_distance_direct   - every t-subset of rows XORed from scratch (t row ops each)
//   min_distance_gray     - revolving-door order, two row ops per codeword after the first
//   min_distance_parallel - the Gray walk split into contiguous rank chunks per class
//
// One "row op" is one XOR (or load) of a full n-bit row into the accumulator.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cwc/gf2.hpp"

namespace cwc {

struct DistanceReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  Codeword witness;
  std::uint64_t xor_row_ops = 0;
  std::uint64_t codewords_enumerated = 0;
  double wall_time_ms = 0.0;
  int workers = 1;
};

struct MinDistanceOptions {
  std::size_t max_k = kDefaultEnumerationLimit;
  // Stop after the first weight class in which a codeword of weight <= stop_at was seen.
  std::optional<std::size_t> stop_at;
};

DistanceReport min_distance_direct(const GeneratorMatrix& m, const MinDistanceOptions& opts = {});
DistanceReport min_distance_gray(const GeneratorMatrix& m, const MinDistanceOptions& opts = {});
DistanceReport min_distance_parallel(const GeneratorMatrix& m, int workers, const MinDistanceOptions& opts = {});

// Splits ranks [1, total] into at most `workers` contiguous nonempty chunks (inclusive bounds).
// Earlier chunks take the remainder, so sizes differ by at most one.
std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranks(std::uint64_t total, int workers);

// hist[t][w] = number of codewords in weight class t having Hamming weight w.
using ClassHistograms = std::vector<std::vector<std::uint64_t>>;
ClassHistograms weight_classes_direct(const GeneratorMatrix& m, std::size_t max_k = kDefaultEnumerationLimit);
ClassHistograms weight_classes_gray(const GeneratorMatrix& m, std::size_t max_k = kDefaultEnumerationLimit);

// Closed-form row-op counts for a complete run.
std::uint64_t direct_row_ops(std::size_t k);
std::uint64_t gray_row_ops(std::size_t k);

}  // namespace cwc
