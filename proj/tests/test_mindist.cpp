#include <doctest.h>

#include "cwc/errors.hpp"
#include "cwc/graygen.hpp"
#include "cwc/mindist.hpp"
#include "cwc/random.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace cwc;

namespace {

bool is_codeword(const GeneratorMatrix& m, const Codeword& w) {
  return oracle::all_codewords(m).contains(w.to_string());
}

}  // namespace

TEST_CASE("known codes") {
  const auto h = fixtures::hamming8();
  for (const auto& r : {min_distance_direct(h), min_distance_gray(h), min_distance_parallel(h, 3)}) {
    CHECK(r.n == 8);
    CHECK(r.k == 4);
    CHECK(r.d == 4);
    CHECK(weight(r.witness) == 4);
    CHECK(is_codeword(h, r.witness));
    CHECK(r.codewords_enumerated == 15);
  }
  CHECK(min_distance_gray(fixtures::pairs8()).d == 2);
  CHECK(min_distance_gray(fixtures::repetition(9)).d == 9);
  CHECK(min_distance_direct(GeneratorMatrix::identity(6)).d == 1);
}

TEST_CASE("engines agree with the naive oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 13;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 9);
    const auto m = random_full_rank(n, k, rng);
    const auto expect = oracle::min_distance(m);
    const auto direct = min_distance_direct(m);
    const auto gray = min_distance_gray(m);
    CHECK(direct.d == expect);
    CHECK(gray.d == expect);
    CHECK(is_codeword(m, gray.witness));
    CHECK(weight(gray.witness) == gray.d);
    CHECK(weight_classes_direct(m) == weight_classes_gray(m));
  }
}

TEST_CASE("class histograms total the weight distribution") {
  Rng rng(9);
  const auto m = random_full_rank(12, 7, rng);
  const auto hist = weight_classes_gray(m);
  auto dist = oracle::weight_distribution(m);
  std::vector<std::uint64_t> total(m.n() + 1, 0);
  for (std::size_t t = 1; t < hist.size(); ++t) {
    std::uint64_t in_class = 0;
    for (std::size_t w = 0; w < hist[t].size(); ++w) {
      total[w] += hist[t][w];
      in_class += hist[t][w];
    }
    CHECK(in_class == binomial(7, static_cast<int>(t)));
  }
  dist[0] -= 1;  // zero word is not enumerated
  CHECK(total == dist);
}

TEST_CASE("row-op counters") {
  CHECK(direct_row_ops(3) == 12);
  CHECK(gray_row_ops(3) == 14);
  CHECK(direct_row_ops(4) == 32);
  CHECK(gray_row_ops(4) == 32);
  CHECK(direct_row_ops(6) == 192);
  CHECK(gray_row_ops(6) == 135);
  CHECK(direct_row_ops(8) == 1024);
  CHECK(gray_row_ops(8) == 530);
  CHECK(direct_row_ops(10) == 5120);
  CHECK(gray_row_ops(10) == 2081);
  for (std::size_t k = 5; k <= 28; ++k) CHECK(gray_row_ops(k) < direct_row_ops(k));

  Rng rng(4);
  for (std::size_t k : {4, 6, 8, 10}) {
    const auto m = random_full_rank(16, k, rng);
    CHECK(min_distance_direct(m).xor_row_ops == direct_row_ops(k));
    CHECK(min_distance_gray(m).xor_row_ops == gray_row_ops(k));
    CHECK(min_distance_gray(m).codewords_enumerated == (std::uint64_t{1} << k) - 1);
  }
}

TEST_CASE("partition_ranks") {
  using Chunks = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  CHECK(partition_ranks(10, 3) == Chunks{{1, 4}, {5, 7}, {8, 10}});
  CHECK(partition_ranks(2, 4) == Chunks{{1, 1}, {2, 2}});
  CHECK(partition_ranks(5, 1) == Chunks{{1, 5}});
  CHECK(partition_ranks(0, 4).empty());
}

TEST_CASE("parallel runs are deterministic and match serial") {
  Rng rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    const auto m = random_full_rank(18, 9, rng);
    const auto serial = min_distance_gray(m);
    for (int w : {1, 2, 3, 4, 8, 13}) {
      const auto par = min_distance_parallel(m, w);
      CHECK(par.d == serial.d);
      CHECK(par.witness == serial.witness);
      CHECK(par.xor_row_ops >= serial.xor_row_ops);
      CHECK(par.codewords_enumerated == serial.codewords_enumerated);
      CHECK(par.workers == w);
    }
  }
  CHECK(min_distance_parallel(fixtures::hamming8(), 1).xor_row_ops == gray_row_ops(4));
  CHECK_THROWS_AS(min_distance_parallel(fixtures::hamming8(), 0), std::invalid_argument);
}

TEST_CASE("self-dual codes have even minimum distance") {
  CHECK(min_distance_gray(fixtures::hamming8()).d % 2 == 0);
  CHECK(min_distance_gray(fixtures::repetition(2)).d == 2);
}

TEST_CASE("stop_at ends early at a class boundary") {
  const auto m = GeneratorMatrix::identity(10);
  MinDistanceOptions opts;
  opts.stop_at = 1;
  const auto gray = min_distance_gray(m, opts);
  CHECK(gray.d == 1);
  CHECK(gray.codewords_enumerated == 10);
  const auto direct = min_distance_direct(m, opts);
  CHECK(direct.codewords_enumerated == 10);
  const auto par = min_distance_parallel(m, 4, opts);
  CHECK(par.codewords_enumerated == 10);
  CHECK(par.witness == gray.witness);
}

TEST_CASE("limits") {
  MinDistanceOptions opts;
  opts.max_k = 5;
  CHECK_THROWS_AS(min_distance_gray(GeneratorMatrix::identity(6), opts), LimitError);
  CHECK_THROWS_AS(min_distance_direct(GeneratorMatrix::identity(6), opts), LimitError);
  CHECK_THROWS_AS(min_distance_gray(GeneratorMatrix(4, {})), std::invalid_argument);
}
