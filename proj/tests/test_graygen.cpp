#include <doctest.h>

#include <algorithm>
#include <set>

#include "cwc/graygen.hpp"
#include "support/oracles.hpp"

using namespace cwc;

namespace {

Word mask_of(std::initializer_list<int> positions) {
  Word w = 0;
  for (int p : positions) w |= Word{1} << (p - 1);
  return w;
}

const std::vector<std::vector<int>> kExampleTriples = {
    {1, 2, 3}, {1, 3, 4}, {2, 3, 4}, {1, 2, 4}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}, {1, 3, 5}, {2, 3, 5}, {1, 2, 5},
    {1, 5, 6}, {2, 5, 6}, {3, 5, 6}, {4, 5, 6}, {1, 4, 6}, {2, 4, 6}, {3, 4, 6}, {1, 3, 6}, {2, 3, 6}, {1, 2, 6}};

const std::vector<std::pair<int, int>> kExamplePairs = {{2, 4}, {1, 2}, {1, 3}, {2, 5}, {1, 2}, {2, 3}, {1, 4},
                                                        {1, 2}, {1, 3}, {2, 6}, {1, 2}, {2, 3}, {3, 4}, {1, 5},
                                                        {1, 2}, {2, 3}, {1, 4}, {1, 2}, {1, 3}};

}  // namespace

TEST_CASE("binomial table") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
}

TEST_CASE("k=6, t=3 triples") {
  const auto seq = constant_weight_sequence(6, 3);
  REQUIRE(seq.size() == 20);
  for (std::size_t r = 0; r < seq.size(); ++r) CHECK(support(seq[r]) == kExampleTriples[r]);
  CHECK(render_word(seq.front(), 6) == "000111");
  CHECK(render_support(seq.back()) == "{1,2,6}");
}

TEST_CASE("k=6, t=3 swap pairs") {
  const auto deltas = swap_deltas(6, 3);
  REQUIRE(deltas.size() == 19);
  for (std::size_t r = 0; r < deltas.size(); ++r) {
    const auto [lo, hi] = std::minmax(deltas[r].out_pos, deltas[r].in_pos);
    CHECK(lo == kExamplePairs[r].first);
    CHECK(hi == kExamplePairs[r].second);
  }
  // [2,4] leaves 2 and enters 4; [1,3] in step 3 leaves 3.
  CHECK(deltas[0] == SwapDelta{2, 4});
  CHECK(deltas[2] == SwapDelta{3, 1});
}

TEST_CASE("k=5, t=2 deltas as (out, in)") {
  const std::vector<SwapDelta> expected{{1, 3}, {2, 1}, {1, 4}, {3, 2}, {2, 1}, {1, 5}, {4, 3}, {3, 2}, {2, 1}};
  CHECK(swap_deltas(5, 2) == expected);
}

TEST_CASE("k=4, t=2 has all six words") {
  const auto seq = constant_weight_sequence(4, 2);
  std::vector<std::string> rendered;
  for (auto w : seq) rendered.push_back(render_word(w, 4));
  CHECK(rendered == std::vector<std::string>{"0011", "0110", "0101", "1100", "1010", "1001"});
}

TEST_CASE("sequence is the weight-t subsequence of the reflected Gray code") {
  for (int k = 1; k <= 12; ++k) {
    for (int t = 1; t <= k; ++t) {
      CAPTURE(k);
      CAPTURE(t);
      CHECK(constant_weight_sequence(k, t) == oracle::gray_subsequence(k, t));
    }
  }
}

TEST_CASE("completeness and adjacency up to k=16") {
  for (int k = 1; k <= 16; ++k) {
    for (int t = 0; t <= k; ++t) {
      CAPTURE(k);
      CAPTURE(t);
      ConstantWeightIterator it(k, t);
      std::set<Word> seen{it.word()};
      Word prev = it.word();
      bool adjacent = true;
      while (auto d = it.next()) {
        const Word w = it.word();
        adjacent = adjacent && oracle::hamming(prev, w) == 2 && ((prev >> (d->out_pos - 1)) & 1U) &&
                   ((w >> (d->in_pos - 1)) & 1U) && !((w >> (d->out_pos - 1)) & 1U);
        seen.insert(w);
        prev = w;
      }
      CHECK(adjacent);
      CHECK(seen.size() == binomial(k, t));
      CHECK(std::all_of(seen.begin(), seen.end(), [t](Word w) { return __builtin_popcountll(w) == t; }));
    }
  }
}

TEST_CASE("endpoints") {
  for (int k = 1; k <= 12; ++k) {
    for (int t = 1; t <= k; ++t) {
      const auto seq = constant_weight_sequence(k, t);
      Word first = (Word{1} << t) - 1;
      CHECK(seq.front() == first);
      Word last = (Word{1} << (t - 1)) - 1;
      last |= Word{1} << (k - 1);
      CHECK(seq.back() == last);
    }
  }
}

TEST_CASE("degenerate weights") {
  CHECK(constant_weight_sequence(5, 0) == std::vector<Word>{0});
  CHECK(constant_weight_sequence(5, 5) == std::vector<Word>{0b11111});
  CHECK(swap_deltas(5, 5).empty());
  CHECK(constant_weight_sequence(1, 1) == std::vector<Word>{1});
  CHECK(constant_weight_sequence(63, 1).size() == 63);
  CHECK_THROWS_AS(ConstantWeightIterator(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(ConstantWeightIterator(64, 1), std::invalid_argument);
}

TEST_CASE("next after the end stays done") {
  ConstantWeightIterator it(3, 2);
  while (it.next()) {
  }
  CHECK(it.done());
  CHECK_FALSE(it.next().has_value());
}

TEST_CASE("resume reproduces the live machine state") {
  for (int k = 1; k <= 13; ++k) {
    for (int t = 1; t <= k; ++t) {
      ConstantWeightIterator live(k, t);
      bool all_equal = true;
      do {
        const auto resumed = ConstantWeightIterator::resume(k, t, live.word());
        all_equal = all_equal && resumed.state() == live.state() && resumed.word() == live.word();
      } while (live.next());
      CAPTURE(k);
      CAPTURE(t);
      CHECK(all_equal);
    }
  }
}

TEST_CASE("resume then iterate yields the tail") {
  const auto seq = constant_weight_sequence(10, 4);
  for (std::size_t start : {std::size_t{0}, std::size_t{1}, std::size_t{17}, seq.size() / 2, seq.size() - 1}) {
    auto it = ConstantWeightIterator::resume(10, 4, seq[start]);
    std::vector<Word> tail{it.word()};
    while (it.next()) tail.push_back(it.word());
    CHECK(tail == std::vector<Word>(seq.begin() + static_cast<std::ptrdiff_t>(start), seq.end()));
  }
  CHECK_THROWS_AS(ConstantWeightIterator::resume(6, 3, mask_of({1, 2})), std::invalid_argument);
}

TEST_CASE("rank and unrank") {
  CHECK(unrank(6, 3, 1) == mask_of({1, 2, 3}));
  CHECK(unrank(6, 3, 7) == mask_of({3, 4, 5}));
  CHECK(rank(6, mask_of({3, 4, 5}), 3) == 7);
  CHECK(unrank(6, 3, 20) == mask_of({1, 2, 6}));
  CHECK_THROWS_AS(unrank(6, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(unrank(6, 3, 21), std::out_of_range);
  CHECK_THROWS_AS(rank(6, mask_of({1, 2}), 3), std::invalid_argument);
  CHECK_THROWS_AS(rank(4, mask_of({1, 2, 5}), 3), std::invalid_argument);

  for (int k = 1; k <= 10; ++k) {
    for (int t = 0; t <= k; ++t) {
      const auto seq = constant_weight_sequence(k, t);
      bool ok = true;
      for (std::uint64_t r = 1; r <= seq.size(); ++r) {
        ok = ok && unrank(k, t, r) == seq[r - 1] && rank(k, seq[r - 1], t) == r;
      }
      CAPTURE(k);
      CAPTURE(t);
      CHECK(ok);
    }
  }

  const auto big = unrank(60, 30, 123456789012ULL);
  CHECK(rank(60, big, 30) == 123456789012ULL);
}

TEST_CASE("codeword variants") {
  const auto c = unrank_codeword(6, 3, 7);
  CHECK(c.length() == 6);
  CHECK(c.to_string() == "001110");  // coordinate 1 first
  CHECK(rank(c, 3) == 7);
}
