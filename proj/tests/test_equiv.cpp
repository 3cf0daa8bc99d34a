#include <doctest.h>

#include "cwc/equiv.hpp"
#include "cwc/errors.hpp"
#include "cwc/random.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace cwc;

TEST_CASE("reflexive") {
  const auto h = fixtures::hamming8();
  const auto p = find_equivalence(h, h);
  REQUIRE(p.has_value());
  CHECK(same_code(h.permuted(*p), h));
}

TEST_CASE("different generator matrices of the same code") {
  const auto a = fixtures::from_rows({"1100", "0110"});
  const auto b = fixtures::from_rows({"1010", "0110"});
  CHECK(are_equivalent(a, b));
}

TEST_CASE("planted permutations are found and verified") {
  Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 4 + rng() % 17;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 8);
    const auto a = random_full_rank(n, k, rng);
    const auto b = a.permuted(random_permutation(n, rng));
    const auto p = find_equivalence(a, b);
    REQUIRE(p.has_value());
    CHECK(same_code(a.permuted(*p), b));
  }
}

TEST_CASE("agrees with exhaustive search for small n") {
  Rng rng(12);
  int equivalent = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    const std::size_t k = 1 + rng() % (n - 1);
    const auto a = random_full_rank(n, k, rng);
    const auto b = random_full_rank(n, k, rng);
    const bool expect = oracle::equivalent_exhaustive(a, b);
    CHECK(are_equivalent(a, b) == expect);
    equivalent += expect;
  }
  CHECK(equivalent > 0);
}

TEST_CASE("inequivalent codes with equal dimension") {
  CHECK_FALSE(are_equivalent(fixtures::pairs8(), fixtures::hamming8()));
  CHECK_FALSE(are_equivalent(fixtures::repetition(4), fixtures::from_rows({"1100"})));
  CHECK_FALSE(are_equivalent(fixtures::repetition(4), fixtures::from_rows({"11", "01"})));
}

TEST_CASE("transitivity") {
  Rng rng(55);
  const auto a = random_full_rank(12, 5, rng);
  const auto b = a.permuted(random_permutation(12, rng));
  const auto c = b.permuted(random_permutation(12, rng));
  CHECK(are_equivalent(a, b));
  CHECK(are_equivalent(b, c));
  CHECK(are_equivalent(a, c));
}

TEST_CASE("limits") {
  EquivalenceLimits limits;
  limits.max_n = 6;
  CHECK_THROWS_AS(find_equivalence(GeneratorMatrix::identity(7), GeneratorMatrix::identity(7), limits), LimitError);
}

TEST_CASE("invariant key") {
  const CodeRecord r("h", fixtures::hamming8());
  CHECK(r.key().n == 8);
  CHECK(r.key().k == 4);
  CHECK(r.key().enumerator == WeightEnumerator{1, 0, 0, 0, 14, 0, 0, 0, 1});
}

TEST_CASE("eq_sets and reduce_set") {
  Rng rng(8);
  const auto h = fixtures::hamming8();
  const auto h2 = h.permuted(random_permutation(8, rng));
  const CodeSet a("a", {CodeRecord("h", h)});
  const CodeSet b("b", {CodeRecord("x", fixtures::pairs8()), CodeRecord("h2", h2)});
  EqStats stats;
  const auto purged = eq_sets(a, b, &stats);
  REQUIRE(purged.size() == 1);
  CHECK(purged.records()[0].id() == "x");
  CHECK(purged.label() == "b");
  CHECK(stats.purges == 1);
  CHECK(stats.pair_comparisons == 1);
  CHECK(stats.invariant_rejections == 1);

  const CodeSet dup("d", {CodeRecord("first", h), CodeRecord("y", fixtures::pairs8()), CodeRecord("second", h2)});
  const auto reduced = reduce_set(dup);
  REQUIRE(reduced.size() == 2);
  CHECK(reduced.records()[0].id() == "first");
  CHECK(reduced.records()[1].id() == "y");

  CHECK_THROWS_AS(CodeSet("bad", {CodeRecord("x", h), CodeRecord("x", h2)}), std::invalid_argument);
}
