#pragma once

// Seeded dedup instances: sets of random codes where some codes reappear in
// other sets (or the same set) under a random column permutation.

#include <string>
#include <vector>

#include "cwc/equiv.hpp"
#include "cwc/random.hpp"

namespace planted {

struct Instance {
  std::vector<cwc::CodeSet> sets;
  std::vector<cwc::GeneratorMatrix> flat;  // every input code, in set order
};

inline Instance make(std::uint64_t seed, std::size_t set_count = 7) {
  cwc::Rng rng(seed);
  const std::size_t n = 6 + rng() % 9;  // 6..14
  const std::size_t k = 2 + rng() % 4;  // 2..5
  std::vector<cwc::GeneratorMatrix> pool;
  const std::size_t pool_size = 4 + rng() % 8;
  for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(cwc::random_full_rank(n, k, rng));

  Instance inst;
  for (std::size_t s = 0; s < set_count; ++s) {
    std::vector<cwc::CodeRecord> records;
    const std::size_t size = 1 + rng() % 10;
    for (std::size_t c = 0; c < size; ++c) {
      cwc::GeneratorMatrix m = rng() % 3 == 0 ? cwc::random_full_rank(n, k, rng) : pool[rng() % pool.size()];
      m = m.permuted(cwc::random_permutation(n, rng));
      inst.flat.push_back(m);
      records.emplace_back("s" + std::to_string(s + 1) + "c" + std::to_string(c + 1), m);
    }
    inst.sets.emplace_back("set" + std::to_string(s + 1), std::move(records));
  }
  return inst;
}

}  // namespace planted
