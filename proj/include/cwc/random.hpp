#pragma once

// Seeded generators for test instances and benchmarks.

#include <cstddef>
#include <random>

#include "cwc/equiv.hpp"
#include "cwc/gf2.hpp"

namespace cwc {

using Rng = std::mt19937_64;

// Uniform rows, redrawn until the k rows are independent. Requires 1 <= k <= n.
GeneratorMatrix random_full_rank(std::size_t n, std::size_t k, Rng& rng);
Permutation random_permutation(std::size_t n, Rng& rng);

}  // namespace cwc
