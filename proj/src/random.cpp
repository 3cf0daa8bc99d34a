#include "cwc/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cwc {

GeneratorMatrix random_full_rank(std::size_t n, std::size_t k, Rng& rng) {
  if (k < 1 || k > n) throw std::invalid_argument("random_full_rank: need 1 <= k <= n");
  std::bernoulli_distribution coin(0.5);
  while (true) {
    std::vector<Codeword> rows;
    for (std::size_t i = 0; i < k; ++i) {
      Codeword r(n);
      for (std::size_t j = 0; j < n; ++j) r.set(j, coin(rng));
      rows.push_back(std::move(r));
    }
    if (rref(std::span<const Codeword>(rows)).rank == k) return GeneratorMatrix(n, std::move(rows));
  }
}

Permutation random_permutation(std::size_t n, Rng& rng) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace cwc
