#include "cwc/graygen.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace cwc {
namespace {

constexpr int kTableSize = 65;

constexpr auto make_binomials() {
  std::array<std::array<std::uint64_t, kTableSize>, kTableSize> c{};
  for (int n = 0; n < kTableSize; ++n) {
    c[n][0] = 1;
    for (int r = 1; r <= n; ++r) c[n][r] = c[n - 1][r - 1] + (r <= n - 1 ? c[n - 1][r] : 0);
  }
  return c;
}

constexpr auto kBinomials = make_binomials();

void check_shape(int k, int t) {
  if (k < 1 || k > kMaxGrayLength) {
    throw std::invalid_argument("word length k must be in [1, " + std::to_string(kMaxGrayLength) + "]");
  }
  if (t < 0 || t > k) throw std::invalid_argument("weight t must be in [0, k]");
}

Word low_ones(int t) { return t == 0 ? 0 : (~Word{0} >> (kWordBits - static_cast<std::size_t>(t))); }

}  // namespace

std::uint64_t binomial(int n, int r) {
  if (n < 0 || n >= kTableSize || r < 0 || r > n) return 0;
  return kBinomials[n][r];
}

ConstantWeightIterator::ConstantWeightIterator(int k, int t) {
  check_shape(k, t);
  state_.k = k;
  state_.t = t;
  state_.g.assign(k + 2, 0);
  state_.tau.resize(k + 2);
  for (int j = 1; j <= k + 1; ++j) {
    state_.g[j] = j <= t ? 1 : 0;
    state_.tau[j] = j + 1;
  }
  state_.s = t;
  state_.tau[1] = t + 1;
  word_ = low_ones(t);
  // The machine needs t >= 1; the empty combination is its own whole sequence.
  done_ = t == 0;
}

ConstantWeightIterator ConstantWeightIterator::resume(int k, int t, Word word) {
  check_shape(k, t);
  if (std::popcount(word) != t || (word >> k) != 0) {
    throw std::invalid_argument("resume: word is not a weight-t word of length k");
  }
  ConstantWeightIterator it;
  it.word_ = word;
  it.done_ = t == 0;
  GrayState& st = it.state_;
  st.k = k;
  st.t = t;
  st.g.assign(k + 2, 0);
  st.tau.resize(k + 2);
  for (int j = 1; j <= k + 1; ++j) st.tau[j] = j + 1;
  if (t == 0) {
    st.tau[1] = 1;
    return it;
  }

  const auto c = support(word);  // c[0] < c[1] < ... < c[t-1]
  for (int p : c) st.g[p] = 1;
  const int run = std::countr_one(word);
  st.s = (t - run) % 2 == 0 ? run : run + 1;

  // Ones pair up from the top: (c_{t-1}, c_t), (c_{t-3}, c_{t-2}), ...
  // A pair above the leading run of ones parks its successor in tau[lower];
  // the highest pair inside the run supplies the next cursor.
  int next_cursor = 0;
  for (int j = t; j >= 2; j -= 2) {
    const int lower = c[j - 2];
    const int upper = c[j - 1];
    if (lower > run) {
      st.tau[lower] = upper + 1;
    } else if (next_cursor == 0) {
      next_cursor = upper + 1;
    }
  }
  if (next_cursor == 0) next_cursor = t % 2 ? c[0] + 1 : c[0];
  st.tau[1] = next_cursor;
  return it;
}

std::vector<Word> constant_weight_sequence(int k, int t) {
  ConstantWeightIterator it(k, t);
  std::vector<Word> out;
  out.reserve(binomial(k, t));
  out.push_back(it.word());
  while (it.next()) out.push_back(it.word());
  return out;
}

std::vector<SwapDelta> swap_deltas(int k, int t) {
  ConstantWeightIterator it(k, t);
  std::vector<SwapDelta> out;
  out.reserve(binomial(k, t));
  while (auto d = it.next()) out.push_back(*d);
  return out;
}

// The order satisfies L(n, t) = L(n-1, t) followed by position n joined to
// reverse(L(n-1, t-1)); both directions walk that recursion top-down and
// track the reversals with an orientation flag.
Word unrank(int k, int t, std::uint64_t r) {
  check_shape(k, t);
  const std::uint64_t total = binomial(k, t);
  if (r < 1 || r > total) throw std::out_of_range("rank out of range [1, C(k,t)]");
  std::uint64_t idx = r - 1;
  Word word = 0;
  int n = k;
  while (t > 0 && n > t) {
    const std::uint64_t head = binomial(n - 1, t);
    if (idx >= head) {
      word |= Word{1} << (n - 1);
      idx = binomial(n - 1, t - 1) - 1 - (idx - head);
      --t;
    }
    --n;
  }
  return word | low_ones(t);
}

std::uint64_t rank(int k, Word word, int t) {
  check_shape(k, t);
  if (std::popcount(word) != t || (word >> k) != 0) {
    throw std::invalid_argument("rank: word weight differs from t");
  }
  std::int64_t offset = 0;
  std::int64_t sign = 1;
  int n = k;
  while (t > 0 && n > t) {
    if ((word >> (n - 1)) & 1U) {
      const auto span = static_cast<std::int64_t>(binomial(n - 1, t) + binomial(n - 1, t - 1) - 1);
      offset += sign * span;
      sign = -sign;
      --t;
    }
    --n;
  }
  return static_cast<std::uint64_t>(offset) + 1;
}

Codeword unrank_codeword(int k, int t, std::uint64_t r) {
  return Codeword::from_mask(static_cast<std::size_t>(k), unrank(k, t, r));
}

std::uint64_t rank(const Codeword& w, int t) {
  if (w.length() > static_cast<std::size_t>(kMaxGrayLength)) throw std::invalid_argument("rank: word too long");
  return rank(static_cast<int>(w.length()), w.length() ? w.words()[0] : 0, t);
}

std::vector<int> support(Word word) {
  std::vector<int> out;
  while (word) {
    out.push_back(std::countr_zero(word) + 1);
    word &= word - 1;
  }
  return out;
}

std::string render_word(Word word, int k) {
  std::string s(static_cast<std::size_t>(k), '0');
  for (int j = 1; j <= k; ++j) {
    if ((word >> (j - 1)) & 1U) s[static_cast<std::size_t>(k - j)] = '1';
  }
  return s;
}

std::string render_support(Word word) {
  std::string s = "{";
  bool first = true;
  for (int p : support(word)) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(p);
  }
  return s + "}";
}

}  // namespace cwc
