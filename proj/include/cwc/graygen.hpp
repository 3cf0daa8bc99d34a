#pragma once

// Constant-weight (revolving-door) Gray code.
//
// Enumerates the weight-t words of length k in the order in which they occur
// in the binary reflected Gray code. Consecutive words differ in exactly two
// positions, so each step is a single swap: one position leaves the support and
// one enters.
//
// Positions are 1-based throughout this header: position j is g_j, stored in
// bit j-1 of a Word. Words print most significant position first (g_k ... g_1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwc/gf2.hpp"

namespace cwc {

inline constexpr int kMaxGrayLength = 63;

struct SwapDelta {
  int out_pos = 0;  // position turned 0
  int in_pos = 0;   // position turned 1

  friend bool operator==(const SwapDelta&, const SwapDelta&) = default;
};

// Binomial coefficient C(n, r) for 0 <= n <= 64; zero when r is out of range.
std::uint64_t binomial(int n, int r);

// Machine state of the loopless generator. g and tau are indexed 1..k+1;
// g[k+1] and tau[k+1] are sentinels. `i` is the cursor from the last step and
// does not take part in comparisons.
struct GrayState {
  int k = 0;
  int t = 0;
  std::vector<std::uint8_t> g;
  std::vector<int> tau;
  int s = 0;
  int i = 0;

  bool operator==(const GrayState& o) const { return k == o.k && t == o.t && g == o.g && tau == o.tau && s == o.s; }
};

class ConstantWeightIterator {
 public:
  // Starts at the first word, support {1..t}. Requires 0 <= t <= k <= kMaxGrayLength.
  ConstantWeightIterator(int k, int t);

  // Rebuilds the machine state at an arbitrary weight-t word so that iteration
  // continues exactly as if the sequence had been walked from the start.
  static ConstantWeightIterator resume(int k, int t, Word word);

  Word word() const noexcept { return word_; }
  int length() const noexcept { return state_.k; }
  int weight() const noexcept { return state_.t; }
  bool done() const noexcept { return done_; }
  const GrayState& state() const noexcept { return state_; }

  // Advances to the next word and returns the swap that produced it, or
  // nullopt once the last word has been reached.
  std::optional<SwapDelta> next() {
    if (done_) return std::nullopt;
    auto& g = state_.g;
    auto& tau = state_.tau;
    int& s = state_.s;
    const int i = tau[1];
    if (i == state_.k + 1) {
      done_ = true;
      return std::nullopt;
    }
    state_.i = i;
    tau[1] = tau[i];
    tau[i] = i + 1;

    const bool leaving = g[i] != 0;
    int other;
    if (leaving) {
      other = s != 0 ? s : i - 1;
      ++s;
    } else {
      other = s != 1 ? s - 1 : i - 1;
      --s;
    }
    g[other] ^= 1U;
    g[i] ^= 1U;
    word_ ^= (Word{1} << (i - 1)) | (Word{1} << (other - 1));

    if (s == i - 1 || s == 0) {
      ++s;
    } else {
      s -= g[i - 1];
      tau[i - 1] = tau[1];  // tau[1] holds the previous tau[i] here
      tau[1] = s == 0 ? i - 1 : s + 1;
    }
    return leaving ? SwapDelta{i, other} : SwapDelta{other, i};
  }

 private:
  ConstantWeightIterator() = default;

  GrayState state_;
  Word word_ = 0;
  bool done_ = false;
};

std::vector<Word> constant_weight_sequence(int k, int t);
std::vector<SwapDelta> swap_deltas(int k, int t);

// r-th word (1-based) of constant_weight_sequence(k, t), in O(k).
Word unrank(int k, int t, std::uint64_t r);
// Inverse of unrank. Throws std::invalid_argument if popcount(word) != t or word has bits above k.
std::uint64_t rank(int k, Word word, int t);

Codeword unrank_codeword(int k, int t, std::uint64_t r);
std::uint64_t rank(const Codeword& w, int t);

// Sorted 1-based support.
std::vector<int> support(Word word);
// g_k ... g_1 as '0'/'1' characters.
std::string render_word(Word word, int k);
// "{1,2,3}"
std::string render_support(Word word);

}  // namespace cwc
