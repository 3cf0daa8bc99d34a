#pragma once

// Bit-packed vectors and matrices over GF(2).
//
// Coordinate i (0-based) of a codeword lives in bit (i % 64) of word (i / 64).
// Padding bits past the length are always zero, so popcount over whole words
// is the Hamming weight.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cwc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class Codeword {
 public:
  Codeword() = default;
  explicit Codeword(std::size_t length);

  // Parses a string of '0'/'1'; character i is coordinate i.
  static Codeword from_string(std::string_view bits);
  // Low `length` bits of `mask`, bit i = coordinate i. Requires length <= 64.
  static Codeword from_mask(std::size_t length, Word mask);

  std::size_t length() const noexcept { return length_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool is_zero() const noexcept;
  // Coordinate i as character i.
  std::string to_string() const;

  Codeword& operator^=(const Codeword& other);
  friend Codeword operator^(Codeword a, const Codeword& b) { return a ^= b; }
  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend auto operator<=>(const Codeword&, const Codeword&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

std::size_t weight(const Codeword& v) noexcept;
std::size_t weight(std::span<const Word> words) noexcept;

// Parity of |u AND v|. Throws std::invalid_argument on length mismatch.
bool inner_product(const Codeword& u, const Codeword& v);

// XOR of rows[i] for every i in `indices` (0-based). Empty selection gives the zero word.
Codeword xor_combine(std::span<const Codeword> rows, std::span<const std::size_t> indices);

struct RrefResult {
  std::vector<Codeword> rows;  // nonzero rows only, in echelon order
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row-echelon form. All rows must share one length.
RrefResult rref(std::span<const Codeword> rows);

// A full-rank generator matrix. k == 0 denotes the zero code and only arises from dual().
class GeneratorMatrix {
 public:
  // Throws std::invalid_argument if lengths differ, n == 0 or the rows are dependent.
  GeneratorMatrix(std::size_t n, std::vector<Codeword> rows);

  static GeneratorMatrix identity(std::size_t k);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return rows_.size(); }
  const std::vector<Codeword>& rows() const noexcept { return rows_; }
  const Codeword& row(std::size_t i) const { return rows_[i]; }

  // Column permutation: coordinate j moves to perm[j].
  GeneratorMatrix permuted(std::span<const std::size_t> perm) const;

 private:
  std::size_t n_;
  std::vector<Codeword> rows_;
};

RrefResult rref(const GeneratorMatrix& m);

// True iff both matrices generate the same row space.
bool same_code(const GeneratorMatrix& a, const GeneratorMatrix& b);
// True iff v lies in the row space of m.
bool contains(const GeneratorMatrix& m, const Codeword& v);

GeneratorMatrix dual(const GeneratorMatrix& m);
bool is_self_orthogonal(const GeneratorMatrix& m);
bool is_self_dual(const GeneratorMatrix& m);

inline constexpr std::size_t kDefaultEnumerationLimit = 28;

// counts[w] = number of codewords of weight w. Full 2^k walk; throws LimitError if k > max_k.
using WeightEnumerator = std::vector<std::uint64_t>;
WeightEnumerator weight_enumerator(const GeneratorMatrix& m, std::size_t max_k = kDefaultEnumerationLimit);

}  // namespace cwc
