#include "cwc/gf2.hpp"

#include <algorithm>
#include <stdexcept>

#include "cwc/errors.hpp"

namespace cwc {

Codeword::Codeword(std::size_t length) : length_(length), words_(words_for(length), 0) {}

Codeword Codeword::from_string(std::string_view bits) {
  Codeword v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.flip(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

Codeword Codeword::from_mask(std::size_t length, Word mask) {
  if (length > kWordBits) throw std::invalid_argument("from_mask: length exceeds one machine word");
  Codeword v(length);
  if (length) v.words_[0] = length == kWordBits ? mask : mask & ((Word{1} << length) - 1);
  return v;
}

void Codeword::set(std::size_t i, bool value) {
  const Word bit = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

bool Codeword::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::string Codeword::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

Codeword& Codeword::operator^=(const Codeword& other) {
  if (other.length_ != length_) throw std::invalid_argument("xor of codewords with different lengths");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t weight(std::span<const Word> words) noexcept {
  std::size_t w = 0;
  for (Word x : words) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

std::size_t weight(const Codeword& v) noexcept { return weight(v.words()); }

bool inner_product(const Codeword& u, const Codeword& v) {
  if (u.length() != v.length()) throw std::invalid_argument("inner product of codewords with different lengths");
  unsigned parity = 0;
  const auto a = u.words();
  const auto b = v.words();
  for (std::size_t i = 0; i < a.size(); ++i) parity ^= static_cast<unsigned>(std::popcount(a[i] & b[i]));
  return parity & 1U;
}

Codeword xor_combine(std::span<const Codeword> rows, std::span<const std::size_t> indices) {
  if (rows.empty()) throw std::invalid_argument("xor_combine: no rows");
  Codeword acc(rows.front().length());
  for (std::size_t i : indices) {
    if (i >= rows.size()) throw std::out_of_range("xor_combine: row index out of range");
    acc ^= rows[i];
  }
  return acc;
}

RrefResult rref(std::span<const Codeword> input) {
  RrefResult out;
  std::vector<Codeword> rows(input.begin(), input.end());
  if (rows.empty()) return out;
  const std::size_t n = rows.front().length();
  for (const auto& r : rows) {
    if (r.length() != n) throw std::invalid_argument("rref: rows have different lengths");
  }

  std::size_t lead = 0;
  for (std::size_t col = 0; col < n && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != lead && rows[r].get(col)) rows[r] ^= rows[lead];
    }
    out.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  out.rows = std::move(rows);
  out.rank = lead;
  return out;
}

GeneratorMatrix::GeneratorMatrix(std::size_t n, std::vector<Codeword> rows) : n_(n), rows_(std::move(rows)) {
  if (n_ == 0) throw std::invalid_argument("code length must be at least 1");
  for (const auto& r : rows_) {
    if (r.length() != n_) throw std::invalid_argument("generator row length differs from n");
  }
  if (rows_.size() > n_) throw std::invalid_argument("dimension exceeds length");
  if (rref(std::span<const Codeword>(rows_)).rank != rows_.size()) {
    throw std::invalid_argument("generator rows are linearly dependent");
  }
}

GeneratorMatrix GeneratorMatrix::identity(std::size_t k) {
  std::vector<Codeword> rows;
  for (std::size_t i = 0; i < k; ++i) {
    rows.emplace_back(k);
    rows.back().flip(i);
  }
  return GeneratorMatrix(k, std::move(rows));
}

GeneratorMatrix GeneratorMatrix::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw std::invalid_argument("permutation size differs from n");
  std::vector<Codeword> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) {
    Codeword p(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (r.get(j)) p.flip(perm[j]);
    }
    out.push_back(std::move(p));
  }
  return GeneratorMatrix(n_, std::move(out));
}

RrefResult rref(const GeneratorMatrix& m) { return rref(std::span<const Codeword>(m.rows())); }

bool same_code(const GeneratorMatrix& a, const GeneratorMatrix& b) {
  return a.n() == b.n() && a.k() == b.k() && rref(a).rows == rref(b).rows;
}

bool contains(const GeneratorMatrix& m, const Codeword& v) {
  if (v.length() != m.n()) return false;
  const auto r = rref(m);
  Codeword rest = v;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (rest.get(r.pivots[i])) rest ^= r.rows[i];
  }
  return rest.is_zero();
}

GeneratorMatrix dual(const GeneratorMatrix& m) {
  const std::size_t n = m.n();
  const auto r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  std::vector<Codeword> rows;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Codeword h(n);
    h.flip(f);
    for (std::size_t i = 0; i < r.rank; ++i) {
      if (r.rows[i].get(f)) h.flip(r.pivots[i]);
    }
    rows.push_back(std::move(h));
  }
  return GeneratorMatrix(n, std::move(rows));
}

bool is_self_orthogonal(const GeneratorMatrix& m) {
  for (std::size_t i = 0; i < m.k(); ++i) {
    for (std::size_t j = i; j < m.k(); ++j) {
      if (inner_product(m.row(i), m.row(j))) return false;
    }
  }
  return true;
}

bool is_self_dual(const GeneratorMatrix& m) { return m.n() == 2 * m.k() && is_self_orthogonal(m); }

WeightEnumerator weight_enumerator(const GeneratorMatrix& m, std::size_t max_k) {
  if (m.k() > max_k) {
    throw LimitError("weight enumerator needs 2^" + std::to_string(m.k()) + " codewords; limit is k <= " +
                     std::to_string(max_k));
  }
  WeightEnumerator counts(m.n() + 1, 0);
  counts[0] = 1;
  Codeword acc(m.n());
  const std::uint64_t total = std::uint64_t{1} << m.k();
  // Binary reflected Gray walk: step x flips row ctz(x).
  for (std::uint64_t x = 1; x < total; ++x) {
    acc ^= m.row(static_cast<std::size_t>(std::countr_zero(x)));
    ++counts[weight(acc)];
  }
  return counts;
}

}  // namespace cwc
