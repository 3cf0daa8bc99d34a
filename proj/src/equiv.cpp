#include "cwc/equiv.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "cwc/errors.hpp"

namespace cwc {
namespace {

// sig[j][w] = number of codewords of weight w with a one in coordinate j.
using ColumnSignatures = std::vector<std::vector<std::uint32_t>>;

ColumnSignatures column_signatures(const GeneratorMatrix& m) {
  const std::size_t n = m.n();
  ColumnSignatures sig(n, std::vector<std::uint32_t>(n + 1, 0));
  Codeword acc(n);
  const std::uint64_t total = std::uint64_t{1} << m.k();
  for (std::uint64_t x = 1; x < total; ++x) {
    acc ^= m.row(static_cast<std::size_t>(std::countr_zero(x)));
    const std::size_t w = weight(acc);
    const auto words = acc.words();
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      for (Word bits = words[wi]; bits; bits &= bits - 1) {
        ++sig[wi * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))][w];
      }
    }
  }
  return sig;
}

// Canonical basis (fully reduced, sorted) of the span of small bit vectors.
std::vector<Word> canonical_span(std::vector<Word> rows) {
  std::size_t rank = 0;
  for (int bit = 0; bit < static_cast<int>(kWordBits) && rank < rows.size(); ++bit) {
    const Word mask = Word{1} << bit;
    std::size_t p = rank;
    while (p < rows.size() && !(rows[p] & mask)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  rows.resize(rank);
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Rows of m restricted to `cols`, column cols[i] becoming bit i.
std::vector<Word> project(const GeneratorMatrix& m, const std::vector<std::size_t>& cols) {
  std::vector<Word> out(m.k(), 0);
  for (std::size_t r = 0; r < m.k(); ++r) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (m.row(r).get(cols[i])) out[r] |= Word{1} << i;
    }
  }
  return out;
}

class PermutationSearch {
 public:
  PermutationSearch(const GeneratorMatrix& a, const GeneratorMatrix& b, const ColumnSignatures& sig_a,
                    const ColumnSignatures& sig_b)
      : a_(a), b_(b), n_(a.n()), used_(n_, false), perm_(n_, 0) {
    std::map<std::vector<std::uint32_t>, std::size_t> class_of;
    for (const auto& s : sig_a) class_of.try_emplace(s, class_of.size());
    class_a_.resize(n_);
    class_b_.resize(n_);
    std::vector<std::size_t> class_size(class_of.size(), 0);
    for (std::size_t j = 0; j < n_; ++j) {
      class_a_[j] = class_of.at(sig_a[j]);
      ++class_size[class_a_[j]];
      class_b_[j] = class_of.at(sig_b[j]);  // same multiset, so every signature is present
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return class_size[class_a_[x]] < class_size[class_a_[y]];
    });
  }

  std::optional<Permutation> run() {
    if (extend(0)) return perm_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t col = order_[depth];
    cols_a_.push_back(col);
    for (std::size_t target = 0; target < n_; ++target) {
      if (used_[target] || class_b_[target] != class_a_[col]) continue;
      cols_b_.push_back(target);
      // A partial map is viable only if it sends the projection of a onto the projection of b.
      if (canonical_span(project(a_, cols_a_)) == canonical_span(project(b_, cols_b_))) {
        used_[target] = true;
        perm_[col] = target;
        if (extend(depth + 1)) return true;
        used_[target] = false;
      }
      cols_b_.pop_back();
    }
    cols_a_.pop_back();
    return false;
  }

  const GeneratorMatrix& a_;
  const GeneratorMatrix& b_;
  std::size_t n_;
  std::vector<std::size_t> class_a_;
  std::vector<std::size_t> class_b_;
  std::vector<std::size_t> order_;
  std::vector<bool> used_;
  Permutation perm_;
  std::vector<std::size_t> cols_a_;
  std::vector<std::size_t> cols_b_;
};

}  // namespace

std::optional<Permutation> find_equivalence(const GeneratorMatrix& a, const GeneratorMatrix& b,
                                            const EquivalenceLimits& limits) {
  if (a.n() != b.n() || a.k() != b.k()) return std::nullopt;
  if (a.n() > limits.max_n) {
    throw LimitError("equivalence search limited to n <= " + std::to_string(limits.max_n) + " (got " +
                     std::to_string(a.n()) + ")");
  }
  if (a.k() > limits.max_k) throw LimitError("equivalence search limited to k <= " + std::to_string(limits.max_k));
  if (a.n() > kWordBits) throw LimitError("equivalence search supports n <= 64");

  const auto sig_a = column_signatures(a);
  const auto sig_b = column_signatures(b);
  auto sorted_a = sig_a;
  auto sorted_b = sig_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;

  auto perm = PermutationSearch(a, b, sig_a, sig_b).run();
  if (perm && !same_code(a.permuted(*perm), b)) {
    throw std::logic_error("equivalence search produced an unverifiable permutation");
  }
  return perm;
}

CodeRecord::CodeRecord(std::string id, GeneratorMatrix matrix)
    : id_(std::move(id)), matrix_(std::move(matrix)),
      key_{matrix_.n(), matrix_.k(), weight_enumerator(matrix_)} {}

CodeSet::CodeSet(std::string label, std::vector<CodeRecord> records)
    : label_(std::move(label)), records_(std::move(records)) {
  std::set<std::string> seen;
  for (const auto& r : records_) {
    if (!seen.insert(r.id()).second) throw std::invalid_argument("duplicate code id '" + r.id() + "' in set " + label_);
  }
}

namespace {

bool matches_any(const CodeRecord& rec, const std::vector<CodeRecord>& pool, EqStats* stats,
                 const EquivalenceLimits& limits) {
  for (const auto& other : pool) {
    if (other.key() != rec.key()) {
      if (stats) ++stats->invariant_rejections;
      continue;
    }
    if (stats) ++stats->pair_comparisons;
    if (find_equivalence(other.matrix(), rec.matrix(), limits)) return true;
  }
  return false;
}

}  // namespace

CodeSet eq_sets(const CodeSet& a, const CodeSet& b, EqStats* stats, const EquivalenceLimits& limits) {
  std::vector<CodeRecord> kept;
  for (const auto& rec : b.records()) {
    if (matches_any(rec, a.records(), stats, limits)) {
      if (stats) ++stats->purges;
    } else {
      kept.push_back(rec);
    }
  }
  return CodeSet(b.label(), std::move(kept));
}

CodeSet reduce_set(const CodeSet& s, EqStats* stats, const EquivalenceLimits& limits) {
  std::vector<CodeRecord> kept;
  for (const auto& rec : s.records()) {
    if (matches_any(rec, kept, stats, limits)) {
      if (stats) ++stats->purges;
    } else {
      kept.push_back(rec);
    }
  }
  return CodeSet(s.label(), std::move(kept));
}

}  // namespace cwc
