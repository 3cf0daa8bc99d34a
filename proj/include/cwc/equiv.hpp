#pragma once

// Permutation equivalence of binary codes and purging of code sets.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwc/gf2.hpp"

namespace cwc {

// perm[j] is the coordinate of b that coordinate j of a maps to.
using Permutation = std::vector<std::size_t>;

struct EquivalenceLimits {
  std::size_t max_n = 24;
  std::size_t max_k = kDefaultEnumerationLimit;
};

// Searches for a coordinate permutation sending the code of `a` onto the code of `b`.
// Any permutation returned has been verified by re-encoding. Throws LimitError above the limits.
std::optional<Permutation> find_equivalence(const GeneratorMatrix& a, const GeneratorMatrix& b,
                                            const EquivalenceLimits& limits = {});

inline bool are_equivalent(const GeneratorMatrix& a, const GeneratorMatrix& b, const EquivalenceLimits& limits = {}) {
  return find_equivalence(a, b, limits).has_value();
}

struct InvariantKey {
  std::size_t n = 0;
  std::size_t k = 0;
  WeightEnumerator enumerator;

  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
};

class CodeRecord {
 public:
  CodeRecord(std::string id, GeneratorMatrix matrix);

  const std::string& id() const noexcept { return id_; }
  const GeneratorMatrix& matrix() const noexcept { return matrix_; }
  const InvariantKey& key() const noexcept { return key_; }

 private:
  std::string id_;
  GeneratorMatrix matrix_;
  InvariantKey key_;
};

class CodeSet {
 public:
  CodeSet() = default;
  // Throws std::invalid_argument on duplicate ids.
  CodeSet(std::string label, std::vector<CodeRecord> records);

  const std::string& label() const noexcept { return label_; }
  const std::vector<CodeRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

 private:
  std::string label_;
  std::vector<CodeRecord> records_;
};

struct EqStats {
  std::uint64_t pair_comparisons = 0;  // full equivalence searches
  std::uint64_t invariant_rejections = 0;
  std::uint64_t purges = 0;
};

// `b` without every record equivalent to some record of `a`. Order of survivors is kept.
CodeSet eq_sets(const CodeSet& a, const CodeSet& b, EqStats* stats = nullptr, const EquivalenceLimits& limits = {});

// Keeps the first record of each equivalence class within the set.
CodeSet reduce_set(const CodeSet& s, EqStats* stats = nullptr, const EquivalenceLimits& limits = {});

}  // namespace cwc
