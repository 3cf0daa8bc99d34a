#pragma once

// Deduplication of many code sets under a memory budget, driven by a
// 2-(v,k,1) block design: the v sets are the points, and each block names the
// sets that are resident together for one Eq step. Every pair of sets shares
// exactly one block, so every pair is compared exactly once.
//
// Sets are ordered by index (i_1 < i_2 < ...). Inside a block each set is
// purged against all earlier sets of the block. Purges accumulate across
// blocks; the prime level of a set counts the steps that have touched it.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cwc/equiv.hpp"

namespace cwc {

struct Design {
  std::size_t v = 0;
  std::size_t block_size = 0;
  std::size_t lambda = 0;
  std::vector<std::vector<std::size_t>> blocks;  // 1-based points
};

// True iff every t-subset of points lies in exactly `lambda` blocks.
// Throws DesignError naming the block index when a block is malformed.
bool validate_design(const Design& d, std::size_t t = 2);

Design fano_plane();
// Every pair of points as its own block: 2-(v,2,1).
Design complete_design(std::size_t v);

// C(2s, 2) = s(2s-1): pairs among 2s half-sized sets.
std::uint64_t naive_pair_count(std::uint64_t s);

struct SetRef {
  std::size_t set = 0;    // 1-based
  std::size_t level = 0;  // primes before the step

  friend bool operator==(const SetRef&, const SetRef&) = default;
};

struct ScheduleStep {
  std::size_t block = 0;                                    // index into Design::blocks
  std::vector<SetRef> participants;                         // in set order
  std::vector<std::pair<std::size_t, std::size_t>> purges;  // (earlier, later) set pairs, later purged

  // e.g. "Eq(i_1',i_4,i_5)"
  std::string notation() const;
};

struct Schedule {
  std::vector<ScheduleStep> steps;
  std::vector<std::size_t> final_levels;  // indexed by set - 1

  std::string notation() const;
  // e.g. "i_1' u i_2' u ..."
  std::string final_union() const;
};

// Throws DesignError unless d is a valid 2-(v,k,1) design with v == set_count.
Schedule make_schedule(const Design& d, std::size_t set_count);

// Storage for code sets at rest. load/save work on whole sets; the scheduler
// decides how many are loaded at once.
class SetStore {
 public:
  virtual ~SetStore() = default;
  virtual std::size_t size() const = 0;
  virtual CodeSet load(std::size_t index) = 0;  // 0-based
  virtual void save(std::size_t index, const CodeSet& set) = 0;
};

// Sets held in memory.
class MemorySetStore : public SetStore {
 public:
  explicit MemorySetStore(std::vector<CodeSet> sets) : sets_(std::move(sets)) {}
  std::size_t size() const override { return sets_.size(); }
  CodeSet load(std::size_t index) override { return sets_.at(index); }
  void save(std::size_t index, const CodeSet& set) override { sets_.at(index) = set; }
  const std::vector<CodeSet>& sets() const { return sets_; }

 private:
  std::vector<CodeSet> sets_;
};

// One code-library file per set; saves rewrite the files under `work_dir`.
class DirectorySetStore : public SetStore {
 public:
  DirectorySetStore(const std::vector<std::string>& inputs, std::string work_dir);
  std::size_t size() const override { return paths_.size(); }
  CodeSet load(std::size_t index) override;
  void save(std::size_t index, const CodeSet& set) override;

 private:
  std::vector<std::string> paths_;
  std::vector<std::string> labels_;
};

struct DedupAudit {
  std::uint64_t blocks_executed = 0;
  std::uint64_t pair_comparisons = 0;
  std::uint64_t purges = 0;
  std::size_t resident_set_peak = 0;
  std::size_t classes = 0;
};

struct DedupResult {
  CodeSet survivors;
  DedupAudit audit;
};

struct DedupOptions {
  EquivalenceLimits limits;
};

// Reduces each set, runs the block schedule, and returns the union of the
// final purge states in set order.
DedupResult run_dedup(SetStore& store, const Design& d, const DedupOptions& opts = {});
DedupResult run_dedup(const std::vector<CodeSet>& sets, const Design& d, const DedupOptions& opts = {});

// Baseline: every set resident at once, all pairs compared in set order.
DedupResult run_dedup_all_pairs(SetStore& store, const DedupOptions& opts = {});

}  // namespace cwc
