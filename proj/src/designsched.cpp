#include "cwc/designsched.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "cwc/errors.hpp"
#include "cwc/io.hpp"

namespace cwc {
namespace {

void check_blocks(const Design& d) {
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    auto block = d.blocks[b];
    const std::string where = "block " + std::to_string(b + 1);
    if (block.size() != d.block_size) {
      throw DesignError(where + " has " + std::to_string(block.size()) + " points, expected " +
                        std::to_string(d.block_size));
    }
    for (std::size_t p : block) {
      if (p < 1 || p > d.v) throw DesignError(where + " has point " + std::to_string(p) + " outside [1, v]");
    }
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      throw DesignError(where + " repeats a point");
    }
  }
}

std::string set_name(const SetRef& r) { return "i_" + std::to_string(r.set) + std::string(r.level, '\''); }

// Counts concurrently loaded sets.
class ResidencyMonitor {
 public:
  void acquire() {
    ++current_;
    peak_ = std::max(peak_, current_);
  }
  void release() { --current_; }
  std::size_t peak() const { return peak_; }

 private:
  std::size_t current_ = 0;
  std::size_t peak_ = 0;
};

// A set checked out of the store; counted as resident until destroyed.
class ResidentSet {
 public:
  ResidentSet(SetStore& store, ResidencyMonitor& monitor, std::size_t index)
      : store_(store), monitor_(monitor), index_(index), set_(store.load(index)) {
    monitor_.acquire();
  }
  ResidentSet(const ResidentSet&) = delete;
  ResidentSet& operator=(const ResidentSet&) = delete;
  ~ResidentSet() { monitor_.release(); }

  CodeSet& get() { return set_; }
  void persist() { store_.save(index_, set_); }

 private:
  SetStore& store_;
  ResidencyMonitor& monitor_;
  std::size_t index_;
  CodeSet set_;
};

void reduce_all(SetStore& store, ResidencyMonitor& monitor, EqStats& stats, const DedupOptions& opts) {
  for (std::size_t i = 0; i < store.size(); ++i) {
    ResidentSet s(store, monitor, i);
    s.get() = reduce_set(s.get(), &stats, opts.limits);
    s.persist();
  }
}

// Ids only need to be unique per set; colliding ids in the union get the set label as prefix.
void append_survivors(std::vector<CodeRecord>& all, std::set<std::string>& ids, const CodeSet& set) {
  for (const auto& r : set.records()) {
    if (ids.insert(r.id()).second) {
      all.push_back(r);
    } else {
      std::string id = set.label() + "/" + r.id();
      ids.insert(id);
      all.emplace_back(std::move(id), r.matrix());
    }
  }
}

CodeSet collect_union(SetStore& store, ResidencyMonitor& monitor) {
  std::vector<CodeRecord> all;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < store.size(); ++i) {
    ResidentSet s(store, monitor, i);
    append_survivors(all, ids, s.get());
  }
  return CodeSet("union", std::move(all));
}

}  // namespace

bool validate_design(const Design& d, std::size_t t) {
  check_blocks(d);
  if (t == 0 || t > d.v) return false;
  std::vector<std::vector<bool>> member(d.blocks.size(), std::vector<bool>(d.v + 1, false));
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    for (std::size_t p : d.blocks[b]) member[b][p] = true;
  }
  // Every t-subset of points, in lexicographic order.
  std::vector<std::size_t> subset(t);
  for (std::size_t j = 0; j < t; ++j) subset[j] = j + 1;
  while (true) {
    std::size_t covering = 0;
    for (const auto& m : member) {
      if (std::all_of(subset.begin(), subset.end(), [&](std::size_t p) { return m[p]; })) ++covering;
    }
    if (covering != d.lambda) return false;
    std::size_t j = t;
    while (j > 0 && subset[j - 1] == d.v - t + j) --j;
    if (j == 0) return true;
    ++subset[j - 1];
    for (std::size_t l = j; l < t; ++l) subset[l] = subset[l - 1] + 1;
  }
}

Design fano_plane() {
  return Design{7, 3, 1, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}};
}

Design complete_design(std::size_t v) {
  Design d{v, 2, 1, {}};
  for (std::size_t a = 1; a <= v; ++a) {
    for (std::size_t b = a + 1; b <= v; ++b) d.blocks.push_back({a, b});
  }
  return d;
}

std::uint64_t naive_pair_count(std::uint64_t s) {
  if (s < 1) throw std::invalid_argument("naive_pair_count: s must be >= 1");
  return s * (2 * s - 1);
}

std::string ScheduleStep::notation() const {
  std::string s = "Eq(";
  for (std::size_t i = 0; i < participants.size(); ++i) s += (i ? "," : "") + set_name(participants[i]);
  return s + ")";
}

std::string Schedule::notation() const {
  std::string s;
  for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? "," : "") + steps[i].notation();
  return s;
}

std::string Schedule::final_union() const {
  std::string s;
  for (std::size_t i = 0; i < final_levels.size(); ++i) s += (i ? " u " : "") + set_name({i + 1, final_levels[i]});
  return s;
}

Schedule make_schedule(const Design& d, std::size_t set_count) {
  if (set_count != d.v) {
    throw DesignError("design has " + std::to_string(d.v) + " points but there are " + std::to_string(set_count) +
                      " sets");
  }
  if (d.lambda != 1) throw DesignError("schedules need lambda = 1; pairs would be compared more than once");
  if (!validate_design(d, 2)) throw DesignError("not a 2-(v,k,1) design: some pair is not covered exactly once");

  Schedule sched;
  std::vector<std::size_t> level(d.v + 1, 0);
  std::vector<bool> seen(d.v + 1, false);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    auto block = d.blocks[b];
    std::sort(block.begin(), block.end());
    ScheduleStep step;
    step.block = b;
    for (std::size_t p : block) step.participants.push_back({p, level[p]});
    for (std::size_t later = 1; later < block.size(); ++later) {
      for (std::size_t earlier = 0; earlier < later; ++earlier) step.purges.emplace_back(block[earlier], block[later]);
    }
    for (std::size_t pos = 0; pos < block.size(); ++pos) {
      const std::size_t p = block[pos];
      if (pos > 0 || !seen[p]) ++level[p];
      seen[p] = true;
    }
    sched.steps.push_back(std::move(step));
  }
  sched.final_levels.assign(level.begin() + 1, level.end());
  return sched;
}

DirectorySetStore::DirectorySetStore(const std::vector<std::string>& inputs, std::string work_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(work_dir);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const fs::path dst = fs::path(work_dir) / ("set_" + std::to_string(i + 1) + ".lib");
    fs::copy_file(inputs[i], dst, fs::copy_options::overwrite_existing);
    paths_.push_back(dst.string());
    labels_.push_back(fs::path(inputs[i]).filename().string());
  }
}

CodeSet DirectorySetStore::load(std::size_t index) {
  std::vector<CodeRecord> recs;
  for (auto& nm : read_library_file(paths_.at(index))) recs.emplace_back(std::move(nm.id), std::move(nm.matrix));
  return CodeSet(labels_.at(index), std::move(recs));
}

void DirectorySetStore::save(std::size_t index, const CodeSet& set) {
  std::vector<NamedMatrix> out;
  for (const auto& r : set.records()) out.push_back({r.id(), r.matrix()});
  std::ofstream f(paths_.at(index), std::ios::trunc);
  write_library(f, out);
  if (!f) throw std::runtime_error("cannot write " + paths_.at(index));
}

DedupResult run_dedup(SetStore& store, const Design& d, const DedupOptions& opts) {
  const Schedule sched = make_schedule(d, store.size());
  ResidencyMonitor monitor;
  EqStats stats;
  reduce_all(store, monitor, stats, opts);

  DedupResult result;
  for (const auto& step : sched.steps) {
    std::vector<std::unique_ptr<ResidentSet>> resident;
    for (const auto& ref : step.participants) {
      resident.push_back(std::make_unique<ResidentSet>(store, monitor, ref.set - 1));
    }
    for (std::size_t later = 1; later < resident.size(); ++later) {
      for (std::size_t earlier = 0; earlier < later; ++earlier) {
        resident[later]->get() = eq_sets(resident[earlier]->get(), resident[later]->get(), &stats, opts.limits);
      }
    }
    for (auto& r : resident) r->persist();
    ++result.audit.blocks_executed;
  }

  result.survivors = collect_union(store, monitor);
  result.audit.pair_comparisons = stats.pair_comparisons;
  result.audit.purges = stats.purges;
  result.audit.resident_set_peak = monitor.peak();
  result.audit.classes = result.survivors.size();
  return result;
}

DedupResult run_dedup(const std::vector<CodeSet>& sets, const Design& d, const DedupOptions& opts) {
  MemorySetStore store(sets);
  return run_dedup(store, d, opts);
}

DedupResult run_dedup_all_pairs(SetStore& store, const DedupOptions& opts) {
  ResidencyMonitor monitor;
  EqStats stats;
  std::vector<std::unique_ptr<ResidentSet>> resident;
  for (std::size_t i = 0; i < store.size(); ++i) resident.push_back(std::make_unique<ResidentSet>(store, monitor, i));
  for (auto& r : resident) r->get() = reduce_set(r->get(), &stats, opts.limits);
  for (std::size_t earlier = 0; earlier < resident.size(); ++earlier) {
    for (std::size_t later = earlier + 1; later < resident.size(); ++later) {
      resident[later]->get() = eq_sets(resident[earlier]->get(), resident[later]->get(), &stats, opts.limits);
    }
  }
  DedupResult result;
  std::vector<CodeRecord> all;
  std::set<std::string> ids;
  for (auto& r : resident) {
    r->persist();
    append_survivors(all, ids, r->get());
  }
  result.survivors = CodeSet("union", std::move(all));
  result.audit.blocks_executed = store.size() * (store.size() - (store.size() ? 1 : 0)) / 2;
  result.audit.pair_comparisons = stats.pair_comparisons;
  result.audit.purges = stats.purges;
  result.audit.resident_set_peak = monitor.peak();
  result.audit.classes = result.survivors.size();
  return result;
}

}  // namespace cwc
