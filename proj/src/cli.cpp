#include "cwc/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "cwc/designsched.hpp"
#include "cwc/equiv.hpp"
#include "cwc/errors.hpp"
#include "cwc/graygen.hpp"
#include "cwc/io.hpp"
#include "cwc/mindist.hpp"
#include "cwc/random.hpp"
#include "cwc/report.hpp"

namespace cwc {
namespace {

struct RunConfig {
  std::vector<std::string> inputs;
  std::vector<std::string> methods;
  int workers = 1;
  std::size_t max_k = kDefaultEnumerationLimit;
  std::size_t max_n = EquivalenceLimits{}.max_n;
  std::string format = "json";
  std::optional<std::size_t> stop_at;

  // grayseq
  int k = 0;
  int t = 0;
  bool deltas = false;
  bool as_support = false;
  bool machine = false;

  // dedup
  std::string design = "fano";
  std::string out_path;
  std::string audit_path;
  std::string work_dir;
  bool all_pairs = false;

  // gen
  std::size_t n = 0;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::string prefix = "c";
};

void print_report(std::ostream& out, const RunConfig& cfg, const DistanceReport& r, const std::string& method) {
  if (cfg.format == "text") {
    out << "method=" << method << " n=" << r.n << " k=" << r.k << " d=" << r.d << " witness=" << r.witness.to_string()
        << " xor_row_ops=" << r.xor_row_ops << " codewords=" << r.codewords_enumerated << " workers=" << r.workers
        << '\n';
  } else {
    out << to_json(r).dump() << '\n';
  }
}

int cmd_mindist(const RunConfig& cfg, std::ostream& out) {
  const auto m = read_matrix_file(cfg.inputs.at(0));
  MinDistanceOptions opts{cfg.max_k, cfg.stop_at};
  const std::vector<std::string> methods = cfg.methods.empty() ? std::vector<std::string>{"gray"} : cfg.methods;
  for (const auto& method : methods) {
    DistanceReport r;
    if (method == "direct") {
      r = min_distance_direct(m, opts);
    } else if (method == "gray") {
      r = min_distance_gray(m, opts);
    } else {
      r = min_distance_parallel(m, cfg.workers, opts);
    }
    print_report(out, cfg, r, method);
  }
  return kExitOk;
}

int cmd_grayseq(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.k < 1 || cfg.k > kMaxGrayLength || cfg.t < 0 || cfg.t > cfg.k) {
    err << "error: need 0 <= t <= k and 1 <= k <= " << kMaxGrayLength << '\n';
    return kExitParse;
  }
  ConstantWeightIterator it(cfg.k, cfg.t);
  if (cfg.deltas) {
    while (auto d = it.next()) {
      if (cfg.machine) {
        out << d->out_pos << ',' << d->in_pos << '\n';
      } else {
        out << '[' << std::min(d->out_pos, d->in_pos) << ',' << std::max(d->out_pos, d->in_pos) << "]\n";
      }
    }
    return kExitOk;
  }
  do {
    out << (cfg.as_support ? render_support(it.word()) : render_word(it.word(), cfg.k)) << '\n';
  } while (it.next());
  return kExitOk;
}

Design resolve_design(const std::string& spec, std::size_t sets) {
  if (spec == "fano") return fano_plane();
  if (spec == "complete") return complete_design(sets);
  return read_design_file(spec);
}

int cmd_dedup(const RunConfig& cfg, std::ostream& out) {
  namespace fs = std::filesystem;
  const Design design = resolve_design(cfg.design, cfg.inputs.size());
  if (!cfg.all_pairs) make_schedule(design, cfg.inputs.size());  // reject before touching any code

  const bool scratch = cfg.work_dir.empty();
  const fs::path work = scratch ? fs::temp_directory_path() / ("cwc-dedup-" + std::to_string(std::random_device{}()))
                                : fs::path(cfg.work_dir);
  DedupResult result;
  {
    DirectorySetStore store(cfg.inputs, work.string());
    DedupOptions opts;
    opts.limits.max_n = cfg.max_n;
    opts.limits.max_k = cfg.max_k;
    result = cfg.all_pairs ? run_dedup_all_pairs(store, opts) : run_dedup(store, design, opts);
  }
  if (scratch) fs::remove_all(work);

  std::vector<NamedMatrix> survivors;
  for (const auto& r : result.survivors.records()) survivors.push_back({r.id(), r.matrix()});
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path, std::ios::trunc);
    write_library(f, survivors);
  }
  const std::string audit = to_json(result.audit).dump();
  if (!cfg.audit_path.empty()) {
    std::ofstream(cfg.audit_path, std::ios::trunc) << audit << '\n';
  } else {
    out << audit << '\n';
  }
  return kExitOk;
}

int cmd_codeinfo(const RunConfig& cfg, std::ostream& out) {
  const auto m = read_matrix_file(cfg.inputs.at(0));
  nlohmann::json j = {
      {"n", m.n()},
      {"k", m.k()},
      {"rank", rref(m).rank},
      {"self_orthogonal", is_self_orthogonal(m)},
      {"self_dual", is_self_dual(m)},
  };
  if (m.k() <= cfg.max_k) j["weight_enumerator"] = weight_enumerator(m, cfg.max_k);
  if (cfg.format == "text") {
    for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_dual(const RunConfig& cfg, std::ostream& out) {
  write_matrix(out, dual(read_matrix_file(cfg.inputs.at(0))));
  return kExitOk;
}

int cmd_equiv(const RunConfig& cfg, std::ostream& out) {
  const auto a = read_matrix_file(cfg.inputs.at(0));
  const auto b = read_matrix_file(cfg.inputs.at(1));
  const auto perm = find_equivalence(a, b, {cfg.max_n, cfg.max_k});
  nlohmann::json j = {{"equivalent", perm.has_value()}};
  if (perm) {
    std::vector<std::size_t> one_based;
    for (std::size_t p : *perm) one_based.push_back(p + 1);
    j["permutation"] = one_based;
  }
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  Rng rng(cfg.seed);
  std::vector<NamedMatrix> codes;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    codes.push_back({cfg.prefix + std::to_string(i + 1), random_full_rank(cfg.n, static_cast<std::size_t>(cfg.k), rng)});
  }
  write_library(out, codes);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary linear code workbench: minimum distance, revolving-door Gray codes, design-scheduled dedup"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* mindist = app.add_subcommand("mindist", "Minimum distance of a code");
  mindist->add_option("file", cfg.inputs, "Generator matrix file")->required()->expected(1);
  mindist->add_option("--method", cfg.methods, "direct | gray | parallel (repeatable)")
      ->check(CLI::IsMember({"direct", "gray", "parallel"}));
  mindist->add_option("--workers", cfg.workers, "Chunks for --method parallel")->check(CLI::PositiveNumber);
  mindist->add_option("--max-k", cfg.max_k, "Largest dimension to enumerate");
  mindist->add_option("--stop-at", cfg.stop_at, "Stop once a codeword of this weight or less is found");
  mindist->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  auto* grayseq = app.add_subcommand("grayseq", "Constant-weight Gray code listing");
  grayseq->add_option("-k", cfg.k, "Word length")->required();
  grayseq->add_option("-t", cfg.t, "Weight")->required();
  grayseq->add_flag("--deltas", cfg.deltas, "Print swap pairs instead of words");
  grayseq->add_flag("--support", cfg.as_support, "Print words as support sets");
  grayseq->add_flag("--machine", cfg.machine, "With --deltas: print 'out,in' per line");

  auto* dedup = app.add_subcommand("dedup", "Remove equivalent codes across library files");
  dedup->add_option("libraries", cfg.inputs, "One code-library file per set")->required();
  dedup->add_option("--design", cfg.design, "fano | complete | design file");
  dedup->add_option("--out", cfg.out_path, "Survivor library output");
  dedup->add_option("--audit", cfg.audit_path, "Audit JSON output (stdout if omitted)");
  dedup->add_option("--work-dir", cfg.work_dir, "Directory for sets at rest");
  dedup->add_option("--max-n", cfg.max_n, "Largest length for equivalence search");
  dedup->add_flag("--all-pairs", cfg.all_pairs, "Load every set and compare all pairs");

  auto* codeinfo = app.add_subcommand("codeinfo", "Parameters, self-duality and weight enumerator");
  codeinfo->add_option("file", cfg.inputs)->required()->expected(1);
  codeinfo->add_option("--max-k", cfg.max_k, "Largest dimension to enumerate");
  codeinfo->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

  auto* dualcmd = app.add_subcommand("dual", "Generator matrix of the dual code");
  dualcmd->add_option("file", cfg.inputs)->required()->expected(1);

  auto* equiv = app.add_subcommand("equiv", "Permutation equivalence of two codes");
  equiv->add_option("files", cfg.inputs)->required()->expected(2);
  equiv->add_option("--max-n", cfg.max_n, "Largest length for equivalence search");

  auto* gen = app.add_subcommand("gen", "Random full-rank codes in library format");
  gen->add_option("-n", cfg.n, "Length")->required();
  gen->add_option("-k", cfg.k, "Dimension")->required();
  gen->add_option("--count", cfg.count);
  gen->add_option("--seed", cfg.seed)->required();
  gen->add_option("--prefix", cfg.prefix);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (*mindist) return cmd_mindist(cfg, out);
    if (*grayseq) return cmd_grayseq(cfg, out, err);
    if (*dedup) return cmd_dedup(cfg, out);
    if (*codeinfo) return cmd_codeinfo(cfg, out);
    if (*dualcmd) return cmd_dual(cfg, out);
    if (*equiv) return cmd_equiv(cfg, out);
    if (*gen) return cmd_gen(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kExitLimit;
  } catch (const DesignError& e) {
    err << "invalid design: " << e.what() << '\n';
    return kExitDesign;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace cwc
