#include "cwc/report.hpp"

namespace cwc {

nlohmann::json to_json(const DistanceReport& r) {
  return {
      {"n", r.n},
      {"k", r.k},
      {"d", r.d},
      {"witness", r.witness.to_string()},
      {"xor_row_ops", r.xor_row_ops},
      {"codewords_enumerated", r.codewords_enumerated},
      {"wall_time_ms", r.wall_time_ms},
      {"workers", r.workers},
  };
}

DistanceReport distance_report_from_json(const nlohmann::json& j) {
  DistanceReport r;
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<std::size_t>();
  r.d = j.at("d").get<std::size_t>();
  r.witness = Codeword::from_string(j.at("witness").get<std::string>());
  r.xor_row_ops = j.at("xor_row_ops").get<std::uint64_t>();
  r.codewords_enumerated = j.at("codewords_enumerated").get<std::uint64_t>();
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  r.workers = j.at("workers").get<int>();
  return r;
}

nlohmann::json to_json(const DedupAudit& a) {
  return {
      {"blocks_executed", a.blocks_executed},
      {"pair_comparisons", a.pair_comparisons},
      {"purges", a.purges},
      {"resident_set_peak", a.resident_set_peak},
      {"classes", a.classes},
  };
}

}  // namespace cwc
