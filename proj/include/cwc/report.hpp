#pragma once

#include <json.hpp>

#include "cwc/designsched.hpp"
#include "cwc/mindist.hpp"

namespace cwc {

// {n, k, d, witness, xor_row_ops, codewords_enumerated, wall_time_ms, workers};
// witness is a bit string, coordinate 1 first.
nlohmann::json to_json(const DistanceReport& r);
DistanceReport distance_report_from_json(const nlohmann::json& j);

// {blocks_executed, pair_comparisons, purges, resident_set_peak, classes}
nlohmann::json to_json(const DedupAudit& a);

}  // namespace cwc
