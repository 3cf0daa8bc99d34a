#pragma once

#include <string>
#include <vector>

#include "cwc/gf2.hpp"

namespace fixtures {

inline cwc::GeneratorMatrix from_rows(const std::vector<std::string>& rows) {
  std::vector<cwc::Codeword> cw;
  for (const auto& r : rows) cw.push_back(cwc::Codeword::from_string(r));
  return cwc::GeneratorMatrix(rows.front().size(), std::move(cw));
}

// [8,4,4] extended Hamming code.
inline cwc::GeneratorMatrix hamming8() {
  return from_rows({"11110000", "00111100", "00001111", "10101010"});
}

// [8,4,2]: four disjoint weight-2 words.
inline cwc::GeneratorMatrix pairs8() {
  return from_rows({"11000000", "00110000", "00001100", "00000011"});
}

inline cwc::GeneratorMatrix repetition(std::size_t n) { return from_rows({std::string(n, '1')}); }

}  // namespace fixtures
