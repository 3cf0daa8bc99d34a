#pragma once

// Text formats.
//
// Generator matrix:
//   # comment
//   n k
//   0110...   (k rows of exactly n characters; character i is coordinate i)
//
// Code library: generator-matrix blocks, each preceded by `name: <id>`, separated by blank lines.
//
// Design: first line `v k lambda`, then one block per line as 1-based point indices.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwc/gf2.hpp"

namespace cwc {

struct Design;

GeneratorMatrix parse_matrix(std::string_view text);
GeneratorMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const GeneratorMatrix& m);

struct NamedMatrix {
  std::string id;
  GeneratorMatrix matrix;
};

std::vector<NamedMatrix> parse_library(std::string_view text);
std::vector<NamedMatrix> read_library_file(const std::string& path);
void write_library(std::ostream& out, const std::vector<NamedMatrix>& codes);

Design parse_design(std::string_view text);
Design read_design_file(const std::string& path);
void write_design(std::ostream& out, const Design& d);

std::string read_text_file(const std::string& path);

}  // namespace cwc
