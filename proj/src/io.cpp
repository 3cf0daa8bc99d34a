#include "cwc/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cwc/designsched.hpp"
#include "cwc/errors.hpp"

namespace cwc {
namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back({number++, trim(text.substr(0, nl))});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::size_t> parse_numbers(std::string_view s, std::size_t line) {
  std::vector<std::size_t> out;
  const char* p = s.data();
  const char* end = s.data() + s.size();
  while (p != end) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    std::size_t value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t')) {
      throw ParseError("expected non-negative integers, got '" + std::string(s) + "'", line);
    }
    out.push_back(value);
    p = next;
  }
  return out;
}

// Consumes one matrix block starting at lines[pos]; comments and blank lines before the header are skipped.
GeneratorMatrix parse_matrix_block(const std::vector<Line>& lines, std::size_t& pos) {
  while (pos < lines.size() && (lines[pos].text.empty() || lines[pos].text.front() == '#')) ++pos;
  if (pos == lines.size()) throw ParseError("missing 'n k' header", lines.empty() ? 1 : lines.back().number);

  const Line header = lines[pos++];
  const auto nk = parse_numbers(header.text, header.number);
  if (nk.size() != 2) throw ParseError("header must be 'n k'", header.number);
  const std::size_t n = nk[0];
  const std::size_t k = nk[1];
  if (n == 0) throw ParseError("n must be at least 1", header.number);
  if (k > n) throw ParseError("k exceeds n", header.number);

  std::vector<Codeword> rows;
  while (rows.size() < k) {
    if (pos == lines.size()) {
      throw ParseError("expected " + std::to_string(k) + " rows, found " + std::to_string(rows.size()),
                       lines.back().number);
    }
    const Line row = lines[pos++];
    if (!row.text.empty() && row.text.front() == '#') continue;
    if (row.text.size() != n || row.text.find_first_not_of("01") != std::string_view::npos) {
      throw ParseError("row must be exactly " + std::to_string(n) + " characters from {0,1}", row.number);
    }
    rows.push_back(Codeword::from_string(row.text));
  }
  try {
    return GeneratorMatrix(n, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), header.number);
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GeneratorMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t pos = 0;
  auto m = parse_matrix_block(lines, pos);
  for (; pos < lines.size(); ++pos) {
    if (!lines[pos].text.empty() && lines[pos].text.front() != '#') {
      throw ParseError("unexpected content after matrix", lines[pos].number);
    }
  }
  return m;
}

GeneratorMatrix read_matrix_file(const std::string& path) { return parse_matrix(read_text_file(path)); }

void write_matrix(std::ostream& out, const GeneratorMatrix& m) {
  out << m.n() << ' ' << m.k() << '\n';
  for (const auto& r : m.rows()) out << r.to_string() << '\n';
}

std::vector<NamedMatrix> parse_library(std::string_view text) {
  static constexpr std::string_view kNameTag = "name:";
  const auto lines = split_lines(text);
  std::vector<NamedMatrix> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < lines.size() && (lines[pos].text.empty() || lines[pos].text.front() == '#')) ++pos;
    if (pos == lines.size()) break;
    const Line tag = lines[pos++];
    if (!tag.text.starts_with(kNameTag)) throw ParseError("expected 'name: <id>'", tag.number);
    std::string id(trim(tag.text.substr(kNameTag.size())));
    if (id.empty()) throw ParseError("empty code name", tag.number);
    out.push_back({std::move(id), parse_matrix_block(lines, pos)});
  }
  return out;
}

std::vector<NamedMatrix> read_library_file(const std::string& path) { return parse_library(read_text_file(path)); }

void write_library(std::ostream& out, const std::vector<NamedMatrix>& codes) {
  bool first = true;
  for (const auto& c : codes) {
    if (!first) out << '\n';
    first = false;
    out << "name: " << c.id << '\n';
    write_matrix(out, c.matrix);
  }
}

Design parse_design(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t pos = 0;
  while (pos < lines.size() && (lines[pos].text.empty() || lines[pos].text.front() == '#')) ++pos;
  if (pos == lines.size()) throw ParseError("missing 'v k lambda' header", 1);
  const Line header = lines[pos++];
  const auto params = parse_numbers(header.text, header.number);
  if (params.size() != 3) throw ParseError("header must be 'v k lambda'", header.number);

  Design d;
  d.v = params[0];
  d.block_size = params[1];
  d.lambda = params[2];
  for (; pos < lines.size(); ++pos) {
    if (lines[pos].text.empty() || lines[pos].text.front() == '#') continue;
    d.blocks.push_back(parse_numbers(lines[pos].text, lines[pos].number));
  }
  return d;
}

Design read_design_file(const std::string& path) { return parse_design(read_text_file(path)); }

void write_design(std::ostream& out, const Design& d) {
  out << d.v << ' ' << d.block_size << ' ' << d.lambda << '\n';
  for (const auto& b : d.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << '\n';
  }
}

}  // namespace cwc
