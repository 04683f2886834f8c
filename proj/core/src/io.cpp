#include "pda/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pda {

namespace {

bool is_skippable(const std::string& line) {
  for (const char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;  // blank
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::int64_t parse_int(const std::string& source, int line, int col, const std::string& tok,
                       std::int64_t min, std::int64_t max, const std::string& name) {
  for (const char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(source, line, col, "expected " + name + ", got '" + tok + "'");
  }
  if (tok.empty() || tok.size() > 18)
    throw ParseError(source, line, col, "expected " + name + ", got '" + tok + "'");
  const std::int64_t value = std::stoll(tok);
  if (value < min || value > max)
    throw ParseError(source, line, col,
                     name + " " + tok + " outside [" + std::to_string(min) + "," +
                         std::to_string(max) + "]");
  return value;
}

}  // namespace

Pda read_pda(std::istream& in, const std::string& source) {
  std::string line;
  int line_no = 0;
  int k = 0, f = 0, z = 0;
  std::int64_t s = 0;
  bool have_header = false;
  Grid grid;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const std::vector<std::string> tokens = tokenize(line);

    if (!have_header) {
      if (tokens.size() != 4)
        throw ParseError(source, line_no, static_cast<int>(tokens.size()),
                         "header needs 4 fields (K F Z S), got " + std::to_string(tokens.size()));
      k = static_cast<int>(parse_int(source, line_no, 1, tokens[0], 1, 1 << 20, "K"));
      f = static_cast<int>(parse_int(source, line_no, 2, tokens[1], 1, 1 << 20, "F"));
      z = static_cast<int>(parse_int(source, line_no, 3, tokens[2], 0, f, "Z"));
      s = parse_int(source, line_no, 4, tokens[3], 0, static_cast<std::int64_t>(f) * k, "S");
      have_header = true;
      grid.reserve(static_cast<size_t>(f));
      continue;
    }

    if (static_cast<int>(grid.size()) == f)
      throw ParseError(source, line_no, 1,
                       "unexpected content after " + std::to_string(f) + " rows");
    if (static_cast<int>(tokens.size()) != k) {
      // point at the first missing or first surplus token
      const int col = tokens.size() < static_cast<size_t>(k)
                          ? static_cast<int>(tokens.size()) + 1
                          : k + 1;
      throw ParseError(source, line_no, col,
                       "row " + std::to_string(grid.size()) + " has " +
                           std::to_string(tokens.size()) + " tokens, expected K=" +
                           std::to_string(k));
    }
    std::vector<Cell> row;
    row.reserve(static_cast<size_t>(k));
    for (int col = 0; col < k; ++col) {
      const std::string& tok = tokens[static_cast<size_t>(col)];
      if (tok == "*") {
        row.push_back(Cell::star());
      } else {
        row.push_back(Cell::symbol(
            parse_int(source, line_no, col + 1, tok, 0, (std::int64_t{1} << 62), "integer entry")));
      }
    }
    grid.push_back(std::move(row));
  }

  if (!have_header) throw ParseError(source, line_no, 1, "missing header line (K F Z S)");
  if (static_cast<int>(grid.size()) != f)
    throw ParseError(source, line_no, 1,
                     "file ends after " + std::to_string(grid.size()) + " rows, expected F=" +
                         std::to_string(f));
  return make_pda(grid, z, s);
}

Pda read_pda_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  return read_pda(in, path);
}

std::string to_text(const Pda& p) {
  std::ostringstream out;
  out << p.k() << ' ' << p.f() << ' ' << p.z() << ' ' << p.s() << '\n';
  for (int j = 0; j < p.f(); ++j) {
    for (int k = 0; k < p.k(); ++k) {
      if (k > 0) out << ' ';
      const Cell c = p.at(j, k);
      if (c.is_star()) {
        out << '*';
      } else {
        out << c.symbol();
      }
    }
    out << '\n';
  }
  return out.str();
}

void write_pda(std::ostream& out, const Pda& p) { out << to_text(p); }

void write_pda_file(const std::string& path, const Pda& p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path, 0, 0, "cannot open file for writing");
  write_pda(out, p);
}

}  // namespace pda
