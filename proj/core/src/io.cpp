#include "parthom/io.hpp"

#include <fstream>
#include <sstream>

#include "parthom/errors.hpp"

namespace parthom {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::size_t parse_header(std::istream& in, char key, std::size_t& lineno) {
  std::string line;
  if (!next_content_line(in, line, lineno)) throw ParseError(std::string("missing '") + key + "=' header");
  std::istringstream ss(line);
  std::string tok;
  ss >> tok;
  std::string rest;
  if (tok.size() < 3 || tok[0] != key || tok[1] != '=' || (ss >> rest))
    throw ParseError("line " + std::to_string(lineno) + ": expected '" + key + "=<count>'");
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(tok.substr(2), &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != tok.size() - 2 || tok[2] == '-' || tok[2] == '+')
    throw ParseError("line " + std::to_string(lineno) + ": bad count '" + tok.substr(2) + "'");
  return static_cast<std::size_t>(v);
}

std::size_t parse_index(const std::string& tok, std::size_t lineno) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  bool ok = !tok.empty() && tok[0] != '-' && tok[0] != '+';
  if (ok) {
    try {
      v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      ok = false;
    }
  }
  if (!ok || pos != tok.size())
    throw ParseError("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
  return static_cast<std::size_t>(v);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

Multigraph parse_graph(std::istream& in) {
  std::size_t lineno = 0;
  std::size_t n = parse_header(in, 'n', lineno);
  std::vector<Multigraph::Edge> edges;
  std::string line;
  while (next_content_line(in, line, lineno)) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.size() != 3) throw ParseError("line " + std::to_string(lineno) + ": expected 'u v k'");
    std::size_t u = parse_index(toks[0], lineno), v = parse_index(toks[1], lineno);
    std::size_t k = parse_index(toks[2], lineno);
    if (u >= n || v >= n) throw ParseError("line " + std::to_string(lineno) + ": vertex out of range");
    for (std::size_t i = 0; i < k; ++i) edges.push_back({u, v});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph parse_graph_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_graph(ss);
}

Multigraph read_graph_file(const std::string& path) { return parse_graph_string(slurp(path)); }

SymMatrix parse_matrix(std::istream& in) {
  std::size_t lineno = 0;
  std::size_t m = parse_header(in, 'm', lineno);
  if (m == 0) throw ParseError("matrix order must be positive");
  std::vector<std::vector<Rational>> rows;
  std::string line;
  while (next_content_line(in, line, lineno)) {
    std::istringstream ss(line);
    std::vector<Rational> row;
    for (std::string t; ss >> t;) {
      try {
        row.push_back(parse_rational(t));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (row.size() != m)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(m) + " entries");
    rows.push_back(std::move(row));
  }
  if (rows.size() != m) throw ParseError("expected " + std::to_string(m) + " matrix rows");
  try {
    return SymMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

SymMatrix parse_matrix_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_matrix(ss);
}

SymMatrix read_matrix_file(const std::string& path) { return parse_matrix_string(slurp(path)); }

std::string format_graph(const Multigraph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << " 1\n";
  return out.str();
}

std::string format_matrix(const SymMatrix& a) {
  std::ostringstream out;
  out << "m=" << a.order() << "\n";
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) out << (j ? " " : "") << to_string(a(i, j));
    out << "\n";
  }
  return out.str();
}

}  // namespace parthom
