#pragma once

#include <iosfwd>
#include <string>

#include "parthom/model.hpp"

namespace parthom {

// "n=<count>" then lines "u v k" (edge {u,v} with multiplicity k).
// Blank lines and lines starting with '#' are skipped.
Multigraph parse_graph(std::istream& in);
Multigraph parse_graph_string(const std::string& text);
Multigraph read_graph_file(const std::string& path);

// "m=<order>" then m rows of m rationals.
SymMatrix parse_matrix(std::istream& in);
SymMatrix parse_matrix_string(const std::string& text);
SymMatrix read_matrix_file(const std::string& path);

std::string format_graph(const Multigraph& g);
std::string format_matrix(const SymMatrix& a);

}  // namespace parthom
