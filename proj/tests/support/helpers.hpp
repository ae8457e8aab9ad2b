#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "parthom/model.hpp"

namespace testing_support {

using parthom::Multigraph;
using parthom::Rational;
using parthom::SymMatrix;
using parthom::DiagMatrix;

SymMatrix mat(const std::vector<std::vector<long>>& rows);
DiagMatrix diag(const std::vector<long>& d);

Multigraph path(std::size_t n);
Multigraph cycle(std::size_t n);
Multigraph complete(std::size_t n);

// Loops and parallel edges allowed.
Multigraph random_multigraph(std::mt19937_64& rng, std::size_t max_vertices,
                             std::size_t max_edges, bool allow_loops = true);
Multigraph random_connected(std::mt19937_64& rng, std::size_t min_vertices, std::size_t max_vertices,
                            std::size_t extra_edges);
SymMatrix random_sym(std::mt19937_64& rng, std::size_t order, long lo, long hi,
                     bool fractions = false);
DiagMatrix random_diag(std::mt19937_64& rng, std::size_t order, long lo, long hi);

// Plain nested enumeration, kept independent from the library oracle.
Rational naive_pdpf(const SymMatrix& a, const DiagMatrix& d, const DiagMatrix& o,
                    const Multigraph& g);

}  // namespace testing_support
