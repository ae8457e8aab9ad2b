#include "helpers.hpp"

#include <algorithm>

namespace testing_support {

SymMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> q;
    for (long x : row) q.emplace_back(x);
    r.push_back(std::move(q));
  }
  return SymMatrix::from_rows(r);
}

DiagMatrix diag(const std::vector<long>& d) {
  DiagMatrix out;
  for (long x : d) out.diag.emplace_back(x);
  return out;
}

Multigraph path(std::size_t n) {
  std::vector<Multigraph::Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Multigraph(n, e);
}

Multigraph cycle(std::size_t n) {
  std::vector<Multigraph::Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Multigraph(n, e);
}

Multigraph complete(std::size_t n) {
  std::vector<Multigraph::Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return Multigraph(n, e);
}

Multigraph random_multigraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                             bool allow_loops) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<Multigraph::Edge> e;
  while (e.size() < m) {
    std::size_t u = pick(rng), v = pick(rng);
    if (u == v && (!allow_loops || rng() % 4 != 0)) continue;
    e.push_back({u, v});
  }
  return Multigraph(n, e);
}

Multigraph random_connected(std::mt19937_64& rng, std::size_t min_vertices, std::size_t max_vertices,
                            std::size_t extra_edges) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(min_vertices, max_vertices)(rng);
  std::vector<Multigraph::Edge> e;
  for (std::size_t v = 1; v < n; ++v) e.push_back({std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v});
  std::size_t extra = std::uniform_int_distribution<std::size_t>(0, extra_edges)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < extra; ++i) e.push_back({pick(rng), pick(rng)});
  return Multigraph(n, e);
}

SymMatrix random_sym(std::mt19937_64& rng, std::size_t order, long lo, long hi, bool fractions) {
  std::uniform_int_distribution<long> val(lo, hi);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<std::vector<Rational>> rows(order, std::vector<Rational>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i; j < order; ++j) {
      Rational q(val(rng));
      if (fractions) q /= den(rng);
      rows[i][j] = rows[j][i] = q;
    }
  return SymMatrix::from_rows(rows);
}

DiagMatrix random_diag(std::mt19937_64& rng, std::size_t order, long lo, long hi) {
  std::uniform_int_distribution<long> val(lo, hi);
  DiagMatrix d;
  for (std::size_t i = 0; i < order; ++i) d.diag.emplace_back(val(rng));
  return d;
}

Rational naive_pdpf(const SymMatrix& a, const DiagMatrix& d, const DiagMatrix& o,
                    const Multigraph& g) {
  const std::size_t n = g.vertex_count(), m = a.order();
  const auto deg = g.degrees();
  std::vector<std::size_t> xi(n, 0);
  Rational total = 0;
  while (true) {
    Rational term = 1;
    for (const auto& e : g.edges()) term *= a(xi[e.u], xi[e.v]);
    for (std::size_t v = 0; v < n; ++v) term *= (deg[v] % 2 == 0) ? d[xi[v]] : o[xi[v]];
    total += term;
    std::size_t p = 0;
    while (p < n && ++xi[p] == m) xi[p++] = 0;
    if (p == n) break;
  }
  return total;
}

}  // namespace testing_support
