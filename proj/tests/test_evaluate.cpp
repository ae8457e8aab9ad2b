#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "parthom/errors.hpp"
#include "parthom/evaluate.hpp"
#include "parthom/oracle.hpp"
#include "structured.hpp"

using namespace parthom;
using namespace testing_support;

namespace {

SymMatrix from_signs(const SignMatrix& h) {
  Matrix m(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) m(i, j) = h(i, j);
  return SymMatrix(std::move(m));
}

DiagMatrix indicator(std::size_t n, const std::vector<std::size_t>& s) {
  DiagMatrix d;
  d.diag.assign(n, 0);
  for (std::size_t i : s) d[i] = 1;
  return d;
}

Multigraph edge() { return Multigraph(2, {{0, 1}}); }

// Largest vertex count with order^n within budget.
std::size_t vertex_budget(std::size_t order, double budget = 4e5) {
  std::size_t n = 1;
  while (std::pow(static_cast<double>(order), static_cast<double>(n + 1)) <= budget && n < 7) ++n;
  return n;
}

SignMatrix random_gc(std::mt19937_64& rng, std::size_t max_k, bool symmetric) {
  SignMatrix h = SignMatrix::from_rows({{1}});
  std::size_t k = 0, target = rng() % (max_k + 1);
  while (k < target) {
    if (k + 2 <= target && rng() % 2) {
      h = kron(h, hadamard_h4());
      k += 2;
    } else {
      h = kron(h, hadamard_h2());
      k += 1;
    }
  }
  const std::size_t n = h.rows();
  std::vector<std::size_t> p(n), q(n);
  std::iota(p.begin(), p.end(), 0);
  std::iota(q.begin(), q.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::shuffle(q.begin(), q.end(), rng);
  if (symmetric) q = p;
  std::vector<int> rs(n), cs(n);
  for (auto& s : rs) s = (rng() & 1) ? 1 : -1;
  cs = rs;
  if (!symmetric)
    for (auto& s : cs) s = (rng() & 1) ? 1 : -1;
  SignMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, h(p[i], q[j]) * rs[i] * cs[j]);
  return out;
}

// A random affine subspace image under rho, or empty.
std::vector<std::size_t> random_lambda(std::mt19937_64& rng, const Representation& rep, bool rows) {
  if (rng() % 4 == 0) return {};
  const std::size_t k = rep.k;
  std::vector<std::uint64_t> basis;
  for (std::size_t t = 0; t < k; ++t)
    if (rng() % 2) basis.push_back(rng() & ((std::uint64_t{1} << k) - 1));
  std::set<std::uint64_t> span{0};
  for (auto b : basis) {
    auto cur = span;
    for (auto s : cur) span.insert(s ^ b);
  }
  std::vector<std::size_t> out;
  for (auto x : span) out.push_back(rows ? rep.rho_r[x] : rep.rho_c[x]);
  std::sort(out.begin(), out.end());
  return out;
}

// Brute force restricted to U -> rows [0, r), W -> columns [r, 2r).
Rational naive_forward(const SymMatrix& m, const DiagMatrix& d, const DiagMatrix& o, const Multigraph& g,
                       const Bipartition& bp, std::size_t r) {
  const std::size_t n = g.vertex_count();
  const auto deg = g.degrees();
  std::vector<std::size_t> spin(n, 0);
  Rational total = 0;
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= r;
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t x = c;
    for (std::size_t v = 0; v < n; ++v) {
      spin[v] = x % r + (bp.in_w[v] ? r : 0);
      x /= r;
    }
    Rational w = 1;
    for (const auto& e : g.edges()) w *= m(spin[e.u], spin[e.v]);
    for (std::size_t v = 0; v < n; ++v) w *= deg[v] % 2 ? o[spin[v]] : d[spin[v]];
    total += w;
  }
  return total;
}

std::size_t induced_even_count(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t count = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::size_t e = 0;
    for (const auto& ed : g.edges())
      if (((s >> ed.u) & 1) && ((s >> ed.v) & 1)) ++e;
    count += e % 2 == 0;
  }
  return count;
}

SymMatrix signed_rank1_blocks(std::mt19937_64& rng) {
  SymMatrix a = mat({{0}});
  bool first = true;
  const std::size_t parts = 1 + rng() % 2;
  for (std::size_t p = 0; p < parts; ++p) {
    SymMatrix part = mat({{0}});
    const int kind = static_cast<int>(rng() % 3);
    auto val = [&]() {
      long v = static_cast<long>(rng() % 3) + 1;
      return rng() % 2 ? v : -v;
    };
    if (kind == 0) {
      std::size_t n = 1 + rng() % 3;
      std::vector<long> x(n);
      for (auto& e : x) e = val();
      long c = val();
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = c * x[i] * x[j];
      part = SymMatrix(std::move(m));
    } else if (kind == 1) {
      std::size_t r = 1 + rng() % 2, s = 1 + rng() % 2;
      std::vector<long> x(r), y(s);
      for (auto& e : x) e = val();
      for (auto& e : y) e = val();
      Matrix m(r + s, r + s);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) m(i, r + j) = m(r + j, i) = x[i] * y[j];
      part = SymMatrix(std::move(m));
    }
    a = first ? part : direct_sum(a, part);
    first = false;
  }
  return a;
}

}  // namespace

TEST_CASE("rank-1 directed examples") {
  DiagMatrix id2 = DiagMatrix::identity(2);
  CHECK(eval_rank1_directed({1, 2}, {1, 1}, id2, 2, {{0, 1}}) == 6);
  CHECK(eval_rank1_directed({1, 2}, {1, 1}, id2, 1, {}) == 2);
  CHECK(eval_rank1_directed({1}, {1}, DiagMatrix::identity(1), 3, {{0, 1}, {1, 2}, {2, 0}}) == 1);
}

TEST_CASE("rank-1 pdpf examples") {
  CHECK(eval_rank1_pdpf(mat({{1}}), diag({2}), diag({0}), complete(3)) == 8);
  CHECK(eval_rank1_pdpf(mat({{1}}), diag({1}), diag({1}), complete(4)) == 1);
  CHECK(eval_rank1_pdpf(mat({{1}}), diag({1}), diag({0}), edge()) == 0);
  CHECK_THROWS_AS(eval_rank1_pdpf(mat({{1, 2}, {2, 1}}), diag({1, 1}), diag({1, 1}), edge()),
                  std::invalid_argument);
}

TEST_CASE("rank-1 pdpf agrees with enumeration") {
  std::mt19937_64 rng(71);
  for (int it = 0; it < 300; ++it) {
    SymMatrix c = signed_rank1_blocks(rng);
    DiagMatrix d = random_diag(rng, c.order(), -2, 3);
    DiagMatrix o = random_diag(rng, c.order(), -2, 3);
    Multigraph g = random_multigraph(rng, vertex_budget(c.order()), 7);
    CHECK(eval_rank1_pdpf(c, d, o, g) == naive_pdpf(c, d, o, g));
  }
}

TEST_CASE("hadamard symmetric examples") {
  SignMatrix one = SignMatrix::from_rows({{1}});
  Representation r1 = construct_representation(one, {}, {});
  auto p1 = check_linearity(r1, {}, {});
  REQUIRE(p1);
  CHECK(eval_hadamard_symmetric(one, {}, r1, p1->phi_r, complete(3)) == 1);

  std::vector<std::size_t> all{0, 1};
  Representation r2 = construct_representation(hadamard_h2(), all, all);
  auto p2 = check_linearity(r2, all, all);
  REQUIRE(p2);
  CHECK(eval_hadamard_symmetric(hadamard_h2(), all, r2, p2->phi_r, edge()) == 2);
  CHECK(eval_hadamard_symmetric(hadamard_h2(), all, r2, p2->phi_r, cycle(4)) == 8);
}

TEST_CASE("hadamard symmetric agrees with enumeration") {
  std::mt19937_64 rng(72);
  int used = 0;
  for (int it = 0; it < 300; ++it) {
    SignMatrix h = random_gc(rng, 3, true);
    Representation probe = construct_representation(h.is_symmetric() && is_positive_for(h, {}, {}) ? h : h.negated(), {}, {});
    std::vector<std::size_t> lam = random_lambda(rng, probe, true);
    bool negated = false;
    SignMatrix hp = h;
    if (!is_positive_for(hp, lam, lam)) {
      hp = hp.negated();
      negated = true;
    }
    Representation rep = construct_representation(hp, lam, lam);
    auto phi = check_linearity(rep, lam, lam);
    if (!phi || !check_degree(rep, *phi, lam, lam)) continue;
    ++used;
    Multigraph g = random_multigraph(rng, vertex_budget(h.rows()), 8);
    Rational z = eval_hadamard_symmetric(h, lam, rep, phi->phi_r, g, negated);
    CHECK(z == naive_pdpf(from_signs(h), DiagMatrix::identity(h.rows()), indicator(h.rows(), lam), g));
  }
  CHECK(used > 100);
}

TEST_CASE("hadamard bipartite directional examples") {
  SignMatrix one = SignMatrix::from_rows({{1}});
  Representation r1 = construct_representation(one, {}, {});
  auto p1 = check_linearity(r1, {}, {});
  // both endpoints have odd degree and an empty support weights them 0
  DirectionalValue d0 = eval_hadamard_bipartite_directional(one, {}, {}, r1, *p1, edge());
  CHECK(d0.total() == 0);
  CHECK(naive_pdpf(mat({{0, 1}, {1, 0}}), diag({1, 1}), diag({0, 0}), edge()) == 0);
  Representation r1f = construct_representation(one, {0}, {0});
  auto p1f = check_linearity(r1f, {0}, {0});
  DirectionalValue d1 = eval_hadamard_bipartite_directional(one, {0}, {0}, r1f, *p1f, edge());
  CHECK(d1.forward == 1);
  CHECK(d1.backward == 1);

  std::vector<std::size_t> all{0, 1};
  Representation r2 = construct_representation(hadamard_h2(), all, all);
  auto p2 = check_linearity(r2, all, all);
  Bipartisation b = bipartise(hadamard_h2(), all, all);
  DiagMatrix id4 = DiagMatrix::identity(4);
  CHECK(eval_hadamard_bipartite_directional(hadamard_h2(), all, all, r2, *p2, edge()).total() == 4);
  CHECK(eval_partition_bruteforce(b.m, edge()) == 4);
  Rational path2 = eval_hadamard_bipartite_directional(hadamard_h2(), all, all, r2, *p2, path(3)).total();
  CHECK(path2 == naive_pdpf(b.m, id4, indicator(4, b.lam), path(3)));
  CHECK_THROWS(eval_hadamard_bipartite_directional(hadamard_h2(), all, all, r2, *p2, complete(3)));
}

TEST_CASE("hadamard bipartite directional agrees with enumeration") {
  std::mt19937_64 rng(73);
  int used = 0;
  for (int it = 0; it < 300; ++it) {
    SignMatrix h = random_gc(rng, 3, it % 3 == 0);
    Representation probe = construct_representation(is_positive_for(h, {}, {}) ? h : h.negated(), {}, {});
    std::vector<std::size_t> lr = random_lambda(rng, probe, true);
    std::vector<std::size_t> lc = random_lambda(rng, probe, false);
    bool negated = false;
    SignMatrix hp = h;
    if (!is_positive_for(hp, lr, lc)) {
      hp = hp.negated();
      negated = true;
    }
    Representation rep = construct_representation(hp, lr, lc);
    auto phi = check_linearity(rep, lr, lc);
    if (!phi || !check_degree(rep, *phi, lr, lc)) continue;
    ++used;
    Multigraph g = random_connected(rng, 1, vertex_budget(2 * h.rows(), 1e5), 0);
    auto bp = bipartition(g);
    if (!bp) continue;
    // add parallel copies of existing edges to vary degrees
    std::vector<Multigraph::Edge> edges = g.edges();
    for (std::size_t t = rng() % 3; t > 0 && !edges.empty(); --t) edges.push_back(edges[rng() % edges.size()]);
    g = Multigraph(g.vertex_count(), edges);
    Bipartisation b = bipartise(h, lr, lc);
    DiagMatrix o = indicator(2 * h.rows(), b.lam);
    DiagMatrix d = DiagMatrix::identity(2 * h.rows());
    DirectionalValue dv = eval_hadamard_bipartite_directional(h, lr, lc, rep, *phi, g, negated);
    CHECK(dv.total() == naive_pdpf(b.m, d, o, g));
    CHECK(dv.forward == naive_forward(b.m, d, o, g, *bp, h.rows()));
  }
  CHECK(used > 100);
}

TEST_CASE("eval_tractable examples") {
  SymMatrix h2 = from_signs(hadamard_h2());
  CHECK(eval_tractable(h2, classify(h2), cycle(4)) == 8);
  SymMatrix u = mat({{1, -1}, {-1, 1}});
  CHECK(eval_tractable(u, classify(u), complete(3)) == 8);
  SymMatrix i2 = SymMatrix::identity(2);
  std::mt19937_64 rng(74);
  for (int it = 0; it < 10; ++it) {
    Multigraph g = random_connected(rng, 1, 6, 3);
    CHECK(eval_tractable(i2, classify(i2), g) == 2);
  }
  Multigraph empty(0, {});
  CHECK(eval_tractable(h2, classify(h2), empty) == 1);
}

TEST_CASE("eval_tractable refuses mismatched witnesses") {
  SymMatrix s = mat({{0, 1}, {1, 1}});
  CHECK_THROWS_AS(eval_tractable(s, classify(s), edge()), WitnessMismatch);
  SymMatrix h2 = from_signs(hadamard_h2());
  CHECK_THROWS_AS(eval_tractable(SymMatrix::identity(2), classify(h2), edge()), WitnessMismatch);
}

TEST_CASE("eval_tractable agrees with the oracle on structured matrices") {
  std::mt19937_64 rng(75);
  int used = 0;
  for (int it = 0; it < 400; ++it) {
    SymMatrix a = it % 2 ? random_structured_bipartite(rng, false) : random_structured_nonbipartite(rng, false);
    if (it % 7 == 0) a = direct_sum(a, it % 2 ? mat({{0}}) : random_structured_nonbipartite(rng, false));
    if (a.order() > 24) continue;
    Verdict v = classify(a);
    if (!v.tractable) continue;
    ++used;
    for (int j = 0; j < 3; ++j) {
      Multigraph g = random_multigraph(rng, vertex_budget(a.order(), 2e5), 8);
      CHECK(eval_tractable(a, v, g) == eval_partition_bruteforce(a, g));
    }
  }
  CHECK(used > 100);
}

TEST_CASE("eulerian law") {
  std::mt19937_64 rng(76);
  SymMatrix u = mat({{1, -1}, {-1, 1}});
  Verdict v = classify(u);
  for (int it = 0; it < 100; ++it) {
    Multigraph g = random_connected(rng, 1, 7, rng() % 4);
    bool euler = true;
    for (auto d : g.degrees()) euler &= d % 2 == 0;
    CHECK(eval_tractable(u, v, g) == (euler ? power(Rational(2), g.vertex_count()) : Rational(0)));
  }
}

TEST_CASE("even induced subgraph identity") {
  SymMatrix h2 = from_signs(hadamard_h2());
  Verdict v = classify(h2);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) pairs.push_back({a, b});
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Multigraph::Edge> edges;
      for (std::size_t t = 0; t < pairs.size(); ++t)
        if ((mask >> t) & 1) edges.push_back({pairs[t].first, pairs[t].second});
      Multigraph g(n, edges);
      Rational lhs = eval_tractable(h2, v, g) / 2 + power(Rational(2), n - 1);
      CHECK(lhs == Rational(static_cast<long>(induced_even_count(g))));
    }
  }
}
