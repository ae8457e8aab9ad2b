#include "selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "parthom/classify.hpp"
#include "parthom/evaluate.hpp"
#include "parthom/gf2.hpp"
#include "parthom/hadamard.hpp"
#include "parthom/oracle.hpp"
#include "parthom/structure.hpp"

namespace parthom::selftest {

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SymMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
  return SymMatrix::from_rows(q);
}

SymMatrix sym(Matrix m) { return SymMatrix(std::move(m)); }

SymMatrix signs(const SignMatrix& h) { return sym(h.to_matrix()); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); }

Rational small_rational(Rng& rng, long lo, long hi, bool fractions) {
  long p = lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  long q = fractions ? 1 + static_cast<long>(rng() % 3) : 1;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Multigraph random_multigraph(Rng& rng, std::size_t max_v, std::size_t max_e) {
  const std::size_t n = pick(rng, 1, max_v);
  const std::size_t e = pick(rng, 0, max_e);
  std::vector<Multigraph::Edge> edges;
  for (std::size_t i = 0; i < e; ++i) edges.push_back({rng() % n, rng() % n});
  return Multigraph(n, std::move(edges));
}

Multigraph random_connected(Rng& rng, std::size_t max_v, std::size_t extra) {
  const std::size_t n = pick(rng, 1, max_v);
  std::vector<Multigraph::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({rng() % v, v});
  const std::size_t k = pick(rng, 0, extra);
  for (std::size_t i = 0; i < k; ++i) edges.push_back({rng() % n, rng() % n});
  return Multigraph(n, std::move(edges));
}

SymMatrix random_sym(Rng& rng, std::size_t m, long lo, long hi, bool fractions) {
  Matrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) a(i, j) = a(j, i) = small_rational(rng, lo, hi, fractions);
  return sym(std::move(a));
}

DiagMatrix random_diag(Rng& rng, std::size_t m, long lo, long hi) {
  DiagMatrix d;
  for (std::size_t i = 0; i < m; ++i) d.diag.push_back(small_rational(rng, lo, hi, false));
  return d;
}

bool block_rank_one_by_minors(const SymMatrix& a) {
  for (const auto& comp : matrix_components(a)) {
    if (comp.zero) continue;
    const Matrix& b = comp.block;
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(i, j) == 0) return false;
        for (std::size_t k = i + 1; k < b.rows(); ++k)
          for (std::size_t l = j + 1; l < b.cols(); ++l)
            if (b(i, j) * b(k, l) != b(i, l) * b(k, j)) return false;
      }
  }
  return true;
}

SymMatrix random_nonnegative(Rng& rng) {
  const std::size_t n = pick(rng, 1, 5);
  switch (rng() % 3) {
    case 0: return random_sym(rng, n, 0, 3, false);
    default: {
      std::vector<long> x(n);
      for (auto& e : x) e = static_cast<long>(rng() % 3);
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = x[i] * x[j];
      if (rng() % 2) {
        std::size_t i = rng() % n, j = rng() % n;
        m(i, j) = m(j, i) = m(i, j) + 1;
      }
      return sym(std::move(m));
    }
  }
}

SymMatrix bipartite_of(const SignMatrix& h) {
  const std::size_t r = h.rows();
  Matrix m(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, r + j) = m(r + j, i) = h(i, j);
  return sym(std::move(m));
}

SignMatrix random_gc(Rng& rng, std::size_t max_k, bool symmetric) {
  SignMatrix h = SignMatrix::from_rows({{1}});
  const std::size_t target = pick(rng, 0, max_k);
  for (std::size_t k = 0; k < target;) {
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
  std::shuffle(p.begin(), p.end(), rng);
  q = p;
  if (!symmetric) std::shuffle(q.begin(), q.end(), rng);
  std::vector<int> rs(n), cs(n);
  for (auto& s : rs) s = rng() % 2 ? 1 : -1;
  cs = rs;
  if (!symmetric)
    for (auto& s : cs) s = rng() % 2 ? 1 : -1;
  SignMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, h(p[i], q[j]) * rs[i] * cs[j]);
  return out;
}

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) notes << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

CriterionResult finish(int id, const char* name, Check& c, Clock::time_point t0, const std::string& summary) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.passed = c.ok;
  r.seconds = seconds_since(t0);
  r.detail = c.notes.str() + summary;
  return r;
}

OracleOptions oracle_opts(const Options& o) {
  OracleOptions oo;
  oo.threads = o.threads;
  return oo;
}

// 1. Verdicts on the named corpus and the nonnegative cross-check.
CriterionResult classification_corpus(const Options& o) {
  const auto t0 = Clock::now();
  Check c;
  struct Case {
    const char* name;
    SymMatrix a;
    bool tractable;
  };
  std::vector<Case> cases = {
      {"H2", signs(hadamard_h2()), true},
      {"H4", signs(hadamard_h4()), true},
      {"S", mat({{0, 1}, {1, 1}}), false},
      {"C3", mat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), false},
      {"U", mat({{1, -1}, {-1, 1}}), true},
      {"F3", mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), false},
  };
  for (std::size_t m = 1; m <= 4; ++m) cases.push_back({"I", SymMatrix::identity(m), true});
  for (const auto& cs : cases) {
    const auto t = Clock::now();
    const bool got = classify(cs.a).tractable;
    const double dt = seconds_since(t);
    c.expect(got == cs.tractable, std::string(cs.name) + " verdict");
    c.expect(dt < 1.0, std::string(cs.name) + " took over 1 s");
  }
  Rng rng(o.seed + 1);
  int agree = 0;
  for (int it = 0; it < 50; ++it) {
    SymMatrix a = random_nonnegative(rng);
    try {
      const bool ok = classify(a).tractable == block_rank_one_by_minors(a);
      agree += ok;
      c.expect(ok, "nonnegative matrix " + std::to_string(it));
    } catch (const std::exception& e) {
      c.expect(false, std::string("nonnegative matrix threw: ") + e.what());
    }
  }
  return finish(1, "classification corpus", c, t0,
                std::to_string(cases.size()) + " named matrices, " + std::to_string(agree) +
                    "/50 nonnegative agree with the block rank criterion");
}

// 2. Evaluator against the brute-force oracle.
CriterionResult evaluator_oracle(const Options& o) {
  const auto t0 = Clock::now();
  Check c;
  std::vector<std::pair<const char*, SymMatrix>> corpus = {
      {"H2", signs(hadamard_h2())},
      {"H4", signs(hadamard_h4())},
      {"U", mat({{1, -1}, {-1, 1}})},
      {"I1", SymMatrix::identity(1)},
      {"I2", SymMatrix::identity(2)},
      {"I3", SymMatrix::identity(3)},
      {"I4", SymMatrix::identity(4)},
      {"J2", mat({{1, 1}, {1, 1}})},
      {"bip(H2)", bipartite_of(hadamard_h2())},
      {"R(x)H2", sym(kron(mat({{1, 2}, {2, 4}}).matrix(), hadamard_h2().to_matrix()))},
      {"signed rank 1", mat({{4, -2}, {-2, 1}})},
      {"zero + 1", mat({{0, 0}, {0, 1}})},
  };
  Rng rng(o.seed + 2);
  std::size_t pairs = 0;
  for (const auto& [name, a] : corpus) {
    Verdict v = classify(a);
    c.expect(v.tractable, std::string(name) + " classified tractable");
    if (!v.tractable) continue;
    for (int it = 0; it < 200; ++it) {
      Multigraph g = random_multigraph(rng, 7, 10);
      const Rational fast = eval_tractable(a, v, g);
      const Rational slow = eval_partition_bruteforce(a, g, oracle_opts(o));
      c.expect(fast == slow, std::string(name) + " on graph " + std::to_string(it));
      ++pairs;
    }
  }
  const double dt = seconds_since(t0);
  c.expect(dt < 60.0, "runtime over 60 s");
  return finish(2, "evaluator-oracle equivalence", c, t0,
                std::to_string(corpus.size()) + " matrices, " + std::to_string(pairs) + " graphs");
}

// 3. Z_U on connected graphs.
CriterionResult eulerian(const Options& o) {
  const auto t0 = Clock::now();
  Check c;
  const SymMatrix u = mat({{1, -1}, {-1, 1}});
  const Verdict v = classify(u);
  Rng rng(o.seed + 3);
  std::size_t eulerian_count = 0;
  for (int it = 0; it < 120; ++it) {
    Multigraph g = random_connected(rng, 7, 4);
    const auto deg = g.degrees();
    const bool even = std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d % 2 == 0; });
    eulerian_count += even;
    const Rational expected = even ? power(Rational(2), g.vertex_count()) : Rational(0);
    c.expect(eval_tractable(u, v, g) == expected, "evaluator on graph " + std::to_string(it));
    c.expect(eval_partition_bruteforce(u, g, oracle_opts(o)) == expected, "oracle on graph " + std::to_string(it));
  }
  return finish(3, "eulerian identity", c, t0,
                "120 connected graphs, " + std::to_string(eulerian_count) + " eulerian");
}

// 4. Even induced subgraphs versus Z_{H2}.
CriterionResult even_subgraphs(const Options& o) {
  const auto t0 = Clock::now();
  Check c;
  const SymMatrix h2 = signs(hadamard_h2());
  const Verdict v = classify(h2);
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) slots.push_back({a, b});
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<Multigraph::Edge> edges;
      for (std::size_t t = 0; t < slots.size(); ++t)
        if ((mask >> t) & 1) edges.push_back({slots[t].first, slots[t].second});
      Multigraph g(n, edges);
      long count = 0;
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::size_t inside = 0;
        for (const auto& e : edges) inside += ((s >> e.u) & 1) && ((s >> e.v) & 1);
        count += inside % 2 == 0;
      }
      const Rational z = eval_tractable(h2, v, g);
      c.expect(z / 2 + power(Rational(2), n - 1) == count, "graph " + std::to_string(graphs));
      if (n <= 4) c.expect(z == eval_partition_bruteforce(h2, g, oracle_opts(o)), "oracle disagrees");
      ++graphs;
    }
  }
  return finish(4, "even-subgraph identity", c, t0, std::to_string(graphs) + " simple graphs");
}

// 5. Nowhere-zero 3-flows of the triangle.
CriterionResult flows(const Options& o) {
  const auto t0 = Clock::now();
  Check c;
  const SymMatrix f3 = mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  const Multigraph tri(3, {{0, 1}, {1, 2}, {2, 0}});
  const Rational z = eval_partition_bruteforce(f3, tri, oracle_opts(o));
  // orient 0->1->2->0 and count conservation-respecting nonzero values mod 3
  int nz = 0;
  for (int a = 1; a < 3; ++a)
    for (int b = 1; b < 3; ++b)
      for (int d = 1; d < 3; ++d) nz += (a - d) % 3 == 0 && (b - a) % 3 == 0 && (d - b) % 3 == 0;
  c.expect(nz == 2, "flow count " + std::to_string(nz));
  c.expect(z == 54, "oracle value " + to_string(z));
  c.expect(z == Rational(27 * nz), "Z != 3^3 x flows");
  return finish(5, "nowhere-zero flow spot check", c, t0, "Z=" + to_string(z) + ", flows=" + std::to_string(nz));
}

BigInt enumerate_ones(const QuadPoly& q) {
  BigInt ones = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << q.vars()); ++x) ones += q.eval_bits(x) ? 1 : 0;
  return ones;
}

// 6. GF(2) quadratic counter.
CriterionResult gf2_counter(const Options& o) {
  const auto t0 = Clock::now();
  Check c;
  std::size_t exhaustive = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    const std::size_t bits = pairs.size() + n + 1;
    for (std::uint32_t code = 0; code < (1u << bits); ++code) {
      QuadPoly q(n);
      std::size_t b = 0;
      for (const auto& [i, j] : pairs)
        if ((code >> b++) & 1) q.toggle_pair(i, j);
      for (std::size_t i = 0; i < n; ++i)
        if ((code >> b++) & 1) q.toggle_linear(i);
      if ((code >> b) & 1) q.toggle_constant();
      c.expect(count_quadratic_ones(q) == enumerate_ones(q), "exhaustive polynomial " + std::to_string(code));
      ++exhaustive;
    }
  }
  Rng rng(o.seed + 6);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t n = pick(rng, 1, 14);
    QuadPoly q(n);
    const double density = static_cast<double>(rng() % 100) / 100.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j)
        if (static_cast<double>(rng() % 1000) / 1000.0 < density) q.toggle_pair(i, j);
      if (rng() % 2) q.toggle_linear(i);
    }
    if (rng() % 2) q.toggle_constant();
    c.expect(count_quadratic_ones(q) == enumerate_ones(q), "random polynomial " + std::to_string(it));
  }
  c.expect(seconds_since(t0) < 30.0, "runtime over 30 s");
  return finish(6, "GF(2) counter", c, t0, std::to_string(exhaustive) + " exhaustive + 1000 random polynomials");
}

// 7. Z-preserving transforms, each against the oracle.
CriterionResult transforms(const Options& o) {
  const auto t0 = Clock::now();
  Check c;
  Rng rng(o.seed + 7);
  const OracleOptions oo = oracle_opts(o);
  auto Z = [&](const SymMatrix& a, const DiagMatrix& d, const DiagMatrix& od, const Multigraph& g) {
    return eval_pdpf_bruteforce(PdpfInstance(a, d, od), g, oo);
  };
  for (int it = 0; it < 100; ++it) {
    const std::size_t m = pick(rng, 1, 3);
    SymMatrix a = random_sym(rng, m, -2, 2, true);
    Multigraph g = random_multigraph(rng, 4, 4);

    const std::size_t s = pick(rng, 1, 3);
    Matrix ap = a.matrix();
    for (std::size_t i = 1; i < s; ++i) ap = ap * a.matrix();
    c.expect(eval_partition_bruteforce(a, stretch(g, s), oo) == eval_partition_bruteforce(sym(ap), g, oo),
             "stretch " + std::to_string(it));

    const std::size_t t = pick(rng, 1, 3);
    Matrix at = a.matrix();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) at(i, j) = power(a(i, j), t);
    c.expect(eval_partition_bruteforce(a, thicken(g, t), oo) == eval_partition_bruteforce(sym(at), g, oo),
             "thicken " + std::to_string(it));
  }
  for (int it = 0; it < 100; ++it) {
    // planted twins and pm-twins over a small base
    const std::size_t base = pick(rng, 1, 3), m = pick(rng, base, 5);
    SymMatrix b = random_sym(rng, base, -2, 2, false);
    std::vector<std::size_t> cls(m);
    std::vector<int> sg(m);
    for (std::size_t i = 0; i < m; ++i) {
      cls[i] = i < base ? i : rng() % base;
      sg[i] = rng() % 2 ? 1 : -1;
    }
    Matrix tw(m, m), pm(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        tw(i, j) = b(cls[i], cls[j]);
        pm(i, j) = sg[i] * sg[j] * b(cls[i], cls[j]);
      }
    Multigraph g = random_multigraph(rng, 4, 5);
    const SymMatrix twa = sym(tw), pma = sym(pm);
    const DiagMatrix id = DiagMatrix::identity(m);
    const TwinReduction tr = twin_reduce(twa, id);
    c.expect(Z(twa, id, id, g) == Z(tr.reduced, tr.delta, tr.delta, g), "twin reduction " + std::to_string(it));
    const DiagMatrix delta = random_diag(rng, m, 1, 3);
    const PmTwinReduction pr = pm_twin_reduce(pma, delta);
    c.expect(Z(pma, delta, delta, g) == Z(pr.reduced, pr.d, pr.o, g), "pm-twin reduction " + std::to_string(it));
  }
  for (int it = 0; it < 100; ++it) {
    const std::size_t m = pick(rng, 1, 3);
    PdpfInstance inst(random_sym(rng, m, -2, 2, true), random_diag(rng, m, -2, 2), random_diag(rng, m, -2, 2));
    Multigraph g = random_multigraph(rng, 4, 5);
    const Rational z = eval_pdpf_bruteforce(inst, g, oo);
    c.expect(z == eval_pdpf_bruteforce(negate_row_col(inst, rng() % m), g, oo), "negation " + std::to_string(it));

    // standard conversion to U (x) C with weights (D+O)/2, (D-O)/2
    Matrix uc = kron(mat({{1, -1}, {-1, 1}}).matrix(), inst.a.matrix());
    DiagMatrix delta;
    for (int sgn = 1; sgn >= -1; sgn -= 2)
      for (std::size_t i = 0; i < m; ++i) delta.diag.push_back((inst.d[i] + sgn * inst.o[i]) / 2);
    c.expect(z == eval_weighted_bruteforce(sym(std::move(uc)), delta, g, oo), "conversion " + std::to_string(it));
  }
  for (int it = 0; it < 100; ++it) {
    const std::size_t m1 = pick(rng, 1, 2), m2 = pick(rng, 1, 2);
    SymMatrix a = random_sym(rng, m1, -2, 2, true), b = random_sym(rng, m2, -2, 2, true);
    Multigraph g = random_multigraph(rng, 4, 5);
    const SymMatrix ab = sym(kron(a.matrix(), b.matrix()));
    c.expect(eval_partition_bruteforce(ab, g, oo) ==
                 eval_partition_bruteforce(a, g, oo) * eval_partition_bruteforce(b, g, oo),
             "plain tensor " + std::to_string(it));
    DiagMatrix d1 = random_diag(rng, m1, -2, 2), o1 = random_diag(rng, m1, -2, 2);
    DiagMatrix d2 = random_diag(rng, m2, -2, 2), o2 = random_diag(rng, m2, -2, 2);
    c.expect(Z(ab, kron(d1, d2), kron(o1, o2), g) == Z(a, d1, o1, g) * Z(b, d2, o2, g),
             "pdpf tensor " + std::to_string(it));
  }
  return finish(7, "transform identities", c, t0,
                "stretch, thicken, twin, pm-twin, negation, conversion, tensor x2; 100 instances each");
}

// 8. Golden representations and exhaustive verification.
CriterionResult representations(const Options& o) {
  const auto t0 = Clock::now();
  Check c;
  const std::vector<std::size_t> all2{0, 1}, all4{0, 1, 2, 3};
  const Representation r2 = construct_representation(hadamard_h2(), all2, all2);
  c.expect(r2.k == 1 && r2.pi == std::vector<std::size_t>{0}, "H2 permutation");
  c.expect(r2.g_r.is_zero() && r2.g_c.is_zero(), "H2 corrections vanish");
  c.expect(r2.rho_r[0] == 0 && r2.rho_c[0] == 0, "H2 rho(0) is the first index");
  const Representation r4 = construct_representation(hadamard_h4(), all4, all4);
  c.expect(r4.k == 2 && r4.pi == std::vector<std::size_t>{1, 0}, "H4 permutation");
  c.expect(r4.g_r.is_zero() && r4.g_c.is_zero(), "H4 corrections vanish");
  for (std::uint64_t x = 0; x < 4; ++x)
    c.expect(r4.rho_r[x] == 2 * (x & 1) + (x >> 1), "H4 index map");
  c.expect(verify_representation(hadamard_h2(), r2) && verify_representation(hadamard_h4(), r4), "golden verify");

  Rng rng(o.seed + 8);
  std::size_t built = 0;
  for (int it = 0; it < 200; ++it) {
    SignMatrix h = random_gc(rng, 5, it % 2 == 0);
    std::vector<std::size_t> lr, lc;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      if (rng() % 3 == 0) lr.push_back(i);
      if (rng() % 3 == 0) lc.push_back(i);
    }
    if (h.is_symmetric() && rng() % 2) lc = lr;
    if (!is_positive_for(h, lr, lc)) h = h.negated();
    try {
      const Representation rep = construct_representation(h, lr, lc);
      c.expect(verify_representation(h, rep), "random representation " + std::to_string(it));
      ++built;
    } catch (const std::exception& e) {
      c.expect(false, std::string("construction threw: ") + e.what());
    }
  }
  return finish(8, "representation golden tests", c, t0,
                "H2 -> X1Y1, H4 -> X1Y2+X2Y1; " + std::to_string(built) + " random representations verified");
}

}  // namespace

std::vector<CriterionResult> run(const Options& opts) {
  const auto t0 = Clock::now();
  std::vector<CriterionResult> out;
  using Fn = CriterionResult (*)(const Options&);
  const Fn steps[] = {classification_corpus, evaluator_oracle, eulerian, even_subgraphs,
                      flows, gf2_counter, transforms, representations};
  for (Fn f : steps) {
    CriterionResult r;
    try {
      r = f(opts);
    } catch (const std::exception& e) {
      r.id = static_cast<int>(out.size()) + 1;
      r.name = "criterion";
      r.passed = false;
      r.detail = std::string("threw: ") + e.what();
    }
    if (opts.on_result) opts.on_result(r);
    out.push_back(std::move(r));
  }
  CriterionResult total;
  total.id = 9;
  total.name = "selftest wall clock";
  total.seconds = seconds_since(t0);
  total.passed = total.seconds < 180.0;
  total.detail = total.passed ? "criteria 1-8 ran in under 180 s" : "criteria 1-8 took over 180 s";
  if (opts.on_result) opts.on_result(total);
  out.push_back(std::move(total));
  return out;
}

std::string format(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  std::string line = "criterion " + std::to_string(r.id) + " [" + r.name + "]: " + (r.passed ? "PASS" : "FAIL") +
                     " (" + secs + " s)";
  if (!r.detail.empty()) line += " " + r.detail;
  return line;
}

}  // namespace parthom::selftest
