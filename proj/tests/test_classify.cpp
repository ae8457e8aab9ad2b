#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "helpers.hpp"
#include "parthom/classify.hpp"
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

SymMatrix bipartite_of(const SignMatrix& h) {
  const std::size_t r = h.rows();
  Matrix m(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, r + j) = m(r + j, i) = h(i, j);
  return SymMatrix(std::move(m));
}

SignMatrix paley12() {
  const int q = 11;
  std::vector<int> chi(q, -1);
  chi[0] = 0;
  for (int x = 1; x < q; ++x) chi[(x * x) % q] = 1;
  SignMatrix h(12, 12);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      int s = 1;
      if (i > 0 && j == 0) s = -1;
      if (i > 0 && j > 0) s = chi[(static_cast<int>(j) - static_cast<int>(i) + q) % q] + (i == j ? 1 : 0);
      h.set(i, j, s);
    }
  return h;
}

// Rows of H4 with multiplicities giving odd support of size three.
SymMatrix lambda_size_three() {
  const SignMatrix h = hadamard_h4();
  std::vector<std::size_t> cls{0, 0, 1, 1, 2, 2, 3, 3};
  std::vector<int> sign{1, 1, 1, 1, 1, 1, 1, -1};
  Matrix m(8, 8);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) m(a, b) = sign[a] * sign[b] * h(cls[a], cls[b]);
  return SymMatrix(std::move(m));
}

// H2 (x) H2 (x) H2 with rows and columns negated by (-1)^{x1 x2 x3}.
SymMatrix cubic_twist() {
  const SignMatrix h = kron(hadamard_h2(), kron(hadamard_h2(), hadamard_h2()));
  Matrix m(8, 8);
  auto s = [](std::size_t x) { return x == 7 ? -1 : 1; };
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) m(a, b) = s(a) * s(b) * h(a, b);
  return SymMatrix(std::move(m));
}

SymMatrix negate(const SymMatrix& a) {
  Matrix m = a.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
  return SymMatrix(std::move(m));
}

std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

SymMatrix random_nonnegative(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 5;
  const int mode = static_cast<int>(rng() % 3);
  if (mode == 0) return random_sym(rng, n, 0, 3);
  // planted rank-1 blocks with a few zeros
  std::vector<long> x(n);
  for (auto& e : x) e = static_cast<long>(rng() % 3) + (mode == 1 ? 1 : 0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = x[i] * x[j];
  if (mode == 2 && n > 1 && rng() % 2) {
    std::size_t i = rng() % n, j = rng() % n;
    m(i, j) = m(j, i) = m(i, j) + 1;
  }
  return SymMatrix(std::move(m));
}

// Independent block rank check through 2x2 minors and zero patterns.
bool independent_block_rank_one(const SymMatrix& a) {
  for (const auto& comp : matrix_components(a)) {
    if (comp.zero) continue;
    const Matrix& b = comp.block;
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(i, j) == 0) return false;
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l)
            if (b(i, j) * b(k, l) != b(i, l) * b(k, j)) return false;
      }
  }
  return true;
}

void recheck_witness(const ComponentWitness& w) {
  if (w.kind != ComponentKind::Hadamard) return;
  const CanonicalForm& f = w.form;
  CHECK(is_hadamard(w.h));
  CHECK(w.h == (w.negated ? f.h.negated() : f.h));
  CHECK(group_condition(w.h));
  CHECK(is_positive_for(w.h, f.lam_r, f.lam_c));
  CHECK(verify_representation(w.h, w.rep));
  if (!f.lam_r.empty()) CHECK(std::binary_search(f.lam_r.begin(), f.lam_r.end(), w.rep.rho_r[0]));
  if (!f.lam_c.empty()) CHECK(std::binary_search(f.lam_c.begin(), f.lam_c.end(), w.rep.rho_c[0]));
  auto phi = check_linearity(w.rep, f.lam_r, f.lam_c);
  REQUIRE(phi);
  CHECK(phi->phi_r == w.phi.phi_r);
  CHECK(phi->phi_c == w.phi.phi_c);
  CHECK(check_degree(w.rep, w.phi, f.lam_r, f.lam_c));
  // images of the coordinatisations are exactly the supports
  const std::size_t l = w.phi.phi_r.dim();
  std::set<std::size_t> image;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << l); ++y)
    image.insert(w.rep.rho_r[w.phi.phi_r.apply(y).low_word()]);
  if (!f.lam_r.empty()) CHECK(image == std::set<std::size_t>(f.lam_r.begin(), f.lam_r.end()));
  if (!w.component.bipartite) {
    CHECK(w.h.is_symmetric());
    CHECK(w.rep.rho_r == w.rep.rho_c);
    CHECK(w.rep.g_r == w.rep.g_c);
  }
}

void recheck_evidence(const SymMatrix& a, const ComponentVerdict& cv) {
  REQUIRE(cv.evidence);
  const HardEvidence& e = *cv.evidence;
  const MatrixComponent comp = component_of(a, cv.indices);
  switch (e.reason) {
    case HardReason::BlockRankAtLeastTwo: {
      const auto& w = e.witness;
      if (w.size() == 2) {
        CHECK(a(w[0], w[1]) == 0);
      } else {
        REQUIRE(w.size() == 4);
        CHECK(abs(a(w[0], w[2])) * abs(a(w[1], w[3])) != abs(a(w[0], w[3])) * abs(a(w[1], w[2])));
      }
      break;
    }
    case HardReason::GroupCondition:
    case HardReason::LambdaNotLinear:
    case HardReason::DegreeAboveTwo: {
      auto canon = canonicalize_connected(comp);
      REQUIRE(std::holds_alternative<CanonicalForm>(canon));
      const CanonicalForm& f = std::get<CanonicalForm>(canon);
      SignMatrix h = is_positive_for(f.h, f.lam_r, f.lam_c) ? f.h : f.h.negated();
      if (e.reason == HardReason::GroupCondition) {
        CHECK(!group_condition(h));
        break;
      }
      Representation rep = construct_representation(h, f.lam_r, f.lam_c);
      auto phi = check_linearity(rep, f.lam_r, f.lam_c);
      if (e.reason == HardReason::LambdaNotLinear) {
        CHECK(!phi);
        CHECK((e.witness == f.lam_r || e.witness == f.lam_c));
      } else {
        REQUIRE(phi);
        CHECK(!check_degree(rep, *phi, f.lam_r, f.lam_c));
      }
      break;
    }
    default: {
      auto canon = canonicalize_connected(comp);
      REQUIRE(std::holds_alternative<HardEvidence>(canon));
      CHECK(std::get<HardEvidence>(canon).reason == e.reason);
      for (std::size_t i : e.witness) CHECK(std::binary_search(cv.indices.begin(), cv.indices.end(), i));
    }
  }
}

void recheck(const SymMatrix& a, const Verdict& v) {
  CHECK(v.tractable == v.witness.has_value());
  CHECK(v.tractable != v.evidence.has_value());
  for (const auto& cv : v.components) {
    if (cv.tractable) {
      REQUIRE(cv.witness);
      recheck_witness(*cv.witness);
    } else {
      recheck_evidence(a, cv);
    }
  }
}

}  // namespace

TEST_CASE("classification corpus") {
  CHECK(classify(from_signs(hadamard_h2())).tractable);
  CHECK(classify(from_signs(hadamard_h4())).tractable);
  CHECK(classify(mat({{1, -1}, {-1, 1}})).tractable);
  CHECK(classify(mat({{1, 1}, {1, 1}})).tractable);
  for (std::size_t m = 1; m <= 4; ++m) CHECK(classify(SymMatrix::identity(m)).tractable);

  Verdict s = classify(mat({{0, 1}, {1, 1}}));
  REQUIRE(!s.tractable);
  CHECK(s.evidence->reason == HardReason::BlockRankAtLeastTwo);
  Verdict c3 = classify(mat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  REQUIRE(!c3.tractable);
  CHECK(c3.evidence->reason == HardReason::BlockRankAtLeastTwo);
  Verdict f3 = classify(mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  REQUIRE(!f3.tractable);
  CHECK(f3.evidence->reason == HardReason::BlockRankAtLeastTwo);
}

TEST_CASE("component kinds") {
  Verdict z = classify(mat({{0, 0}, {0, 1}}));
  REQUIRE(z.tractable);
  REQUIRE(z.witness->components.size() == 2);
  CHECK(z.witness->components[0].kind == ComponentKind::Zero);
  CHECK(z.witness->components[1].kind == ComponentKind::Rank1Only);
  Verdict u = classify(mat({{1, -1}, {-1, 1}}));
  REQUIRE(u.tractable);
  CHECK(u.witness->components[0].kind == ComponentKind::Rank1Only);
  Verdict h2 = classify(from_signs(hadamard_h2()));
  CHECK(h2.witness->components[0].kind == ComponentKind::Hadamard);
  Verdict bip = classify(bipartite_of(hadamard_h4()));
  REQUIRE(bip.tractable);
  CHECK(bip.witness->components[0].kind == ComponentKind::Hadamard);
  CHECK(bip.witness->components[0].component.bipartite);
}

TEST_CASE("failures of the Hadamard conditions") {
  SymMatrix gc = bipartite_of(paley12());
  Verdict v = classify(gc);
  REQUIRE(!v.tractable);
  CHECK(v.evidence->reason == HardReason::GroupCondition);
  recheck(gc, v);

  SymMatrix lam = lambda_size_three();
  Verdict vl = classify(lam);
  REQUIRE(!vl.tractable);
  CHECK(vl.evidence->reason == HardReason::LambdaNotLinear);
  recheck(lam, vl);

  SymMatrix cubic = cubic_twist();
  Verdict vd = classify(cubic);
  REQUIRE(!vd.tractable);
  CHECK(vd.evidence->reason == HardReason::DegreeAboveTwo);
  recheck(cubic, vd);
}

TEST_CASE("nonnegative matrices follow the block rank criterion") {
  std::mt19937_64 rng(61);
  int tractable = 0;
  for (int it = 0; it < 200; ++it) {
    SymMatrix a = random_nonnegative(rng);
    const bool expected = independent_block_rank_one(a);
    CHECK(block_rank_criterion(a) == expected);
    Verdict v = classify(a);
    CHECK(v.tractable == expected);
    tractable += v.tractable;
    recheck(a, v);
  }
  CHECK(tractable > 20);
  CHECK(tractable < 180);
}

TEST_CASE("structured matrices: witnesses and evidence re-check") {
  std::mt19937_64 rng(62);
  int tractable = 0, hard = 0;
  for (int it = 0; it < 300; ++it) {
    SymMatrix a = it % 2 ? random_structured_bipartite(rng, it % 3 == 0)
                         : random_structured_nonbipartite(rng, it % 3 == 0);
    if (it % 5 == 0) a = direct_sum(a, random_structured_nonbipartite(rng, false));
    Verdict v = classify(a);
    (v.tractable ? tractable : hard)++;
    recheck(a, v);
  }
  CHECK(tractable > 50);
  CHECK(hard > 10);
}

TEST_CASE("permutation invariance and negation covariance") {
  std::mt19937_64 rng(63);
  for (int it = 0; it < 200; ++it) {
    SymMatrix a = it % 2 ? random_structured_bipartite(rng, it % 4 == 1)
                         : random_structured_nonbipartite(rng, it % 4 == 0);
    Verdict v = classify(a);
    SymMatrix pa = permute(a, random_perm(rng, a.order()));
    Verdict pv = classify(pa);
    CHECK(pv.tractable == v.tractable);
    recheck(pa, pv);
    Verdict nv = classify(negate(a));
    CHECK(nv.tractable == v.tractable);
  }
}

TEST_CASE("determinism and reports") {
  SymMatrix a = bipartite_of(hadamard_h4());
  CHECK(verdict_json(classify(a)) == verdict_json(classify(a)));
  CHECK(verdict_text(classify(a)) == verdict_text(classify(a)));
  std::string t = verdict_text(classify(from_signs(hadamard_h2())));
  CHECK(t.rfind("TRACTABLE", 0) == 0);
  CHECK(t.find("GC holds") != std::string::npos);
  CHECK(t.find("D holds") != std::string::npos);
  std::string s = verdict_text(classify(mat({{0, 1}, {1, 1}})));
  CHECK(s.rfind("HARD (block of |A| with rank >= 2)", 0) == 0);
  std::string j = verdict_json(classify(mat({{0, 1}, {1, 1}})));
  CHECK(j.find("\"verdict\": \"hard\"") != std::string::npos);
  CHECK(j.find("block-rank") != std::string::npos);
}
