#include "parthom/hadamard.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace parthom {

namespace {

using Perm = std::vector<std::size_t>;
using SignRow = std::vector<std::int8_t>;

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool contains(const std::vector<std::size_t>& s, std::size_t i) {
  return std::find(s.begin(), s.end(), i) != s.end();
}

// Products row_i o row_l up to sign, normalised so the first entry is +1.
std::vector<SignRow> product_set(const SignMatrix& h, std::size_t l) {
  std::vector<SignRow> out;
  out.reserve(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    SignRow r(h.cols());
    for (std::size_t j = 0; j < h.cols(); ++j) r[j] = static_cast<std::int8_t>(h(i, j) * h(l, j));
    if (!r.empty() && r[0] < 0)
      for (auto& e : r) e = static_cast<std::int8_t>(-e);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool rows_condition(const SignMatrix& h) {
  if (h.rows() == 0) return true;
  const auto base = product_set(h, 0);
  for (std::size_t l = 1; l < h.rows(); ++l)
    if (product_set(h, l) != base) return false;
  return true;
}

// View of h through explicit row and column permutations.
struct PermutedView {
  const SignMatrix& h;
  Perm rows, cols;

  int operator()(std::size_t a, std::size_t b) const { return h(rows[a], cols[b]); }
  std::size_t n() const { return rows.size(); }

  // Position p such that column p equals column a times column b.
  std::size_t col_product(std::size_t a, std::size_t b) const {
    for (std::size_t p = 0; p < n(); ++p) {
      bool ok = true;
      for (std::size_t i = 0; i < n() && ok; ++i) ok = (*this)(i, p) == (*this)(i, a) * (*this)(i, b);
      if (ok) return p;
    }
    throw std::logic_error("column product missing; matrix violates the group condition");
  }
  std::size_t row_product(std::size_t a, std::size_t b) const {
    for (std::size_t p = 0; p < n(); ++p) {
      bool ok = true;
      for (std::size_t j = 0; j < n() && ok; ++j) ok = (*this)(p, j) == (*this)(a, j) * (*this)(b, j);
      if (ok) return p;
    }
    throw std::logic_error("row product missing; matrix violates the group condition");
  }
};

std::size_t first_with(std::size_t lo, std::size_t hi, auto pred) {
  for (std::size_t l = lo; l < hi; ++l)
    if (pred(l)) return l;
  throw std::logic_error("peel: no swap partner");
}

PeelStep peel_h2(const SignMatrix& h, bool symmetric) {
  const std::size_t n = h.rows(), half = n / 2;
  PermutedView v{h, identity_perm(n), identity_perm(n)};

  std::size_t pi_ = n, pj = n;
  for (std::size_t i = 0; i < n && pi_ == n; ++i) {
    if (symmetric) {
      if (h(i, i) == -1) pi_ = pj = i;
    } else {
      for (std::size_t j = 0; j < n; ++j)
        if (h(i, j) == -1) {
          pi_ = i;
          pj = j;
          break;
        }
    }
  }
  if (pi_ == n) throw std::logic_error("peel: no -1 entry");
  std::swap(v.rows[pi_], v.rows[half]);
  std::swap(v.cols[pj], v.cols[half]);

  for (std::size_t p = half + 1; p < n; ++p)
    if (v(half, p) != -1) {
      std::size_t l = first_with(1, half, [&](std::size_t q) { return v(half, q) == -1; });
      std::swap(v.cols[p], v.cols[l]);
    }
  for (std::size_t p = half + 1; p < n; ++p)
    if (v(p, half) != -1) {
      std::size_t l = first_with(1, half, [&](std::size_t q) { return v(q, half) == -1; });
      std::swap(v.rows[p], v.rows[l]);
    }

  Perm cols(n), rows(n);
  for (std::size_t j = 0; j < half; ++j) {
    std::size_t partner = v.col_product(j, half);
    cols[j] = v.cols[j];
    cols[half + j] = v.cols[partner];
  }
  for (std::size_t i = 0; i < half; ++i) {
    std::size_t partner = v.row_product(i, half);
    rows[i] = v.rows[i];
    rows[half + i] = v.rows[partner];
  }

  PeelStep step;
  step.sigma = std::move(rows);
  step.pi = std::move(cols);
  step.factor = TensorFactor::H2;
  step.rest = h.permuted(step.sigma, step.pi).permuted(identity_perm(half), identity_perm(half));
  return step;
}

PeelStep peel_h4(const SignMatrix& h) {
  const std::size_t n = h.rows(), q = n / 4;
  PermutedView v{h, identity_perm(n), identity_perm(n)};
  auto swap_both = [&](std::size_t a, std::size_t b) {
    std::swap(v.rows[a], v.rows[b]);
    std::swap(v.cols[a], v.cols[b]);
  };

  for (std::size_t p = 2 * q; p < n; ++p)
    if (v(q, p) != -1) {
      std::size_t l = first_with(1, 2 * q, [&](std::size_t t) { return t != q && v(q, t) == -1; });
      swap_both(p, l);
    }
  const std::size_t r2 = 2 * q;
  for (std::size_t p = q + 1; p < 2 * q; ++p)
    if (v(r2, p) != -1) {
      std::size_t l = first_with(1, q, [&](std::size_t t) { return v(r2, t) == -1; });
      swap_both(p, l);
    }
  for (std::size_t p = 3 * q; p < n; ++p)
    if (v(r2, p) != -1) {
      std::size_t l = first_with(r2 + 1, 3 * q, [&](std::size_t t) { return v(r2, t) == -1; });
      swap_both(p, l);
    }

  Perm order(n);
  for (std::size_t j = 0; j < q; ++j) {
    std::size_t i2 = v.row_product(j, q);
    std::size_t i3 = v.row_product(j, r2);
    std::size_t i4 = v.row_product(i2, r2);
    order[j] = v.rows[j];
    order[q + j] = v.rows[i2];
    order[2 * q + j] = v.rows[i3];
    order[3 * q + j] = v.rows[i4];
  }

  PeelStep step;
  step.sigma = order;
  step.pi = order;
  step.factor = TensorFactor::H4;
  step.rest = h.permuted(order, order).permuted(identity_perm(q), identity_perm(q));
  return step;
}

}  // namespace

std::size_t log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("order is not a power of two");
  return static_cast<std::size_t>(std::countr_zero(n));
}

bool is_hadamard(const SignMatrix& h) {
  if (!h.is_square()) return false;
  const std::size_t n = h.rows();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      long dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += h(a, j) * h(b, j);
      if (dot != 0) return false;
    }
  return true;
}

bool group_condition(const SignMatrix& h) { return rows_condition(h) && rows_condition(h.transposed()); }

bool is_positive_for(const SignMatrix& h, const std::vector<std::size_t>& lam_r,
                     const std::vector<std::size_t>& lam_c) {
  const bool diagonal = h.is_symmetric() && lam_r == lam_c;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (!lam_r.empty() && !contains(lam_r, i)) continue;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (!lam_c.empty() && !contains(lam_c, j)) continue;
      if (diagonal && i != j) continue;
      if (h(i, j) == 1) return true;
    }
  }
  return false;
}

PeelStep peel_tensor_step(const SignMatrix& h) {
  const std::size_t n = h.rows();
  if (!h.is_square() || n < 2 || n % 2 != 0) throw std::invalid_argument("peel: order must be even and >= 2");
  for (std::size_t i = 0; i < n; ++i)
    if (h(0, i) != 1 || h(i, 0) != 1) throw std::invalid_argument("peel: matrix is not normalised");
  if (!is_hadamard(h)) throw std::invalid_argument("peel: matrix is not Hadamard");

  PeelStep step;
  const bool symmetric = h.is_symmetric();
  bool negative_diagonal = false;
  for (std::size_t i = 0; i < n; ++i) negative_diagonal |= h(i, i) == -1;
  if (!symmetric || negative_diagonal) {
    step = peel_h2(h, symmetric);
  } else {
    if (n % 4 != 0) throw std::logic_error("peel: symmetric positive-diagonal order not divisible by 4");
    step = peel_h4(h);
  }
  const SignMatrix factor = step.factor == TensorFactor::H2 ? hadamard_h2() : hadamard_h4();
  if (h.permuted(step.sigma, step.pi) != kron(factor, step.rest))
    throw std::logic_error("peel: tensor reconstruction failed");
  return step;
}

Backbone backbone_representation(const SignMatrix& h) {
  Backbone out;
  const std::size_t n = h.rows();
  out.k = log2_exact(n);
  if (n == 1) {
    out.rho_r = out.rho_c = {0};
    return out;
  }
  const PeelStep step = peel_tensor_step(h);
  const Backbone sub = backbone_representation(step.rest);
  const std::size_t k = out.k;
  out.rho_r.resize(n);
  out.rho_c.resize(n);
  out.pi = sub.pi;
  if (step.factor == TensorFactor::H2) {
    const std::size_t t = std::size_t{1} << (k - 1);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t top = x >> (k - 1), low = x & (t - 1);
      out.rho_r[x] = step.sigma[t * top + sub.rho_r[low]];
      out.rho_c[x] = step.pi[t * top + sub.rho_c[low]];
    }
    out.pi.push_back(k - 1);
  } else {
    const std::size_t t = std::size_t{1} << (k - 2);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t hi = (x >> (k - 2)) & 1, mid = (x >> (k - 1)) & 1, low = x & (t - 1);
      const std::size_t block = 2 * hi + mid;
      out.rho_r[x] = step.sigma[t * block + sub.rho_r[low]];
      out.rho_c[x] = step.pi[t * block + sub.rho_c[low]];
    }
    out.pi.push_back(k - 1);
    out.pi.push_back(k - 2);
  }
  return out;
}

bool Representation::h(std::uint64_t x, std::uint64_t y) const {
  bool v = g_r.eval(x) ^ g_c.eval(y);
  for (std::size_t i = 0; i < k; ++i) v ^= ((x >> pi[i]) & (y >> i) & 1) != 0;
  return v;
}

std::vector<std::size_t> Representation::inverse_r() const {
  std::vector<std::size_t> inv(rho_r.size());
  for (std::size_t x = 0; x < rho_r.size(); ++x) inv[rho_r[x]] = x;
  return inv;
}

std::vector<std::size_t> Representation::inverse_c() const {
  std::vector<std::size_t> inv(rho_c.size());
  for (std::size_t y = 0; y < rho_c.size(); ++y) inv[rho_c[y]] = y;
  return inv;
}

bool verify_representation(const SignMatrix& h, const Representation& rep) {
  const std::size_t n = std::size_t{1} << rep.k;
  if (h.rows() != n || h.cols() != n || rep.rho_r.size() != n || rep.rho_c.size() != n || rep.pi.size() != rep.k)
    return false;
  std::vector<std::uint8_t> seen_r(n, 0), seen_c(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (rep.rho_r[x] >= n || seen_r[rep.rho_r[x]]++) return false;
    if (rep.rho_c[x] >= n || seen_c[rep.rho_c[x]]++) return false;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((h(rep.rho_r[x], rep.rho_c[y]) == -1) != rep.h(x, y)) return false;
  return true;
}

Representation construct_representation(const SignMatrix& h, const std::vector<std::size_t>& lam_r,
                                        const std::vector<std::size_t>& lam_c) {
  const std::size_t n = h.rows();
  if (!h.is_square()) throw std::invalid_argument("representation: matrix is not square");
  const std::size_t k = log2_exact(n);
  const bool diagonal = h.is_symmetric() && lam_r == lam_c;

  std::size_t a = n, b = n;
  for (std::size_t i = 0; i < n && a == n; ++i) {
    if (!lam_r.empty() && !contains(lam_r, i)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!lam_c.empty() && !contains(lam_c, j)) continue;
      if (diagonal && i != j) continue;
      if (h(i, j) == 1) {
        a = i;
        b = j;
        break;
      }
    }
  }
  if (a == n) throw std::invalid_argument("representation: positivity fails");

  Perm sigma = identity_perm(n), pi = identity_perm(n);
  std::swap(sigma[0], sigma[a]);
  std::swap(pi[0], pi[b]);
  const SignMatrix moved = h.permuted(sigma, pi);
  SignMatrix normal(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) normal.set(i, j, moved(i, j) * moved(i, 0) * moved(0, j));

  const Backbone bb = backbone_representation(normal);
  std::vector<std::uint8_t> tr(n), tc(n);
  for (std::size_t x = 0; x < n; ++x) {
    tr[x] = moved(bb.rho_r[x], 0) == -1;
    tc[x] = moved(0, bb.rho_c[x]) == -1;
  }

  Representation rep;
  rep.k = k;
  rep.pi = bb.pi;
  rep.g_r = anf_from_truth_table(tr);
  rep.g_c = anf_from_truth_table(tc);
  rep.rho_r.resize(n);
  rep.rho_c.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    rep.rho_r[x] = sigma[bb.rho_r[x]];
    rep.rho_c[x] = pi[bb.rho_c[x]];
  }
  if (!verify_representation(h, rep)) throw std::logic_error("representation: verification failed");
  return rep;
}

std::optional<Coordinatisation> check_linearity(const Representation& rep, const std::vector<std::size_t>& lam_r,
                                                const std::vector<std::size_t>& lam_c) {
  auto side = [&](const std::vector<std::size_t>& inv,
                  const std::vector<std::size_t>& lam) -> std::optional<SubspaceBasis> {
    if (lam.empty()) return SubspaceBasis{rep.k, {}};
    std::set<Gf2Vec> s;
    for (std::size_t i : lam) s.insert(Gf2Vec::from_bits(rep.k, inv.at(i)));
    if (!is_linear_subspace(s)) return std::nullopt;
    return subspace_basis(s, rep.k);
  };
  auto r = side(rep.inverse_r(), lam_r);
  if (!r) return std::nullopt;
  auto c = side(rep.inverse_c(), lam_c);
  if (!c) return std::nullopt;
  return Coordinatisation{std::move(*r), std::move(*c)};
}

bool check_degree(const Representation& rep, const Coordinatisation& phi, const std::vector<std::size_t>& lam_r,
                  const std::vector<std::size_t>& lam_c) {
  if (!lam_r.empty() && poly_degree(compose_linear(rep.g_r, phi.phi_r)) > 2) return false;
  if (!lam_c.empty() && poly_degree(compose_linear(rep.g_c, phi.phi_c)) > 2) return false;
  return true;
}

Bipartisation bipartise(const SignMatrix& h, const std::vector<std::size_t>& lam_r,
                        const std::vector<std::size_t>& lam_c) {
  const std::size_t r = h.rows();
  Matrix m(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      m(i, r + j) = h(i, j);
      m(r + j, i) = h(i, j);
    }
  Bipartisation out{SymMatrix(std::move(m)), {}};
  for (std::size_t i : lam_r) out.lam.push_back(i);
  for (std::size_t j : lam_c) out.lam.push_back(r + j);
  std::sort(out.lam.begin(), out.lam.end());
  return out;
}

}  // namespace parthom
