#include "parthom/evaluate.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "parthom/errors.hpp"
#include "parthom/gf2.hpp"

namespace parthom {

namespace {

Rational sign_power(std::size_t e) { return e % 2 ? Rational(-1) : Rational(1); }

// Signed factorisation b = x y^T of a rank-1 block; nullopt if rank differs.
std::optional<std::pair<std::vector<Rational>, std::vector<Rational>>> signed_rank1(const Matrix& b) {
  std::size_t r0 = b.rows(), c0 = 0;
  for (std::size_t i = 0; i < b.rows() && r0 == b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) != 0) {
        r0 = i;
        c0 = j;
        break;
      }
  if (r0 == b.rows()) return std::nullopt;
  std::vector<Rational> x(b.rows()), y(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) y[j] = b(r0, j);
  for (std::size_t i = 0; i < b.rows(); ++i) x[i] = b(i, c0) / b(r0, c0);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (x[i] * y[j] != b(i, j)) return std::nullopt;
  return std::make_pair(std::move(x), std::move(y));
}

std::vector<Arc> oriented(const Multigraph& g, const std::vector<bool>* tail_side, bool tail_value) {
  std::vector<Arc> arcs;
  arcs.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    if (!tail_side || (*tail_side)[e.u] == tail_value)
      arcs.push_back({e.u, e.v});
    else
      arcs.push_back({e.v, e.u});
  }
  return arcs;
}

// Value of one rank-1 block of C on a connected graph, via the conversion to
// U (x) C with vertex weights (D + O) / 2 and (D - O) / 2.
Rational rank1_component(const MatrixComponent& comp, const DiagMatrix& d, const DiagMatrix& o, const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (comp.zero) return (n == 1 && g.edges().empty()) ? d[comp.indices[0]] : Rational(0);

  auto fact = signed_rank1(comp.block);
  if (!fact) throw std::invalid_argument("block of rank other than one");
  const auto& [x, y] = *fact;
  const std::size_t m = comp.indices.size();

  // Local order: row side, then column side when bipartite.
  std::vector<std::size_t> order = comp.row_side;
  if (comp.bipartite) order.insert(order.end(), comp.col_side.begin(), comp.col_side.end());
  std::vector<Rational> a(2 * m), b(2 * m);
  DiagMatrix delta;
  delta.diag.assign(2 * m, 0);
  for (std::size_t t = 0; t < m; ++t) {
    delta[t] = (d[order[t]] + o[order[t]]) / 2;
    delta[m + t] = (d[order[t]] - o[order[t]]) / 2;
  }

  auto fill = [&](const std::vector<Rational>& av, const std::vector<Rational>& bv) {
    for (std::size_t t = 0; t < m; ++t) {
      a[t] = av[t];
      a[m + t] = -av[t];
      b[t] = bv[t];
      b[m + t] = -bv[t];
    }
  };

  if (!comp.bipartite) {
    fill(x, y);
    return eval_rank1_directed(a, b, delta, n, oriented(g, nullptr, false));
  }

  if (n == 1 && g.edges().empty()) {
    Rational s = 0;
    for (std::size_t i : comp.indices) s += d[i];
    return s;
  }
  auto bp = bipartition(g);
  if (!bp) return 0;
  const std::size_t rs = comp.row_side.size();
  std::vector<Rational> av(m, 0), bv(m, 0);
  for (std::size_t t = 0; t < rs; ++t) av[t] = x[t];
  for (std::size_t t = rs; t < m; ++t) bv[t] = y[t - rs];
  fill(av, bv);
  Rational forward = eval_rank1_directed(a, b, delta, n, oriented(g, &bp->in_w, false));
  Rational backward = eval_rank1_directed(a, b, delta, n, oriented(g, &bp->in_w, true));
  return forward + backward;
}

// One side of a Hadamard evaluation: which representation data a vertex uses.
struct SideData {
  const SubspaceBasis* phi;
  Gf2Poly g_phi;
  bool lam_empty;
};

// sum over the variables of (-1)^{h'_G}; role[v] selects the side (0 plays X).
BigInt character_value(const Multigraph& g, std::size_t k, const std::vector<std::size_t>& pi,
                       const std::vector<int>& role, const std::array<SideData, 2>& sides) {
  const std::size_t n = g.vertex_count();
  const auto deg = g.degrees();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const SideData& s = sides[role[v]];
    if (deg[v] % 2 && s.lam_empty) return 0;
    offset[v + 1] = offset[v] + (deg[v] % 2 ? s.phi->dim() : k);
  }
  const std::size_t vars = offset[n];

  // coord[v][j] is X^v_j as a linear form in the variables.
  std::vector<std::vector<Gf2Vec>> coord(n);
  for (std::size_t v = 0; v < n; ++v) {
    coord[v].assign(k, Gf2Vec(vars));
    if (deg[v] % 2 == 0) {
      for (std::size_t j = 0; j < k; ++j) coord[v][j].set(offset[v] + j);
    } else {
      const SubspaceBasis& phi = *sides[role[v]].phi;
      for (std::size_t t = 0; t < phi.dim(); ++t)
        for (std::size_t j = phi.rows[t].first(); j < k; j = phi.rows[t].next(j)) coord[v][j].flip(offset[v] + t);
    }
  }

  QuadPoly q(vars);
  for (const auto& e : g.edges()) {
    std::size_t xv = e.u, yv = e.v;
    if (role[xv] == 1 && role[yv] == 0) std::swap(xv, yv);
    for (std::size_t i = 0; i < k; ++i) q.add_product(coord[xv][pi[i]], false, coord[yv][i], false);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (deg[v] % 2 == 0) continue;
    for (std::uint64_t mono : sides[role[v]].g_phi.monomials()) {
      const int w = std::popcount(mono);
      if (w == 0) {
        q.toggle_constant();
      } else if (w == 1) {
        q.toggle_linear(offset[v] + static_cast<std::size_t>(std::countr_zero(mono)));
      } else if (w == 2) {
        const auto i = static_cast<std::size_t>(std::countr_zero(mono));
        const auto j = static_cast<std::size_t>(std::countr_zero(mono & (mono - 1)));
        q.toggle_pair(offset[v] + i, offset[v] + j);
      } else {
        throw std::logic_error("odd-vertex polynomial has degree above 2");
      }
    }
  }
  return quadratic_character_sum(q);
}

Rational directional_rank1(const std::vector<Rational>& v_u, const std::vector<Rational>& even_u,
                           const std::vector<Rational>& odd_u, const std::vector<Rational>& v_w,
                           const std::vector<Rational>& even_w, const std::vector<Rational>& odd_w,
                           const Multigraph& g, const Bipartition& bp) {
  const auto deg = g.degrees();
  Rational total = 1;
  for (std::size_t v = 0; v < g.vertex_count() && total != 0; ++v) {
    const bool w_side = bp.in_w[v];
    const auto& vec = w_side ? v_w : v_u;
    const auto& wt = deg[v] % 2 ? (w_side ? odd_w : odd_u) : (w_side ? even_w : even_u);
    Rational s = 0;
    for (std::size_t i = 0; i < vec.size(); ++i) s += power(vec[i], deg[v]) * wt[i];
    total *= s;
  }
  return total;
}

void check_weights(const std::vector<Rational>& alpha, const std::vector<Rational>& beta) {
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] + beta[i] < 0 || alpha[i] - beta[i] < 0)
      throw std::logic_error("canonical vertex weights violate D +- O >= 0");
}

Rational hadamard_component(const ComponentWitness& cw, const Multigraph& g) {
  const CanonicalForm& f = cw.form;
  if (!f.bipartite) {
    check_weights(f.alpha_r, f.beta_r);
    const std::size_t s = f.v.size();
    Matrix m(s, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) m(i, j) = f.v[i] * f.w[j];
    DiagMatrix d{f.alpha_r}, o{f.beta_r};
    Rational outer = eval_rank1_pdpf(SymMatrix(std::move(m)), d, o, g);
    if (outer == 0) return 0;
    return outer * eval_hadamard_symmetric(f.h, f.lam_r, cw.rep, cw.phi.phi_r, g, cw.negated);
  }
  check_weights(f.alpha_r, f.beta_r);
  check_weights(f.alpha_c, f.beta_c);
  auto bp = bipartition(g);
  if (!bp) return 0;
  const DirectionalValue hv =
      eval_hadamard_bipartite_directional(f.h, f.lam_r, f.lam_c, cw.rep, cw.phi, g, cw.negated);
  const Rational fwd = directional_rank1(f.v, f.alpha_r, f.beta_r, f.w, f.alpha_c, f.beta_c, g, *bp);
  const Rational bwd = directional_rank1(f.w, f.alpha_c, f.beta_c, f.v, f.alpha_r, f.beta_r, g, *bp);
  return fwd * hv.forward + bwd * hv.backward;
}

}  // namespace

Rational eval_rank1_directed(const std::vector<Rational>& a, const std::vector<Rational>& b, const DiagMatrix& d,
                             std::size_t vertex_count, const std::vector<Arc>& arcs) {
  if (a.size() != d.order() || b.size() != d.order()) throw std::invalid_argument("vector lengths differ");
  std::vector<std::size_t> out(vertex_count, 0), in(vertex_count, 0);
  for (const auto& arc : arcs) {
    if (arc.from >= vertex_count || arc.to >= vertex_count) throw std::invalid_argument("arc endpoint out of range");
    ++out[arc.from];
    ++in[arc.to];
  }
  Rational total = 1;
  for (std::size_t v = 0; v < vertex_count && total != 0; ++v) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (d[i] == 0) continue;
      s += power(a[i], out[v]) * power(b[i], in[v]) * d[i];
    }
    total *= s;
  }
  return total;
}

Rational eval_rank1_pdpf(const SymMatrix& c, const DiagMatrix& d, const DiagMatrix& o, const Multigraph& g) {
  if (d.order() != c.order() || o.order() != c.order()) throw std::invalid_argument("orders differ");
  const auto comps = matrix_components(c);
  for (const auto& comp : comps)
    if (!comp.zero && !signed_rank1(comp.block)) throw std::invalid_argument("block of rank other than one");
  Rational total = 1;
  for (const auto& gc : graph_components(g)) {
    Rational s = 0;
    for (const auto& comp : comps) s += rank1_component(comp, d, o, gc.graph);
    total *= s;
    if (total == 0) break;
  }
  return total;
}

Rational eval_hadamard_symmetric(const SignMatrix& h, const std::vector<std::size_t>& lam, const Representation& rep,
                                 const SubspaceBasis& phi, const Multigraph& g, bool negated) {
  if (!h.is_symmetric() || rep.rho_r != rep.rho_c || !(rep.g_r == rep.g_c))
    throw WitnessMismatch("symmetric evaluation needs a symmetric matrix and representation");
  if (h.rows() != rep.rho_r.size()) throw WitnessMismatch("representation order differs from H");
  SideData side{&phi, lam.empty() ? Gf2Poly(0) : compose_linear(rep.g_r, phi), lam.empty()};
  std::vector<int> role(g.vertex_count(), 0);
  Rational z(character_value(g, rep.k, rep.pi, role, {side, side}));
  return negated ? z * sign_power(g.edges().size()) : z;
}

DirectionalValue eval_hadamard_bipartite_directional(const SignMatrix& h, const std::vector<std::size_t>& lam_r,
                                                     const std::vector<std::size_t>& lam_c,
                                                     const Representation& rep, const Coordinatisation& phi,
                                                     const Multigraph& g, bool negated) {
  if (h.rows() != rep.rho_r.size()) throw WitnessMismatch("representation order differs from H");
  auto bp = bipartition(g);
  if (!bp) throw std::invalid_argument("graph is not bipartite");
  SideData rows{&phi.phi_r, lam_r.empty() ? Gf2Poly(0) : compose_linear(rep.g_r, phi.phi_r), lam_r.empty()};
  SideData cols{&phi.phi_c, lam_c.empty() ? Gf2Poly(0) : compose_linear(rep.g_c, phi.phi_c), lam_c.empty()};
  std::vector<int> role(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) role[v] = bp->in_w[v] ? 1 : 0;
  DirectionalValue out;
  out.forward = Rational(character_value(g, rep.k, rep.pi, role, {rows, cols}));
  for (auto& r : role) r = 1 - r;
  out.backward = Rational(character_value(g, rep.k, rep.pi, role, {rows, cols}));
  if (negated) {
    const Rational s = sign_power(g.edges().size());
    out.forward *= s;
    out.backward *= s;
  }
  return out;
}

Rational eval_tractable(const SymMatrix& a, const Verdict& v, const Multigraph& g) {
  if (!v.tractable || !v.witness) throw WitnessMismatch("matrix is not tractable; no evaluation plan");
  if (!(v.witness->source == a)) throw WitnessMismatch("verdict was built for another matrix");
  const auto& comps = v.witness->components;
  Rational total = 1;
  for (const auto& gc : graph_components(g)) {
    const Multigraph& part = gc.graph;
    Rational s = 0;
    for (const auto& cw : comps) {
      switch (cw.kind) {
        case ComponentKind::Zero:
          s += (part.vertex_count() == 1 && part.edges().empty()) ? 1 : 0;
          break;
        case ComponentKind::Rank1Only: {
          const SymMatrix m = component_matrix(a, cw.component);
          s += eval_rank1_pdpf(m, DiagMatrix::identity(m.order()), DiagMatrix::identity(m.order()), part);
          break;
        }
        case ComponentKind::Hadamard:
          s += hadamard_component(cw, part);
          break;
      }
    }
    total *= s;
    if (total == 0) break;
  }
  return total;
}

}  // namespace parthom
