#include "parthom/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parthom {

namespace {

std::string index_list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

std::vector<std::vector<int>> products(const SignMatrix& m, std::size_t l) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<int> r(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j) * m(l, j);
    if (r[0] < 0)
      for (auto& e : r) e = -e;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// First l whose product set differs from the one at 0, rows before columns.
std::string gc_failure(const SignMatrix& h, std::vector<std::size_t>& witness) {
  for (int side = 0; side < 2; ++side) {
    const SignMatrix m = side == 0 ? h : h.transposed();
    const auto base = products(m, 0);
    for (std::size_t l = 1; l < m.rows(); ++l)
      if (products(m, l) != base) {
        witness = {l};
        return std::string(side == 0 ? "row" : "column") + " products at " + std::to_string(l) +
               " differ from those at 0";
      }
  }
  witness.clear();
  return "group condition fails";
}

}  // namespace

bool is_nonnegative(const SymMatrix& a) {
  for (const auto& e : a.matrix().data())
    if (e < 0) return false;
  return true;
}

bool block_rank_criterion(const SymMatrix& a) {
  for (const auto& comp : matrix_components(a)) {
    if (comp.zero) continue;
    if (matrix_rank(comp.block) != 1) return false;
  }
  return true;
}

ComponentVerdict classify_connected(const MatrixComponent& comp) {
  ComponentVerdict out;
  out.indices = comp.indices;
  const std::string name = "component " + index_list(comp.indices);

  if (comp.zero) {
    out.tractable = true;
    ComponentWitness w;
    w.kind = ComponentKind::Zero;
    w.component = comp;
    out.witness = std::move(w);
    out.trail.push_back(name + ": isolated zero entry");
    return out;
  }

  out.trail.push_back(name + (comp.bipartite ? ": bipartite" : ": non-bipartite"));
  auto canon = canonicalize_connected(comp);
  if (auto* ev = std::get_if<HardEvidence>(&canon)) {
    out.trail.push_back(std::string("fails ") + reason_name(ev->reason) + ": " + ev->detail);
    out.evidence = *ev;
    return out;
  }
  CanonicalForm form = std::get<CanonicalForm>(std::move(canon));
  out.trail.push_back("|block| has rank 1");
  out.trail.push_back("C1 C2 hold with r = " + std::to_string(form.r));
  out.trail.push_back("C3 holds: H is Hadamard");
  out.trail.push_back("C4 holds");
  out.trail.push_back("C5 holds with odd support rows " + index_list(form.lam_r) + " columns " +
                      index_list(form.lam_c));

  ComponentWitness w;
  w.component = comp;

  if (form.r == 1) {
    w.kind = ComponentKind::Rank1Only;
    w.h = form.h;
    w.form = std::move(form);
    out.trail.push_back("H has order 1; the block is rank 1");
    out.tractable = true;
    out.witness = std::move(w);
    return out;
  }

  if (!comp.bipartite && !(form.symmetric && form.lam_r == form.lam_c))
    throw std::logic_error("non-bipartite canonical form is not symmetric");

  SignMatrix h = form.h;
  bool negated = false;
  if (!is_positive_for(h, form.lam_r, form.lam_c)) {
    h = h.negated();
    negated = true;
    out.trail.push_back("H is not positive; continuing with -H");
  } else {
    out.trail.push_back("H is positive");
  }
  if (!is_positive_for(h, form.lam_r, form.lam_c)) throw std::logic_error("positivity fails for H and -H");

  if (!group_condition(h)) {
    HardEvidence ev;
    ev.reason = HardReason::GroupCondition;
    ev.detail = gc_failure(h, ev.witness);
    out.trail.push_back(std::string("fails GC: ") + ev.detail);
    out.evidence = std::move(ev);
    return out;
  }
  out.trail.push_back("GC holds");

  Representation rep = construct_representation(h, form.lam_r, form.lam_c);
  out.trail.push_back("R holds: k = " + std::to_string(rep.k) + ", g_r = " + rep.g_r.to_string() +
                      ", g_c = " + rep.g_c.to_string());

  auto phi = check_linearity(rep, form.lam_r, form.lam_c);
  if (!phi) {
    HardEvidence ev;
    ev.reason = HardReason::LambdaNotLinear;
    std::set<Gf2Vec> lr, lc;
    const auto inv_r = rep.inverse_r(), inv_c = rep.inverse_c();
    for (std::size_t i : form.lam_r) lr.insert(Gf2Vec::from_bits(rep.k, inv_r[i]));
    for (std::size_t j : form.lam_c) lc.insert(Gf2Vec::from_bits(rep.k, inv_c[j]));
    const bool row_bad = !form.lam_r.empty() && !is_linear_subspace(lr);
    ev.witness = row_bad ? form.lam_r : form.lam_c;
    ev.detail = std::string(row_bad ? "row" : "column") + " support " + index_list(ev.witness) +
                " is not a subspace";
    out.trail.push_back(std::string("fails L: ") + ev.detail);
    out.evidence = std::move(ev);
    return out;
  }
  out.trail.push_back("L holds: dimensions " + std::to_string(phi->phi_r.dim()) + ", " +
                      std::to_string(phi->phi_c.dim()));

  if (!check_degree(rep, *phi, form.lam_r, form.lam_c)) {
    HardEvidence ev;
    ev.reason = HardReason::DegreeAboveTwo;
    const Gf2Poly gr = compose_linear(rep.g_r, phi->phi_r);
    const Gf2Poly gc = compose_linear(rep.g_c, phi->phi_c);
    const bool row_bad = !form.lam_r.empty() && poly_degree(gr) > 2;
    ev.detail = std::string(row_bad ? "row" : "column") + " polynomial " +
                (row_bad ? gr : gc).to_string() + " has degree " + std::to_string(poly_degree(row_bad ? gr : gc));
    out.trail.push_back(std::string("fails D: ") + ev.detail);
    out.evidence = std::move(ev);
    return out;
  }
  out.trail.push_back("D holds");

  w.kind = ComponentKind::Hadamard;
  w.negated = negated;
  w.h = std::move(h);
  w.rep = std::move(rep);
  w.phi = std::move(*phi);
  w.form = std::move(form);
  out.tractable = true;
  out.witness = std::move(w);
  return out;
}

Verdict classify(const SymMatrix& a) {
  if (a.order() == 0) throw std::invalid_argument("matrix order must be at least 1");
  Verdict v;
  v.tractable = true;
  TractabilityWitness tw{a, {}};
  for (const auto& comp : matrix_components(a)) {
    ComponentVerdict cv = classify_connected(comp);
    if (!cv.tractable) {
      if (v.tractable) v.evidence = cv.evidence;
      v.tractable = false;
    } else {
      tw.components.push_back(*cv.witness);
    }
    v.components.push_back(std::move(cv));
  }
  if (v.tractable) v.witness = std::move(tw);
  if (is_nonnegative(a) && block_rank_criterion(a) != v.tractable)
    throw std::logic_error("pipeline disagrees with the block rank criterion on a nonnegative matrix");
  return v;
}

}  // namespace parthom
