#include <json.hpp>
#include <sstream>

#include "parthom/classify.hpp"

namespace parthom {

namespace {

using Json = nlohmann::ordered_json;

const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Zero: return "zero";
    case ComponentKind::Rank1Only: return "rank1";
    case ComponentKind::Hadamard: return "hadamard";
  }
  return "?";
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json sign_rows(const SignMatrix& h) {
  Json out = Json::array();
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < h.cols(); ++j) row.push_back(h(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Json basis(const SubspaceBasis& b) {
  Json out = Json::array();
  for (const auto& r : b.rows) out.push_back(r.to_string());
  return out;
}

Json evidence_json(const HardEvidence& e) {
  return Json{{"reason", reason_name(e.reason)},
              {"description", reason_description(e.reason)},
              {"witness", e.witness},
              {"detail", e.detail}};
}

Json witness_json(const ComponentWitness& w) {
  Json out{{"kind", kind_name(w.kind)}};
  if (w.kind == ComponentKind::Zero) return out;
  const CanonicalForm& f = w.form;
  out["bipartite"] = f.bipartite;
  out["r"] = f.r;
  out["h"] = sign_rows(f.h);
  out["v"] = rationals(f.v);
  out["w"] = rationals(f.w);
  out["alpha_rows"] = rationals(f.alpha_r);
  out["alpha_cols"] = rationals(f.alpha_c);
  out["beta_rows"] = rationals(f.beta_r);
  out["beta_cols"] = rationals(f.beta_c);
  out["lambda_rows"] = f.lam_r;
  out["lambda_cols"] = f.lam_c;
  if (w.kind == ComponentKind::Hadamard) {
    out["negated"] = w.negated;
    out["k"] = w.rep.k;
    out["pi"] = w.rep.pi;
    out["rho_rows"] = w.rep.rho_r;
    out["rho_cols"] = w.rep.rho_c;
    out["g_rows"] = w.rep.g_r.to_string();
    out["g_cols"] = w.rep.g_c.to_string();
    out["phi_rows"] = basis(w.phi.phi_r);
    out["phi_cols"] = basis(w.phi.phi_c);
  }
  return out;
}

}  // namespace

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  if (v.tractable) {
    os << "TRACTABLE\n";
  } else {
    os << "HARD (" << reason_description(v.evidence->reason) << ")\n";
    os << "evidence: " << reason_name(v.evidence->reason) << ", " << v.evidence->detail << '\n';
  }
  for (const auto& c : v.components) {
    for (std::size_t i = 0; i < c.trail.size(); ++i) os << (i ? "    " : "  ") << c.trail[i] << '\n';
  }
  return os.str();
}

std::string verdict_json(const Verdict& v) {
  Json out{{"verdict", v.tractable ? "tractable" : "hard"}};
  if (v.evidence) out["evidence"] = evidence_json(*v.evidence);
  Json comps = Json::array();
  for (const auto& c : v.components) {
    Json j{{"indices", c.indices}, {"tractable", c.tractable}, {"trail", c.trail}};
    if (c.witness) j["witness"] = witness_json(*c.witness);
    if (c.evidence) j["evidence"] = evidence_json(*c.evidence);
    comps.push_back(std::move(j));
  }
  out["components"] = std::move(comps);
  return out.dump(2) + "\n";
}

}  // namespace parthom
