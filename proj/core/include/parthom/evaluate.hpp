#pragma once

#include <cstddef>
#include <vector>

#include "parthom/classify.hpp"
#include "parthom/model.hpp"

namespace parthom {

struct Arc {
  std::size_t from;
  std::size_t to;
};

// prod_v sum_i a_i^outdeg(v) b_i^indeg(v) d_ii
Rational eval_rank1_directed(const std::vector<Rational>& a, const std::vector<Rational>& b,
                             const DiagMatrix& d, std::size_t vertex_count,
                             const std::vector<Arc>& arcs);

// Requires every block of c to have rank one; throws std::invalid_argument otherwise.
Rational eval_rank1_pdpf(const SymMatrix& c, const DiagMatrix& d, const DiagMatrix& o,
                         const Multigraph& g);

struct DirectionalValue {
  Rational forward;
  Rational backward;
  Rational total() const { return forward + backward; }
};

// Z_{H, I, I_lam}(G) for symmetric h with a symmetric representation.
// `negated` means rep describes -h.
Rational eval_hadamard_symmetric(const SignMatrix& h, const std::vector<std::size_t>& lam,
                                 const Representation& rep, const SubspaceBasis& phi,
                                 const Multigraph& g, bool negated = false);

// Z^-> and Z^<- of the bipartisation of h on a connected bipartite graph.
DirectionalValue eval_hadamard_bipartite_directional(const SignMatrix& h,
                                                     const std::vector<std::size_t>& lam_r,
                                                     const std::vector<std::size_t>& lam_c,
                                                     const Representation& rep,
                                                     const Coordinatisation& phi,
                                                     const Multigraph& g, bool negated = false);

// Throws WitnessMismatch when v is Hard or was built for another matrix.
Rational eval_tractable(const SymMatrix& a, const Verdict& v, const Multigraph& g);

}  // namespace parthom
