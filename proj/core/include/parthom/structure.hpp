#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "parthom/model.hpp"
#include "parthom/sign_matrix.hpp"

namespace parthom {

// One connected component of the graph on [m] with edges A_ij != 0.
struct MatrixComponent {
  std::vector<std::size_t> indices;  // ascending, original indices
  bool bipartite = false;
  // Isolated index with A_ii = 0; there is no block.
  bool zero = false;
  // Bipartite: the two sides (row side holds the lowest index).
  // Non-bipartite: both equal `indices`.
  std::vector<std::size_t> row_side;
  std::vector<std::size_t> col_side;
  Matrix block;  // A restricted to row_side x col_side
};

std::vector<MatrixComponent> matrix_components(const SymMatrix& a);
MatrixComponent component_of(const SymMatrix& a, const std::vector<std::size_t>& indices);

struct TwinReduction {
  SymMatrix reduced;
  std::vector<std::size_t> tau;  // original index -> class
  DiagMatrix delta;
};

TwinReduction twin_reduce(const SymMatrix& a, const DiagMatrix& d);

struct PmTwinReduction {
  SymMatrix reduced;
  std::vector<std::vector<std::size_t>> positive;  // P_i, first entry is the representative
  std::vector<std::vector<std::size_t>> negative;  // N_i
  std::vector<std::size_t> cls;                    // original index -> class
  std::vector<int> sign;                           // +1 for P, -1 for N
  DiagMatrix d;
  DiagMatrix o;
};

PmTwinReduction pm_twin_reduce(const SymMatrix& a, const DiagMatrix& delta);

PdpfInstance negate_row_col(const PdpfInstance& inst, std::size_t i);

struct Rank1Factorization {
  std::vector<Rational> x;  // x[0] == 1
  std::vector<Rational> y;
};

// Throws std::invalid_argument when b is decomposable.
std::optional<Rank1Factorization> abs_rank1_factor(const Matrix& b);

enum class HardReason {
  BlockRankAtLeastTwo,
  ShapeRowViolation,
  ShapeColumnViolation,
  NotHadamard,
  DiagonalTilesNotScalar,
  OddTilesNotUniform,
  GroupCondition,
  LambdaNotLinear,
  DegreeAboveTwo,
};

const char* reason_name(HardReason r);
const char* reason_description(HardReason r);

struct HardEvidence {
  HardReason reason{};
  std::vector<std::size_t> witness;  // indices, meaning depends on reason
  std::string detail;
};

// One side (rows or columns) of a tile decomposition.
struct TileSide {
  std::vector<Rational> values;                  // ascending distinct
  std::vector<std::size_t> perm;                 // Sigma: sorted position -> block index
  std::vector<std::vector<std::size_t>> tiles;   // tile -> block indices (ascending)
  std::vector<std::size_t> tile_of;              // block index -> tile
  std::vector<std::vector<std::size_t>> reps;    // tile -> r block indices (K_kappa)
  std::vector<std::vector<int>> tau;             // tile -> r signs, tau[0] all +1
  std::vector<std::size_t> slot;                 // block index -> a in [r]
  std::vector<int> twin_sign;                    // block index -> +1 (P) or -1 (N)
};

struct TileDecomposition {
  TileSide row;
  TileSide col;
  std::size_t rank = 0;
  // Sign pattern of the block, indexed by block indices.
  SignMatrix signs;
};

std::variant<TileDecomposition, HardEvidence> tile_decompose(const Matrix& b,
                                                             const Rank1Factorization& fact);

// Output of the C1-C5 pipeline for one connected component.
struct CanonicalForm {
  bool bipartite = false;
  bool symmetric = false;
  std::size_t r = 0;
  SignMatrix h;
  std::vector<Rational> v, w;
  std::vector<Rational> alpha_r, alpha_c, beta_r, beta_c;
  std::vector<std::size_t> lam_r, lam_c;  // ascending subsets of [r]

  // The reduced instance Z-equivalent to the component. Index (mu, a) is
  // mu*r + a; in the bipartite case the row indices come first.
  PdpfInstance reduced{SymMatrix(), DiagMatrix(), DiagMatrix()};
  // Component-local transform record: original index -> reduced row index
  // (or column index in the bipartite case, offset past the rows) and twin sign.
  std::vector<std::size_t> original;
  std::vector<std::size_t> reduced_index;
  std::vector<int> twin_sign;
  std::vector<std::size_t> negated;  // reduced indices negated by row-column negation
};

std::variant<CanonicalForm, HardEvidence> canonicalize_connected(const MatrixComponent& comp);

// Value of the component on graphs: Z_{A_comp}(G) equals
// the pdpf value of cf.reduced; checked in tests against the oracle.
SymMatrix component_matrix(const SymMatrix& a, const MatrixComponent& comp);

}  // namespace parthom
