#include "parthom/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parthom {

namespace {

std::vector<std::vector<std::size_t>> connected_index_sets(const SymMatrix& a) {
  const std::size_t m = a.order();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (a(i, j) != 0) {
        std::size_t x = find(i), y = find(j);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = find(i);
    if (slot[r] == m) {
      slot[r] = sets.size();
      sets.emplace_back();
    }
    sets[slot[r]].push_back(i);
  }
  return sets;
}

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

MatrixComponent component_of(const SymMatrix& a, const std::vector<std::size_t>& indices) {
  MatrixComponent c;
  c.indices = indices;
  if (indices.size() == 1 && a(indices[0], indices[0]) == 0) {
    c.zero = true;
    return c;
  }
  const std::size_t n = indices.size();
  std::vector<int> color(n, -1);
  bool bip = true;
  for (std::size_t i = 0; i < n && bip; ++i)
    if (a(indices[i], indices[i]) != 0) bip = false;
  if (bip) {
    color[0] = 0;
    std::vector<std::size_t> stack{0};
    while (!stack.empty() && bip) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || a(indices[x], indices[y]) == 0) continue;
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        } else if (color[y] == color[x]) {
          bip = false;
          break;
        }
      }
    }
  }
  c.bipartite = bip;
  if (bip) {
    for (std::size_t i = 0; i < n; ++i) (color[i] == 0 ? c.row_side : c.col_side).push_back(indices[i]);
  } else {
    c.row_side = c.col_side = indices;
  }
  c.block = a.matrix().submatrix(c.row_side, c.col_side);
  return c;
}

std::vector<MatrixComponent> matrix_components(const SymMatrix& a) {
  std::vector<MatrixComponent> out;
  for (const auto& s : connected_index_sets(a)) out.push_back(component_of(a, s));
  return out;
}

SymMatrix component_matrix(const SymMatrix& a, const MatrixComponent& comp) {
  return SymMatrix(a.matrix().submatrix(comp.indices, comp.indices));
}

TwinReduction twin_reduce(const SymMatrix& a, const DiagMatrix& d) {
  const std::size_t m = a.order();
  if (d.order() != m) throw std::invalid_argument("twin reduction orders disagree");
  std::vector<std::size_t> reps;
  TwinReduction t;
  t.tau.resize(m);
  auto same_row = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < m; ++k)
      if (a(i, k) != a(j, k)) return false;
    return true;
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t c = 0;
    while (c < reps.size() && !same_row(reps[c], i)) ++c;
    if (c == reps.size()) {
      reps.push_back(i);
      t.delta.diag.emplace_back(0);
    }
    t.tau[i] = c;
    t.delta[c] += d[i];
  }
  t.reduced = SymMatrix(a.matrix().submatrix(reps, reps));
  return t;
}

PmTwinReduction pm_twin_reduce(const SymMatrix& a, const DiagMatrix& delta) {
  const std::size_t m = a.order();
  if (delta.order() != m) throw std::invalid_argument("pm-twin reduction orders disagree");
  PmTwinReduction t;
  t.cls.resize(m);
  t.sign.resize(m);
  std::vector<std::size_t> reps;
  auto relation = [&](std::size_t rep, std::size_t i) {
    bool eq = true, neg = true;
    for (std::size_t k = 0; k < m && (eq || neg); ++k) {
      if (a(rep, k) != a(i, k)) eq = false;
      if (a(rep, k) != -a(i, k)) neg = false;
    }
    return eq ? 1 : (neg ? -1 : 0);
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t c = 0;
    int s = 0;
    for (; c < reps.size(); ++c)
      if ((s = relation(reps[c], i)) != 0) break;
    if (c == reps.size()) {
      reps.push_back(i);
      t.positive.emplace_back();
      t.negative.emplace_back();
      t.d.diag.emplace_back(0);
      t.o.diag.emplace_back(0);
      s = 1;
    }
    t.cls[i] = c;
    t.sign[i] = s;
    t.d[c] += delta[i];
    if (s > 0) {
      t.positive[c].push_back(i);
      t.o[c] += delta[i];
    } else {
      t.negative[c].push_back(i);
      t.o[c] -= delta[i];
    }
  }
  t.reduced = SymMatrix(a.matrix().submatrix(reps, reps));
  return t;
}

PdpfInstance negate_row_col(const PdpfInstance& inst, std::size_t i) {
  const std::size_t m = inst.order();
  if (i >= m) throw std::out_of_range("negation index");
  Matrix c = inst.a.matrix();
  for (std::size_t k = 0; k < m; ++k) {
    if (k != i) {
      c(i, k) = -c(i, k);
      c(k, i) = -c(k, i);
    }
  }
  DiagMatrix o = inst.o;
  o[i] = -o[i];
  return PdpfInstance(SymMatrix(std::move(c)), inst.d, std::move(o));
}

std::optional<Rank1Factorization> abs_rank1_factor(const Matrix& b) {
  const std::size_t R = b.rows(), C = b.cols();
  if (R == 0 || C == 0) throw std::invalid_argument("empty block");
  // Indecomposable: the row/column incidence graph of nonzero entries is connected.
  std::vector<std::size_t> parent(R + C);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (b(i, j) != 0) parent[find(i)] = find(R + j);
  for (std::size_t x = 1; x < R + C; ++x)
    if (find(x) != find(0)) throw std::invalid_argument("block is decomposable");

  for (const auto& q : b.data())
    if (q == 0) return std::nullopt;
  Rank1Factorization f;
  const Rational b00 = abs(b(0, 0));
  for (std::size_t j = 0; j < C; ++j) f.y.push_back(abs(b(0, j)));
  for (std::size_t i = 0; i < R; ++i) f.x.push_back(abs(b(i, 0)) / b00);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (abs(b(i, j)) != f.x[i] * f.y[j]) return std::nullopt;
  return f;
}

const char* reason_name(HardReason r) {
  switch (r) {
    case HardReason::BlockRankAtLeastTwo: return "block-rank";
    case HardReason::ShapeRowViolation: return "shape-rows";
    case HardReason::ShapeColumnViolation: return "shape-columns";
    case HardReason::NotHadamard: return "C3";
    case HardReason::DiagonalTilesNotScalar: return "C4";
    case HardReason::OddTilesNotUniform: return "C5";
    case HardReason::GroupCondition: return "GC";
    case HardReason::LambdaNotLinear: return "L";
    case HardReason::DegreeAboveTwo: return "D";
  }
  return "?";
}

const char* reason_description(HardReason r) {
  switch (r) {
    case HardReason::BlockRankAtLeastTwo: return "block of |A| with rank >= 2";
    case HardReason::ShapeRowViolation: return "two rows of the sign pattern are neither orthogonal nor +-copies on every tile";
    case HardReason::ShapeColumnViolation: return "two columns of the sign pattern are neither orthogonal nor +-copies on every tile";
    case HardReason::NotHadamard: return "reduced sign matrix H is not Hadamard";
    case HardReason::DiagonalTilesNotScalar: return "even-degree weight tile is not a multiple of the identity";
    case HardReason::OddTilesNotUniform: return "odd-degree weight tiles do not share one support with constant value";
    case HardReason::GroupCondition: return "H fails the group condition";
    case HardReason::LambdaNotLinear: return "odd-degree support is not a linear subspace under the representation";
    case HardReason::DegreeAboveTwo: return "g composed with the coordinatisation has degree above 2";
  }
  return "?";
}

namespace {

// Rows (i, j) of `s` fail the shape rule: on some tile of the other side they
// are not orthogonal, and they are not +-copies of each other.
bool shape_pair_ok(const SignMatrix& s, std::size_t i, std::size_t j, const std::vector<std::size_t>& other_tile,
                   std::size_t other_tiles) {
  bool same = true, opposite = true;
  std::vector<long> dots(other_tiles, 0);
  for (std::size_t c = 0; c < s.cols(); ++c) {
    int p = s(i, c) * s(j, c);
    if (p < 0) same = false;
    if (p > 0) opposite = false;
    dots[other_tile[c]] += p;
  }
  if (same || opposite) return true;
  return std::all_of(dots.begin(), dots.end(), [](long d) { return d == 0; });
}

// Relation between rows: +1 equal, -1 negated, 0 otherwise.
int row_relation(const SignMatrix& s, std::size_t i, std::size_t j) {
  bool eq = true, neg = true;
  for (std::size_t c = 0; c < s.cols() && (eq || neg); ++c) {
    if (s(i, c) != s(j, c)) eq = false;
    if (s(i, c) != -s(j, c)) neg = false;
  }
  return eq ? 1 : (neg ? -1 : 0);
}

TileSide build_side(const std::vector<Rational>& x) {
  TileSide side;
  side.values = x;
  std::sort(side.values.begin(), side.values.end());
  side.values.erase(std::unique(side.values.begin(), side.values.end()), side.values.end());
  side.tiles.resize(side.values.size());
  side.tile_of.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t t = static_cast<std::size_t>(std::lower_bound(side.values.begin(), side.values.end(), x[i]) - side.values.begin());
    side.tile_of[i] = t;
    side.tiles[t].push_back(i);
  }
  for (const auto& t : side.tiles) side.perm.insert(side.perm.end(), t.begin(), t.end());
  return side;
}

// Fills reps, tau, slot and twin_sign from the +-classes of the rows of s.
// Returns the number of classes.
std::size_t assign_classes(TileSide& side, const SignMatrix& s) {
  const std::size_t n = s.rows();
  std::vector<std::size_t> cls(n), class_rep;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = 0;
    while (c < class_rep.size() && row_relation(s, class_rep[c], i) == 0) ++c;
    if (c == class_rep.size()) class_rep.push_back(i);
    cls[i] = c;
  }
  // Order of the slots: classes as they first appear in tile 0.
  std::vector<std::size_t> slot_of_class(class_rep.size(), class_rep.size());
  std::size_t r = 0;
  for (std::size_t i : side.tiles[0])
    if (slot_of_class[cls[i]] == class_rep.size()) slot_of_class[cls[i]] = r++;
  if (r != class_rep.size()) throw std::logic_error("first tile misses a sign class");
  side.reps.assign(side.tiles.size(), std::vector<std::size_t>(r, n));
  for (std::size_t t = 0; t < side.tiles.size(); ++t) {
    for (std::size_t i : side.tiles[t]) {
      std::size_t a = slot_of_class[cls[i]];
      if (side.reps[t][a] == n) side.reps[t][a] = i;
    }
    for (std::size_t a = 0; a < r; ++a)
      if (side.reps[t][a] == n) throw std::logic_error("tile misses a sign class");
  }
  side.tau.assign(side.tiles.size(), std::vector<int>(r, 1));
  for (std::size_t t = 0; t < side.tiles.size(); ++t)
    for (std::size_t a = 0; a < r; ++a) side.tau[t][a] = row_relation(s, side.reps[0][a], side.reps[t][a]);
  side.slot.resize(n);
  side.twin_sign.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    side.slot[i] = slot_of_class[cls[i]];
    side.twin_sign[i] = row_relation(s, side.reps[side.tile_of[i]][side.slot[i]], i);
  }
  return r;
}

}  // namespace

std::variant<TileDecomposition, HardEvidence> tile_decompose(const Matrix& b, const Rank1Factorization& fact) {
  TileDecomposition td;
  td.row = build_side(fact.x);
  td.col = build_side(fact.y);
  td.signs = SignMatrix(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(i, j) == 0) throw std::invalid_argument("tiling needs a block without zero entries");
      td.signs.set(i, j, sgn(b(i, j)));
    }
  const SignMatrix st = td.signs.transposed();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i + 1; j < b.rows(); ++j)
      if (!shape_pair_ok(td.signs, i, j, td.col.tile_of, td.col.tiles.size()))
        return HardEvidence{HardReason::ShapeRowViolation, {i, j}, "rows " + std::to_string(i) + ", " + std::to_string(j)};
  for (std::size_t i = 0; i < b.cols(); ++i)
    for (std::size_t j = i + 1; j < b.cols(); ++j)
      if (!shape_pair_ok(st, i, j, td.row.tile_of, td.row.tiles.size()))
        return HardEvidence{HardReason::ShapeColumnViolation, {i, j}, "columns " + std::to_string(i) + ", " + std::to_string(j)};
  std::size_t r = assign_classes(td.row, td.signs);
  std::size_t rc = assign_classes(td.col, st);
  if (r != rc) throw std::logic_error("row and column sign classes disagree in number");
  td.rank = r;
  return td;
}

namespace {

// Indices witnessing rank(|B|) >= 2: a zero entry (i, j) or a 2x2 minor (i1, i2, j1, j2).
std::vector<std::size_t> rank_witness(const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) == 0) return {i, j};
  for (std::size_t i = 1; i < b.rows(); ++i)
    for (std::size_t j = 1; j < b.cols(); ++j)
      if (abs(b(0, 0)) * abs(b(i, j)) != abs(b(0, j)) * abs(b(i, 0))) return {0, i, 0, j};
  return {};
}

}  // namespace

std::variant<CanonicalForm, HardEvidence> canonicalize_connected(const MatrixComponent& comp) {
  if (comp.zero) throw std::invalid_argument("zero component has no canonical form");
  const Matrix& b = comp.block;
  auto fact = abs_rank1_factor(b);
  if (!fact) {
    auto w = rank_witness(b);
    std::vector<std::size_t> orig;
    if (w.size() == 2) {
      orig = {comp.row_side[w[0]], comp.col_side[w[1]]};
    } else {
      orig = {comp.row_side[w[0]], comp.row_side[w[1]], comp.col_side[w[2]], comp.col_side[w[3]]};
    }
    return HardEvidence{HardReason::BlockRankAtLeastTwo, orig,
                        w.size() == 2 ? "zero entry inside the block" : "nonzero 2x2 minor of |B|"};
  }
  auto tiled = tile_decompose(b, *fact);
  if (auto* ev = std::get_if<HardEvidence>(&tiled)) {
    HardEvidence e = *ev;
    const auto& side = e.reason == HardReason::ShapeRowViolation ? comp.row_side : comp.col_side;
    for (auto& i : e.witness) i = side[i];
    return e;
  }
  const TileDecomposition& td = std::get<TileDecomposition>(tiled);
  const std::size_t r = td.rank, mr = td.row.tiles.size(), nc = td.col.tiles.size();

  // pm-twin classes per tile: D = |P| + |N|, O = |P| - |N|.
  std::vector<Rational> dr(mr * r, 0), orr(mr * r, 0), dc(nc * r, 0), oc(nc * r, 0);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::size_t idx = td.row.tile_of[i] * r + td.row.slot[i];
    dr[idx] += 1;
    orr[idx] += td.row.twin_sign[i];
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::size_t idx = td.col.tile_of[j] * r + td.col.slot[j];
    dc[idx] += 1;
    oc[idx] += td.col.twin_sign[j];
  }
  // Negations making O nonnegative on the first tile and all tiles equal to H.
  std::vector<int> nr(mr * r), ncs(nc * r);
  for (std::size_t t = 0; t < mr; ++t)
    for (std::size_t a = 0; a < r; ++a) nr[t * r + a] = (orr[a] < 0 ? -1 : 1) * td.row.tau[t][a];
  for (std::size_t t = 0; t < nc; ++t)
    for (std::size_t a = 0; a < r; ++a) ncs[t * r + a] = (oc[a] < 0 ? -1 : 1) * td.col.tau[t][a];
  for (std::size_t i = 0; i < mr * r; ++i) orr[i] *= nr[i];
  for (std::size_t j = 0; j < nc * r; ++j) oc[j] *= ncs[j];

  CanonicalForm cf;
  cf.bipartite = comp.bipartite;
  cf.symmetric = b.is_symmetric();
  cf.r = r;
  cf.v = td.row.values;
  cf.w = td.col.values;
  cf.h = SignMatrix(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t c = 0; c < r; ++c) cf.h.set(a, c, nr[a] * ncs[c] * td.signs(td.row.reps[0][a], td.col.reps[0][c]));

  Matrix reduced_block(mr * r, nc * r);
  for (std::size_t t = 0; t < mr; ++t)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t u = 0; u < nc; ++u)
        for (std::size_t c = 0; c < r; ++c) {
          Rational x = b(td.row.reps[t][a], td.col.reps[u][c]) * nr[t * r + a] * ncs[u * r + c];
          if (x != cf.v[t] * cf.w[u] * cf.h(a, c)) throw std::logic_error("tiles do not reproduce v w^T (x) H");
          reduced_block(t * r + a, u * r + c) = x;
        }

  if (comp.bipartite) {
    const std::size_t n = (mr + nc) * r;
    Matrix full(n, n);
    for (std::size_t i = 0; i < mr * r; ++i)
      for (std::size_t j = 0; j < nc * r; ++j) {
        full(i, mr * r + j) = reduced_block(i, j);
        full(mr * r + j, i) = reduced_block(i, j);
      }
    DiagMatrix d{dr}, o{orr};
    d.diag.insert(d.diag.end(), dc.begin(), dc.end());
    o.diag.insert(o.diag.end(), oc.begin(), oc.end());
    cf.reduced = PdpfInstance(SymMatrix(std::move(full)), std::move(d), std::move(o));
    for (std::size_t i = 0; i < b.rows(); ++i) {
      cf.original.push_back(comp.row_side[i]);
      cf.reduced_index.push_back(td.row.tile_of[i] * r + td.row.slot[i]);
      cf.twin_sign.push_back(td.row.twin_sign[i]);
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cf.original.push_back(comp.col_side[j]);
      cf.reduced_index.push_back(mr * r + td.col.tile_of[j] * r + td.col.slot[j]);
      cf.twin_sign.push_back(td.col.twin_sign[j]);
    }
    for (std::size_t i = 0; i < mr * r; ++i)
      if (nr[i] < 0) cf.negated.push_back(i);
    for (std::size_t j = 0; j < nc * r; ++j)
      if (ncs[j] < 0) cf.negated.push_back(mr * r + j);
  } else {
    if (td.row.tile_of != td.col.tile_of || td.row.slot != td.col.slot || td.row.twin_sign != td.col.twin_sign ||
        nr != ncs)
      throw std::logic_error("symmetric block produced asymmetric tiling");
    cf.reduced = PdpfInstance(SymMatrix(std::move(reduced_block)), DiagMatrix{dr}, DiagMatrix{orr});
    for (std::size_t i = 0; i < b.rows(); ++i) {
      cf.original.push_back(comp.row_side[i]);
      cf.reduced_index.push_back(td.row.tile_of[i] * r + td.row.slot[i]);
      cf.twin_sign.push_back(td.row.twin_sign[i]);
    }
    for (std::size_t i = 0; i < mr * r; ++i)
      if (nr[i] < 0) cf.negated.push_back(i);
  }

  for (std::size_t i = 0; i < mr * r; ++i)
    if (dr[i] <= 0 || dr[i] + orr[i] < 0 || dr[i] - orr[i] < 0 || (i < r && orr[i] < 0))
      throw std::logic_error("C2 violated after negation");

  // C3
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t c = a + 1; c < r; ++c) {
      long dot = 0;
      for (std::size_t k = 0; k < r; ++k) dot += cf.h(a, k) * cf.h(c, k);
      if (dot != 0)
        return HardEvidence{HardReason::NotHadamard, {comp.row_side[td.row.reps[0][a]], comp.row_side[td.row.reps[0][c]]},
                            "rows " + std::to_string(a) + " and " + std::to_string(c) + " of H are not orthogonal"};
    }

  // C4 and C5 for one side.
  auto scalar_tiles = [&](const std::vector<Rational>& d, const std::vector<Rational>& o, std::size_t tiles,
                          const TileSide& side, const std::vector<std::size_t>& orig, std::vector<Rational>& alpha,
                          std::vector<Rational>& beta, std::vector<std::size_t>& lam) -> std::optional<HardEvidence> {
    for (std::size_t t = 0; t < tiles; ++t) {
      for (std::size_t a = 1; a < r; ++a)
        if (d[t * r + a] != d[t * r]) {
          return HardEvidence{HardReason::DiagonalTilesNotScalar, {orig[side.reps[t][0]], orig[side.reps[t][a]]},
                              "twin class sizes differ inside a tile"};
        }
      alpha.push_back(d[t * r]);
    }
    std::optional<std::size_t> ref;
    for (std::size_t t = 0; t < tiles && !ref; ++t)
      for (std::size_t a = 0; a < r; ++a)
        if (o[t * r + a] != 0) ref = t;
    if (ref)
      for (std::size_t a = 0; a < r; ++a)
        if (o[*ref * r + a] != 0) lam.push_back(a);
    for (std::size_t t = 0; t < tiles; ++t) {
      Rational value = lam.empty() ? Rational(0) : o[t * r + lam[0]];
      for (std::size_t a = 0; a < r; ++a) {
        bool in = std::binary_search(lam.begin(), lam.end(), a);
        if (o[t * r + a] != (in ? value : Rational(0))) {
          std::size_t other = lam.empty() ? 0 : lam[0];
          return HardEvidence{HardReason::OddTilesNotUniform, {orig[side.reps[t][other]], orig[side.reps[t][a]]},
                              "odd-degree weights are not beta * I on a common support"};
        }
      }
      beta.push_back(value);
    }
    return std::nullopt;
  };
  if (auto e = scalar_tiles(dr, orr, mr, td.row, comp.row_side, cf.alpha_r, cf.beta_r, cf.lam_r)) return *e;
  if (auto e = scalar_tiles(dc, oc, nc, td.col, comp.col_side, cf.alpha_c, cf.beta_c, cf.lam_c)) return *e;
  return cf;
}

}  // namespace parthom
