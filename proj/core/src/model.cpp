#include "parthom/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parthom {

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (const auto& e : edges_)
    if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
}

std::vector<std::size_t> Multigraph::degrees() const {
  std::vector<std::size_t> d(n_, 0);
  for (const auto& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::size_t Multigraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; }));
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  auto canon = [](const std::vector<Multigraph::Edge>& es) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : es) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(out.begin(), out.end());
    return out;
  };
  return canon(a.edges_) == canon(b.edges_);
}

Multigraph stretch(const Multigraph& g, std::size_t s) {
  if (s == 0) throw std::invalid_argument("stretch needs s >= 1");
  std::size_t next = g.vertex_count();
  std::vector<Multigraph::Edge> out;
  out.reserve(g.edge_count() * s);
  for (const auto& e : g.edges()) {
    std::size_t prev = e.u;
    for (std::size_t step = 1; step < s; ++step) {
      out.push_back({prev, next});
      prev = next++;
    }
    out.push_back({prev, e.v});
  }
  return Multigraph(next, std::move(out));
}

Multigraph thicken(const Multigraph& g, std::size_t t) {
  if (t == 0) throw std::invalid_argument("thicken needs t >= 1");
  std::vector<Multigraph::Edge> out;
  out.reserve(g.edge_count() * t);
  for (const auto& e : g.edges())
    for (std::size_t i = 0; i < t; ++i) out.push_back(e);
  return Multigraph(g.vertex_count(), std::move(out));
}

namespace {

std::vector<std::size_t> component_labels(const Multigraph& g, std::size_t& count) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    std::size_t a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(n), root_label(n, n);
  count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (root_label[r] == n) root_label[r] = count++;
    label[v] = root_label[r];
  }
  return label;
}

}  // namespace

std::vector<GraphComponent> graph_components(const Multigraph& g) {
  std::size_t count = 0;
  auto label = component_labels(g, count);
  std::vector<GraphComponent> comps(count);
  std::vector<std::size_t> local(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    local[v] = comps[label[v]].to_original.size();
    comps[label[v]].to_original.push_back(v);
  }
  std::vector<std::vector<Multigraph::Edge>> edges(count);
  for (const auto& e : g.edges()) edges[label[e.u]].push_back({local[e.u], local[e.v]});
  for (std::size_t c = 0; c < count; ++c)
    comps[c].graph = Multigraph(comps[c].to_original.size(), std::move(edges[c]));
  return comps;
}

bool is_connected(const Multigraph& g) {
  std::size_t count = 0;
  component_labels(g, count);
  return count <= 1;
}

std::optional<Bipartition> bipartition(const Multigraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("bipartition needs a connected graph");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) return std::nullopt;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> color(n, -1);
  std::vector<std::size_t> stack;
  if (n > 0) {
    color[0] = 0;
    stack.push_back(0);
  }
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : adj[x]) {
      if (color[y] < 0) {
        color[y] = 1 - color[x];
        stack.push_back(y);
      } else if (color[y] == color[x]) {
        return std::nullopt;
      }
    }
  }
  Bipartition b;
  b.in_w.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] == 0) {
      b.u.push_back(v);
    } else {
      b.w.push_back(v);
      b.in_w[v] = true;
    }
  }
  return b;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  Matrix s(rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
  return s;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return c;
}

std::size_t matrix_rank(const Matrix& a) {
  Matrix m = a;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(rank, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Rational> data;
  data.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("matrix is not square");
    data.insert(data.end(), r.begin(), r.end());
  }
  return SymMatrix(Matrix(n, n, std::move(data)));
}

SymMatrix SymMatrix::identity(std::size_t order) {
  Matrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return SymMatrix(std::move(m));
}

DiagMatrix DiagMatrix::identity(std::size_t order) { return DiagMatrix{std::vector<Rational>(order, Rational(1))}; }

DiagMatrix kron(const DiagMatrix& a, const DiagMatrix& b) {
  DiagMatrix c;
  for (const auto& x : a.diag)
    for (const auto& y : b.diag) c.diag.push_back(x * y);
  return c;
}

PdpfInstance::PdpfInstance(SymMatrix a_, DiagMatrix d_, DiagMatrix o_)
    : a(std::move(a_)), d(std::move(d_)), o(std::move(o_)) {
  if (d.order() != a.order() || o.order() != a.order())
    throw std::invalid_argument("pdpf orders disagree");
}

PdpfInstance PdpfInstance::plain(const SymMatrix& a) {
  return PdpfInstance(a, DiagMatrix::identity(a.order()), DiagMatrix::identity(a.order()));
}

PdpfInstance PdpfInstance::weighted(const SymMatrix& a, const DiagMatrix& d) { return PdpfInstance(a, d, d); }

}  // namespace parthom
