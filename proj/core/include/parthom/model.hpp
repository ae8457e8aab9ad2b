#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "parthom/rational.hpp"

namespace parthom {

// Undirected multigraph. Parallel edges are repeated entries; a loop {v,v}
// adds two to deg(v).
class Multigraph {
 public:
  struct Edge {
    std::size_t u;
    std::size_t v;
  };

  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count, std::vector<Edge> edges = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<std::size_t> degrees() const;
  std::size_t loop_count() const;

  // Equality as multisets of unordered pairs.
  friend bool operator==(const Multigraph& a, const Multigraph& b);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

struct LabelledGraph {
  Multigraph graph;
  std::size_t label = 0;
};

Multigraph stretch(const Multigraph& g, std::size_t s);
Multigraph thicken(const Multigraph& g, std::size_t t);

struct GraphComponent {
  Multigraph graph;
  std::vector<std::size_t> to_original;
};

// Components in order of their lowest vertex; vertices keep relative order.
std::vector<GraphComponent> graph_components(const Multigraph& g);

struct Bipartition {
  std::vector<std::size_t> u;
  std::vector<std::size_t> w;
  std::vector<bool> in_w;
};

// Throws std::invalid_argument if g is not connected.
std::optional<Bipartition> bipartition(const Multigraph& g);

bool is_connected(const Multigraph& g);

// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<Rational>& data() const { return data_; }

  Matrix transposed() const;
  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
std::size_t matrix_rank(const Matrix& a);

class SymMatrix {
 public:
  SymMatrix() = default;
  // Throws std::invalid_argument when m is not square and symmetric.
  explicit SymMatrix(Matrix m);
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static SymMatrix identity(std::size_t order);

  std::size_t order() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) = default;

 private:
  Matrix m_;
};

struct DiagMatrix {
  std::vector<Rational> diag;

  static DiagMatrix identity(std::size_t order);
  std::size_t order() const { return diag.size(); }
  const Rational& operator[](std::size_t i) const { return diag[i]; }
  Rational& operator[](std::size_t i) { return diag[i]; }
  friend bool operator==(const DiagMatrix& a, const DiagMatrix& b) = default;
};

DiagMatrix kron(const DiagMatrix& a, const DiagMatrix& b);

struct PdpfInstance {
  SymMatrix a;
  DiagMatrix d;
  DiagMatrix o;

  // Throws std::invalid_argument when the orders disagree.
  PdpfInstance(SymMatrix a, DiagMatrix d, DiagMatrix o);
  static PdpfInstance plain(const SymMatrix& a);
  static PdpfInstance weighted(const SymMatrix& a, const DiagMatrix& d);
  std::size_t order() const { return a.order(); }
};

}  // namespace parthom
