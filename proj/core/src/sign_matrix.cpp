#include "parthom/sign_matrix.hpp"

#include <stdexcept>

namespace parthom {

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  SignMatrix s(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != s.cols_) throw std::invalid_argument("ragged sign matrix");
    for (std::size_t j = 0; j < s.cols_; ++j) {
      if (rows[i][j] != 1 && rows[i][j] != -1) throw std::invalid_argument("sign matrix entries must be +1 or -1");
      s.set(i, j, rows[i][j]);
    }
  }
  return s;
}

SignMatrix SignMatrix::from_matrix(const Matrix& m) {
  SignMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 1) {
        s.set(i, j, 1);
      } else if (m(i, j) == -1) {
        s.set(i, j, -1);
      } else {
        throw std::invalid_argument("sign matrix entries must be +1 or -1");
      }
    }
  return s;
}

SignMatrix SignMatrix::transposed() const {
  SignMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

SignMatrix SignMatrix::negated() const {
  SignMatrix t = *this;
  for (auto& x : t.data_) x = static_cast<std::int8_t>(-x);
  return t;
}

SignMatrix SignMatrix::permuted(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  SignMatrix t(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) t.set(i, j, (*this)(rows[i], cols[j]));
  return t;
}

bool SignMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix SignMatrix::to_matrix() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

std::string SignMatrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) > 0 ? '+' : '-';
    if (i + 1 < rows_) s += '\n';
  }
  return s;
}

SignMatrix kron(const SignMatrix& a, const SignMatrix& b) {
  SignMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c.set(i * b.rows() + k, j * b.cols() + l, a(i, j) * b(k, l));
  return c;
}

SignMatrix hadamard_h2() { return SignMatrix::from_rows({{1, 1}, {1, -1}}); }

SignMatrix hadamard_h4() {
  return SignMatrix::from_rows({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}});
}

}  // namespace parthom
