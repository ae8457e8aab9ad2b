#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "parthom/model.hpp"

namespace parthom {

// Matrix with entries in {-1, +1}.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 1) {}
  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);
  // Throws std::invalid_argument on entries other than +1 / -1.
  static SignMatrix from_matrix(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, int s) { data_[i * cols_ + j] = static_cast<std::int8_t>(s); }

  SignMatrix transposed() const;
  SignMatrix negated() const;
  // (result)_{ij} = this(rows[i], cols[j]).
  SignMatrix permuted(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  bool is_symmetric() const;
  bool is_square() const { return rows_ == cols_; }
  Matrix to_matrix() const;
  std::string to_string() const;

  friend bool operator==(const SignMatrix& a, const SignMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int8_t> data_;
};

SignMatrix kron(const SignMatrix& a, const SignMatrix& b);

SignMatrix hadamard_h2();
SignMatrix hadamard_h4();

}  // namespace parthom
