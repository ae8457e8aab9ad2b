#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "parthom/rational.hpp"

namespace parthom {

// Bit vector over GF(2) of arbitrary width.
class Gf2Vec {
 public:
  Gf2Vec() = default;
  explicit Gf2Vec(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}
  static Gf2Vec from_bits(std::size_t width, std::uint64_t bits);

  std::size_t width() const { return width_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool b = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void clear();

  Gf2Vec& operator^=(const Gf2Vec& o);
  Gf2Vec& operator&=(const Gf2Vec& o);
  friend Gf2Vec operator^(Gf2Vec a, const Gf2Vec& b) { return a ^= b; }
  friend Gf2Vec operator&(Gf2Vec a, const Gf2Vec& b) { return a &= b; }

  bool any() const;
  std::size_t popcount() const;
  bool dot(const Gf2Vec& o) const;
  // Lowest set index, or width() when zero.
  std::size_t first() const;
  // Lowest set index strictly above i, or width().
  std::size_t next(std::size_t i) const;
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  std::string to_string() const;

  friend bool operator==(const Gf2Vec& a, const Gf2Vec& b) = default;
  friend auto operator<=>(const Gf2Vec& a, const Gf2Vec& b) = default;

 private:
  std::size_t next_from(std::size_t i) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

// Multilinear polynomial in at most 64 variables, stored as its set of
// monomials (bit masks); the empty mask is the constant 1.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(std::size_t vars) : vars_(vars) {}

  std::size_t vars() const { return vars_; }
  const std::set<std::uint64_t>& monomials() const { return monos_; }
  bool is_zero() const { return monos_.empty(); }

  void toggle(std::uint64_t monomial);
  bool eval(std::uint64_t x) const;
  std::vector<std::uint8_t> truth_table() const;
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) = default;

 private:
  std::size_t vars_ = 0;
  std::set<std::uint64_t> monos_;
};

Gf2Poly anf_from_truth_table(const std::vector<std::uint8_t>& values);
std::size_t poly_degree(const Gf2Poly& p);

// Linear injection F2^l -> F2^k, y |-> sum_t y_t rows[t].
struct SubspaceBasis {
  std::size_t ambient = 0;
  std::vector<Gf2Vec> rows;

  std::size_t dim() const { return rows.size(); }
  Gf2Vec apply(std::uint64_t y) const;
  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) = default;
};

Gf2Poly compose_linear(const Gf2Poly& p, const SubspaceBasis& phi);

bool is_linear_subspace(const std::set<Gf2Vec>& s);
// Reduced row echelon basis of the span; meaningful when s is a subspace.
SubspaceBasis subspace_basis(const std::set<Gf2Vec>& s, std::size_t width);

// q(x) = sum_{i<j} Q_ij x_i x_j + sum_i l_i x_i + c over GF(2).
class QuadPoly {
 public:
  QuadPoly() = default;
  explicit QuadPoly(std::size_t vars);

  std::size_t vars() const { return n_; }
  // Toggles x_i x_j; for i == j toggles the linear term x_i.
  void toggle_pair(std::size_t i, std::size_t j);
  void toggle_linear(std::size_t i) { lin_.flip(i); }
  void toggle_constant() { c_ = !c_; }
  // Adds (a + ca)(b + cb) for linear forms a, b given as variable sets.
  void add_product(const Gf2Vec& a, bool ca, const Gf2Vec& b, bool cb);
  void add_linear_form(const Gf2Vec& a, bool ca);

  bool has_pair(std::size_t i, std::size_t j) const { return adj_[i].get(j); }
  const Gf2Vec& linear() const { return lin_; }
  bool constant() const { return c_; }
  const Gf2Vec& neighbours(std::size_t i) const { return adj_[i]; }
  std::size_t pair_count() const;

  bool eval(const Gf2Vec& x) const;
  bool eval_bits(std::uint64_t x) const;

 private:
  std::size_t n_ = 0;
  std::vector<Gf2Vec> adj_;  // symmetric, zero diagonal
  Gf2Vec lin_;
  bool c_ = false;
};

// sum_x (-1)^q(x) = 2^n - 2 #{q = 1}.
BigInt quadratic_character_sum(const QuadPoly& q);
BigInt count_quadratic_ones(const QuadPoly& q);
// Enumeration; throws std::length_error for more than 24 variables.
std::uint64_t count_quadratic_bruteforce(const QuadPoly& q);

}  // namespace parthom
