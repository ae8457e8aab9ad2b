#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "parthom/gf2.hpp"
#include "parthom/sign_matrix.hpp"

namespace parthom {

bool is_hadamard(const SignMatrix& h);
bool group_condition(const SignMatrix& h);

// The symmetric rule (i == j) applies when h is symmetric and lam_r == lam_c.
bool is_positive_for(const SignMatrix& h, const std::vector<std::size_t>& lam_r,
                     const std::vector<std::size_t>& lam_c);

enum class TensorFactor { H2, H4 };

struct PeelStep {
  std::vector<std::size_t> sigma;  // row permutation, sigma[0] == 0
  std::vector<std::size_t> pi;     // column permutation, pi[0] == 0
  TensorFactor factor{};
  SignMatrix rest;                 // h.permuted(sigma, pi) == kron(factor, rest)
};

// Precondition: h normalised (first row and column +1), GC, order >= 2.
PeelStep peel_tensor_step(const SignMatrix& h);

// Index x in [0, 2^k) encodes (X_1..X_k) with X_{i+1} = bit i of x.
struct Backbone {
  std::size_t k = 0;
  std::vector<std::size_t> rho_r, rho_c;
  std::vector<std::size_t> pi;  // X_{pi[i]} pairs with Y_i
};

Backbone backbone_representation(const SignMatrix& h);

struct Representation {
  std::size_t k = 0;
  std::vector<std::size_t> rho_r, rho_c;
  std::vector<std::size_t> pi;
  Gf2Poly g_r, g_c;

  // X_pi . Y + g_r(X) + g_c(Y)
  bool h(std::uint64_t x, std::uint64_t y) const;
  std::vector<std::size_t> inverse_r() const;
  std::vector<std::size_t> inverse_c() const;
};

// Exhaustive check of H_{rho_r(x), rho_c(y)} = -1 <=> h(x, y) = 1.
bool verify_representation(const SignMatrix& h, const Representation& rep);

// Precondition: GC and positivity. Throws std::logic_error if the built
// representation fails verification.
Representation construct_representation(const SignMatrix& h, const std::vector<std::size_t>& lam_r,
                                        const std::vector<std::size_t>& lam_c);

struct Coordinatisation {
  SubspaceBasis phi_r, phi_c;
};

std::optional<Coordinatisation> check_linearity(const Representation& rep,
                                                const std::vector<std::size_t>& lam_r,
                                                const std::vector<std::size_t>& lam_c);

bool check_degree(const Representation& rep, const Coordinatisation& phi,
                  const std::vector<std::size_t>& lam_r, const std::vector<std::size_t>& lam_c);

struct Bipartisation {
  SymMatrix m;
  std::vector<std::size_t> lam;
};

Bipartisation bipartise(const SignMatrix& h, const std::vector<std::size_t>& lam_r,
                        const std::vector<std::size_t>& lam_c);

std::size_t log2_exact(std::size_t n);

}  // namespace parthom
