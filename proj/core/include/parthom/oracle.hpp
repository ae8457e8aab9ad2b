#pragma once

#include <cstddef>
#include <cstdint>

#include "parthom/model.hpp"

namespace parthom {

inline constexpr std::uint64_t kDefaultOracleGuard = std::uint64_t{1} << 24;

struct OracleOptions {
  // Maximum number of configurations m^|V|; 0 means read PARTHOM_ORACLE_GUARD
  // from the environment, falling back to kDefaultOracleGuard.
  std::uint64_t guard = 0;
  unsigned threads = 1;
};

std::uint64_t effective_guard(const OracleOptions& opts);

// Sum over all configurations of edge weights times the D weight of
// even-degree vertices and the O weight of odd-degree vertices.
Rational eval_pdpf_bruteforce(const PdpfInstance& inst, const Multigraph& g,
                              const OracleOptions& opts = {});
Rational eval_partition_bruteforce(const SymMatrix& a, const Multigraph& g,
                                   const OracleOptions& opts = {});
Rational eval_weighted_bruteforce(const SymMatrix& a, const DiagMatrix& d, const Multigraph& g,
                                  const OracleOptions& opts = {});

// Configurations with the label pinned to spin k, divided by D_kk.
// Throws std::domain_error when D_kk = 0.
Rational eval_pinned_bruteforce(const SymMatrix& a, const DiagMatrix& d, const LabelledGraph& lg,
                                std::size_t k, const OracleOptions& opts = {});

}  // namespace parthom
