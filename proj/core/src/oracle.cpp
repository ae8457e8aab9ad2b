#include "parthom/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "parthom/errors.hpp"

namespace parthom {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

BigInt to_big(i128 x) {
  bool neg = x < 0;
  u128 u = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

BigInt lcm_of_dens(const std::vector<Rational>& xs) {
  BigInt l = 1;
  for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// Integer-scaled problem data: every weight is an integer and the true value
// is the integer sum divided by `scale`.
struct Scaled {
  std::size_t m = 0, n = 0;
  std::vector<BigInt> a;                   // m*m
  std::vector<std::vector<BigInt>> w;      // per vertex, m weights
  std::vector<std::vector<std::size_t>> back;  // earlier neighbours with multiplicity
  std::vector<std::size_t> loops;
  std::vector<int> pinned;                 // -1 or the pinned spin
  BigInt scale = 1;
};

BigInt scaled_int(const Rational& x, const BigInt& factor) {
  Rational t = x * factor;
  return t.get_num();
}

Scaled scale_problem(const PdpfInstance& inst, const Multigraph& g) {
  Scaled p;
  p.m = inst.order();
  p.n = g.vertex_count();
  BigInt la = lcm_of_dens(inst.a.matrix().data());
  std::vector<Rational> weights = inst.d.diag;
  weights.insert(weights.end(), inst.o.diag.begin(), inst.o.diag.end());
  BigInt lw = lcm_of_dens(weights);
  for (const auto& x : inst.a.matrix().data()) p.a.push_back(scaled_int(x, la));
  auto deg = g.degrees();
  p.back.resize(p.n);
  p.loops.assign(p.n, 0);
  p.pinned.assign(p.n, -1);
  for (std::size_t v = 0; v < p.n; ++v) {
    const auto& src = (deg[v] % 2 == 0) ? inst.d.diag : inst.o.diag;
    std::vector<BigInt> wv;
    for (const auto& x : src) wv.push_back(scaled_int(x, lw));
    p.w.push_back(std::move(wv));
  }
  for (const auto& e : g.edges()) {
    if (e.u == e.v) {
      ++p.loops[e.u];
    } else {
      p.back[std::max(e.u, e.v)].push_back(std::min(e.u, e.v));
    }
  }
  BigInt s = 1;
  for (std::size_t i = 0; i < g.edge_count(); ++i) s *= la;
  for (std::size_t i = 0; i < p.n; ++i) s *= lw;
  p.scale = s;
  return p;
}

bool fits_i128(const Scaled& p, std::size_t edges) {
  double bits = 2.0;
  auto lg = [](const BigInt& x) { return x == 0 ? 0.0 : static_cast<double>(mpz_sizeinbase(x.get_mpz_t(), 2)); };
  double amax = 0, wmax = 0;
  for (const auto& x : p.a) {
    if (!x.fits_slong_p()) return false;
    amax = std::max(amax, lg(x));
  }
  for (const auto& wv : p.w)
    for (const auto& x : wv) {
      if (!x.fits_slong_p()) return false;
      wmax = std::max(wmax, lg(x));
    }
  bits += static_cast<double>(p.n) * (std::log2(static_cast<double>(p.m)) + wmax) + static_cast<double>(edges) * amax;
  return bits < 125.0;
}

template <class T>
struct Engine {
  const Scaled& p;
  std::vector<T> a;
  std::vector<std::vector<T>> w;

  explicit Engine(const Scaled& prob) : p(prob) {
    for (const auto& x : p.a) a.push_back(convert(x));
    for (const auto& wv : p.w) {
      std::vector<T> row;
      for (const auto& x : wv) row.push_back(convert(x));
      w.push_back(std::move(row));
    }
  }

  static T convert(const BigInt& x) {
    if constexpr (std::is_same_v<T, BigInt>) {
      return x;
    } else {
      return static_cast<T>(x.get_si());
    }
  }

  T run(std::size_t v, const T& partial, std::vector<std::size_t>& xi) const {
    if (v == p.n) return partial;
    T sum = 0;
    std::size_t lo = 0, hi = p.m;
    if (p.pinned[v] >= 0) {
      lo = static_cast<std::size_t>(p.pinned[v]);
      hi = lo + 1;
    }
    for (std::size_t s = lo; s < hi; ++s) {
      T f = step(v, s, partial, xi);
      if (f == 0) continue;
      xi[v] = s;
      sum += run(v + 1, f, xi);
    }
    return sum;
  }

  T step(std::size_t v, std::size_t s, const T& partial, const std::vector<std::size_t>& xi) const {
    T f = partial * w[v][s];
    if (f == 0) return f;
    for (std::size_t u : p.back[v]) {
      f *= a[xi[u] * p.m + s];
      if (f == 0) return f;
    }
    for (std::size_t i = 0; i < p.loops[v]; ++i) f *= a[s * p.m + s];
    return f;
  }

  T total(unsigned threads) const {
    if (p.n == 0) return T(1);
    if (threads <= 1 || p.pinned[0] >= 0 || p.m == 1) {
      std::vector<std::size_t> xi(p.n, 0);
      return run(0, T(1), xi);
    }
    unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(p.m));
    std::vector<T> parts(t, T(0));
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < t; ++id) {
      pool.emplace_back([&, id] {
        std::vector<std::size_t> xi(p.n, 0);
        for (std::size_t s = id; s < p.m; s += t) {
          T f = step(0, s, T(1), xi);
          if (f == 0) continue;
          xi[0] = s;
          parts[id] += run(1, f, xi);
        }
      });
    }
    for (auto& th : pool) th.join();
    T sum = 0;
    for (const auto& x : parts) sum += x;
    return sum;
  }
};

void check_guard(std::size_t m, std::size_t n, const OracleOptions& opts) {
  const std::uint64_t guard = effective_guard(opts);
  std::uint64_t configs = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (configs > guard / std::max<std::size_t>(m, 1)) {
      throw OracleGuardExceeded("oracle refuses " + std::to_string(m) + "^" + std::to_string(n) +
                                " configurations (guard " + std::to_string(guard) + ")");
    }
    configs *= m;
  }
  if (configs > guard) throw OracleGuardExceeded("oracle guard exceeded");
}

Rational evaluate(const Scaled& p, std::size_t edges, unsigned threads) {
  BigInt sum;
  if (fits_i128(p, edges)) {
    sum = to_big(Engine<i128>(p).total(threads));
  } else {
    sum = Engine<BigInt>(p).total(threads);
  }
  Rational r(sum, p.scale);
  r.canonicalize();
  return r;
}

}  // namespace

std::uint64_t effective_guard(const OracleOptions& opts) {
  if (opts.guard != 0) return opts.guard;
  if (const char* env = std::getenv("PARTHOM_ORACLE_GUARD"); env && *env) {
    std::string s(env);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || v == 0) throw std::invalid_argument("PARTHOM_ORACLE_GUARD must be a positive integer");
    return v;
  }
  return kDefaultOracleGuard;
}

Rational eval_pdpf_bruteforce(const PdpfInstance& inst, const Multigraph& g, const OracleOptions& opts) {
  check_guard(inst.order(), g.vertex_count(), opts);
  Scaled p = scale_problem(inst, g);
  return evaluate(p, g.edge_count(), opts.threads);
}

Rational eval_partition_bruteforce(const SymMatrix& a, const Multigraph& g, const OracleOptions& opts) {
  return eval_pdpf_bruteforce(PdpfInstance::plain(a), g, opts);
}

Rational eval_weighted_bruteforce(const SymMatrix& a, const DiagMatrix& d, const Multigraph& g,
                                  const OracleOptions& opts) {
  return eval_pdpf_bruteforce(PdpfInstance::weighted(a, d), g, opts);
}

Rational eval_pinned_bruteforce(const SymMatrix& a, const DiagMatrix& d, const LabelledGraph& lg, std::size_t k,
                                const OracleOptions& opts) {
  if (lg.label >= lg.graph.vertex_count()) throw std::invalid_argument("label out of range");
  if (k >= a.order()) throw std::invalid_argument("pinned spin out of range");
  if (d[k] == 0) throw std::domain_error("pinned spin has zero weight");
  check_guard(a.order(), lg.graph.vertex_count(), opts);
  Scaled p = scale_problem(PdpfInstance::weighted(a, d), lg.graph);
  p.pinned[lg.label] = static_cast<int>(k);
  return evaluate(p, lg.graph.edge_count(), opts.threads) / d[k];
}

}  // namespace parthom
