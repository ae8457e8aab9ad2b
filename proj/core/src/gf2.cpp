#include "parthom/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace parthom {

Gf2Vec Gf2Vec::from_bits(std::size_t width, std::uint64_t bits) {
  Gf2Vec v(width);
  for (std::size_t i = 0; i < width && i < 64; ++i)
    if ((bits >> i) & 1) v.set(i);
  return v;
}

void Gf2Vec::set(std::size_t i, bool b) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (b) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

void Gf2Vec::clear() { std::fill(words_.begin(), words_.end(), 0); }

Gf2Vec& Gf2Vec::operator^=(const Gf2Vec& o) {
  if (o.width_ != width_) throw std::invalid_argument("gf2 width mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

Gf2Vec& Gf2Vec::operator&=(const Gf2Vec& o) {
  if (o.width_ != width_) throw std::invalid_argument("gf2 width mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

bool Gf2Vec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t Gf2Vec::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Gf2Vec::dot(const Gf2Vec& o) const {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t Gf2Vec::first() const { return words_.empty() ? width_ : next_from(0); }

std::size_t Gf2Vec::next(std::size_t i) const { return i + 1 >= width_ ? width_ : next_from(i + 1); }

std::size_t Gf2Vec::next_from(std::size_t i) const {
  std::size_t w = i >> 6;
  if (w >= words_.size()) return width_;
  std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (cur) return std::min(width_, (w << 6) + static_cast<std::size_t>(std::countr_zero(cur)));
    if (++w == words_.size()) return width_;
    cur = words_[w];
  }
}

std::string Gf2Vec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < width_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

void Gf2Poly::toggle(std::uint64_t monomial) {
  if (vars_ < 64 && (monomial >> vars_) != 0) throw std::invalid_argument("monomial uses unknown variable");
  auto [it, inserted] = monos_.insert(monomial);
  if (!inserted) monos_.erase(it);
}

bool Gf2Poly::eval(std::uint64_t x) const {
  bool r = false;
  for (auto m : monos_)
    if ((x & m) == m) r = !r;
  return r;
}

std::vector<std::uint8_t> Gf2Poly::truth_table() const {
  if (vars_ > 30) throw std::length_error("truth table too large");
  std::vector<std::uint8_t> t(std::size_t{1} << vars_);
  for (std::uint64_t x = 0; x < t.size(); ++x) t[x] = eval(x);
  return t;
}

std::string Gf2Poly::to_string(const std::string& var) const {
  if (monos_.empty()) return "0";
  std::vector<std::uint64_t> ms(monos_.begin(), monos_.end());
  std::sort(ms.begin(), ms.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  std::string s;
  for (auto m : ms) {
    if (!s.empty()) s += " + ";
    if (m == 0) {
      s += "1";
      continue;
    }
    for (std::size_t i = 0; i < 64; ++i)
      if ((m >> i) & 1) s += var + std::to_string(i);
  }
  return s;
}

Gf2Poly anf_from_truth_table(const std::vector<std::uint8_t>& values) {
  const std::size_t n = values.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("truth table length must be a power of two");
  const std::size_t k = static_cast<std::size_t>(std::countr_zero(n));
  std::vector<std::uint8_t> t(values);
  for (auto& b : t) b &= 1;
  for (std::size_t bit = 1; bit < n; bit <<= 1)
    for (std::size_t x = 0; x < n; ++x)
      if (x & bit) t[x] ^= t[x ^ bit];
  Gf2Poly p(k);
  for (std::size_t x = 0; x < n; ++x)
    if (t[x]) p.toggle(x);
  return p;
}

std::size_t poly_degree(const Gf2Poly& p) {
  std::size_t d = 0;
  for (auto m : p.monomials()) d = std::max<std::size_t>(d, static_cast<std::size_t>(std::popcount(m)));
  return d;
}

Gf2Vec SubspaceBasis::apply(std::uint64_t y) const {
  Gf2Vec x(ambient);
  for (std::size_t t = 0; t < rows.size(); ++t)
    if ((y >> t) & 1) x ^= rows[t];
  return x;
}

Gf2Poly compose_linear(const Gf2Poly& p, const SubspaceBasis& phi) {
  if (phi.ambient != p.vars()) throw std::invalid_argument("coordinatisation width mismatch");
  const std::size_t l = phi.dim();
  if (l > 64) throw std::length_error("too many coordinates");
  std::vector<std::uint64_t> form(p.vars(), 0);
  for (std::size_t t = 0; t < l; ++t)
    for (std::size_t i = 0; i < p.vars(); ++i)
      if (phi.rows[t].get(i)) form[i] |= std::uint64_t{1} << t;
  Gf2Poly out(l);
  for (auto m : p.monomials()) {
    Gf2Poly term(l);
    term.toggle(0);
    for (std::size_t i = 0; i < p.vars(); ++i) {
      if (!((m >> i) & 1)) continue;
      Gf2Poly next(l);
      for (auto tm : term.monomials())
        for (std::size_t t = 0; t < l; ++t)
          if ((form[i] >> t) & 1) next.toggle(tm | (std::uint64_t{1} << t));
      term = std::move(next);
      if (term.is_zero()) break;
    }
    for (auto tm : term.monomials()) out.toggle(tm);
  }
  return out;
}

namespace {

// Adds v to a reduced echelon basis (pivot = lowest set bit); returns false if dependent.
bool insert_reduced(std::vector<Gf2Vec>& basis, Gf2Vec v) {
  for (const auto& b : basis)
    if (v.get(b.first())) v ^= b;
  if (!v.any()) return false;
  const std::size_t p = v.first();
  for (auto& b : basis)
    if (b.get(p)) b ^= v;
  basis.push_back(std::move(v));
  return true;
}

}  // namespace

bool is_linear_subspace(const std::set<Gf2Vec>& s) {
  if (s.empty()) return false;
  const std::size_t width = s.begin()->width();
  if (!s.count(Gf2Vec(width))) return false;
  std::vector<Gf2Vec> basis;
  for (const auto& v : s) {
    if (v.width() != width) throw std::invalid_argument("mixed widths");
    insert_reduced(basis, v);
    if (basis.size() >= 63 || (std::size_t{1} << basis.size()) > s.size()) return false;
  }
  return (std::size_t{1} << basis.size()) == s.size();
}

SubspaceBasis subspace_basis(const std::set<Gf2Vec>& s, std::size_t width) {
  std::vector<Gf2Vec> basis;
  for (const auto& v : s) {
    if (v.width() != width) throw std::invalid_argument("mixed widths");
    insert_reduced(basis, v);
  }
  std::sort(basis.begin(), basis.end(), [](const Gf2Vec& a, const Gf2Vec& b) { return a.first() < b.first(); });
  return SubspaceBasis{width, std::move(basis)};
}

QuadPoly::QuadPoly(std::size_t vars) : n_(vars), adj_(vars, Gf2Vec(vars)), lin_(vars) {}

void QuadPoly::toggle_pair(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_) throw std::out_of_range("variable index");
  if (i == j) {
    lin_.flip(i);
    return;
  }
  adj_[i].flip(j);
  adj_[j].flip(i);
}

void QuadPoly::add_product(const Gf2Vec& a, bool ca, const Gf2Vec& b, bool cb) {
  for (std::size_t s = a.first(); s < n_; s = a.next(s)) adj_[s] ^= b;
  for (std::size_t t = b.first(); t < n_; t = b.next(t)) adj_[t] ^= a;
  lin_ ^= (a & b);
  if (cb) lin_ ^= a;
  if (ca) lin_ ^= b;
  if (ca && cb) c_ = !c_;
}

void QuadPoly::add_linear_form(const Gf2Vec& a, bool ca) {
  lin_ ^= a;
  if (ca) c_ = !c_;
}

std::size_t QuadPoly::pair_count() const {
  std::size_t c = 0;
  for (const auto& r : adj_) c += r.popcount();
  return c / 2;
}

bool QuadPoly::eval(const Gf2Vec& x) const {
  bool r = c_ ^ lin_.dot(x);
  std::size_t twice = 0;
  for (std::size_t i = x.first(); i < n_; i = x.next(i)) twice += (adj_[i] & x).popcount();
  return r ^ ((twice / 2) & 1);
}

bool QuadPoly::eval_bits(std::uint64_t x) const {
  if (n_ > 64) throw std::length_error("eval_bits needs at most 64 variables");
  bool r = c_ ^ (std::popcount(lin_.low_word() & x) & 1);
  std::uint64_t rest = x;
  while (rest) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    r ^= std::popcount(adj_[static_cast<std::size_t>(i)].low_word() & rest) & 1;
  }
  return r;
}

BigInt quadratic_character_sum(const QuadPoly& q) {
  const std::size_t n = q.vars();
  std::vector<Gf2Vec> adj;
  adj.reserve(n);
  for (std::size_t i = 0; i < n; ++i) adj.push_back(q.neighbours(i));
  Gf2Vec lin = q.linear();
  bool c = q.constant();
  std::size_t removed = 0;

  // Pick a pair x_i x_j, write q = (x_i + A_j)(x_j + A_i) + A_i A_j + R and
  // substitute; each such block contributes a factor 2 to the sum.
  for (std::size_t i = 0; i < n; ++i) {
    if (!adj[i].any()) continue;
    const std::size_t j = adj[i].first();
    Gf2Vec ai = adj[i], aj = adj[j];
    ai.flip(j);
    aj.flip(i);
    const bool ci = lin.get(i), cj = lin.get(j);
    for (std::size_t k = ai.first(); k < n; k = ai.next(k)) adj[k].flip(i);
    for (std::size_t k = aj.first(); k < n; k = aj.next(k)) adj[k].flip(j);
    adj[i].clear();
    adj[j].clear();
    lin.set(i, false);
    lin.set(j, false);
    // add (ai + ci)(aj + cj)
    for (std::size_t s = ai.first(); s < n; s = ai.next(s)) adj[s] ^= aj;
    for (std::size_t t = aj.first(); t < n; t = aj.next(t)) adj[t] ^= ai;
    lin ^= (ai & aj);
    if (cj) lin ^= ai;
    if (ci) lin ^= aj;
    if (ci && cj) c = !c;
    removed += 2;
  }
  if (lin.any()) return BigInt(0);
  // Each removed pair contributes 2 = 2^2 / 2, every free variable 2.
  BigInt s = 1;
  const std::size_t exponent = n - removed / 2;
  mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), exponent);
  return c ? BigInt(-s) : s;
}

BigInt count_quadratic_ones(const QuadPoly& q) {
  BigInt total = 1;
  mpz_mul_2exp(total.get_mpz_t(), total.get_mpz_t(), q.vars());
  return (total - quadratic_character_sum(q)) / 2;
}

std::uint64_t count_quadratic_bruteforce(const QuadPoly& q) {
  if (q.vars() > 24) throw std::length_error("brute-force count limited to 24 variables");
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << q.vars()); ++x) c += q.eval_bits(x);
  return c;
}

}  // namespace parthom
