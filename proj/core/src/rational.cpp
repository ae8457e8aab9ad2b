#include "parthom/rational.hpp"

#include <cctype>

#include "parthom/errors.hpp"

namespace parthom {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) throw ParseError("not a rational: '" + std::string(text) + "'");
  BigInt p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, unsigned digits) {
  BigInt num = abs(q.get_num());
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num * scale / q.get_den();
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return (q < 0 ? "-" : "") + s;
}

Rational power(const Rational& base, std::size_t exponent) {
  Rational r = 1, b = base;
  while (exponent) {
    if (exponent & 1) r *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return r;
}

}  // namespace parthom
