#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lagvar {

/// Exact rational number. GMP keeps it in canonical form (gcd 1, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

using Vector = std::vector<Scalar>;

inline std::string to_string(const Scalar& x) { return x.get_str(); }

/// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
/// comparisons assume reduced operands.
inline Scalar rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto check_int = [&](std::string_view part) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw std::invalid_argument("malformed rational literal: " + s);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("malformed rational literal: " + s);
  };
  if (slash == std::string::npos) {
    check_int(s);
    if (s[0] == '+') s.erase(0, 1);
    return Scalar(mpz_class(s, 10));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Scalar q(mpz_class(num, 10), d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

inline Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

inline Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector difference: length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector operator*(const Scalar& c, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

/// Concatenation (x, y) used for direct sums.
inline Vector concat(const Vector& a, const Vector& b) {
  Vector r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace lagvar
