#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace monoidgeom {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Integer>;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Floor division for b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Residue of a in [0, |m|).
inline Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer dot(const Vector& a, const Vector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// gcd of all entries, 0 for the zero vector.
inline Integer content(const Vector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// Divides out the content; the zero vector is returned unchanged.
inline Vector primitive(Vector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline Vector add(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector sub(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector scale(const Vector& a, const Integer& k) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

inline Vector negate(const Vector& a) { return scale(a, -1); }

inline Vector make_vector(std::initializer_list<long> xs) {
  Vector v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::string to_string(const Vector& v);

}  // namespace monoidgeom
