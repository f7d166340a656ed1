#pragma once

// Monoid algebras Q[M] with exact rational coefficients, quotients by
// monoid ideals, face maps, support calculus, truncated completions and
// Rees monoids.

#include <map>
#include <optional>
#include <vector>

#include "monoidgeom/duality.hpp"

namespace monoidgeom {

using Terms = std::map<GroupElement, Rational>;

class AlgebraElement {
 public:
  explicit AlgebraElement(AffineMonoid m);
  /// Zero coefficients are dropped; every key must be in the monoid.
  AlgebraElement(AffineMonoid m, Terms terms);
  static AlgebraElement monomial(const AffineMonoid& m, const GroupElement& key, const Rational& coeff = 1);
  static AlgebraElement constant(const AffineMonoid& m, const Rational& c);

  const AffineMonoid& monoid() const { return monoid_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const GroupElement& key) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.monoid_ == b.monoid_ && a.terms_ == b.terms_;
  }

 private:
  struct Trusted {};
  AlgebraElement(AffineMonoid m, Terms terms, Trusted);
  friend AlgebraElement add(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement mul(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement scale(const AlgebraElement&, const Rational&);

  AffineMonoid monoid_;
  Terms terms_;
};

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement sub(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement scale(const AlgebraElement& f, const Rational& c);
AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g);

struct TensorTerm {
  GroupElement left, right;
  Rational coeff;
};

/// e^p ↦ e^p ⊗ e^p.
std::vector<TensorTerm> comul(const AlgebraElement& f);
/// Sum of all coefficients.
Rational counit(const AlgebraElement& f);
/// Sum of the coefficients on units.
Rational vertex_eval(const AlgebraElement& f);

/// Element of Q[M, K]: a representative with no key in K.
struct QuotientElement {
  MonoidIdeal ideal;
  AlgebraElement base;
};

QuotientElement quotient_project(const AlgebraElement& f, const MonoidIdeal& k);
QuotientElement quotient_mul(const QuotientElement& a, const QuotientElement& b);

/// Keeps the terms on the face, as an element of the face algebra.
AlgebraElement face_restrict(const AlgebraElement& f, const Face& face);
/// Inclusion of the face algebra into the algebra of the monoid.
AlgebraElement face_pull(const AlgebraElement& g, const Face& face);

struct HomotopyTerm {
  GroupElement key;
  Integer t_power;
  Rational coeff;
};

/// e^q ↦ t^{h(q)} e^q, for h in H(Q) with h^{-1}(0) equal to the face.
std::vector<HomotopyTerm> retract_homotopy(const AlgebraElement& f, const Face& face, const Vector& h);
/// Specialization of a homotopy at t = 0 or t = 1.
AlgebraElement specialize(const AffineMonoid& m, const std::vector<HomotopyTerm>& terms, int t);

std::vector<GroupElement> support(const AlgebraElement& f);
MonoidIdeal support_ideal(const AlgebraElement& f);
MonoidIdeal ideal_of_set(const AffineMonoid& m, const std::vector<GroupElement>& s);

Integer vp_element(const AffineMonoid& q, const PrimeIdeal& p, const AlgebraElement& f);
/// Some p with K(f) = (p).
std::optional<GroupElement> is_principal_support(const AlgebraElement& f);
bool is_reduced_quotient(const AffineMonoid& q, const MonoidIdeal& k);
std::vector<PrimeIdeal> hypersurface_components(const AffineMonoid& q, const GroupElement& p);

// ---------------------------------------------------------------------------
// Truncated completion.

/// Largest number of irreducible factors of x in a sharp monoid, capped at
/// `cap`.
std::size_t max_factorization_length(const AffineMonoid& q, const GroupElement& x, std::size_t cap);

struct TruncatedSeries {
  AffineMonoid monoid;
  std::size_t order = 0;
  Terms terms;
};

/// Q \ (Q^+)^n, sorted.
std::vector<GroupElement> series_truncate(const AffineMonoid& q, std::size_t n);
TruncatedSeries to_series(const AlgebraElement& f, std::size_t n);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Re-truncation to a smaller order.
TruncatedSeries series_restrict(const TruncatedSeries& a, std::size_t n);

struct Cofinality {
  std::size_t m1 = 0;  // (Q^+)^{m1} ⊆ {h > n}
  Integer m2;          // {h > m2} ⊆ (Q^+)^n
};

/// Smallest m1 and m2 with the stated inclusions.
Cofinality cofinality_check(const AffineMonoid& q, const Vector& h, std::size_t n);

// ---------------------------------------------------------------------------
// Rees monoid: pairs (m, p) with p in K^m, inside Z ⊕ ambient.

AffineMonoid rees(const AffineMonoid& q, const MonoidIdeal& k);
GroupElement rees_element(const AffineMonoid& q, const Integer& m, const GroupElement& p);

}  // namespace monoidgeom
