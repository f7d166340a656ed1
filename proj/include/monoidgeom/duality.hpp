#pragma once

// The dual monoid Hom(Q, N), face-orthogonality, height-one valuations and
// ball counting.

#include <optional>
#include <vector>

#include "monoidgeom/specm.hpp"

namespace monoidgeom {

/// H(Q) in Hom(Q̄^gp, Z), i.e. in the sharp free coordinates of Q. The
/// generators are the dual Hilbert basis in lexicographic order.
AffineMonoid dual(const AffineMonoid& q);

struct DoubleDual {
  AffineMonoid sharp_saturation;  // sharpen(saturate(Q))
  AffineMonoid double_dual;       // H(H(Q))
  /// forward[i]: index in double_dual.generators() of ev(irreducible i).
  std::vector<GroupElement> irreducibles;
  std::vector<std::optional<std::size_t>> forward;
  std::vector<std::optional<std::size_t>> backward;
  bool isomorphism = false;
};

DoubleDual double_dual_iso(const AffineMonoid& q);

/// F^⊥ as a face of dual(Q).
Face face_perp(const Face& f);
/// T^⊥ as a face of Q, for a face T of dual(Q).
Face perp_of_dual_face(const AffineMonoid& q, const Face& t);

struct Valuation {
  PrimeIdeal prime;
  Vector functional;  // sharp free coordinates of Q, primitive
  Integer operator()(const GroupElement& x) const { return prime.face.monoid.evaluate(functional, x); }
};

Valuation height1_valuation(const AffineMonoid& q, const PrimeIdeal& p);
/// The valuations of all height-one primes, in spec order.
std::vector<Valuation> height1_valuations(const AffineMonoid& q);

struct ValuationVector {
  std::vector<Valuation> valuations;
  Vector values;
};

ValuationVector valuation_vector(const AffineMonoid& q, const GroupElement& x);

struct ValuationCheck {
  bool holds = true;
  std::optional<GroupElement> counterexample;
  std::size_t checked = 0;
};

/// Compares membership with nonnegativity of all height-one valuations on
/// the box of M^gp with free coordinates in [-radius, radius].
ValuationCheck saturation_by_valuations_check(const AffineMonoid& q, long radius = 4);

/// #{q in Q : h(q) < r} for a sharp Q and a local h.
Integer count_ball(const AffineMonoid& q, const Vector& h, const Integer& r);

struct BallConstants {
  Rational lower;  // c
  Rational upper;  // C
  Integer lower_from;  // c r^d <= #B_h(r) for r >= lower_from
  std::size_t d = 0;
};

BallConstants ball_constants(const AffineMonoid& q, const Vector& h);

}  // namespace monoidgeom
