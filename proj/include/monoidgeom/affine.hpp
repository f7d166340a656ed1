#pragma once

// Monoids given by finitely many generators inside a finitely generated
// abelian group. Such monoids are integral by construction.

#include <memory>
#include <optional>
#include <vector>

#include "monoidgeom/lattice.hpp"

namespace monoidgeom {

class AffineMonoid {
 public:
  /// The zero monoid in the trivial group.
  AffineMonoid();
  /// Zero generators are dropped and repeated generators are kept once, in
  /// first-occurrence order.
  AffineMonoid(AbelianGroup ambient, std::vector<GroupElement> gens);

  const AbelianGroup& ambient() const;
  const std::vector<GroupElement>& generators() const;
  std::size_t num_generators() const { return generators().size(); }

  /// M^gp as a subgroup of the ambient group.
  const Subgroup& gp() const;
  /// M^gp / M^*, the groupification of the sharp quotient.
  const AbelianGroup& sharp_group() const;
  /// Image in M^gp / M^* of an element of M^gp; throws AmbientMismatch
  /// when x is not in M^gp.
  GroupElement bar(const GroupElement& x) const;
  /// Some element of M^gp with the given image in the sharp group.
  GroupElement lift_bar(const GroupElement& y) const;

  /// Primitive facet normals of the cone of the sharp quotient, in the free
  /// coordinates of sharp_group(); these are the extreme rays of the dual
  /// cone. Sorted.
  const std::vector<Vector>& facets() const;
  /// Hilbert basis of the dual cone (generators of Hom(M, N)). Sorted.
  const std::vector<Vector>& dual_basis() const;
  /// Sum of the facet normals: positive on every nonunit of M.
  const Vector& grading() const;
  /// Value of a functional (sharp free coordinates) on x in M^gp.
  Integer evaluate(const Vector& h, const GroupElement& x) const;
  Integer degree(const GroupElement& x) const { return evaluate(grading(), x); }

  /// Indices of the generators that are units.
  const std::vector<std::size_t>& unit_generators() const;
  /// Rank of the free part of sharp_group().
  std::size_t dimension() const;

  bool contains(const GroupElement& x) const;
  /// Coefficients over the nonunit generators (indexed like generators(),
  /// zero on units) of a sum that agrees with x modulo units.
  std::optional<Vector> decompose_mod_units(const GroupElement& x) const;
  bool is_unit(const GroupElement& x) const;
  /// s <= t in the divisibility preorder.
  bool divides(const GroupElement& s, const GroupElement& t) const;

  /// All distinct sums of at most k generators.
  std::vector<GroupElement> sums_up_to(std::size_t k) const;

  /// Same ambient group and same generator list.
  friend bool operator==(const AffineMonoid& a, const AffineMonoid& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Mutual containment of generator sets in a common ambient group.
bool same_monoid(const AffineMonoid& a, const AffineMonoid& b);

struct MonoidHom {
  AffineMonoid source;
  AffineMonoid target;
  std::vector<GroupElement> images;  // one per source generator

  /// Checks that every image is in the target and that the relations of the
  /// source groupification map to zero.
  MonoidHom(AffineMonoid source, AffineMonoid target, std::vector<GroupElement> images);

  /// θ^gp(x) for x in the source groupification.
  GroupElement apply(const GroupElement& x) const;
};

MonoidHom identity_hom(const AffineMonoid& m);

struct UnitGroup {
  AbelianGroup group;                   // abstract structure of M^*
  std::vector<GroupElement> generators;  // generating units, ambient coordinates
};

UnitGroup units(const AffineMonoid& m);

struct Sharpening {
  AffineMonoid monoid;  // M / M^* inside M^gp / M^*
  MonoidHom projection;
};

Sharpening sharpen(const AffineMonoid& m);

/// Minimal generating set of a sharp monoid, lexicographically sorted.
std::vector<GroupElement> irreducibles(const AffineMonoid& m);

AffineMonoid saturate(const AffineMonoid& m);
bool is_saturated(const AffineMonoid& m);
bool is_fine(const AffineMonoid& m);
bool is_sharp(const AffineMonoid& m);
bool is_dull(const AffineMonoid& m);
bool is_toric(const AffineMonoid& m);

bool is_local_hom(const MonoidHom& theta);

struct ExactnessResult {
  Verdict verdict = Verdict::Unknown;
  /// For False: x in the source groupification with θ(x) in the target
  /// but x outside the source.
  std::optional<GroupElement> witness;
};

ExactnessResult is_exact_hom(const MonoidHom& theta, std::size_t bound = 6);

/// x ↦ (h(x) for h in the dual Hilbert basis, torsion part of M^gp).
MonoidHom embed_sharp(const AffineMonoid& m);

struct DimOneClassification {
  UnitGroup gamma;
  GroupElement q;  // element of M whose image generates M / M^* ≅ N
};

DimOneClassification classify_dim1(const AffineMonoid& m);

bool is_valuative(const AffineMonoid& m);

struct ValuativeDomination {
  Vector functional;  // on the free part of the sharp group
  AffineMonoid monoid;
};

ValuativeDomination dominating_valuative(const AffineMonoid& p);

}  // namespace monoidgeom
