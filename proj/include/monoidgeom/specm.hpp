#pragma once

// Faces, prime ideals and the finite spectrum of a fine monoid; monoid
// ideals, radicals, primary tests, localization at faces.

#include <optional>
#include <string>
#include <vector>

#include "monoidgeom/affine.hpp"

namespace monoidgeom {

struct Face {
  AffineMonoid monoid;
  std::vector<bool> mask;  // over monoid.generators()
  /// Functional on the sharp free coordinates, >= 0 on the monoid, vanishing
  /// exactly on the face.
  Vector functional;

  std::vector<std::size_t> indices() const;
  std::size_t size() const;
  /// Submonoid generated by the masked generators, in the same ambient group.
  AffineMonoid submonoid() const;
  /// x must be in the monoid.
  bool contains(const GroupElement& x) const;
  /// Rank of the face modulo units.
  std::size_t dimension() const;
  /// Generator indices as "{0,2}".
  std::string label() const;
};

/// All faces, ordered by number of generators and then by mask.
std::vector<Face> faces(const AffineMonoid& m);

/// The face with the given generator mask; throws InvalidArgument if the
/// mask is not a face.
Face face_from_mask(const AffineMonoid& m, const std::vector<bool>& mask);

/// Complement of a face.
struct PrimeIdeal {
  Face face;
  bool contains(const GroupElement& x) const;
  std::size_t height() const;
};

struct SpecPoset {
  std::vector<PrimeIdeal> primes;
  /// order[i][j]: primes[i] is contained in primes[j].
  std::vector<std::vector<bool>> order;
  std::optional<std::size_t> generic;  // the empty prime
  std::optional<std::size_t> closed;   // M^+
  std::vector<std::size_t> heights;

  std::size_t size() const { return primes.size(); }
  /// Length of the longest chain.
  std::size_t length() const;
  /// Lengths of all maximal chains (as sets, without repetition).
  std::vector<std::size_t> maximal_chain_lengths() const;
  /// Cover relations (i, j): primes[i] ⊂ primes[j] with nothing in between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
};

SpecPoset spec(const AffineMonoid& m);
std::string to_dot(const SpecPoset& s, const std::string& name = "spec");
std::string faces_to_dot(const std::vector<Face>& fs);

std::size_t dimension(const AffineMonoid& m);
std::size_t height(const PrimeIdeal& p);

/// The ideal of the monoid generated by finitely many elements; no
/// generators means the empty ideal.
struct MonoidIdeal {
  AffineMonoid monoid;
  std::vector<GroupElement> gens;

  MonoidIdeal(AffineMonoid m, std::vector<GroupElement> g);
  bool contains(const GroupElement& q) const;
  bool is_proper() const;
  bool is_empty() const { return gens.empty(); }
};

MonoidIdeal unit_ideal(const AffineMonoid& m);
/// M^+, the ideal of nonunits.
MonoidIdeal maximal_ideal(const AffineMonoid& m);
MonoidIdeal prime_as_ideal(const PrimeIdeal& p);

bool ideal_contains(const MonoidIdeal& i, const GroupElement& q);
/// Union of two ideals (the ideal generated by both generator lists).
MonoidIdeal ideal_union(const MonoidIdeal& i, const MonoidIdeal& j);
MonoidIdeal ideal_sum(const MonoidIdeal& i, const MonoidIdeal& j);
/// The ideal {i + j}.
MonoidIdeal ideal_product(const MonoidIdeal& i, const MonoidIdeal& j);
/// Generators of I ∩ J of the form a + x with a a generator and x a sum of
/// at most `bound` monoid generators. Membership in the true intersection is
/// given by intersection_contains.
MonoidIdeal ideal_intersection(const MonoidIdeal& i, const MonoidIdeal& j, std::size_t bound = 8);
bool intersection_contains(const MonoidIdeal& i, const MonoidIdeal& j, const GroupElement& q);
MonoidIdeal ideal_power(const MonoidIdeal& i, std::size_t n);
bool same_ideal(const MonoidIdeal& i, const MonoidIdeal& j);

/// Antichain under divisibility; of mutually dividing generators the
/// lexicographically first is kept.
std::vector<GroupElement> minimal_ideal_generators(const MonoidIdeal& i);

/// Indices into spec(m).primes of the primes containing the ideal: Z(I).
std::vector<std::size_t> zero_locus(const SpecPoset& s, const MonoidIdeal& i);

bool radical_contains(const MonoidIdeal& k, const GroupElement& q);
/// Generators of √K.
std::vector<GroupElement> radical_generators(const MonoidIdeal& k);
bool is_radical(const MonoidIdeal& k);

struct PrimaryResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<GroupElement> a;  // a ∉ √K
  std::optional<GroupElement> x;  // x ∉ K with a + x ∈ K
};

PrimaryResult is_primary(const MonoidIdeal& k, std::size_t bound = 6);

struct Localization {
  AffineMonoid monoid;
  MonoidHom lambda;
};

Localization localize(const AffineMonoid& m, const Face& f);

/// Primes containing K, for an acceptable pair (M, K).
SpecPoset spec_idealized(const MonoidIdeal& k);

}  // namespace monoidgeom
