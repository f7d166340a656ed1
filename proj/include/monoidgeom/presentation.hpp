#pragma once

// Finitely presented commutative monoids <e_1..e_n | l_k ~ r_k>. These need
// not be integral, so most questions have a tri-state answer.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoidgeom/affine.hpp"

namespace monoidgeom {

/// Element of N^n.
using FreeElement = std::vector<std::int64_t>;

struct Presentation {
  std::size_t ngens = 0;
  std::vector<std::pair<FreeElement, FreeElement>> relations;

  /// Throws SizeMismatch or Validation on malformed data.
  void validate() const;
  static Presentation free(std::size_t n) { return {n, {}}; }
};

/// One rewriting step: word = translation + side, replaced by translation +
/// other side. `forward` means lhs → rhs of the relation.
struct ChainStep {
  std::size_t relation = 0;
  bool forward = true;
  FreeElement translation;
  FreeElement result;
};

struct CongruenceWitness {
  FreeElement start;
  std::vector<ChainStep> steps;
};

/// Checks every step of the chain against the presentation and returns the
/// final word, or nullopt when some step is invalid.
std::optional<FreeElement> replay(const Presentation& p, const CongruenceWitness& w);

enum class WordVerdict { Equal, Distinct, Unknown };
std::string_view to_string(WordVerdict v);

struct WordResult {
  WordVerdict verdict = WordVerdict::Unknown;
  std::optional<CongruenceWitness> witness;
  /// Which argument settled the answer: "chain", "group", "closure",
  /// "cyclic" or "graded".
  std::string reason;
};

inline constexpr std::size_t default_word_bound = 12;

/// Bidirectional search over rewriting chains through words of degree at
/// most `bound` above the larger input. Derived rules (unit inverses and
/// cancellation of units) widen the search; chains are expanded back to the
/// original relations. Distinctness comes from an exhausted closure or from
/// a separating homomorphism: to the group, to a small cyclic monoid, or to
/// a truncated weighted-degree invariant.
WordResult words_equal(const Presentation& p, const FreeElement& x, const FreeElement& y,
                       std::size_t bound = default_word_bound);

/// Q's relations plus (θ1(e_i), θ2(e_i)) for every source generator.
Presentation coequalizer(const Presentation& q, const std::vector<FreeElement>& theta1,
                         const std::vector<FreeElement>& theta2);

/// Amalgamated sum of u1: P → Q1 and u2: P → Q2 given on the generators of
/// P. Generators of Q1 come first.
Presentation pushout(const Presentation& q1, const std::vector<FreeElement>& u1, const Presentation& q2,
                     const std::vector<FreeElement>& u2);

struct Groupification {
  Cokernel coker;
  std::vector<GroupElement> images;  // λ(e_i)
  const AbelianGroup& group() const { return coker.group(); }
  GroupElement apply(const FreeElement& x) const;
};

Groupification groupify(const Presentation& p);
AffineMonoid integralize(const Presentation& p);

/// Presentation on the generators of m with a Graver basis of the relation
/// lattice as relations.
Presentation tautological_presentation(const AffineMonoid& m);

struct IntegralityResult {
  Verdict verdict = Verdict::Unknown;
  /// For False: m + n ~ p + n with m not congruent to p.
  std::optional<FreeElement> m, n, p;
};

IntegralityResult is_integral(const Presentation& p, std::size_t bound = default_word_bound);

}  // namespace monoidgeom
