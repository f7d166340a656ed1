#pragma once

// Exact integer linear algebra: matrices, normal forms, finitely generated
// abelian groups, rational cones and their lattice points.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "monoidgeom/error.hpp"
#include "monoidgeom/integer.hpp"

namespace monoidgeom {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Rows are taken as given; each must have `cols` entries.
  static IntMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  IntMatrix transpose() const;

  /// A x for a column vector x.
  Vector apply(const Vector& x) const;
  /// x^T A for a row vector x.
  Vector apply_left(const Vector& x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  IntMatrix U, D, V;  // U * A * V == D
  std::size_t rank = 0;
};

/// D is diagonal with nonnegative entries d_0 | d_1 | ... ; U and V are
/// unimodular.
SmithForm smith_normal_form(const IntMatrix& a);

struct HermiteForm {
  IntMatrix H, W;  // W * A == H, W unimodular
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: H is in row echelon form, pivots are
/// positive and entries above each pivot are reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntMatrix& a);

/// Integer basis of {x : A x = 0}, in Hermite normal form (as rows).
std::vector<Vector> integer_kernel(const IntMatrix& a);

/// Some x with A x = b over the integers, if one exists.
std::optional<Vector> solve_integer(const IntMatrix& a, const Vector& b);

std::size_t rank(const IntMatrix& a);
std::size_t rank(const std::vector<Vector>& rows, std::size_t cols);
Integer determinant(const IntMatrix& a);
/// Inverse of a unimodular matrix; throws InvalidArgument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Integer basis (rows, Hermite form) of span_Q(vectors) ∩ Z^n.
std::vector<Vector> saturated_span(const std::vector<Vector>& vectors, std::size_t n);

// ---------------------------------------------------------------------------
// Finitely generated abelian groups.

/// Canonical representative: free coordinates in Z, torsion coordinate i
/// reduced into [0, d_i).
struct GroupElement {
  Vector free;
  Vector tors;

  Vector flat() const;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.free != b.free) return a.free < b.free;
    return a.tors < b.tors;
  }
};

std::string to_string(const GroupElement& g);

class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Z^free_rank ⊕ Z/d_1 ⊕ ... with d_i >= 2 and d_i | d_{i+1}.
  explicit AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion = {});

  static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank); }

  std::size_t free_rank() const noexcept { return free_rank_; }
  std::size_t torsion_rank() const noexcept { return torsion_.size(); }
  /// Length of the flattened coordinate vector.
  std::size_t dim() const noexcept { return free_rank_ + torsion_.size(); }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  Integer torsion_order() const;
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_torsion_free() const noexcept { return torsion_.empty(); }

  GroupElement zero() const;
  /// Normalizes torsion residues; throws DimensionMismatch on shape errors.
  GroupElement element(Vector free, Vector tors = {}) const;
  GroupElement from_flat(const Vector& flat) const;
  GroupElement basis(std::size_t i) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement mul(const GroupElement& a, const Integer& k) const;

  bool fits(const GroupElement& g) const;
  void check(const GroupElement& g) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

std::string to_string(const AbelianGroup& g);

/// Z^n modulo a relation lattice, with explicit coordinates. The free part of
/// the projection is kept in Hermite form so the result does not depend on
/// elimination order.
class Cokernel {
 public:
  Cokernel() = default;
  /// Relations are rows of length n.
  Cokernel(const std::vector<Vector>& relations, std::size_t n);

  const AbelianGroup& group() const noexcept { return group_; }
  std::size_t source_dim() const noexcept { return n_; }

  GroupElement project(const Vector& x) const;
  /// Some x with project(x) == g.
  Vector lift(const GroupElement& g) const;

  /// Re-expresses the free coordinates in a new basis: new basis vector i is
  /// sum_j w(i,j) * old basis vector j; `w_inv` is the inverse of `w`.
  void change_free_basis(const IntMatrix& w, const IntMatrix& w_inv);
  /// Matrix (n x free_rank) of the free part of the projection.
  IntMatrix free_projection() const;

 private:
  std::size_t n_ = 0;
  AbelianGroup group_;
  IntMatrix to_group_;    // n x dim
  IntMatrix from_group_;  // dim x n
};

/// Cokernel of the group presented by the relation rows of A.
Cokernel cokernel(const IntMatrix& relations);

/// Quotient A / <gens>, with the projection from A.
class GroupQuotient {
 public:
  GroupQuotient() = default;
  GroupQuotient(const AbelianGroup& ambient, std::span<const GroupElement> gens);

  const AbelianGroup& group() const noexcept { return coker_.group(); }
  const AbelianGroup& ambient() const noexcept { return ambient_; }
  GroupElement project(const GroupElement& x) const;
  GroupElement lift(const GroupElement& y) const;
  /// Free part of the projection as a matrix (ambient free rank x target free rank).
  IntMatrix free_projection() const;

 private:
  AbelianGroup ambient_;
  Cokernel coker_;
};

/// The subgroup <gens> of an ambient group, with intrinsic coordinates. The
/// intrinsic free basis maps onto the Hermite basis of the image of <gens> in
/// the free part of the ambient, so a subgroup equal to the ambient gets the
/// ambient coordinates.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(const AbelianGroup& ambient, std::span<const GroupElement> gens);

  const AbelianGroup& ambient() const noexcept { return ambient_; }
  const AbelianGroup& group() const noexcept { return coker_.group(); }
  std::size_t num_generators() const noexcept { return gens_.size(); }
  const std::vector<GroupElement>& generators() const noexcept { return gens_; }

  /// Intrinsic coordinates of an ambient element, or nullopt when outside.
  std::optional<GroupElement> coordinates(const GroupElement& x) const;
  /// Intrinsic coordinates of generator i.
  GroupElement generator_coordinates(std::size_t i) const;
  /// Integer combination of the generators giving x, if x is in the subgroup.
  std::optional<Vector> combination(const GroupElement& x) const;
  GroupElement to_ambient(const GroupElement& intrinsic) const;
  /// Relation lattice {n : sum n_i g_i = 0} as rows.
  const std::vector<Vector>& relations() const noexcept { return relations_; }

 private:
  AbelianGroup ambient_;
  std::vector<GroupElement> gens_;
  IntMatrix system_;  // [generator columns | torsion slack columns]
  SmithForm system_snf_;
  std::vector<Vector> relations_;
  Cokernel coker_;
};

// ---------------------------------------------------------------------------
// Rational polyhedral cones.

/// Primitive inner normals of the facets of cone(rays), assuming the rays
/// span Q^n. Sorted lexicographically. Empty when the cone is all of Q^n.
std::vector<Vector> cone_facets(const std::vector<Vector>& rays, std::size_t n);

/// True iff v lies in the rational cone generated by rays.
bool cone_contains(const std::vector<Vector>& rays, const Vector& v, std::size_t n);

/// Primitive generators of the extreme rays of a pointed cone, sorted.
std::vector<Vector> extreme_rays(const std::vector<Vector>& rays, std::size_t n);

struct HilbertOptions {
  std::size_t max_dimension = 6;
};

/// Minimal generating set of the monoid cone(rays) ∩ Z^n, lexicographically
/// sorted. For a pointed cone this is the Hilbert basis. When the cone has a
/// lineality space, the output is ± a lattice basis of the lineality space
/// followed by lifted Hilbert basis elements of the pointed quotient.
std::vector<Vector> hilbert_basis(const std::vector<Vector>& rays, std::size_t n,
                                  const HilbertOptions& options = {});

/// Hilbert basis of {x in Z^n : A x >= 0} for a pointed cone (A of rank n).
std::vector<Vector> hilbert_basis_of_inequalities(const std::vector<Vector>& inequalities,
                                                  std::size_t n,
                                                  const HilbertOptions& options = {});

/// Graver basis (conformally minimal nonzero vectors) of the lattice spanned
/// by `basis`, by completion. One sign representative per ± pair is not
/// chosen; both signs are returned, sorted.
std::vector<Vector> graver_basis(const std::vector<Vector>& basis, std::size_t n);

// ---------------------------------------------------------------------------
// Nonnegative integer feasibility.

struct NonnegOptions {
  /// Functionals on the free part that are >= 0 on every generator. A
  /// residual on which one of them is negative can be discarded.
  std::vector<Vector> cone_functionals;
};

/// Some n in N^k with sum n_i g_i == target and sum n_i <= bound.
std::optional<Vector> solve_nonneg(const AbelianGroup& group, std::span<const GroupElement> gens,
                                   const GroupElement& target, const Integer& bound,
                                   const NonnegOptions& options = {});

}  // namespace monoidgeom
