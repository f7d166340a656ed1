#include <sstream>

#include "monoidgeom/lattice.hpp"

namespace monoidgeom {

Vector GroupElement::flat() const {
  Vector v = free;
  v.insert(v.end(), tors.begin(), tors.end());
  return v;
}

std::string to_string(const GroupElement& g) {
  if (g.tors.empty()) return to_string(g.free);
  return to_string(g.free) + "+" + to_string(g.tors);
}

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw MonoidError(ErrorCode::InvalidArgument, "torsion invariants must be >= 2");
    if (i + 1 < torsion_.size() && torsion_[i + 1] % torsion_[i] != 0)
      throw MonoidError(ErrorCode::InvalidArgument, "torsion invariants must form a divisibility chain");
  }
}

Integer AbelianGroup::torsion_order() const {
  Integer o = 1;
  for (const auto& d : torsion_) o *= d;
  return o;
}

GroupElement AbelianGroup::zero() const { return {Vector(free_rank_), Vector(torsion_.size())}; }

GroupElement AbelianGroup::element(Vector free, Vector tors) const {
  if (tors.empty() && !torsion_.empty()) tors.assign(torsion_.size(), 0);
  if (free.size() != free_rank_ || tors.size() != torsion_.size())
    throw MonoidError(ErrorCode::DimensionMismatch,
                      "element " + to_string(free) + " does not fit group " + to_string(*this));
  for (std::size_t i = 0; i < tors.size(); ++i) tors[i] = mod_nonneg(tors[i], torsion_[i]);
  return {std::move(free), std::move(tors)};
}

GroupElement AbelianGroup::from_flat(const Vector& flat) const {
  if (flat.size() != dim()) throw MonoidError(ErrorCode::DimensionMismatch, "flat coordinates");
  Vector free(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(free_rank_));
  Vector tors(flat.begin() + static_cast<std::ptrdiff_t>(free_rank_), flat.end());
  return element(std::move(free), std::move(tors));
}

GroupElement AbelianGroup::basis(std::size_t i) const {
  Vector flat(dim());
  flat.at(i) = 1;
  return from_flat(flat);
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  return element(monoidgeom::add(a.free, b.free), monoidgeom::add(a.tors, b.tors));
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  return element(monoidgeom::sub(a.free, b.free), monoidgeom::sub(a.tors, b.tors));
}

GroupElement AbelianGroup::neg(const GroupElement& a) const {
  check(a);
  return element(negate(a.free), negate(a.tors));
}

GroupElement AbelianGroup::mul(const GroupElement& a, const Integer& k) const {
  check(a);
  return element(scale(a.free, k), scale(a.tors, k));
}

bool AbelianGroup::fits(const GroupElement& g) const {
  if (g.free.size() != free_rank_ || g.tors.size() != torsion_.size()) return false;
  for (std::size_t i = 0; i < g.tors.size(); ++i)
    if (g.tors[i] < 0 || g.tors[i] >= torsion_[i]) return false;
  return true;
}

void AbelianGroup::check(const GroupElement& g) const {
  if (!fits(g))
    throw MonoidError(ErrorCode::AmbientMismatch,
                      "element " + monoidgeom::to_string(g) + " is not in " + monoidgeom::to_string(*this));
}

std::string to_string(const AbelianGroup& g) {
  std::ostringstream os;
  os << "Z^" << g.free_rank();
  for (const auto& d : g.torsion()) os << " + Z/" << d.get_str();
  return os.str();
}

// ---------------------------------------------------------------------------

Cokernel::Cokernel(const std::vector<Vector>& relations, std::size_t n) : n_(n) {
  IntMatrix rel = IntMatrix::from_rows(relations, n);
  SmithForm s = smith_normal_form(rel);
  std::vector<std::size_t> tors_idx;
  std::vector<Integer> invariants;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) > 1) {
      tors_idx.push_back(i);
      invariants.push_back(s.D(i, i));
    }
  const std::size_t f = n - s.rank;
  group_ = AbelianGroup(f, invariants);
  const std::size_t dim = group_.dim();
  IntMatrix v_inv = unimodular_inverse(s.V);
  to_group_ = IntMatrix(n, dim);
  from_group_ = IntMatrix(dim, n);
  auto source_index = [&](std::size_t c) { return c < f ? s.rank + c : tors_idx[c - f]; };
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t k = source_index(c);
    for (std::size_t i = 0; i < n; ++i) {
      to_group_(i, c) = s.V(i, k);
      from_group_(c, i) = v_inv(k, i);
    }
  }
  for (std::size_t c = f; c < dim; ++c)
    for (std::size_t i = 0; i < n; ++i) to_group_(i, c) = mod_nonneg(to_group_(i, c), invariants[c - f]);

  if (f > 0) {
    // Hermite form on the projection functionals fixes the free basis.
    HermiteForm h = hermite_normal_form(free_projection().transpose());
    IntMatrix w_inv_t = h.W.transpose();  // new projection = old * W^T
    IntMatrix w = unimodular_inverse(w_inv_t);
    change_free_basis(w, w_inv_t);
  }
}

IntMatrix Cokernel::free_projection() const {
  const std::size_t f = group_.free_rank();
  IntMatrix p(n_, f);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < f; ++j) p(i, j) = to_group_(i, j);
  return p;
}

void Cokernel::change_free_basis(const IntMatrix& w, const IntMatrix& w_inv) {
  const std::size_t f = group_.free_rank();
  IntMatrix p = free_projection() * w_inv;
  IntMatrix s_old(f, n_);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < n_; ++j) s_old(i, j) = from_group_(i, j);
  IntMatrix s_new = w * s_old;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < f; ++j) to_group_(i, j) = p(i, j);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < n_; ++j) from_group_(i, j) = s_new(i, j);
}

GroupElement Cokernel::project(const Vector& x) const {
  if (x.size() != n_) throw MonoidError(ErrorCode::DimensionMismatch, "cokernel projection");
  if (n_ == 0) return group_.zero();
  return group_.from_flat(to_group_.apply_left(x));
}

Vector Cokernel::lift(const GroupElement& g) const {
  group_.check(g);
  if (group_.dim() == 0) return Vector(n_);
  return from_group_.apply_left(g.flat());
}

Cokernel cokernel(const IntMatrix& relations) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < relations.rows(); ++i) rows.push_back(relations.row(i));
  return Cokernel(rows, relations.cols());
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Vector> torsion_relations(const AbelianGroup& a) {
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < a.torsion_rank(); ++j) {
    Vector r(a.dim());
    r[a.free_rank() + j] = a.torsion()[j];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

GroupQuotient::GroupQuotient(const AbelianGroup& ambient, std::span<const GroupElement> gens)
    : ambient_(ambient) {
  auto rows = torsion_relations(ambient);
  for (const auto& g : gens) {
    ambient.check(g);
    rows.push_back(g.flat());
  }
  coker_ = Cokernel(rows, ambient.dim());
}

GroupElement GroupQuotient::project(const GroupElement& x) const {
  ambient_.check(x);
  return coker_.project(x.flat());
}

GroupElement GroupQuotient::lift(const GroupElement& y) const { return ambient_.from_flat(coker_.lift(y)); }

IntMatrix GroupQuotient::free_projection() const {
  IntMatrix full = coker_.free_projection();
  IntMatrix p(ambient_.free_rank(), full.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) = full(i, j);
  return p;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(const AbelianGroup& ambient, std::span<const GroupElement> gens)
    : ambient_(ambient), gens_(gens.begin(), gens.end()) {
  const std::size_t k = gens_.size(), r = ambient.free_rank(), t = ambient.torsion_rank();
  const std::size_t dim = r + t;
  system_ = IntMatrix(dim, k + t);
  for (std::size_t j = 0; j < k; ++j) {
    ambient.check(gens_[j]);
    Vector f = gens_[j].flat();
    for (std::size_t i = 0; i < dim; ++i) system_(i, j) = f[i];
  }
  for (std::size_t j = 0; j < t; ++j) system_(r + j, k + j) = ambient.torsion()[j];
  system_snf_ = smith_normal_form(system_);

  for (const auto& v : integer_kernel(system_)) {
    Vector head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
    if (!is_zero(head)) relations_.push_back(std::move(head));
  }
  coker_ = Cokernel(relations_, k);

  const std::size_t f = coker_.group().free_rank();
  if (f > 0) {
    IntMatrix e(f, r);
    for (std::size_t j = 0; j < f; ++j) {
      Vector n = coker_.lift(coker_.group().basis(j));
      Vector image(dim);
      for (std::size_t i = 0; i < k; ++i)
        if (n[i] != 0) image = add(image, scale(gens_[i].flat(), n[i]));
      for (std::size_t i = 0; i < r; ++i) e(j, i) = image[i];
    }
    HermiteForm h = hermite_normal_form(e);
    coker_.change_free_basis(h.W, unimodular_inverse(h.W));
  }
}

std::optional<Vector> Subgroup::combination(const GroupElement& x) const {
  ambient_.check(x);
  const std::size_t k = gens_.size();
  const std::size_t cols = system_.cols();
  Vector b = x.flat();
  if (system_.rows() == 0) return Vector(k);
  Vector c = system_snf_.U.apply(b);
  Vector y(cols);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < system_snf_.rank) {
      if (c[i] % system_snf_.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / system_snf_.D(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  Vector sol = system_snf_.V.apply(y);
  sol.resize(k);
  return sol;
}

std::optional<GroupElement> Subgroup::coordinates(const GroupElement& x) const {
  auto n = combination(x);
  if (!n) return std::nullopt;
  return coker_.project(*n);
}

GroupElement Subgroup::generator_coordinates(std::size_t i) const {
  Vector e(gens_.size());
  e.at(i) = 1;
  return coker_.project(e);
}

GroupElement Subgroup::to_ambient(const GroupElement& intrinsic) const {
  Vector n = coker_.lift(intrinsic);
  Vector flat(ambient_.dim());
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (n[i] != 0) flat = add(flat, scale(gens_[i].flat(), n[i]));
  return ambient_.from_flat(flat);
}

}  // namespace monoidgeom
