#include "monoidgeom/affine.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace monoidgeom {

struct AffineMonoid::Impl {
  AbelianGroup ambient;
  std::vector<GroupElement> gens;
  Subgroup gp;
  std::vector<std::size_t> unit_idx;
  GroupQuotient sharp;           // M^gp (intrinsic) -> M^gp / M^*
  std::vector<GroupElement> bar_gens;
  std::vector<Vector> facets;
  Vector grading;

  mutable std::once_flag dual_once;
  mutable std::vector<Vector> dual;
};

AffineMonoid::AffineMonoid() : AffineMonoid(AbelianGroup(0), {}) {}

AffineMonoid::AffineMonoid(AbelianGroup ambient, std::vector<GroupElement> gens) {
  std::vector<GroupElement> kept;
  std::set<GroupElement> seen;
  for (auto& g : gens) {
    ambient.check(g);
    if (g == ambient.zero() || !seen.insert(g).second) continue;
    kept.push_back(std::move(g));
  }
  auto impl = std::make_shared<Impl>();
  impl->ambient = ambient;
  impl->gens = kept;
  impl->gp = Subgroup(ambient, kept);
  const AbelianGroup& g = impl->gp.group();
  const std::size_t f = g.free_rank();

  std::vector<Vector> free_parts;
  std::vector<GroupElement> intrinsic;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    intrinsic.push_back(impl->gp.generator_coordinates(i));
    free_parts.push_back(intrinsic.back().free);
  }
  std::vector<Vector> facets = cone_facets(free_parts, f);
  std::vector<GroupElement> unit_intrinsic;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    bool unit = std::all_of(facets.begin(), facets.end(),
                            [&](const Vector& h) { return dot(h, free_parts[i]) == 0; });
    if (unit) {
      impl->unit_idx.push_back(i);
      unit_intrinsic.push_back(intrinsic[i]);
    }
  }
  impl->sharp = GroupQuotient(g, unit_intrinsic);
  std::vector<Vector> bar_free;
  for (const auto& x : intrinsic) {
    impl->bar_gens.push_back(impl->sharp.project(x));
    bar_free.push_back(impl->bar_gens.back().free);
  }
  const std::size_t fb = impl->sharp.group().free_rank();
  impl->facets = fb == 0 ? std::vector<Vector>{} : cone_facets(bar_free, fb);
  impl->grading = Vector(fb);
  for (const auto& h : impl->facets) impl->grading = add(impl->grading, h);
  impl_ = std::move(impl);
}

const AbelianGroup& AffineMonoid::ambient() const { return impl_->ambient; }
const std::vector<GroupElement>& AffineMonoid::generators() const { return impl_->gens; }
const Subgroup& AffineMonoid::gp() const { return impl_->gp; }
const AbelianGroup& AffineMonoid::sharp_group() const { return impl_->sharp.group(); }
const std::vector<Vector>& AffineMonoid::facets() const { return impl_->facets; }
const Vector& AffineMonoid::grading() const { return impl_->grading; }
const std::vector<std::size_t>& AffineMonoid::unit_generators() const { return impl_->unit_idx; }
std::size_t AffineMonoid::dimension() const { return sharp_group().free_rank(); }

const std::vector<Vector>& AffineMonoid::dual_basis() const {
  std::call_once(impl_->dual_once, [this] {
    impl_->dual = hilbert_basis(impl_->facets, dimension());
  });
  return impl_->dual;
}

GroupElement AffineMonoid::bar(const GroupElement& x) const {
  auto c = impl_->gp.coordinates(x);
  if (!c)
    throw MonoidError(ErrorCode::AmbientMismatch, to_string(x) + " is not in the groupification");
  return impl_->sharp.project(*c);
}

GroupElement AffineMonoid::lift_bar(const GroupElement& y) const {
  return impl_->gp.to_ambient(impl_->sharp.lift(y));
}

Integer AffineMonoid::evaluate(const Vector& h, const GroupElement& x) const {
  if (h.size() != dimension()) throw MonoidError(ErrorCode::DimensionMismatch, "functional length");
  return dot(h, bar(x).free);
}

std::optional<Vector> AffineMonoid::decompose_mod_units(const GroupElement& x) const {
  ambient().check(x);
  if (!impl_->gp.coordinates(x)) return std::nullopt;
  GroupElement xb = bar(x);
  for (const auto& h : impl_->facets)
    if (dot(h, xb.free) < 0) return std::nullopt;
  std::vector<GroupElement> nonunit;
  std::vector<std::size_t> pos;
  std::set<std::size_t> units(impl_->unit_idx.begin(), impl_->unit_idx.end());
  Integer min_deg = -1;
  for (std::size_t i = 0; i < impl_->gens.size(); ++i) {
    if (units.count(i)) continue;
    nonunit.push_back(impl_->bar_gens[i]);
    pos.push_back(i);
    Integer d = dot(impl_->grading, impl_->bar_gens[i].free);
    if (min_deg < 0 || d < min_deg) min_deg = d;
  }
  Vector out(impl_->gens.size());
  if (nonunit.empty()) {
    if (xb == sharp_group().zero()) return out;
    return std::nullopt;
  }
  // Every nonunit generator has positive degree, so the number of summands
  // is bounded by deg(x) / min deg.
  Integer bound = floor_div(dot(impl_->grading, xb.free), min_deg);
  NonnegOptions opts{impl_->facets};
  auto n = solve_nonneg(sharp_group(), nonunit, xb, bound, opts);
  if (!n) return std::nullopt;
  for (std::size_t j = 0; j < pos.size(); ++j) out[pos[j]] = (*n)[j];
  return out;
}

bool AffineMonoid::contains(const GroupElement& x) const { return decompose_mod_units(x).has_value(); }

bool AffineMonoid::is_unit(const GroupElement& x) const {
  return contains(x) && contains(ambient().neg(x));
}

bool AffineMonoid::divides(const GroupElement& s, const GroupElement& t) const {
  return contains(ambient().sub(t, s));
}

std::vector<GroupElement> AffineMonoid::sums_up_to(std::size_t k) const {
  std::set<GroupElement> all{ambient().zero()};
  std::vector<GroupElement> frontier{ambient().zero()};
  for (std::size_t step = 0; step < k && !frontier.empty(); ++step) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& g : impl_->gens) {
        GroupElement y = ambient().add(x, g);
        if (all.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

bool operator==(const AffineMonoid& a, const AffineMonoid& b) {
  return a.ambient() == b.ambient() && a.generators() == b.generators();
}

bool same_monoid(const AffineMonoid& a, const AffineMonoid& b) {
  if (!(a.ambient() == b.ambient())) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

// ---------------------------------------------------------------------------

MonoidHom::MonoidHom(AffineMonoid src, AffineMonoid tgt, std::vector<GroupElement> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
  if (images.size() != source.num_generators())
    throw MonoidError(ErrorCode::ArityMismatch, "one image per source generator is required");
  for (const auto& y : images) {
    target.ambient().check(y);
    if (!target.contains(y))
      throw MonoidError(ErrorCode::NotMember, "image " + to_string(y) + " is not in the target");
  }
  for (const auto& r : source.gp().relations()) {
    GroupElement s = target.ambient().zero();
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) s = target.ambient().add(s, target.ambient().mul(images[i], r[i]));
    if (!(s == target.ambient().zero()))
      throw MonoidError(ErrorCode::InvalidArgument, "images do not respect the relations of the source");
  }
}

GroupElement MonoidHom::apply(const GroupElement& x) const {
  auto c = source.gp().combination(x);
  if (!c) throw MonoidError(ErrorCode::AmbientMismatch, to_string(x) + " is not in the source groupification");
  const AbelianGroup& t = target.ambient();
  GroupElement s = t.zero();
  for (std::size_t i = 0; i < c->size(); ++i)
    if ((*c)[i] != 0) s = t.add(s, t.mul(images[i], (*c)[i]));
  return s;
}

MonoidHom identity_hom(const AffineMonoid& m) { return MonoidHom(m, m, m.generators()); }

UnitGroup units(const AffineMonoid& m) {
  std::vector<GroupElement> gens;
  for (auto i : m.unit_generators()) gens.push_back(m.generators()[i]);
  Subgroup s(m.ambient(), gens);
  return {s.group(), gens};
}

Sharpening sharpen(const AffineMonoid& m) {
  std::vector<GroupElement> images, nonunit;
  std::set<std::size_t> u(m.unit_generators().begin(), m.unit_generators().end());
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    images.push_back(m.bar(m.generators()[i]));
    if (!u.count(i)) nonunit.push_back(images.back());
  }
  AffineMonoid bar(m.sharp_group(), nonunit);
  return {bar, MonoidHom(m, bar, images)};
}

namespace {

std::vector<GroupElement> sorted(std::vector<GroupElement> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<GroupElement> irreducibles(const AffineMonoid& m) {
  if (!m.unit_generators().empty()) throw MonoidError(ErrorCode::NotSharp, "irreducibles need a sharp monoid");
  std::vector<GroupElement> out;
  const auto& g = m.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<GroupElement> others;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) others.push_back(g[j]);
    if (!AffineMonoid(m.ambient(), others).contains(g[i])) out.push_back(g[i]);
  }
  return sorted(out);
}

AffineMonoid saturate(const AffineMonoid& m) {
  std::vector<GroupElement> gens;
  const AbelianGroup& bar = m.sharp_group();
  std::vector<Vector> bar_free;
  std::set<std::size_t> u(m.unit_generators().begin(), m.unit_generators().end());
  for (std::size_t i = 0; i < m.num_generators(); ++i)
    if (!u.count(i)) bar_free.push_back(m.bar(m.generators()[i]).free);
  for (const auto& h : hilbert_basis(bar_free, bar.free_rank()))
    gens.push_back(m.lift_bar(bar.element(h)));
  for (std::size_t j = 0; j < bar.torsion_rank(); ++j) gens.push_back(m.lift_bar(bar.basis(bar.free_rank() + j)));
  std::vector<GroupElement> unit_gens;
  for (auto i : m.unit_generators()) unit_gens.push_back(m.generators()[i]);
  Subgroup ug(m.ambient(), unit_gens);
  for (std::size_t j = 0; j < ug.group().dim(); ++j) {
    GroupElement b = ug.to_ambient(ug.group().basis(j));
    gens.push_back(b);
    gens.push_back(m.ambient().neg(b));
  }
  return AffineMonoid(m.ambient(), sorted(gens));
}

bool is_saturated(const AffineMonoid& m) {
  AffineMonoid s = saturate(m);
  return std::all_of(s.generators().begin(), s.generators().end(),
                     [&](const GroupElement& g) { return m.contains(g); });
}

bool is_fine(const AffineMonoid&) { return true; }
bool is_sharp(const AffineMonoid& m) { return m.unit_generators().empty(); }
bool is_dull(const AffineMonoid& m) { return m.unit_generators().size() == m.num_generators(); }
bool is_toric(const AffineMonoid& m) { return m.gp().group().is_torsion_free() && is_saturated(m); }

bool is_local_hom(const MonoidHom& theta) {
  std::set<std::size_t> u(theta.source.unit_generators().begin(), theta.source.unit_generators().end());
  for (std::size_t i = 0; i < theta.images.size(); ++i)
    if (!u.count(i) && theta.target.is_unit(theta.images[i])) return false;
  return true;
}

namespace {

// θ^gp is an isomorphism of groups carrying P onto Q.
bool is_isomorphism(const MonoidHom& theta) {
  const AffineMonoid& p = theta.source;
  const AffineMonoid& q = theta.target;
  const AbelianGroup& g = p.gp().group();
  std::vector<GroupElement> basis_images;
  for (std::size_t j = 0; j < g.dim(); ++j) basis_images.push_back(theta.apply(p.gp().to_ambient(g.basis(j))));
  Subgroup image(q.ambient(), basis_images);
  if (!(image.group() == g)) return false;
  for (const auto& y : q.generators())
    if (!image.coordinates(y)) return false;
  return same_monoid(AffineMonoid(q.ambient(), theta.images), q);
}

// Functional on the free coordinates of P^gp (intrinsic) given by a facet of P.
Vector facet_on_gp(const AffineMonoid& p, const Vector& h) {
  const AbelianGroup& g = p.gp().group();
  Vector v(g.free_rank());
  for (std::size_t j = 0; j < g.free_rank(); ++j) v[j] = p.evaluate(h, p.gp().to_ambient(g.basis(j)));
  return v;
}

Vector pullback_on_gp(const MonoidHom& theta, const Vector& k) {
  const AffineMonoid& p = theta.source;
  const AbelianGroup& g = p.gp().group();
  Vector v(g.free_rank());
  for (std::size_t j = 0; j < g.free_rank(); ++j)
    v[j] = theta.target.evaluate(k, theta.apply(p.gp().to_ambient(g.basis(j))));
  return v;
}

std::optional<GroupElement> exactness_witness(const MonoidHom& theta, std::size_t bound) {
  const AffineMonoid& p = theta.source;
  auto elems = p.sums_up_to(bound);
  std::set<GroupElement> tried;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      GroupElement x = p.ambient().sub(b, a);
      if (!tried.insert(x).second) continue;
      if (theta.target.contains(theta.apply(x)) && !p.contains(x)) return x;
    }
  return std::nullopt;
}

}  // namespace

ExactnessResult is_exact_hom(const MonoidHom& theta, std::size_t bound) {
  if (is_isomorphism(theta)) return {Verdict::True, std::nullopt};
  const AffineMonoid& p = theta.source;
  if (is_saturated(p)) {
    std::vector<Vector> pullbacks;
    for (const auto& k : theta.target.facets()) pullbacks.push_back(pullback_on_gp(theta, k));
    const std::size_t f = p.gp().group().free_rank();
    bool contained = true;
    for (const auto& h : p.facets())
      if (!cone_contains(pullbacks, facet_on_gp(p, h), f)) contained = false;
    if (contained) return {Verdict::True, std::nullopt};
    if (is_saturated(theta.target)) return {Verdict::False, exactness_witness(theta, bound)};
  }
  if (auto w = exactness_witness(theta, bound)) return {Verdict::False, w};
  return {Verdict::Unknown, std::nullopt};
}

MonoidHom embed_sharp(const AffineMonoid& m) {
  if (!is_sharp(m)) throw MonoidError(ErrorCode::NotSharp, "embedding needs a sharp monoid");
  std::vector<Vector> hs = m.dual_basis();
  std::sort(hs.rbegin(), hs.rend());
  AbelianGroup target(hs.size(), m.sharp_group().torsion());
  std::vector<GroupElement> images;
  for (const auto& g : m.generators()) {
    GroupElement b = m.bar(g);
    Vector v;
    for (const auto& h : hs) v.push_back(dot(h, b.free));
    images.push_back(target.element(v, b.tors));
  }
  AffineMonoid image(target, images);
  return MonoidHom(m, image, images);
}

DimOneClassification classify_dim1(const AffineMonoid& m) {
  if (m.dimension() != 1)
    throw MonoidError(ErrorCode::WrongDimension, "dimension is " + std::to_string(m.dimension()) + ", expected 1");
  if (!is_saturated(m)) throw MonoidError(ErrorCode::InvalidArgument, "classification needs a saturated monoid");
  GroupElement gen = m.sharp_group().element(make_vector({1}));
  if (m.grading()[0] < 0) gen = m.sharp_group().neg(gen);
  for (const auto& g : m.generators())
    if (m.bar(g) == gen) return {units(m), g};
  return {units(m), m.lift_bar(gen)};
}

bool is_valuative(const AffineMonoid& m) { return m.dimension() <= 1 && is_saturated(m); }

ValuativeDomination dominating_valuative(const AffineMonoid& p) {
  Vector w = primitive(p.grading());
  const AbelianGroup& g = p.gp().group();
  Vector phi(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j)
    phi[j] = w.empty() ? Integer(0) : p.evaluate(w, p.gp().to_ambient(g.basis(j)));
  std::vector<GroupElement> gens;
  for (const auto& k : integer_kernel(IntMatrix::from_rows({phi}, g.dim()))) {
    GroupElement x = p.gp().to_ambient(g.from_flat(k));
    gens.push_back(x);
    gens.push_back(p.ambient().neg(x));
  }
  if (!is_zero(phi)) {
    std::optional<GroupElement> one;
    for (const auto& x : p.generators())
      if (p.evaluate(w, x) == 1) {
        one = x;
        break;
      }
    if (!one) {
      auto y = solve_integer(IntMatrix::from_rows({phi}, g.dim()), make_vector({1}));
      one = p.gp().to_ambient(g.from_flat(*y));
    }
    gens.push_back(*one);
  }
  return {w, AffineMonoid(p.ambient(), sorted(gens))};
}

}  // namespace monoidgeom
