#include "monoidgeom/duality.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monoidgeom {

AffineMonoid dual(const AffineMonoid& q) {
  const std::size_t d = q.dimension();
  AbelianGroup g(d);
  std::vector<GroupElement> gens;
  for (const auto& h : q.dual_basis()) gens.push_back(g.element(h));
  return AffineMonoid(g, gens);
}

DoubleDual double_dual_iso(const AffineMonoid& q) {
  AffineMonoid sat = saturate(q);
  Sharpening sh = sharpen(sat);
  AffineMonoid hq = dual(q);
  AffineMonoid hhq = dual(hq);
  const auto& hs = q.dual_basis();

  DoubleDual out{sh.monoid, hhq, irreducibles(sh.monoid), {}, {}, false};
  // ev(x) is determined by its values on the generators of H(Q).
  std::map<Vector, std::size_t> target_index;
  for (std::size_t j = 0; j < hhq.num_generators(); ++j) {
    const GroupElement& y = hhq.generators()[j];
    Vector values;
    for (const auto& h : hq.generators()) values.push_back(hq.evaluate(y.free, h));
    target_index.emplace(values, j);
  }
  std::map<Vector, std::size_t> source_index;
  for (std::size_t i = 0; i < out.irreducibles.size(); ++i) {
    GroupElement x = sat.lift_bar(out.irreducibles[i]);
    Vector values;
    for (const auto& h : hs) values.push_back(q.evaluate(h, x));
    source_index.emplace(values, i);
    auto it = target_index.find(values);
    out.forward.push_back(it == target_index.end() ? std::nullopt : std::optional<std::size_t>(it->second));
  }
  out.backward.assign(hhq.num_generators(), std::nullopt);
  for (const auto& [values, j] : target_index) {
    auto it = source_index.find(values);
    if (it != source_index.end()) out.backward[j] = it->second;
  }
  out.isomorphism = out.irreducibles.size() == hhq.num_generators() &&
                    std::all_of(out.forward.begin(), out.forward.end(), [](auto& o) { return o.has_value(); }) &&
                    std::all_of(out.backward.begin(), out.backward.end(), [](auto& o) { return o.has_value(); });
  return out;
}

Face face_perp(const Face& f) {
  const AffineMonoid& q = f.monoid;
  AffineMonoid hq = dual(q);
  std::vector<bool> mask(hq.num_generators());
  for (std::size_t j = 0; j < mask.size(); ++j) {
    bool kills = true;
    for (auto i : f.indices())
      if (q.evaluate(hq.generators()[j].free, q.generators()[i]) != 0) kills = false;
    mask[j] = kills;
  }
  return face_from_mask(hq, mask);
}

Face perp_of_dual_face(const AffineMonoid& q, const Face& t) {
  std::vector<bool> mask(q.num_generators());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    bool killed = true;
    for (auto j : t.indices())
      if (q.evaluate(t.monoid.generators()[j].free, q.generators()[i]) != 0) killed = false;
    mask[i] = killed;
  }
  return face_from_mask(q, mask);
}

Valuation height1_valuation(const AffineMonoid& q, const PrimeIdeal& p) {
  if (p.height() != 1)
    throw MonoidError(ErrorCode::WrongHeight, "prime of height " + std::to_string(p.height()) + ", expected 1");
  // A height-one prime is the complement of a facet; its functional is the
  // primitive facet normal, which is onto Z.
  (void)q;
  return {p, primitive(p.face.functional)};
}

std::vector<Valuation> height1_valuations(const AffineMonoid& q) {
  std::vector<Valuation> out;
  for (const auto& p : spec(q).primes)
    if (p.height() == 1) out.push_back(height1_valuation(q, p));
  return out;
}

ValuationVector valuation_vector(const AffineMonoid& q, const GroupElement& x) {
  if (!q.contains(x)) throw MonoidError(ErrorCode::NotMember, to_string(x) + " is not in the monoid");
  ValuationVector out;
  out.valuations = height1_valuations(q);
  for (const auto& v : out.valuations) out.values.push_back(v(x));
  return out;
}

ValuationCheck saturation_by_valuations_check(const AffineMonoid& q, long radius) {
  const AbelianGroup& g = q.gp().group();
  auto vals = height1_valuations(q);
  ValuationCheck out;
  const std::size_t f = g.free_rank();
  Vector free(f, Integer(-radius));
  for (;;) {
    // All torsion residues over this free point.
    Vector tors(g.torsion_rank());
    for (;;) {
      GroupElement x = q.gp().to_ambient(g.element(free, tors));
      bool member = q.contains(x);
      bool valued = std::all_of(vals.begin(), vals.end(), [&](const Valuation& v) { return v(x) >= 0; });
      ++out.checked;
      if (member != valued) {
        out.holds = false;
        out.counterexample = x;
        return out;
      }
      std::size_t i = 0;
      while (i < tors.size()) {
        if (++tors[i] < g.torsion()[i]) break;
        tors[i] = 0;
        ++i;
      }
      if (i == tors.size()) break;
    }
    std::size_t i = 0;
    while (i < f) {
      if (++free[i] <= radius) break;
      free[i] = -radius;
      ++i;
    }
    if (i == f) break;
  }
  return out;
}

namespace {

void check_local(const AffineMonoid& q, const Vector& h) {
  if (!is_sharp(q)) throw MonoidError(ErrorCode::NotSharp, "ball counting needs a sharp monoid");
  if (h.size() != q.dimension()) throw MonoidError(ErrorCode::DimensionMismatch, "functional length");
  for (const auto& g : q.generators())
    if (q.evaluate(h, g) <= 0) throw MonoidError(ErrorCode::NonLocalFunctional, "functional is not local");
}

}  // namespace

Integer count_ball(const AffineMonoid& q, const Vector& h, const Integer& r) {
  check_local(q, h);
  if (r <= 0) return 0;
  std::vector<Integer> hg;
  for (const auto& g : q.generators()) hg.push_back(q.evaluate(h, g));
  std::set<GroupElement> seen{q.ambient().zero()};
  std::vector<std::pair<GroupElement, Integer>> frontier{{q.ambient().zero(), 0}};
  while (!frontier.empty()) {
    std::vector<std::pair<GroupElement, Integer>> next;
    for (const auto& [x, hx] : frontier)
      for (std::size_t i = 0; i < hg.size(); ++i) {
        Integer hy = hx + hg[i];
        if (hy >= r) continue;
        GroupElement y = q.ambient().add(x, q.generators()[i]);
        if (seen.insert(y).second) next.emplace_back(std::move(y), hy);
      }
    frontier = std::move(next);
  }
  return Integer(static_cast<unsigned long>(seen.size()));
}

BallConstants ball_constants(const AffineMonoid& q, const Vector& h) {
  check_local(q, h);
  BallConstants out;
  const std::size_t d = q.dimension();
  out.d = d;
  // Upper: n h >= h_i on Q for every dual generator h_i.
  Integer n = 1;
  for (const auto& hi : q.dual_basis())
    for (const auto& g : q.generators()) {
      Integer a = q.evaluate(hi, g), b = q.evaluate(h, g);
      Integer c = -floor_div(-a, b);
      if (c > n) n = c;
    }
  Integer t = q.gp().group().torsion_order();
  Integer p = 1;
  for (std::size_t i = 0; i < d; ++i) p *= (1 + n);
  out.upper = Rational(t * p);
  // Lower: generators whose images form a basis.
  std::vector<Vector> chosen;
  Integer m = 0;
  for (const auto& g : q.generators()) {
    if (chosen.size() == d) break;
    Vector v = q.bar(g).free;
    chosen.push_back(v);
    if (rank(chosen, d) < chosen.size()) {
      chosen.pop_back();
      continue;
    }
    Integer hv = q.evaluate(h, g);
    if (hv > m) m = hv;
  }
  Integer base = 2 * m * Integer(static_cast<unsigned long>(d));
  Integer denom = 1;
  for (std::size_t i = 0; i < d; ++i) denom *= base;
  out.lower = Rational(1, 1) / Rational(denom);
  out.lower_from = m * Integer(static_cast<unsigned long>(d));
  return out;
}

}  // namespace monoidgeom
