#include "monoidgeom/algebra.hpp"

#include <algorithm>
#include <set>

namespace monoidgeom {

AlgebraElement::AlgebraElement(AffineMonoid m) : monoid_(std::move(m)) {}

AlgebraElement::AlgebraElement(AffineMonoid m, Terms terms, Trusted) : monoid_(std::move(m)) {
  for (auto& [k, c] : terms)
    if (c != 0) terms_.emplace(k, c);
}

AlgebraElement::AlgebraElement(AffineMonoid m, Terms terms) : monoid_(std::move(m)) {
  for (auto& [k, c] : terms) {
    if (!monoid_.contains(k)) throw MonoidError(ErrorCode::NotMember, to_string(k) + " is not in the monoid");
    if (c != 0) terms_.emplace(k, c);
  }
}

AlgebraElement AlgebraElement::monomial(const AffineMonoid& m, const GroupElement& key, const Rational& coeff) {
  return AlgebraElement(m, Terms{{key, coeff}});
}

AlgebraElement AlgebraElement::constant(const AffineMonoid& m, const Rational& c) {
  return AlgebraElement(m, Terms{{m.ambient().zero(), c}});
}

Rational AlgebraElement::coeff(const GroupElement& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

void same_monoid_check(const AffineMonoid& a, const AffineMonoid& b) {
  if (!(a == b)) throw MonoidError(ErrorCode::MonoidMismatch, "elements of different monoid algebras");
}

}  // namespace

AlgebraElement add(const AlgebraElement& f, const AlgebraElement& g) {
  same_monoid_check(f.monoid(), g.monoid());
  Terms t = f.terms();
  for (const auto& [k, c] : g.terms()) t[k] += c;
  return AlgebraElement(f.monoid(), std::move(t), AlgebraElement::Trusted{});
}

AlgebraElement scale(const AlgebraElement& f, const Rational& c) {
  Terms t;
  for (const auto& [k, a] : f.terms()) t[k] = a * c;
  return AlgebraElement(f.monoid(), std::move(t), AlgebraElement::Trusted{});
}

AlgebraElement sub(const AlgebraElement& f, const AlgebraElement& g) { return add(f, scale(g, -1)); }

AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g) {
  same_monoid_check(f.monoid(), g.monoid());
  const AbelianGroup& a = f.monoid().ambient();
  Terms t;
  for (const auto& [p, x] : f.terms())
    for (const auto& [q, y] : g.terms()) t[a.add(p, q)] += x * y;
  return AlgebraElement(f.monoid(), std::move(t), AlgebraElement::Trusted{});
}

std::vector<TensorTerm> comul(const AlgebraElement& f) {
  std::vector<TensorTerm> out;
  for (const auto& [k, c] : f.terms()) out.push_back({k, k, c});
  return out;
}

Rational counit(const AlgebraElement& f) {
  Rational s = 0;
  for (const auto& [k, c] : f.terms()) s += c;
  return s;
}

Rational vertex_eval(const AlgebraElement& f) {
  Rational s = 0;
  for (const auto& [k, c] : f.terms())
    if (f.monoid().is_unit(k)) s += c;
  return s;
}

QuotientElement quotient_project(const AlgebraElement& f, const MonoidIdeal& k) {
  same_monoid_check(f.monoid(), k.monoid);
  Terms t;
  for (const auto& [key, c] : f.terms())
    if (!k.contains(key)) t.emplace(key, c);
  return {k, AlgebraElement(f.monoid(), std::move(t))};
}

QuotientElement quotient_mul(const QuotientElement& a, const QuotientElement& b) {
  return quotient_project(mul(a.base, b.base), a.ideal);
}

AlgebraElement face_restrict(const AlgebraElement& f, const Face& face) {
  same_monoid_check(f.monoid(), face.monoid);
  Terms t;
  for (const auto& [k, c] : f.terms())
    if (face.contains(k)) t.emplace(k, c);
  return AlgebraElement(face.submonoid(), std::move(t));
}

AlgebraElement face_pull(const AlgebraElement& g, const Face& face) {
  return AlgebraElement(face.monoid, g.terms());
}

std::vector<HomotopyTerm> retract_homotopy(const AlgebraElement& f, const Face& face, const Vector& h) {
  const AffineMonoid& q = face.monoid;
  same_monoid_check(f.monoid(), q);
  if (h.size() != q.dimension()) throw MonoidError(ErrorCode::WitnessMismatch, "functional has the wrong length");
  for (std::size_t i = 0; i < q.num_generators(); ++i) {
    Integer v = q.evaluate(h, q.generators()[i]);
    if (v < 0 || (v == 0) != static_cast<bool>(face.mask[i]))
      throw MonoidError(ErrorCode::WitnessMismatch, "functional does not cut out the face");
  }
  std::vector<HomotopyTerm> out;
  for (const auto& [k, c] : f.terms()) out.push_back({k, q.evaluate(h, k), c});
  return out;
}

AlgebraElement specialize(const AffineMonoid& m, const std::vector<HomotopyTerm>& terms, int t) {
  Terms out;
  for (const auto& term : terms)
    if (t == 1 || term.t_power == 0) out[term.key] += term.coeff;
  return AlgebraElement(m, std::move(out));
}

std::vector<GroupElement> support(const AlgebraElement& f) {
  std::vector<GroupElement> out;
  for (const auto& [k, c] : f.terms()) out.push_back(k);
  return out;
}

MonoidIdeal ideal_of_set(const AffineMonoid& m, const std::vector<GroupElement>& s) {
  MonoidIdeal i(m, s);
  i.gens = minimal_ideal_generators(i);
  return i;
}

MonoidIdeal support_ideal(const AlgebraElement& f) { return ideal_of_set(f.monoid(), support(f)); }

Integer vp_element(const AffineMonoid& q, const PrimeIdeal& p, const AlgebraElement& f) {
  same_monoid_check(f.monoid(), q);
  if (f.is_zero()) throw MonoidError(ErrorCode::ZeroElement, "v_p of the zero element");
  Valuation v = height1_valuation(q, p);
  std::optional<Integer> best;
  for (const auto& [k, c] : f.terms()) {
    Integer x = v(k);
    if (!best || x < *best) best = x;
  }
  return *best;
}

std::optional<GroupElement> is_principal_support(const AlgebraElement& f) {
  if (f.is_zero()) return std::nullopt;
  const AffineMonoid& q = f.monoid();
  if (is_toric(q)) {
    // K(f) = (p) iff some p in σ(f) attains the minimum of every height-one
    // valuation over σ(f).
    auto vals = height1_valuations(q);
    Vector mins;
    for (const auto& v : vals) {
      std::optional<Integer> m;
      for (const auto& [k, c] : f.terms()) {
        Integer x = v(k);
        if (!m || x < *m) m = x;
      }
      mins.push_back(*m);
    }
    for (const auto& [k, c] : f.terms()) {
      bool attains = true;
      for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i](k) != mins[i]) attains = false;
      if (attains) return k;
    }
    return std::nullopt;
  }
  auto g = support_ideal(f).gens;
  if (g.size() == 1) return g[0];
  return std::nullopt;
}

bool is_reduced_quotient(const AffineMonoid& q, const MonoidIdeal& k) {
  same_monoid_check(q, k.monoid);
  return is_radical(k);
}

std::vector<PrimeIdeal> hypersurface_components(const AffineMonoid& q, const GroupElement& p) {
  if (!q.contains(p) || q.is_unit(p)) throw MonoidError(ErrorCode::InvalidArgument, "p must be a nonunit of Q");
  std::vector<PrimeIdeal> out;
  for (const auto& prime : spec(q).primes)
    if (prime.height() == 1 && prime.contains(p)) out.push_back(prime);
  return out;
}

// ---------------------------------------------------------------------------

AffineMonoid rees(const AffineMonoid& q, const MonoidIdeal& k) {
  same_monoid_check(q, k.monoid);
  const AbelianGroup& a = q.ambient();
  AbelianGroup b(a.free_rank() + 1, a.torsion());
  std::vector<GroupElement> gens;
  for (const auto& g : q.generators()) gens.push_back(rees_element(q, 0, g));
  for (const auto& g : k.gens) gens.push_back(rees_element(q, 1, g));
  return AffineMonoid(b, gens);
}

GroupElement rees_element(const AffineMonoid& q, const Integer& m, const GroupElement& p) {
  const AbelianGroup& a = q.ambient();
  a.check(p);
  AbelianGroup b(a.free_rank() + 1, a.torsion());
  Vector free{m};
  free.insert(free.end(), p.free.begin(), p.free.end());
  return b.element(free, p.tors);
}

}  // namespace monoidgeom
