#include "monoidgeom/specm.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace monoidgeom {

namespace {

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::vector<std::size_t> mask_indices(const std::vector<bool>& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.push_back(i);
  return out;
}

bool mask_less(const std::vector<bool>& a, const std::vector<bool>& b) {
  auto ia = mask_indices(a), ib = mask_indices(b);
  if (ia.size() != ib.size()) return ia.size() < ib.size();
  return ia < ib;
}

std::vector<bool> zero_set(const AffineMonoid& m, const Vector& h) {
  std::vector<bool> z(m.num_generators());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = m.evaluate(h, m.generators()[i]) == 0;
  return z;
}

Vector functional_for(const AffineMonoid& m, const std::vector<bool>& mask) {
  Vector f(m.dimension());
  for (const auto& h : m.facets())
    if (subset_of(mask, zero_set(m, h))) f = add(f, h);
  return f;
}

// Elements of M reachable with at most `bound` generators, in breadth-first
// discovery order (generator order within a layer).
std::vector<GroupElement> layered_elements(const AffineMonoid& m, std::size_t bound) {
  std::set<GroupElement> seen{m.ambient().zero()};
  std::vector<GroupElement> out{m.ambient().zero()};
  std::size_t begin = 0;
  for (std::size_t layer = 0; layer < bound; ++layer) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& g : m.generators()) {
        GroupElement y = m.ambient().add(out[i], g);
        if (seen.insert(y).second) out.push_back(y);
      }
    begin = end;
  }
  return out;
}

SpecPoset build_poset(std::vector<PrimeIdeal> primes, std::vector<std::size_t> heights) {
  SpecPoset s;
  s.primes = std::move(primes);
  s.heights = std::move(heights);
  const std::size_t n = s.primes.size();
  s.order.assign(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.order[i][j] = subset_of(s.primes[j].face.mask, s.primes[i].face.mask);
  std::vector<std::size_t> minimal, maximal;
  for (std::size_t i = 0; i < n; ++i) {
    bool is_min = true, is_max = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (s.order[j][i]) is_min = false;
      if (s.order[i][j]) is_max = false;
    }
    if (is_min) minimal.push_back(i);
    if (is_max) maximal.push_back(i);
  }
  if (minimal.size() == 1) s.generic = minimal[0];
  if (maximal.size() == 1) s.closed = maximal[0];
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::size_t> Face::indices() const { return mask_indices(mask); }
std::size_t Face::size() const { return indices().size(); }

AffineMonoid Face::submonoid() const {
  std::vector<GroupElement> g;
  for (auto i : indices()) g.push_back(monoid.generators()[i]);
  return AffineMonoid(monoid.ambient(), g);
}

bool Face::contains(const GroupElement& x) const { return monoid.evaluate(functional, x) == 0; }

std::size_t Face::dimension() const {
  std::vector<Vector> rows;
  for (auto i : indices()) rows.push_back(monoid.bar(monoid.generators()[i]).free);
  return rank(rows, monoid.dimension());
}

std::string Face::label() const {
  std::string s = "{";
  bool first = true;
  for (auto i : indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::vector<Face> faces(const AffineMonoid& m) {
  std::vector<std::vector<bool>> facet_sets;
  for (const auto& h : m.facets()) facet_sets.push_back(zero_set(m, h));
  std::set<std::vector<bool>> masks{std::vector<bool>(m.num_generators(), true)};
  std::vector<std::vector<bool>> frontier(masks.begin(), masks.end());
  while (!frontier.empty()) {
    std::vector<std::vector<bool>> next;
    for (const auto& f : frontier)
      for (const auto& z : facet_sets) {
        std::vector<bool> x(f.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = f[i] && z[i];
        if (masks.insert(x).second) next.push_back(x);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<bool>> sorted(masks.begin(), masks.end());
  std::sort(sorted.begin(), sorted.end(), mask_less);
  std::vector<Face> out;
  for (auto& mk : sorted) {
    Vector f = functional_for(m, mk);
    out.push_back({m, std::move(mk), std::move(f)});
  }
  return out;
}

Face face_from_mask(const AffineMonoid& m, const std::vector<bool>& mask) {
  if (mask.size() != m.num_generators()) throw MonoidError(ErrorCode::SizeMismatch, "face mask length");
  for (auto& f : faces(m))
    if (f.mask == mask) return f;
  throw MonoidError(ErrorCode::InvalidArgument, "mask does not describe a face");
}

bool PrimeIdeal::contains(const GroupElement& x) const { return face.monoid.contains(x) && !face.contains(x); }

std::size_t PrimeIdeal::height() const { return face.monoid.dimension() - face.dimension(); }

std::size_t SpecPoset::length() const {
  std::size_t best = 0;
  for (auto l : maximal_chain_lengths()) best = std::max(best, l);
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> SpecPoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = primes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !order[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && order[i][k] && order[k][j]) cover = false;
      if (cover) edges.emplace_back(i, j);
    }
  return edges;
}

std::vector<std::size_t> SpecPoset::maximal_chain_lengths() const {
  const std::size_t n = primes.size();
  auto edges = hasse_edges();
  std::vector<std::vector<std::size_t>> up(n);
  std::vector<bool> has_below(n);
  for (auto [i, j] : edges) {
    up[i].push_back(j);
    has_below[j] = true;
  }
  std::set<std::size_t> lengths;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t v, std::size_t len) {
    if (up[v].empty()) {
      lengths.insert(len);
      return;
    }
    for (auto w : up[v]) walk(w, len + 1);
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!has_below[i]) walk(i, 0);
  return {lengths.begin(), lengths.end()};
}

SpecPoset spec(const AffineMonoid& m) {
  std::vector<PrimeIdeal> primes;
  std::vector<std::size_t> heights;
  auto fs = faces(m);
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    primes.push_back({*it});
    heights.push_back(primes.back().height());
  }
  return build_poset(std::move(primes), std::move(heights));
}

std::string to_dot(const SpecPoset& s, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    os << "  p" << i << " [label=\"" << s.primes[i].face.label() << "\"];\n";
  for (auto [i, j] : s.hasse_edges()) os << "  p" << i << " -> p" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string faces_to_dot(const std::vector<Face>& fs) {
  std::ostringstream os;
  os << "digraph faces {\n";
  for (std::size_t i = 0; i < fs.size(); ++i) os << "  f" << i << " [label=\"" << fs[i].label() << "\"];\n";
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (i == j || !subset_of(fs[i].mask, fs[j].mask)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < fs.size() && cover; ++k)
        if (k != i && k != j && subset_of(fs[i].mask, fs[k].mask) && subset_of(fs[k].mask, fs[j].mask))
          cover = false;
      if (cover) os << "  f" << i << " -> f" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::size_t dimension(const AffineMonoid& m) { return spec(m).length(); }
std::size_t height(const PrimeIdeal& p) { return p.height(); }

// ---------------------------------------------------------------------------

MonoidIdeal::MonoidIdeal(AffineMonoid m, std::vector<GroupElement> g) : monoid(std::move(m)), gens(std::move(g)) {
  for (const auto& x : gens) {
    monoid.ambient().check(x);
    if (!monoid.contains(x)) throw MonoidError(ErrorCode::NotMember, to_string(x) + " is not in the monoid");
  }
}

bool MonoidIdeal::contains(const GroupElement& q) const {
  monoid.ambient().check(q);
  if (!monoid.contains(q)) return false;
  for (const auto& s : gens)
    if (monoid.divides(s, q)) return true;
  return false;
}

bool MonoidIdeal::is_proper() const {
  for (const auto& s : gens)
    if (monoid.is_unit(s)) return false;
  return true;
}

MonoidIdeal unit_ideal(const AffineMonoid& m) { return MonoidIdeal(m, {m.ambient().zero()}); }

MonoidIdeal maximal_ideal(const AffineMonoid& m) {
  std::vector<GroupElement> g;
  std::set<std::size_t> u(m.unit_generators().begin(), m.unit_generators().end());
  for (std::size_t i = 0; i < m.num_generators(); ++i)
    if (!u.count(i)) g.push_back(m.generators()[i]);
  return MonoidIdeal(m, g);
}

MonoidIdeal prime_as_ideal(const PrimeIdeal& p) {
  std::vector<GroupElement> g;
  for (std::size_t i = 0; i < p.face.mask.size(); ++i)
    if (!p.face.mask[i]) g.push_back(p.face.monoid.generators()[i]);
  return MonoidIdeal(p.face.monoid, g);
}

namespace {

void check_same(const MonoidIdeal& i, const MonoidIdeal& j) {
  if (!(i.monoid == j.monoid)) throw MonoidError(ErrorCode::MonoidMismatch, "ideals of different monoids");
}

}  // namespace

bool ideal_contains(const MonoidIdeal& i, const GroupElement& q) { return i.contains(q); }

MonoidIdeal ideal_union(const MonoidIdeal& i, const MonoidIdeal& j) {
  check_same(i, j);
  auto g = i.gens;
  g.insert(g.end(), j.gens.begin(), j.gens.end());
  MonoidIdeal out(i.monoid, {});
  out.gens = minimal_ideal_generators(MonoidIdeal(i.monoid, g));
  return out;
}

MonoidIdeal ideal_sum(const MonoidIdeal& i, const MonoidIdeal& j) { return ideal_union(i, j); }

MonoidIdeal ideal_product(const MonoidIdeal& i, const MonoidIdeal& j) {
  check_same(i, j);
  std::vector<GroupElement> g;
  for (const auto& a : i.gens)
    for (const auto& b : j.gens) g.push_back(i.monoid.ambient().add(a, b));
  MonoidIdeal out(i.monoid, {});
  out.gens = minimal_ideal_generators(MonoidIdeal(i.monoid, g));
  return out;
}

bool intersection_contains(const MonoidIdeal& i, const MonoidIdeal& j, const GroupElement& q) {
  check_same(i, j);
  return i.contains(q) && j.contains(q);
}

MonoidIdeal ideal_intersection(const MonoidIdeal& i, const MonoidIdeal& j, std::size_t bound) {
  check_same(i, j);
  const AffineMonoid& m = i.monoid;
  auto xs = m.sums_up_to(bound);
  std::vector<GroupElement> g;
  for (const auto* pair : {&i, &j}) {
    const MonoidIdeal& other = pair == &i ? j : i;
    for (const auto& a : pair->gens)
      for (const auto& x : xs) {
        GroupElement c = m.ambient().add(a, x);
        if (other.contains(c)) g.push_back(c);
      }
  }
  MonoidIdeal out(m, {});
  out.gens = minimal_ideal_generators(MonoidIdeal(m, g));
  return out;
}

MonoidIdeal ideal_power(const MonoidIdeal& i, std::size_t n) {
  MonoidIdeal out = unit_ideal(i.monoid);
  for (std::size_t k = 0; k < n; ++k) out = ideal_product(out, i);
  return out;
}

bool same_ideal(const MonoidIdeal& i, const MonoidIdeal& j) {
  check_same(i, j);
  for (const auto& g : i.gens)
    if (!j.contains(g)) return false;
  for (const auto& g : j.gens)
    if (!i.contains(g)) return false;
  return true;
}

std::vector<GroupElement> minimal_ideal_generators(const MonoidIdeal& ideal) {
  std::vector<GroupElement> g = ideal.gens;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < g.size() && keep; ++j) {
      if (i == j || !ideal.monoid.divides(g[j], g[i])) continue;
      if (!ideal.monoid.divides(g[i], g[j]) || j < i) keep = false;
    }
    if (keep) out.push_back(g[i]);
  }
  return out;
}

std::vector<std::size_t> zero_locus(const SpecPoset& s, const MonoidIdeal& ideal) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool all = true;
    for (const auto& g : ideal.gens)
      if (!s.primes[i].contains(g)) all = false;
    if (all) out.push_back(i);
  }
  return out;
}

namespace {

// Faces containing no generator of K, i.e. complements of primes over K.
std::vector<Face> avoiding_faces(const MonoidIdeal& k) {
  std::vector<Face> out;
  for (auto& f : faces(k.monoid)) {
    bool avoids = true;
    for (const auto& g : k.gens)
      if (f.contains(g)) avoids = false;
    if (avoids) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Face> maximal_faces(const std::vector<Face>& fs) {
  std::vector<Face> out;
  for (const auto& f : fs) {
    bool maximal = true;
    for (const auto& g : fs)
      if (g.mask != f.mask && subset_of(f.mask, g.mask)) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

}  // namespace

bool radical_contains(const MonoidIdeal& k, const GroupElement& q) {
  if (!k.monoid.contains(q)) return false;
  for (const auto& f : avoiding_faces(k))
    if (f.contains(q)) return false;
  return true;
}

std::vector<GroupElement> radical_generators(const MonoidIdeal& k) {
  const AffineMonoid& m = k.monoid;
  if (k.gens.empty()) return {};
  auto fs = maximal_faces(avoiding_faces(k));
  if (fs.empty()) return {m.ambient().zero()};
  std::set<std::size_t> u(m.unit_generators().begin(), m.unit_generators().end());
  std::vector<std::size_t> nonunit;
  for (std::size_t i = 0; i < m.num_generators(); ++i)
    if (!u.count(i)) nonunit.push_back(i);
  if (nonunit.size() > 20) throw MonoidError(ErrorCode::DimensionLimit, "too many generators for radical computation");
  // Minimal sets of generators meeting the complement of every maximal face
  // avoiding K.
  std::vector<std::uint32_t> hitting;
  const std::uint32_t total = 1u << nonunit.size();
  std::vector<std::uint32_t> order(total);
  for (std::uint32_t s = 0; s < total; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (auto s : order) {
    bool dominated = false;
    for (auto h : hitting)
      if ((h & s) == h) dominated = true;
    if (dominated) continue;
    bool hits_all = true;
    for (const auto& f : fs) {
      bool hit = false;
      for (std::size_t b = 0; b < nonunit.size(); ++b)
        if ((s >> b & 1u) && !f.mask[nonunit[b]]) hit = true;
      if (!hit) hits_all = false;
    }
    if (hits_all) hitting.push_back(s);
  }
  std::vector<GroupElement> out;
  for (auto s : hitting) {
    GroupElement x = m.ambient().zero();
    for (std::size_t b = 0; b < nonunit.size(); ++b)
      if (s >> b & 1u) x = m.ambient().add(x, m.generators()[nonunit[b]]);
    out.push_back(x);
  }
  return minimal_ideal_generators(MonoidIdeal(m, out));
}

bool is_radical(const MonoidIdeal& k) {
  for (const auto& g : radical_generators(k))
    if (!k.contains(g)) return false;
  return true;
}

namespace {

PrimaryResult search_witness(const MonoidIdeal& k, std::size_t bound,
                             const std::function<bool(const GroupElement&)>& outside_radical) {
  const AffineMonoid& m = k.monoid;
  auto elems = layered_elements(m, bound);
  for (const auto& a : elems) {
    if (!outside_radical(a)) continue;
    for (const auto& x : elems)
      if (!k.contains(x) && k.contains(m.ambient().add(a, x))) return {Verdict::False, a, x};
  }
  return {Verdict::Unknown, std::nullopt, std::nullopt};
}

}  // namespace

PrimaryResult is_primary(const MonoidIdeal& k, std::size_t bound) {
  if (!k.is_proper()) throw MonoidError(ErrorCode::ImproperIdeal, "primary test needs a proper ideal");
  const AffineMonoid& m = k.monoid;
  if (k.gens.empty()) return {Verdict::True, std::nullopt, std::nullopt};
  auto fs = maximal_faces(avoiding_faces(k));
  if (fs.size() != 1) {
    // √K is an intersection of several primes, hence not prime.
    auto r = search_witness(k, bound, [&](const GroupElement& a) { return !radical_contains(k, a); });
    r.verdict = Verdict::False;
    return r;
  }
  const Face& f = fs[0];
  if (f.size() == m.unit_generators().size()) return {Verdict::True, std::nullopt, std::nullopt};

  const std::size_t d = m.dimension();
  if (is_saturated(m) && d + 1 <= HilbertOptions{}.max_dimension) {
    // K is primary iff (K : g) = K for every generator g of the face. For
    // saturated M each (K : g) is cut out by facet inequalities, and its
    // generators are the height-one Hilbert basis elements of the
    // homogenized cone.
    const AbelianGroup& bar = m.sharp_group();
    for (auto gi : f.indices()) {
      const GroupElement& g = m.generators()[gi];
      if (m.is_unit(g)) continue;
      for (const auto& c : k.gens) {
        std::vector<Vector> ineqs;
        for (const auto& h : m.facets()) {
          Integer shift = m.evaluate(h, c) - m.evaluate(h, g);
          if (shift < 0) shift = 0;
          Vector row = h;
          row.push_back(-shift);
          ineqs.push_back(std::move(row));
        }
        Vector t(d + 1);
        t[d] = 1;
        ineqs.push_back(t);
        for (const auto& v : hilbert_basis_of_inequalities(ineqs, d + 1)) {
          if (v[d] != 1) continue;
          Vector y(v.begin(), v.end() - 1);
          GroupElement x = m.lift_bar(bar.element(y));
          if (!k.contains(x)) return {Verdict::False, g, x};
        }
      }
    }
    return {Verdict::True, std::nullopt, std::nullopt};
  }
  return search_witness(k, bound, [&](const GroupElement& a) { return f.contains(a); });
}

Localization localize(const AffineMonoid& m, const Face& f) {
  std::vector<GroupElement> g = m.generators();
  for (auto i : f.indices()) g.push_back(m.ambient().neg(m.generators()[i]));
  AffineMonoid mf(m.ambient(), g);
  return {mf, MonoidHom(m, mf, m.generators())};
}

SpecPoset spec_idealized(const MonoidIdeal& k) {
  const AffineMonoid& m = k.monoid;
  if (!k.is_proper() && m.num_generators() != 0)
    throw MonoidError(ErrorCode::NotAcceptable, "K must be a proper ideal or the monoid must be zero");
  SpecPoset full = spec(m);
  std::vector<PrimeIdeal> primes;
  std::vector<std::size_t> heights;
  for (auto i : zero_locus(full, k)) {
    primes.push_back(full.primes[i]);
    heights.push_back(full.heights[i]);
  }
  return build_poset(std::move(primes), std::move(heights));
}

}  // namespace monoidgeom
