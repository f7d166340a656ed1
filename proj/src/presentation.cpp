#include "monoidgeom/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace monoidgeom {

namespace {

void check_word(const FreeElement& w, std::size_t n, const char* what) {
  if (w.size() != n)
    throw MonoidError(ErrorCode::SizeMismatch, std::string(what) + " has " + std::to_string(w.size()) +
                                                   " coordinates, expected " + std::to_string(n));
  for (auto c : w)
    if (c < 0) throw MonoidError(ErrorCode::Validation, std::string(what) + " has a negative coordinate");
}

std::int64_t degree(const FreeElement& w) {
  std::int64_t s = 0;
  for (auto c : w) s += c;
  return s;
}

bool dominates(const FreeElement& w, const FreeElement& a) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] < a[i]) return false;
  return true;
}

FreeElement plus(const FreeElement& a, const FreeElement& b) {
  FreeElement c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

FreeElement minus(const FreeElement& a, const FreeElement& b) {
  FreeElement c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

Vector to_vector(const FreeElement& w) {
  Vector v;
  for (auto c : w) v.emplace_back(static_cast<long>(c));
  return v;
}

struct Parent {
  FreeElement prev;
  ChainStep step;
};

// One side of the bidirectional search.
struct Side {
  std::map<FreeElement, std::optional<Parent>> seen;
  std::vector<FreeElement> frontier;
  bool truncated = false;
};

// Path from the root of `s` to w, as steps root → w.
std::vector<ChainStep> path_to(const Side& s, FreeElement w) {
  std::vector<ChainStep> rev;
  for (;;) {
    const auto& par = s.seen.at(w);
    if (!par) break;
    rev.push_back(par->step);
    w = par->prev;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

// Steps w → root of `s`.
std::vector<ChainStep> path_from(const Side& s, FreeElement w) {
  std::vector<ChainStep> out;
  for (;;) {
    const auto& par = s.seen.at(w);
    if (!par) break;
    ChainStep back = par->step;
    back.forward = !back.forward;
    back.result = par->prev;
    out.push_back(back);
    w = par->prev;
  }
  return out;
}

// Hom to the cyclic monoid N / (i ~ i + p).
struct Cyclic {
  std::int64_t i, p;
  std::int64_t reduce(__int128 s) const {
    if (s < i) return static_cast<std::int64_t>(s);
    return static_cast<std::int64_t>(i + (s - i) % p);
  }
  std::int64_t eval(const FreeElement& w, const std::vector<std::int64_t>& c) const {
    __int128 s = 0;
    for (std::size_t j = 0; j < w.size(); ++j) s += static_cast<__int128>(w[j]) * c[j];
    return reduce(s);
  }
};

bool cyclic_separates(const Presentation& p, const FreeElement& x, const FreeElement& y) {
  const std::size_t n = p.ngens;
  if (n == 0) return false;
  // Keep the number of assignments per monoid around 2e4.
  std::int64_t size_cap = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::pow(2e4, 1.0 / n)));
  size_cap = std::min<std::int64_t>(size_cap, 9);
  for (std::int64_t total = 2; total <= size_cap; ++total)
    for (std::int64_t i = 1; i < total; ++i) {
      Cyclic c{i, total - i};
      std::vector<std::int64_t> img(n, 0);
      for (;;) {
        bool ok = true;
        for (const auto& [l, r] : p.relations)
          if (c.eval(l, img) != c.eval(r, img)) {
            ok = false;
            break;
          }
        if (ok && c.eval(x, img) != c.eval(y, img)) return true;
        std::size_t j = 0;
        while (j < n) {
          if (++img[j] < total) break;
          img[j] = 0;
          ++j;
        }
        if (j == n) break;
      }
    }
  return false;
}

// Hom to the monoid {(k, g) : k < t} ∪ {∞}, where k is a weighted degree,
// g lies in the group presented by the relations whose sides have degree
// below t, and sums of degree >= t collapse to ∞.
bool graded_separates(const Presentation& p, const FreeElement& x, const FreeElement& y) {
  const std::size_t n = p.ngens;
  if (n == 0) return false;
  std::int64_t wmax = 3;
  while (wmax > 1 && std::pow(static_cast<double>(wmax + 1), static_cast<double>(n)) > 256) --wmax;
  if (std::pow(2.0, static_cast<double>(n)) > 4096) return false;
  std::vector<std::int64_t> w(n, 0);
  auto wdeg = [&](const FreeElement& v) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += w[j] * v[j];
    return s;
  };
  for (;;) {
    std::int64_t top = std::max(wdeg(x), wdeg(y));
    for (const auto& [l, r] : p.relations) top = std::max({top, wdeg(l), wdeg(r)});
    for (std::int64_t t = 1; t <= top + 1; ++t) {
      bool ok = true;
      std::vector<Vector> rows;
      for (const auto& [l, r] : p.relations) {
        std::int64_t dl = wdeg(l), dr = wdeg(r);
        if (dl >= t && dr >= t) continue;
        if (dl != dr) {
          ok = false;
          break;
        }
        rows.push_back(to_vector(minus(l, r)));
      }
      if (!ok) continue;
      std::int64_t dx = wdeg(x), dy = wdeg(y);
      if (dx >= t && dy >= t) continue;
      if (dx != dy) return true;
      Cokernel c(rows, n);
      if (c.project(to_vector(x)) != c.project(to_vector(y))) return true;
    }
    std::size_t j = 0;
    while (j < n) {
      if (++w[j] <= wmax) break;
      w[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return false;
}

FreeElement chain_end(const CongruenceWitness& c) { return c.steps.empty() ? c.start : c.steps.back().result; }

CongruenceWitness translate(const CongruenceWitness& c, const FreeElement& t) {
  CongruenceWitness out{plus(c.start, t), c.steps};
  for (auto& s : out.steps) {
    s.translation = plus(s.translation, t);
    s.result = plus(s.result, t);
  }
  return out;
}

CongruenceWitness reversed(const CongruenceWitness& c) {
  CongruenceWitness out{chain_end(c), {}};
  for (std::size_t i = c.steps.size(); i-- > 0;) {
    ChainStep s = c.steps[i];
    s.forward = !s.forward;
    s.result = i == 0 ? c.start : c.steps[i - 1].result;
    out.steps.push_back(std::move(s));
  }
  return out;
}

void append(CongruenceWitness& a, const CongruenceWitness& b) {
  a.steps.insert(a.steps.end(), b.steps.begin(), b.steps.end());
}

// A relation used by the search, with a chain from lhs to rhs through the
// original relations.
struct Rule {
  FreeElement lhs, rhs;
  CongruenceWitness proof;
};

struct UnitInverse {
  FreeElement inverse;
  CongruenceWitness chain;  // 0 → g + inverse
};

// Rules implied by cancelling units. A generator is a unit once some relation
// equates a word containing it with a word of known units.
std::vector<Rule> derived_rules(const Presentation& p) {
  const std::size_t n = p.ngens;
  const FreeElement zero(n, 0);
  std::vector<Rule> rules;
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    const auto& [l, r] = p.relations[k];
    rules.push_back({l, r, {l, {ChainStep{k, true, zero, r}}}});
  }
  std::map<std::size_t, UnitInverse> units;

  auto all_units = [&](const FreeElement& w) {
    for (std::size_t j = 0; j < n; ++j)
      if (w[j] > 0 && !units.count(j)) return false;
    return true;
  };
  // inverse of w and a chain 0 → w + inverse
  auto unit_chain = [&](const FreeElement& w) {
    FreeElement inv = zero;
    CongruenceWitness c{zero, {}};
    FreeElement cur = zero;
    for (std::size_t j = 0; j < n; ++j)
      for (std::int64_t m = 0; m < w[j]; ++m) {
        const auto& u = units.at(j);
        append(c, translate(u.chain, cur));
        cur = chain_end(c);
        inv = plus(inv, u.inverse);
      }
    return std::make_pair(inv, c);
  };
  auto known = [&](const FreeElement& a, const FreeElement& b) {
    if (a == b) return true;
    for (const auto& r : rules)
      if ((r.lhs == a && r.rhs == b) || (r.lhs == b && r.rhs == a)) return true;
    return false;
  };

  const std::size_t max_rules = 4 * p.relations.size() + 16;
  for (bool changed = true; changed && rules.size() < max_rules;) {
    changed = false;
    for (std::size_t k = 0; k < rules.size() && rules.size() < max_rules; ++k) {
      for (bool flip : {false, true}) {
        const Rule rule = rules[k];
        const FreeElement& l = flip ? rule.rhs : rule.lhs;
        const FreeElement& r = flip ? rule.lhs : rule.rhs;
        CongruenceWitness proof = flip ? reversed(rule.proof) : rule.proof;  // l → r
        if (!all_units(r) || all_units(l)) continue;
        auto [rinv, rchain] = unit_chain(r);
        // 0 → r + r^{-1} → l + r^{-1}
        CongruenceWitness c = rchain;
        append(c, translate(reversed(proof), rinv));
        for (std::size_t j = 0; j < n; ++j) {
          if (l[j] == 0 || units.count(j)) continue;
          FreeElement e = zero;
          e[j] = 1;
          units[j] = {plus(minus(l, e), rinv), c};
        }
        changed = true;
      }
    }
    for (std::size_t k = 0; k < rules.size() && rules.size() < max_rules; ++k) {
      const Rule rule = rules[k];
      FreeElement common = zero;
      for (std::size_t j = 0; j < n; ++j)
        if (units.count(j)) common[j] = std::min(rule.lhs[j], rule.rhs[j]);
      if (common == zero) continue;
      FreeElement l = minus(rule.lhs, common), r = minus(rule.rhs, common);
      if (known(l, r)) continue;
      auto [cinv, cchain] = unit_chain(common);
      // l → l + c + c^{-1} → r + c + c^{-1} → r
      CongruenceWitness proof = translate(cchain, l);
      append(proof, translate(rule.proof, cinv));
      append(proof, translate(reversed(cchain), r));
      rules.push_back({l, r, std::move(proof)});
      changed = true;
    }
  }
  return rules;
}

}  // namespace

void Presentation::validate() const {
  for (const auto& [l, r] : relations) {
    check_word(l, ngens, "relation side");
    check_word(r, ngens, "relation side");
  }
}

std::optional<FreeElement> replay(const Presentation& p, const CongruenceWitness& w) {
  FreeElement cur = w.start;
  for (const auto& s : w.steps) {
    if (s.relation >= p.relations.size() || s.translation.size() != cur.size()) return std::nullopt;
    const auto& [l, r] = p.relations[s.relation];
    const FreeElement& from = s.forward ? l : r;
    const FreeElement& to = s.forward ? r : l;
    if (plus(s.translation, from) != cur) return std::nullopt;
    for (auto c : s.translation)
      if (c < 0) return std::nullopt;
    cur = plus(s.translation, to);
    if (cur != s.result) return std::nullopt;
  }
  return cur;
}

std::string_view to_string(WordVerdict v) {
  switch (v) {
    case WordVerdict::Equal: return "equal";
    case WordVerdict::Distinct: return "distinct";
    case WordVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

WordResult words_equal(const Presentation& p, const FreeElement& x, const FreeElement& y, std::size_t bound) {
  p.validate();
  check_word(x, p.ngens, "x");
  check_word(y, p.ngens, "y");
  WordResult out;
  if (x == y) {
    out.verdict = WordVerdict::Equal;
    out.witness = CongruenceWitness{x, {}};
    out.reason = "chain";
    return out;
  }
  Groupification g = groupify(p);
  if (g.apply(x) != g.apply(y)) {
    out.verdict = WordVerdict::Distinct;
    out.reason = "group";
    return out;
  }

  const std::int64_t cap = static_cast<std::int64_t>(bound) + std::max(degree(x), degree(y));
  Side a, b;
  a.seen.emplace(x, std::nullopt);
  a.frontier = {x};
  b.seen.emplace(y, std::nullopt);
  b.frontier = {y};

  const std::vector<Rule> rules = derived_rules(p);
  auto expand = [&](Side& s, const Side& other) -> std::optional<FreeElement> {
    std::vector<FreeElement> next;
    for (const auto& w : s.frontier)
      for (std::size_t k = 0; k < rules.size(); ++k)
        for (bool fwd : {true, false}) {
          const FreeElement& l = rules[k].lhs;
          const FreeElement& r = rules[k].rhs;
          const FreeElement& from = fwd ? l : r;
          const FreeElement& to = fwd ? r : l;
          if (!dominates(w, from)) continue;
          FreeElement t = minus(w, from);
          FreeElement v = plus(t, to);
          if (degree(v) > cap) {
            s.truncated = true;
            continue;
          }
          if (s.seen.count(v)) continue;
          s.seen.emplace(v, Parent{w, ChainStep{k, fwd, t, v}});
          if (other.seen.count(v)) return v;
          next.push_back(std::move(v));
        }
    s.frontier = std::move(next);
    return std::nullopt;
  };

  for (;;) {
    if (a.frontier.empty() && !a.truncated) break;
    if (b.frontier.empty() && !b.truncated) break;
    if (a.frontier.empty() && b.frontier.empty()) break;
    bool use_a = !a.frontier.empty() && (b.frontier.empty() || a.frontier.size() <= b.frontier.size());
    auto meet = use_a ? expand(a, b) : expand(b, a);
    if (meet) {
      auto steps = path_to(a, *meet);
      auto tail = path_from(b, *meet);
      steps.insert(steps.end(), tail.begin(), tail.end());
      // Expand derived rules into steps through the original relations.
      CongruenceWitness w{x, {}};
      for (const auto& st : steps) {
        CongruenceWitness piece = rules[st.relation].proof;
        if (!st.forward) piece = reversed(piece);
        append(w, translate(piece, st.translation));
      }
      out.verdict = WordVerdict::Equal;
      out.witness = std::move(w);
      out.reason = "chain";
      return out;
    }
  }
  if ((a.frontier.empty() && !a.truncated) || (b.frontier.empty() && !b.truncated)) {
    out.verdict = WordVerdict::Distinct;
    out.reason = "closure";
    return out;
  }
  if (cyclic_separates(p, x, y)) {
    out.verdict = WordVerdict::Distinct;
    out.reason = "cyclic";
    return out;
  }
  if (graded_separates(p, x, y)) {
    out.verdict = WordVerdict::Distinct;
    out.reason = "graded";
    return out;
  }
  return out;
}

Presentation coequalizer(const Presentation& q, const std::vector<FreeElement>& theta1,
                         const std::vector<FreeElement>& theta2) {
  q.validate();
  if (theta1.size() != theta2.size())
    throw MonoidError(ErrorCode::ArityMismatch, "the two maps have different source arities");
  Presentation out = q;
  for (std::size_t i = 0; i < theta1.size(); ++i) {
    check_word(theta1[i], q.ngens, "image");
    check_word(theta2[i], q.ngens, "image");
    auto rel = std::make_pair(theta1[i], theta2[i]);
    if (rel.first == rel.second) continue;
    if (std::find(out.relations.begin(), out.relations.end(), rel) == out.relations.end())
      out.relations.push_back(std::move(rel));
  }
  return out;
}

Presentation pushout(const Presentation& q1, const std::vector<FreeElement>& u1, const Presentation& q2,
                     const std::vector<FreeElement>& u2) {
  q1.validate();
  q2.validate();
  if (u1.size() != u2.size()) throw MonoidError(ErrorCode::ArityMismatch, "the two maps have different sources");
  const std::size_t n1 = q1.ngens, n2 = q2.ngens;
  auto left = [&](const FreeElement& w) {
    FreeElement v(w);
    v.resize(n1 + n2, 0);
    return v;
  };
  auto right = [&](const FreeElement& w) {
    FreeElement v(n1, 0);
    v.insert(v.end(), w.begin(), w.end());
    return v;
  };
  Presentation out{n1 + n2, {}};
  for (const auto& [l, r] : q1.relations) out.relations.emplace_back(left(l), left(r));
  for (const auto& [l, r] : q2.relations) out.relations.emplace_back(right(l), right(r));
  for (std::size_t i = 0; i < u1.size(); ++i) {
    check_word(u1[i], n1, "image");
    check_word(u2[i], n2, "image");
    out.relations.emplace_back(left(u1[i]), right(u2[i]));
  }
  return out;
}

GroupElement Groupification::apply(const FreeElement& x) const { return coker.project(to_vector(x)); }

Groupification groupify(const Presentation& p) {
  p.validate();
  std::vector<Vector> rows;
  for (const auto& [l, r] : p.relations) {
    Vector d = to_vector(minus(l, r));
    if (!is_zero(d)) rows.push_back(std::move(d));
  }
  Groupification g{Cokernel(rows, p.ngens), {}};
  for (std::size_t i = 0; i < p.ngens; ++i) {
    FreeElement e(p.ngens, 0);
    e[i] = 1;
    g.images.push_back(g.apply(e));
  }
  return g;
}

AffineMonoid integralize(const Presentation& p) {
  Groupification g = groupify(p);
  return AffineMonoid(g.group(), g.images);
}

namespace {

// One vector of each ± pair, the one whose first nonzero entry is positive.
std::vector<Vector> graver_moves(const std::vector<Vector>& lattice, std::size_t n) {
  std::vector<Vector> out;
  if (lattice.empty()) return out;
  HermiteForm hf = hermite_normal_form(IntMatrix::from_rows(lattice, n));
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < hf.rank; ++i) basis.push_back(hf.H.row(i));
  for (auto& g : graver_basis(basis, n)) {
    auto it = std::find_if(g.begin(), g.end(), [](const Integer& c) { return c != 0; });
    if (it != g.end() && *it > 0) out.push_back(std::move(g));
  }
  return out;
}

std::pair<FreeElement, FreeElement> split(const Vector& v) {
  FreeElement pos, neg;
  for (const auto& c : v) {
    if (!c.fits_slong_p()) throw MonoidError(ErrorCode::InvalidArgument, "coordinate out of range");
    long x = c.get_si();
    pos.push_back(x > 0 ? x : 0);
    neg.push_back(x < 0 ? -x : 0);
  }
  return {pos, neg};
}

}  // namespace

Presentation tautological_presentation(const AffineMonoid& m) {
  const std::size_t n = m.num_generators();
  Presentation out{n, {}};
  for (const auto& g : graver_moves(m.gp().relations(), n)) out.relations.push_back(split(g));
  return out;
}

IntegralityResult is_integral(const Presentation& p, std::size_t bound) {
  p.validate();
  std::vector<Vector> rows;
  for (const auto& [l, r] : p.relations) rows.push_back(to_vector(minus(l, r)));
  IntegralityResult out;
  // The congruence is the kernel of λ iff every Graver move of the relation
  // lattice is a consequence of the relations.
  bool unknown = false;
  for (const auto& g : graver_moves(rows, p.ngens)) {
    auto [u, v] = split(g);
    WordResult r = words_equal(p, u, v, bound);
    if (r.verdict == WordVerdict::Equal) continue;
    if (r.verdict == WordVerdict::Unknown) {
      unknown = true;
      continue;
    }
    // u, v have the same image in the group, so u + n ~ v + n for some n.
    out.verdict = Verdict::False;
    out.m = u;
    out.p = v;
    std::vector<FreeElement> layer{FreeElement(p.ngens, 0)};
    std::set<FreeElement> tried;
    for (std::size_t d = 0; d <= bound && !out.n; ++d) {
      std::vector<FreeElement> next;
      for (const auto& t : layer) {
        if (words_equal(p, plus(u, t), plus(v, t), bound).verdict == WordVerdict::Equal) {
          out.n = t;
          break;
        }
        for (std::size_t i = 0; i < p.ngens; ++i) {
          FreeElement s = t;
          ++s[i];
          if (tried.insert(s).second) next.push_back(std::move(s));
        }
      }
      layer = std::move(next);
    }
    return out;
  }
  out.verdict = unknown ? Verdict::Unknown : Verdict::True;
  return out;
}

}  // namespace monoidgeom
