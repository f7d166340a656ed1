#include <algorithm>
#include <map>
#include <limits>
#include <set>

#include "monoidgeom/algebra.hpp"

namespace monoidgeom {

namespace {

void require_sharp(const AffineMonoid& q) {
  if (!is_sharp(q)) throw MonoidError(ErrorCode::NotSharp, "truncated series need a sharp monoid");
}

std::size_t max_length(const AffineMonoid& q, const std::vector<GroupElement>& irr, const GroupElement& x,
                       std::size_t cap, std::map<GroupElement, std::size_t>& memo) {
  if (x == q.ambient().zero()) return 0;
  auto it = memo.find(x);
  if (it != memo.end()) return it->second;
  std::size_t best = 0;
  for (const auto& a : irr) {
    GroupElement rest = q.ambient().sub(x, a);
    if (!q.contains(rest)) continue;
    best = std::max(best, 1 + max_length(q, irr, rest, cap, memo));
    if (best >= cap) break;
  }
  best = std::min(best, cap);
  memo.emplace(x, best);
  return best;
}

}  // namespace

std::size_t max_factorization_length(const AffineMonoid& q, const GroupElement& x, std::size_t cap) {
  require_sharp(q);
  if (!q.contains(x)) throw MonoidError(ErrorCode::NotMember, to_string(x) + " is not in the monoid");
  std::map<GroupElement, std::size_t> memo;
  return max_length(q, irreducibles(q), x, cap, memo);
}

std::vector<GroupElement> series_truncate(const AffineMonoid& q, std::size_t n) {
  require_sharp(q);
  if (n == 0) return {};
  auto irr = irreducibles(q);
  std::map<GroupElement, std::size_t> memo;
  std::set<GroupElement> basis{q.ambient().zero()};
  std::vector<GroupElement> frontier{q.ambient().zero()};
  // An element outside (Q^+)^n has every factorization shorter than n, so it
  // is reached by adding irreducibles to smaller basis elements.
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& a : irr) {
        GroupElement y = q.ambient().add(x, a);
        if (basis.count(y)) continue;
        if (max_length(q, irr, y, n, memo) < n) {
          basis.insert(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return {basis.begin(), basis.end()};
}

TruncatedSeries to_series(const AlgebraElement& f, std::size_t n) {
  auto basis = series_truncate(f.monoid(), n);
  std::set<GroupElement> b(basis.begin(), basis.end());
  TruncatedSeries s{f.monoid(), n, {}};
  for (const auto& [k, c] : f.terms())
    if (b.count(k)) s.terms.emplace(k, c);
  return s;
}

namespace {

void check_pair(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.monoid == b.monoid)) throw MonoidError(ErrorCode::MonoidMismatch, "series over different monoids");
  if (a.order != b.order) throw MonoidError(ErrorCode::OrderMismatch, "series of different truncation orders");
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_pair(a, b);
  TruncatedSeries s = a;
  for (const auto& [k, c] : b.terms) s.terms[k] += c;
  std::erase_if(s.terms, [](const auto& kv) { return kv.second == 0; });
  return s;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_pair(a, b);
  auto basis = series_truncate(a.monoid, a.order);
  std::set<GroupElement> keep(basis.begin(), basis.end());
  TruncatedSeries s{a.monoid, a.order, {}};
  const AbelianGroup& g = a.monoid.ambient();
  for (const auto& [p, x] : a.terms)
    for (const auto& [q, y] : b.terms) {
      GroupElement k = g.add(p, q);
      if (keep.count(k)) s.terms[k] += x * y;
    }
  std::erase_if(s.terms, [](const auto& kv) { return kv.second == 0; });
  return s;
}

TruncatedSeries series_restrict(const TruncatedSeries& a, std::size_t n) {
  if (n > a.order) throw MonoidError(ErrorCode::OrderMismatch, "cannot raise the truncation order");
  auto basis = series_truncate(a.monoid, n);
  std::set<GroupElement> keep(basis.begin(), basis.end());
  TruncatedSeries s{a.monoid, n, {}};
  for (const auto& [k, c] : a.terms)
    if (keep.count(k)) s.terms.emplace(k, c);
  return s;
}

Cofinality cofinality_check(const AffineMonoid& q, const Vector& h, std::size_t n) {
  require_sharp(q);
  if (h.size() != q.dimension()) throw MonoidError(ErrorCode::DimensionMismatch, "functional length");
  for (const auto& g : q.generators())
    if (q.evaluate(h, g) <= 0) throw MonoidError(ErrorCode::NonLocalFunctional, "functional is not local");
  auto irr = irreducibles(q);
  std::map<GroupElement, std::size_t> memo;
  const std::size_t cap = std::numeric_limits<std::size_t>::max() / 2;

  // Elements with h <= n.
  std::set<GroupElement> low{q.ambient().zero()};
  std::vector<GroupElement> frontier{q.ambient().zero()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& a : irr) {
        GroupElement y = q.ambient().add(x, a);
        if (q.evaluate(h, y) > Integer(static_cast<unsigned long>(n))) continue;
        if (low.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  Cofinality out;
  std::size_t longest = 0;
  for (const auto& x : low) longest = std::max(longest, max_length(q, irr, x, cap, memo));
  out.m1 = longest + 1;
  out.m2 = 0;
  for (const auto& x : series_truncate(q, n)) {
    Integer v = q.evaluate(h, x);
    if (v > out.m2) out.m2 = v;
  }
  return out;
}

}  // namespace monoidgeom
