#include <deque>
#include <set>

#include "monoidgeom/lattice.hpp"

namespace monoidgeom {

namespace {

// g ⊑ s: same orthant and |g_i| <= |s_i| everywhere.
bool conformal_le(const Vector& g, const Vector& s) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (sgn(g[i]) != sgn(s[i]) || abs(g[i]) > abs(s[i])) return false;
  }
  return true;
}

Vector normal_form(Vector s, const std::vector<Vector>& g) {
  bool changed = true;
  while (changed && !is_zero(s)) {
    changed = false;
    for (const auto& x : g)
      if (conformal_le(x, s)) {
        s = sub(s, x);
        changed = true;
        break;
      }
  }
  return s;
}

}  // namespace

// Completion procedure: start from a symmetric generating set and add the
// normal forms of all pairwise sums until nothing new appears.
std::vector<Vector> graver_basis(const std::vector<Vector>& basis, std::size_t n) {
  std::vector<Vector> g;
  for (const auto& b : basis) {
    if (b.size() != n) throw MonoidError(ErrorCode::DimensionMismatch, "graver basis input");
    if (is_zero(b)) continue;
    g.push_back(b);
    g.push_back(negate(b));
  }
  std::deque<Vector> pending;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pending.push_back(add(g[i], g[j]));
  while (!pending.empty()) {
    Vector s = std::move(pending.front());
    pending.pop_front();
    Vector f = normal_form(std::move(s), g);
    if (is_zero(f)) continue;
    for (const auto& x : g) pending.push_back(add(f, x));
    g.push_back(std::move(f));
  }
  std::set<Vector> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < g.size() && minimal; ++j)
      if (j != i && g[j] != g[i] && conformal_le(g[j], g[i])) minimal = false;
    if (minimal) out.insert(g[i]);
  }
  return {out.begin(), out.end()};
}

}  // namespace monoidgeom
