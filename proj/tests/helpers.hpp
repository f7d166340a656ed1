#pragma once

#include <vector>

#include "monoidgeom/affine.hpp"

namespace testing {

using namespace monoidgeom;

inline Vector vec(std::vector<long> xs) { return Vector(xs.begin(), xs.end()); }

inline GroupElement el(const AbelianGroup& g, std::vector<long> flat) { return g.from_flat(vec(flat)); }

inline AffineMonoid make(std::size_t r, std::vector<long> tors, std::vector<std::vector<long>> gens) {
  AbelianGroup g(r, vec(tors));
  std::vector<GroupElement> gs;
  for (auto& x : gens) gs.push_back(el(g, x));
  return AffineMonoid(g, gs);
}

inline AffineMonoid nk(std::size_t k) {
  std::vector<std::vector<long>> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<long> e(k, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return make(k, {}, gens);
}

inline AffineMonoid n23() { return make(1, {}, {{2}, {3}}); }
inline AffineMonoid a1cone() { return make(2, {}, {{1, 0}, {1, 1}, {1, 2}}); }
inline AffineMonoid p2() { return make(1, {2}, {{1, 0}, {1, 1}}); }
inline AffineMonoid zgroup() { return make(1, {}, {{1}, {-1}}); }

}  // namespace testing
