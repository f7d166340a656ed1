#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace monoidgeom;
using testing::el;
using testing::vec;

namespace {

IntMatrix mat(std::vector<std::vector<long>> rows, std::size_t cols) {
  std::vector<Vector> r;
  for (auto& x : rows) r.push_back(vec(x));
  return IntMatrix::from_rows(r, cols);
}

bool is_diagonal_chain(const IntMatrix& d) {
  Integer prev = 1;
  bool zero_seen = false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
      if (i == j) {
        if (d(i, i) < 0) return false;
        if (d(i, i) == 0) {
          zero_seen = true;
        } else {
          if (zero_seen || d(i, i) % prev != 0) return false;
          prev = d(i, i);
        }
      }
    }
  return true;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  auto id = IntMatrix::identity(2);
  auto s = smith_normal_form(id);
  CHECK(s.D == id);
  CHECK(s.U * id * s.V == s.D);

  auto d = smith_normal_form(mat({{2, 0}, {0, 3}}, 2));
  CHECK(d.D == mat({{1, 0}, {0, 6}}, 2));

  auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.D == IntMatrix(2, 3));
  CHECK(z.rank == 0);
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6), size(1, 4);
  for (int t = 0; t < 300; ++t) {
    std::size_t r = size(rng), c = size(rng);
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
    auto s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(is_diagonal_chain(s.D));
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(s.rank == rank(a));

    // torsion of the cokernel = nonunit nonzero diagonal entries
    auto coker = cokernel(a);
    std::vector<Integer> tors;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < std::min(r, c); ++i) {
      if (s.D(i, i) != 0) ++nonzero;
      if (s.D(i, i) > 1) tors.push_back(s.D(i, i));
    }
    CHECK(coker.group().torsion() == tors);
    CHECK(coker.group().free_rank() == c - nonzero);
  }
}

TEST_CASE("hermite normal form and kernel") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5), size(1, 4);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = size(rng), c = size(rng);
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
    auto h = hermite_normal_form(a);
    CHECK(h.W * a == h.H);
    CHECK(abs(determinant(h.W)) == 1);
    for (const auto& k : integer_kernel(a)) {
      auto ak = a.apply(k);
      for (const auto& x : ak) CHECK(x == 0);
    }
    CHECK(integer_kernel(a).size() == c - rank(a));
  }
}

TEST_CASE("cokernel examples") {
  auto c2 = cokernel(mat({{2}}, 1));
  CHECK(c2.group() == AbelianGroup(0, {Integer(2)}));

  // diagonal N -> N^2: relation (1,1)
  auto d = cokernel(mat({{1, 1}}, 2));
  CHECK(d.group() == AbelianGroup(1));
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      auto x = d.project(vec({a, b}));
      auto y = d.project(vec({a - b, 0}));
      CHECK(x == y);
      CHECK((x == d.group().zero()) == (a == b));
    }

  auto e = cokernel(IntMatrix(0, 2));
  CHECK(e.group() == AbelianGroup(2));
}

TEST_CASE("cokernel projection kernel is the relation lattice") {
  auto a = mat({{2, 4}, {0, 6}}, 2);
  auto c = cokernel(a);
  CHECK(c.group() == AbelianGroup(0, {Integer(2), Integer(6)}));
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y) {
      bool zero = c.project(vec({x, y})) == c.group().zero();
      bool in_lattice = solve_integer(a.transpose(), vec({x, y})).has_value();
      CHECK(zero == in_lattice);
      auto g = c.project(vec({x, y}));
      CHECK(c.project(c.lift(g)) == g);
    }
}

TEST_CASE("solve_nonneg examples") {
  AbelianGroup z2(2), z1(1);
  std::vector<GroupElement> e = {el(z2, {1, 0}), el(z2, {0, 1})};
  auto s = solve_nonneg(z2, e, el(z2, {2, 3}), 10);
  REQUIRE(s);
  CHECK(*s == vec({2, 3}));

  std::vector<GroupElement> g23 = {el(z1, {2}), el(z1, {3})};
  CHECK_FALSE(solve_nonneg(z1, g23, el(z1, {1}), 5));
  auto seven = solve_nonneg(z1, g23, el(z1, {7}), 10);
  REQUIRE(seven);
  CHECK((*seven)[0] * 2 + (*seven)[1] * 3 == 7);
  CHECK(*seven == vec({2, 1}));

  CHECK_THROWS_AS(solve_nonneg(z1, g23, el(z2, {1, 0}), 5), MonoidError);
}

TEST_CASE("solve_nonneg agrees with exhaustive enumeration") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-3, 4), count(1, 3);
  AbelianGroup g(2);
  for (int t = 0; t < 60; ++t) {
    std::vector<GroupElement> gens;
    int k = count(rng);
    for (int i = 0; i < k; ++i) gens.push_back(el(g, {entry(rng), entry(rng)}));
    for (long bound = 0; bound <= 8; bound += 4) {
      std::set<GroupElement> reach;
      std::function<void(GroupElement, long, std::size_t)> go = [&](GroupElement x, long left, std::size_t from) {
        reach.insert(x);
        if (left == 0) return;
        for (std::size_t i = from; i < gens.size(); ++i) go(g.add(x, gens[i]), left - 1, i);
      };
      go(g.zero(), bound, 0);
      for (long x = -4; x <= 4; ++x)
        for (long y = -4; y <= 4; ++y) {
          auto target = el(g, {x, y});
          auto s = solve_nonneg(g, gens, target, bound);
          CHECK(s.has_value() == (reach.count(target) > 0));
          if (s) {
            GroupElement sum = g.zero();
            Integer total = 0;
            for (std::size_t i = 0; i < gens.size(); ++i) {
              CHECK((*s)[i] >= 0);
              total += (*s)[i];
              sum = g.add(sum, g.mul(gens[i], (*s)[i]));
            }
            CHECK(sum == target);
            CHECK(total <= bound);
          }
        }
    }
  }
}

TEST_CASE("torsion residues are canonical") {
  AbelianGroup g(1, {Integer(2), Integer(4)});
  auto x = g.element(vec({3}), vec({-1, 9}));
  CHECK(x.tors == vec({1, 1}));
  CHECK(g.add(x, x).tors == vec({0, 2}));
  CHECK(g.neg(x) == g.element(vec({-3}), vec({1, 3})));
}

TEST_CASE("hilbert basis examples") {
  using V = std::vector<Vector>;
  CHECK(hilbert_basis(V{vec({1, 0}), vec({0, 1})}, 2) == V{vec({0, 1}), vec({1, 0})});
  CHECK(hilbert_basis(V{vec({1, 0}), vec({1, 2})}, 2) == V{vec({1, 0}), vec({1, 1}), vec({1, 2})});
  CHECK(hilbert_basis(V{vec({2, 4})}, 2) == V{vec({1, 2})});
  V orthant7;
  for (int i = 0; i < 7; ++i) {
    std::vector<long> e(7, 0);
    e[i] = 1;
    orthant7.push_back(vec(e));
  }
  CHECK_THROWS_AS(hilbert_basis(orthant7, 7), MonoidError);
  CHECK(hilbert_basis(orthant7, 7, HilbertOptions{7}).size() == 7);
}

TEST_CASE("hilbert basis of random planar cones matches enumeration") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-5, 5);
  int done = 0;
  while (done < 80) {
    long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    if (a * d - b * c <= 0) continue;
    ++done;
    auto hb = hilbert_basis({vec({a, b}), vec({c, d})}, 2);
    std::set<std::pair<long, long>> got;
    for (const auto& v : hb) got.emplace(v[0].get_si(), v[1].get_si());
    CHECK(got == oracle::hilbert_basis_2d({a, b}, {c, d}));
    // irreducibility: no element is a sum of two nonzero cone points among the basis sums
    std::set<Vector> basis(hb.begin(), hb.end());
    for (const auto& a : hb)
      for (const auto& b : hb) {
        Vector s = {a[0] + b[0], a[1] + b[1]};
        CHECK(basis.count(s) == 0);
      }
  }
}

TEST_CASE("graver basis of a rank-one lattice") {
  auto g = graver_basis({vec({1, -1})}, 2);
  CHECK(g == std::vector<Vector>{vec({-1, 1}), vec({1, -1})});
  // lattice of (2,3) relations in Z^2 spanned by (3,-2)
  auto h = graver_basis({vec({3, -2})}, 2);
  CHECK(h.size() == 2);
}

TEST_CASE("cone facets and extreme rays") {
  using V = std::vector<Vector>;
  auto f = cone_facets(V{vec({1, 0}), vec({1, 2})}, 2);
  CHECK(f == V{vec({0, 1}), vec({2, -1})});
  CHECK(cone_contains(V{vec({1, 0}), vec({1, 2})}, vec({2, 1}), 2));
  CHECK_FALSE(cone_contains(V{vec({1, 0}), vec({1, 2})}, vec({0, 1}), 2));
  CHECK(extreme_rays(V{vec({1, 0}), vec({1, 1}), vec({1, 2})}, 2) == V{vec({1, 0}), vec({1, 2})});
}
