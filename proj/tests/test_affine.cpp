#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <thread>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace monoidgeom;
using namespace testing;

namespace {

std::set<GroupElement> gens_set(const AffineMonoid& m) {
  return {m.generators().begin(), m.generators().end()};
}

std::vector<AffineMonoid> fixtures() {
  return {nk(1), nk(2), nk(3), n23(), a1cone(), p2(), zgroup(),
          make(1, {}, {{2}, {3}, {4}, {5}}),
          make(2, {}, {{1, 0}, {-1, 0}, {0, 1}}),
          make(2, {}, {{1, 0}, {1, 2}, {2, 1}})};
}

}  // namespace

TEST_CASE("contains") {
  CHECK(nk(2).contains(el(AbelianGroup(2), {3, 5})));
  CHECK_FALSE(n23().contains(el(AbelianGroup(1), {1})));
  auto p = p2();
  // (1,0) + (1,1) = (2,1)
  CHECK(p.contains(el(p.ambient(), {2, 1})));
  CHECK_FALSE(p.contains(el(p.ambient(), {0, 1})));
  CHECK(p.contains(el(p.ambient(), {2, 0})));
  CHECK(p.contains(el(p.ambient(), {3, 1})));
  CHECK_THROWS_AS(p.contains(el(AbelianGroup(2), {1, 1})), MonoidError);
}

TEST_CASE("contains agrees with enumeration of generator sums") {
  for (const auto& m : fixtures()) {
    if (m.ambient().free_rank() == 0) continue;
    auto sums = oracle::sums_of_generators(m, 6);
    for (const auto& x : sums) CHECK(m.contains(x));
    if (!is_sharp(m)) continue;
    // elements of low degree that are members must be short sums
    for (const auto& x : m.sums_up_to(6)) CHECK(sums.count(x));
  }
  auto m = n23();
  for (long x = -5; x <= 12; ++x) CHECK(m.contains(el(m.ambient(), {x})) == (x == 0 || x >= 2));
}

TEST_CASE("units") {
  CHECK(units(nk(2)).group.is_trivial());
  auto z = units(zgroup());
  CHECK(z.group == AbelianGroup(1));
  auto m = make(2, {}, {{1, 0}, {-1, 0}, {0, 1}});
  auto u = units(m);
  CHECK(u.group == AbelianGroup(1));
  CHECK(m.is_unit(el(m.ambient(), {5, 0})));
  CHECK_FALSE(m.is_unit(el(m.ambient(), {0, 1})));
}

TEST_CASE("sharpen") {
  auto s = sharpen(nk(2));
  CHECK(is_sharp(s.monoid));
  CHECK(s.monoid.num_generators() == 2);

  auto m = make(2, {}, {{1, 0}, {-1, 0}, {0, 1}});
  auto sm = sharpen(m).monoid;
  CHECK(sm.ambient() == AbelianGroup(1));
  CHECK(same_monoid(sm, nk(1)));

  auto zs = sharpen(zgroup()).monoid;
  CHECK(zs.num_generators() == 0);
  CHECK(is_sharp(zs));
  for (const auto& f : fixtures()) CHECK(is_sharp(sharpen(f).monoid));
}

TEST_CASE("irreducibles") {
  auto n2 = nk(2);
  auto irr = irreducibles(n2);
  CHECK(gens_set(n2) == std::set<GroupElement>(irr.begin(), irr.end()));
  auto i23 = irreducibles(n23());
  CHECK(i23 == std::vector<GroupElement>{el(AbelianGroup(1), {2}), el(AbelianGroup(1), {3})});
  CHECK(irreducibles(a1cone()).size() == 3);
  CHECK(irreducibles(make(1, {}, {{2}, {3}, {4}, {5}})).size() == 2);
  CHECK_THROWS_AS(irreducibles(zgroup()), MonoidError);
}

TEST_CASE("irreducibles lie in every generating set") {
  for (const auto& m : fixtures()) {
    if (!is_sharp(m)) continue;
    auto gs = gens_set(m);
    for (const auto& c : irreducibles(m)) {
      CHECK(gs.count(c));
      // c = a + b with a, b nonzero members is impossible
      for (const auto& a : m.sums_up_to(3)) {
        if (a == m.ambient().zero() || a == c) continue;
        auto b = m.ambient().sub(c, a);
        CHECK_FALSE((m.contains(b) && b != m.ambient().zero()));
      }
    }
  }
}

TEST_CASE("saturate") {
  CHECK(same_monoid(saturate(nk(1)), nk(1)));
  CHECK(same_monoid(saturate(n23()), nk(1)));
  CHECK(same_monoid(saturate(make(1, {}, {{2}, {3}, {4}, {5}})), nk(1)));
  // 2 (0,1) = 0 in P2, so the torsion element joins the saturation
  auto p = saturate(p2());
  CHECK(p.contains(el(p2().ambient(), {0, 1})));
  CHECK(p.contains(el(p2().ambient(), {1, 0})));
  CHECK_FALSE(p.contains(el(p2().ambient(), {-1, 0})));
}

TEST_CASE("saturation properties") {
  for (const auto& m : fixtures()) {
    auto s = saturate(m);
    CHECK(is_saturated(s));
    CHECK(same_monoid(saturate(s), s));
    CHECK(s.gp().group() == m.gp().group());
    for (const auto& x : m.sums_up_to(4)) CHECK(s.contains(x));
  }
}

TEST_CASE("predicates") {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto m = nk(k);
    CHECK(is_fine(m));
    CHECK(is_saturated(m));
    CHECK(is_sharp(m));
    CHECK(is_toric(m));
    CHECK_FALSE(is_dull(m));
  }
  CHECK(is_fine(p2()));
  CHECK_FALSE(is_saturated(p2()));
  CHECK_FALSE(is_toric(p2()));
  CHECK_FALSE(is_saturated(n23()));
  CHECK(is_dull(zgroup()));
  AffineMonoid zero;
  CHECK(is_sharp(zero));
  CHECK(is_dull(zero));
  CHECK(is_fine(zero));
  CHECK(is_saturated(zero));
}

TEST_CASE("divides") {
  CHECK(nk(2).divides(el(AbelianGroup(2), {1, 0}), el(AbelianGroup(2), {2, 3})));
  CHECK_FALSE(n23().divides(el(AbelianGroup(1), {2}), el(AbelianGroup(1), {3})));
  std::mt19937 rng(1);
  for (const auto& m : fixtures()) {
    auto pts = m.sums_up_to(2);
    for (const auto& s : pts) CHECK(m.divides(s, s));
    for (const auto& a : pts)
      for (const auto& b : pts)
        for (const auto& c : pts)
          if (m.divides(a, b) && m.divides(b, c)) CHECK(m.divides(a, c));
  }
}

TEST_CASE("local homomorphisms") {
  CHECK(is_local_hom(identity_hom(a1cone())));
  auto n = nk(1);
  MonoidHom inc(n23(), n, {el(n.ambient(), {2}), el(n.ambient(), {3})});
  CHECK(is_local_hom(inc));
  MonoidHom to_z(n, zgroup(), {el(AbelianGroup(1), {1})});
  CHECK_FALSE(is_local_hom(to_z));
}

TEST_CASE("exact homomorphisms") {
  CHECK(is_exact_hom(identity_hom(nk(2))).verdict == Verdict::True);
  auto n = nk(1);
  MonoidHom inc(n23(), n, {el(n.ambient(), {2}), el(n.ambient(), {3})});
  auto r = is_exact_hom(inc);
  CHECK(r.verdict == Verdict::False);
  REQUIRE(r.witness);
  CHECK_FALSE(n23().contains(*r.witness));
  CHECK(n.contains(inc.apply(*r.witness)));

  // face inclusion: x-axis into N^2
  auto n2 = nk(2);
  auto xaxis = make(2, {}, {{1, 0}});
  MonoidHom face(xaxis, n2, {el(n2.ambient(), {1, 0})});
  CHECK(is_exact_hom(face).verdict == Verdict::True);

  // exact into a saturated target forces a saturated source
  auto a1 = a1cone();
  auto sub = make(2, {}, {{1, 0}, {1, 2}});
  MonoidHom into(sub, a1, {el(a1.ambient(), {1, 0}), el(a1.ambient(), {1, 2})});
  CHECK(is_exact_hom(into).verdict == Verdict::True);
  CHECK(is_saturated(sub));
  auto sub3 = make(1, {}, {{2}, {3}});
  MonoidHom into_n(sub3, n, {el(n.ambient(), {2}), el(n.ambient(), {3})});
  CHECK(is_exact_hom(into_n).verdict != Verdict::True);
}

TEST_CASE("homomorphism validation") {
  auto n = nk(1);
  CHECK_THROWS_AS(MonoidHom(n, n23(), {el(AbelianGroup(1), {1})}), MonoidError);
  CHECK_THROWS_AS(MonoidHom(n, n, {}), MonoidError);
}

TEST_CASE("embed_sharp") {
  auto e = embed_sharp(nk(2));
  CHECK(e.target.ambient() == AbelianGroup(2));
  CHECK(is_exact_hom(e).verdict == Verdict::True);

  auto a = embed_sharp(a1cone());
  CHECK(a.target.ambient() == AbelianGroup(3));
  CHECK(is_exact_hom(a).verdict == Verdict::True);

  auto p = embed_sharp(p2());
  CHECK(p.target.ambient().torsion() == std::vector<Integer>{2});
  CHECK(p.target.ambient().free_rank() == 1);
  CHECK(p.images[0] != p.images[1]);

  CHECK_THROWS_AS(embed_sharp(zgroup()), MonoidError);
}

TEST_CASE("embed_sharp is injective on small elements") {
  for (const auto& m : fixtures()) {
    if (!is_sharp(m)) continue;
    auto e = embed_sharp(m);
    std::set<GroupElement> seen;
    auto pts = m.sums_up_to(4);
    for (const auto& x : pts) seen.insert(e.apply(x));
    CHECK(seen.size() == pts.size());
  }
}

TEST_CASE("classify_dim1") {
  auto c = classify_dim1(nk(1));
  CHECK(c.gamma.group.is_trivial());
  CHECK(c.q == el(AbelianGroup(1), {1}));

  auto zn = make(2, {}, {{1, 0}, {-1, 0}, {0, 1}});
  auto d = classify_dim1(zn);
  CHECK(d.gamma.group == AbelianGroup(1));
  CHECK(zn.bar(d.q) == zn.bar(el(zn.ambient(), {0, 1})));

  auto s = classify_dim1(saturate(n23()));
  CHECK(s.q == el(AbelianGroup(1), {1}));

  CHECK_THROWS_AS(classify_dim1(nk(2)), MonoidError);
}

TEST_CASE("valuative monoids") {
  CHECK(is_valuative(nk(1)));
  CHECK_FALSE(is_valuative(nk(2)));
  CHECK(is_valuative(zgroup()));

  auto n2 = nk(2);
  auto d = dominating_valuative(n2);
  CHECK(is_valuative(d.monoid));
  for (const auto& f : n2.facets()) {
    Integer v = 0;
    for (std::size_t i = 0; i < f.size(); ++i) v += f[i] * d.functional[i];
    CHECK(v > 0);
  }
  CHECK(d.monoid.gp().group() == nk(2).gp().group());
  // P -> Q is local: no generator of N^2 becomes a unit
  for (const auto& g : n2.generators()) {
    CHECK(d.monoid.contains(g));
    CHECK_FALSE(d.monoid.is_unit(g));
  }
}

TEST_CASE("finite generation splits into units and sharp part") {
  for (const auto& m : fixtures()) {
    auto u = units(m);
    for (const auto& g : u.generators) CHECK(m.is_unit(g));
    auto s = sharpen(m);
    CHECK(is_fine(s.monoid));
    CHECK(s.monoid.num_generators() <= m.num_generators());
  }
}

TEST_CASE("concurrent readers see one dual basis") {
  auto m = make(3, {}, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  std::vector<std::vector<Vector>> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < seen.size(); ++i)
    threads.emplace_back([&, i] { seen[i] = m.dual_basis(); });
  for (auto& t : threads) t.join();
  for (const auto& s : seen) CHECK(s == seen[0]);
  CHECK(seen[0] == make(3, {}, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}).dual_basis());
}
