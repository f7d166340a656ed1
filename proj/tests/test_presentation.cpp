#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "monoidgeom/presentation.hpp"
#include "oracles.hpp"

using namespace monoidgeom;
using namespace testing;

namespace {

Presentation pres(std::size_t n, std::vector<std::pair<FreeElement, FreeElement>> rels) { return {n, rels}; }

FreeElement add(FreeElement a, const FreeElement& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Presentation random_presentation(std::mt19937& rng) {
  std::uniform_int_distribution<int> ng(1, 3), nr(0, 2), c(0, 3);
  Presentation p{std::size_t(ng(rng)), {}};
  for (int r = nr(rng); r > 0; --r) {
    FreeElement l(p.ngens), rr(p.ngens);
    for (auto& x : l) x = c(rng);
    for (auto& x : rr) x = c(rng);
    p.relations.emplace_back(l, rr);
  }
  return p;
}

FreeElement random_word(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(0, 3);
  FreeElement w(n);
  for (auto& x : w) x = c(rng);
  return w;
}

}  // namespace

TEST_CASE("word problem examples") {
  auto idem = pres(1, {{{2}, {1}}});
  auto r = words_equal(idem, {3}, {1});
  CHECK(r.verdict == WordVerdict::Equal);
  REQUIRE(r.witness);
  CHECK(replay(idem, *r.witness) == FreeElement{1});

  auto ab = pres(2, {{{1, 0}, {0, 1}}});
  CHECK(words_equal(ab, {1, 0}, {0, 2}).verdict == WordVerdict::Distinct);
  CHECK(words_equal(ab, {2, 0}, {0, 2}).verdict == WordVerdict::Equal);
  CHECK(words_equal(Presentation::free(2), {1, 0}, {1, 0}).verdict == WordVerdict::Equal);
  CHECK(words_equal(Presentation::free(2), {1, 0}, {0, 1}).verdict == WordVerdict::Distinct);
  CHECK_THROWS_AS(words_equal(ab, {1}, {0, 1}), MonoidError);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(pres(2, {{{1}, {0, 1}}}).validate(), MonoidError);
  CHECK_THROWS_AS(pres(1, {{{-1}, {0}}}).validate(), MonoidError);
  CHECK_NOTHROW(pres(1, {{{2}, {1}}}).validate());
}

TEST_CASE("replay rejects broken chains") {
  auto idem = pres(1, {{{2}, {1}}});
  auto r = words_equal(idem, {4}, {1});
  REQUIRE(r.witness);
  auto w = *r.witness;
  REQUIRE_FALSE(w.steps.empty());
  CHECK(replay(idem, w) == FreeElement{1});
  w.steps[0].result = {7};
  CHECK_FALSE(replay(idem, w));
}

TEST_CASE("word problem agrees with a completion oracle") {
  std::mt19937 rng(21);
  for (int t = 0; t < 150; ++t) {
    auto p = random_presentation(rng);
    oracle::BinomialCongruence oc(p.ngens, p.relations);
    for (int q = 0; q < 8; ++q) {
      auto x = random_word(p.ngens, rng);
      auto y = q % 2 ? oc.normal_form(x) : random_word(p.ngens, rng);
      auto r = words_equal(p, x, y);
      REQUIRE(r.verdict != WordVerdict::Unknown);
      CHECK((r.verdict == WordVerdict::Equal) == oc.equal(x, y));
      if (r.verdict == WordVerdict::Equal) {
        REQUIRE(r.witness);
        CHECK(r.witness->start == x);
        CHECK(replay(p, *r.witness) == y);
      }
    }
  }
}

TEST_CASE("congruence is translation invariant") {
  std::mt19937 rng(22);
  for (int t = 0; t < 80; ++t) {
    auto p = random_presentation(rng);
    oracle::BinomialCongruence oc(p.ngens, p.relations);
    auto x = random_word(p.ngens, rng);
    auto y = oc.normal_form(x);
    auto z = random_word(p.ngens, rng);
    auto r = words_equal(p, add(x, z), add(y, z));
    CHECK(r.verdict == WordVerdict::Equal);
  }
}

TEST_CASE("coequalizer") {
  auto q = Presentation::free(2);
  auto c = coequalizer(q, {{1, 0}}, {{0, 1}});
  CHECK(words_equal(c, {1, 0}, {0, 1}).verdict == WordVerdict::Equal);
  CHECK(words_equal(c, {2, 0}, {1, 1}).verdict == WordVerdict::Equal);
  CHECK_THROWS_AS(coequalizer(q, {{1, 0}}, {}), MonoidError);
}

TEST_CASE("pushout") {
  // N <- N -> N with id and doubling
  auto n = Presentation::free(1);
  auto po = pushout(n, {{1}}, n, {{2}});
  CHECK(po.ngens == 2);
  CHECK(words_equal(po, {1, 0}, {0, 2}).verdict == WordVerdict::Equal);
  auto m = integralize(po);
  CHECK(m.ambient() == AbelianGroup(1));
  CHECK(same_monoid(m, nk(1)));
  // groupify commutes with the pushout: Z ⊕_Z Z = Z
  CHECK(groupify(po).group() == AbelianGroup(1));
}

TEST_CASE("groupify and integralize") {
  auto inv = pres(2, {{{1, 1}, {0, 0}}});
  auto g = groupify(inv);
  CHECK(g.group() == AbelianGroup(1));
  CHECK(g.apply({1, 0}) == g.group().neg(g.apply({0, 1})));

  auto p = pres(2, {{{2, 0}, {0, 2}}});
  auto m = integralize(p);
  CHECK(m.ambient() == AbelianGroup(1, {Integer(2)}));
  CHECK(m.num_generators() == 2);
  // the two generators differ exactly in the torsion coordinate
  auto d = m.ambient().sub(m.generators()[0], m.generators()[1]);
  CHECK(d.free == vec({0}));
  CHECK(d.tors == vec({1}));
  CHECK(same_monoid(m, p2()) == (m.ambient() == p2().ambient()));
}

TEST_CASE("integralize is idempotent") {
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    auto p = random_presentation(rng);
    auto m = integralize(p);
    auto again = integralize(tautological_presentation(m));
    CHECK(again.ambient() == m.ambient());
    CHECK(same_monoid(again, m));
  }
}

TEST_CASE("tautological presentation presents the monoid") {
  for (const auto& m : {nk(2), n23(), a1cone(), p2()}) {
    auto p = tautological_presentation(m);
    CHECK(p.ngens == m.num_generators());
    auto sums = m.sums_up_to(3);
    // words with equal images are congruent
    std::vector<FreeElement> words;
    std::function<void(FreeElement, std::size_t, int)> go = [&](FreeElement w, std::size_t i, int left) {
      if (i == w.size()) {
        words.push_back(w);
        return;
      }
      for (int k = 0; k <= left; ++k) {
        w[i] = k;
        go(w, i + 1, left - k);
      }
    };
    go(FreeElement(p.ngens), 0, 3);
    auto image = [&](const FreeElement& w) {
      GroupElement x = m.ambient().zero();
      for (std::size_t i = 0; i < w.size(); ++i) x = m.ambient().add(x, m.ambient().mul(m.generators()[i], w[i]));
      return x;
    };
    for (const auto& a : words)
      for (const auto& b : words) {
        auto r = words_equal(p, a, b);
        CHECK(r.verdict != WordVerdict::Unknown);
        CHECK((r.verdict == WordVerdict::Equal) == (image(a) == image(b)));
      }
  }
}

TEST_CASE("integrality") {
  CHECK(is_integral(Presentation::free(2)).verdict == Verdict::True);
  auto idem = pres(1, {{{2}, {1}}});
  auto r = is_integral(idem);
  CHECK(r.verdict == Verdict::False);
  REQUIRE(r.m);
  REQUIRE(r.n);
  REQUIRE(r.p);
  CHECK(words_equal(idem, add(*r.m, *r.n), add(*r.p, *r.n)).verdict == WordVerdict::Equal);
  CHECK(words_equal(idem, *r.m, *r.p).verdict == WordVerdict::Distinct);
  CHECK(is_integral(pres(2, {{{1, 1}, {0, 0}}})).verdict == Verdict::True);
  CHECK(is_integral(pres(2, {{{2, 0}, {0, 2}}})).verdict == Verdict::True);
  CHECK(is_integral(pres(2, {{{1, 1}, {1, 0}}})).verdict == Verdict::False);
}

TEST_CASE("integral presentations agree with their integralization") {
  std::mt19937 rng(24);
  int integral = 0;
  for (int t = 0; t < 80; ++t) {
    auto p = random_presentation(rng);
    auto r = is_integral(p);
    REQUIRE(r.verdict != Verdict::Unknown);
    auto m = integralize(p);
    auto g = groupify(p);
    oracle::BinomialCongruence oc(p.ngens, p.relations);
    if (r.verdict == Verdict::True) {
      ++integral;
      for (int q = 0; q < 10; ++q) {
        auto x = random_word(p.ngens, rng), y = random_word(p.ngens, rng);
        CHECK(oc.equal(x, y) == (g.apply(x) == g.apply(y)));
      }
    } else {
      CHECK(oc.equal(add(*r.m, *r.n), add(*r.p, *r.n)));
      CHECK_FALSE(oc.equal(*r.m, *r.p));
    }
    CHECK(m.ambient() == g.group());
  }
  CHECK(integral > 0);
}

TEST_CASE("groupification commutes with pushouts") {
  std::mt19937 rng(25);
  for (int t = 0; t < 60; ++t) {
    auto q1 = random_presentation(rng), q2 = random_presentation(rng);
    std::size_t k = 1 + t % 2;
    std::vector<FreeElement> u1, u2;
    for (std::size_t i = 0; i < k; ++i) {
      u1.push_back(random_word(q1.ngens, rng));
      u2.push_back(random_word(q2.ngens, rng));
    }
    auto po = pushout(q1, u1, q2, u2);
    auto g = groupify(po);
    const std::size_t n = q1.ngens + q2.ngens;
    // relations of gp(Q1) ⊕ gp(Q2) and the identifications u1(e) = u2(e)
    std::vector<Vector> rows;
    for (const auto& [l, r] : q1.relations) {
      Vector v(n);
      for (std::size_t i = 0; i < q1.ngens; ++i) v[i] = l[i] - r[i];
      rows.push_back(v);
    }
    for (const auto& [l, r] : q2.relations) {
      Vector v(n);
      for (std::size_t i = 0; i < q2.ngens; ++i) v[q1.ngens + i] = l[i] - r[i];
      rows.push_back(v);
    }
    for (std::size_t e = 0; e < k; ++e) {
      Vector v(n);
      for (std::size_t i = 0; i < q1.ngens; ++i) v[i] = u1[e][i];
      for (std::size_t i = 0; i < q2.ngens; ++i) v[q1.ngens + i] = -u2[e][i];
      rows.push_back(v);
    }
    Cokernel direct(rows, n);
    CHECK(g.group() == direct.group());
    for (std::size_t e = 0; e < k; ++e) {
      FreeElement a(n), b(n);
      for (std::size_t i = 0; i < q1.ngens; ++i) a[i] = u1[e][i];
      for (std::size_t i = 0; i < q2.ngens; ++i) b[q1.ngens + i] = u2[e][i];
      CHECK(g.apply(a) == g.apply(b));
    }
  }
}
