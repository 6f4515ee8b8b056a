#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "polarity_lab/polarity.hpp"

using namespace polarity_lab;

TEST_CASE("make_form gram matrices") {
  const Field f4 = Field::create(2, 2);
  const auto ps3 = make_form(FormKind::PseudoSymplectic, 3, f4);
  CHECK(ps3.gram == Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});

  const Field f2 = Field::create(2, 1);
  const auto ps4 = make_form(FormKind::PseudoSymplectic, 4, f2);
  CHECK(ps4.gram == Matrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});

  const Field f5 = Field::create(5, 1);
  const auto o3 = make_form(FormKind::OrthogonalSymmetric, 3, f5);
  CHECK(o3.gram == Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  const auto sp4 = make_form(FormKind::Symplectic, 4, f5);
  CHECK(sp4.gram == Matrix{{0, 1, 0, 0}, {4, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 4, 0}});

  CHECK_THROWS_AS(make_form(FormKind::PseudoSymplectic, 3, f5), std::invalid_argument);
  CHECK_THROWS_AS(make_form(FormKind::Symplectic, 3, f4), std::invalid_argument);
  CHECK_THROWS_AS(make_form(FormKind::OrthogonalSymmetric, 3, f4), std::invalid_argument);
}

TEST_CASE("eval_form") {
  const Field f4 = Field::create(2, 2);
  for (std::uint32_t k : {3u, 4u, 5u}) {
    const auto form = make_form(FormKind::PseudoSymplectic, k, f4);
    std::vector<FieldElement> uk(k, 0);
    uk[k - 1] = 1;
    CHECK(eval_form(f4, form, uk, uk) == 1);
  }
  // odd k: beta(x, x) = x_k^2
  const auto ps5 = make_form(FormKind::PseudoSymplectic, 5, f4);
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::vector<FieldElement> x(5);
    for (auto& v : x) v = rng() % 4;
    CHECK(eval_form(f4, ps5, x, x) == f4.mul(x[4], x[4]));
  }
  // symplectic: beta(x, x) = 0
  const Field f3 = Field::create(3, 1);
  const auto sp4 = make_form(FormKind::Symplectic, 4, f3);
  for (int i = 0; i < 200; ++i) {
    std::vector<FieldElement> x(4);
    for (auto& v : x) v = rng() % 3;
    CHECK(eval_form(f3, sp4, x, x) == 0);
  }
  CHECK_THROWS_AS(eval_form(f4, ps5, {1, 0, 0}, {1, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("perp") {
  const Field f4 = Field::create(2, 2);
  const auto ps3 = make_form(FormKind::PseudoSymplectic, 3, f4);
  CHECK(perp(f4, ps3, ProjPoint{{0, 0, 1}}).coeffs == std::vector<FieldElement>{0, 0, 1});
  // x = (0, t1, t0) maps to the hyperplane t1 X_1 + t0 X_3 = 0
  CHECK(perp(f4, ps3, ProjPoint{{0, 1, 2}}).coeffs ==
        normalize(f4, {1, 0, 2}).coords);

  // membership: y in perp(x) iff beta(x, y) = 0
  const auto pts = enumerate_points(3, f4);
  for (const auto& x : pts) {
    const auto hx = perp(f4, ps3, x);
    for (const auto& y : pts)
      CHECK(incident(f4, y, hx) == (eval_form(f4, ps3, x.coords, y.coords) == 0));
  }
}

TEST_CASE("perp is an involution") {
  struct Case { FormKind kind; std::uint32_t k, p, h; };
  for (const auto& c : {Case{FormKind::PseudoSymplectic, 3, 2, 2},
                        Case{FormKind::PseudoSymplectic, 4, 2, 2},
                        Case{FormKind::PseudoSymplectic, 3, 2, 3},
                        Case{FormKind::OrthogonalSymmetric, 3, 5, 1},
                        Case{FormKind::OrthogonalSymmetric, 4, 7, 1},
                        Case{FormKind::Symplectic, 4, 2, 2},
                        Case{FormKind::Symplectic, 4, 3, 1}}) {
    const Field f = Field::create(c.p, c.h);
    const auto form = make_form(c.kind, c.k, f);
    for (const auto& x : enumerate_points(c.k, f)) {
      // hyperplane -> point direction uses the inverse Gram, so the
      // polarity composes to the identity for every kind
      REQUIRE(perp_point(f, form, perp(f, form, x)) == x);
    }
  }
  // for Gram matrices whose square is scalar, re-applying perp to the
  // hyperplane's coefficient point also returns x
  for (const auto& c : {Case{FormKind::PseudoSymplectic, 3, 2, 2},
                        Case{FormKind::OrthogonalSymmetric, 3, 5, 1},
                        Case{FormKind::Symplectic, 4, 3, 1}}) {
    const Field f = Field::create(c.p, c.h);
    const auto form = make_form(c.kind, c.k, f);
    for (const auto& x : enumerate_points(c.k, f)) {
      const auto h1 = perp(f, form, x);
      CHECK(ProjPoint{perp(f, form, ProjPoint{h1.coeffs}).coeffs} == x);
    }
  }
}

TEST_CASE("absolute points of the pseudo-symplectic polarity form H_inf") {
  struct Case { std::uint32_t k, h; };
  for (const auto& c : {Case{3, 1}, Case{3, 2}, Case{3, 3}, Case{4, 2}, Case{5, 1}, Case{5, 2}}) {
    const Field f = Field::create(2, c.h);
    const auto form = make_form(FormKind::PseudoSymplectic, c.k, f);
    for (const auto& x : enumerate_points(c.k, f))
      REQUIRE(is_absolute(f, form, x) == (x.coords[c.k - 1] == 0));
  }
  // symplectic: every point absolute
  const Field f3 = Field::create(3, 1);
  const auto sp = make_form(FormKind::Symplectic, 4, f3);
  for (const auto& x : enumerate_points(4, f3)) REQUIRE(is_absolute(f3, sp, x));
}

TEST_CASE("polarity graph examples") {
  const Field f2 = Field::create(2, 1);
  const auto g1 = polarity_graph(f2, make_form(FormKind::PseudoSymplectic, 3, f2), 3);
  REQUIRE(g1.n() == 7);
  CHECK(g1.loops().size() == 3);
  for (std::size_t v = 0; v < g1.n(); ++v) CHECK(g1.degree(v) == 3);

  const Field f4 = Field::create(2, 2);
  const auto g2 = polarity_graph(f4, make_form(FormKind::PseudoSymplectic, 3, f4), 3);
  REQUIRE(g2.n() == 21);
  for (std::size_t v = 0; v < g2.n(); ++v) CHECK(g2.degree(v) == 5);

  const Field f5 = Field::create(5, 1);
  const auto g3 = polarity_graph(f5, make_form(FormKind::OrthogonalSymmetric, 3, f5), 3);
  REQUIRE(g3.n() == 31);
  for (std::size_t v = 0; v < g3.n(); ++v) CHECK(g3.degree(v) == 6);
}
