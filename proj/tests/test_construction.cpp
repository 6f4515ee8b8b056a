#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "polarity_lab/construction.hpp"

using namespace polarity_lab;

TEST_CASE("line_ell") {
  const Field f2 = Field::create(2, 1);
  const auto l3 = line_ell(3, f2);  // U_1 U_3
  REQUIRE(l3.size() == 3);
  std::set<ProjPoint> s3(l3.begin(), l3.end());
  CHECK(s3.contains(ProjPoint{{1, 0, 0}}));
  CHECK(s3.contains(ProjPoint{{0, 0, 1}}));

  const auto l4 = line_ell(4, f2);  // U_3 U_4
  REQUIRE(l4.size() == 3);
  std::set<ProjPoint> s4(l4.begin(), l4.end());
  CHECK(s4.contains(ProjPoint{{0, 0, 1, 0}}));
  CHECK(s4.contains(ProjPoint{{0, 0, 0, 1}}));

  CHECK(line_ell(2, f2).empty());
}

TEST_CASE("hyperplane_Ht") {
  const Field f4 = Field::create(2, 2);
  const auto p = make_params(3, f4, 2);
  CHECK(hyperplane_Ht(p, 2).coeffs == std::vector<FieldElement>{0, 1, 1});
  CHECK(hyperplane_Ht(p, 3).coeffs == std::vector<FieldElement>{0, 1, 2});
  CHECK_THROWS_AS(hyperplane_Ht(p, 1), std::invalid_argument);  // Tr(1) = 0 in GF(4)
  CHECK_THROWS_AS(make_params(3, f4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_params(3, Field::create(5, 1), 1), std::invalid_argument);
}

TEST_CASE("vertex_set_H sizes") {
  const Field f4 = Field::create(2, 2);
  CHECK(vertex_set_H(default_params(3, f4)).size() == 8);
  CHECK(vertex_set_H(default_params(4, f4)).size() == 30);

  const Field f8 = Field::create(2, 3);
  const auto v2 = vertex_set_H(default_params(2, f8));
  REQUIRE(v2.size() == 4);
  // base case: mutually non-adjacent
  const auto form2 = make_form(FormKind::PseudoSymplectic, 2, f8);
  for (const auto& x : v2)
    for (const auto& y : v2)
      if (!(x == y)) CHECK(eval_form(f8, form2, x.coords, y.coords) != 0);
}

TEST_CASE("vertex set is sorted, disjoint across H_t, avoids H_inf and ell") {
  struct Case { std::uint32_t k, h; };
  for (const auto& c : {Case{3, 2}, Case{4, 2}, Case{5, 2}, Case{3, 3}, Case{4, 3}, Case{5, 3}}) {
    const Field f = Field::create(2, c.h);
    const auto params = default_params(c.k, f);
    const auto verts = vertex_set_H(params);
    for (std::size_t i = 1; i < verts.size(); ++i)
      REQUIRE(canonical_id(f, verts[i - 1]) < canonical_id(f, verts[i]));

    // each vertex lies on exactly one H_t, t in T
    for (const auto& x : verts) {
      REQUIRE(x.coords[c.k - 1] != 0);
      std::size_t hits = 0;
      for (FieldElement t : f.trace_one_set())
        hits += incident(f, x, hyperplane_Ht(params, t));
      REQUIRE(hits == 1);
    }
    const auto ell_pts = line_ell(c.k, f);
    const std::set<ProjPoint> ell(ell_pts.begin(), ell_pts.end());
    for (const auto& x : verts) REQUIRE_FALSE(ell.contains(x));
  }
}

TEST_CASE("ell parity facts") {
  for (std::uint32_t h : {1u, 2u, 3u}) {
    const Field f = Field::create(2, h);
    // odd k: ell lies in X_{k-1} = 0
    for (std::uint32_t k : {3u, 5u})
      for (const auto& x : line_ell(k, f)) REQUIRE(x.coords[k - 2] == 0);
    // even k: ell meets every H_t in exactly one point
    for (std::uint32_t k : {4u, 6u}) {
      const auto params = default_params(k, f);
      for (FieldElement t : f.trace_one_set()) {
        std::size_t cnt = 0;
        for (const auto& x : line_ell(k, f)) cnt += incident(f, x, hyperplane_Ht(params, t));
        REQUIRE(cnt == 1);
      }
    }
  }
}

TEST_CASE("build_H structure") {
  const Field f4 = Field::create(2, 2);
  const auto h34 = build_H(make_params(3, f4, 2));
  REQUIRE(h34.n() == 8);
  CHECK(h34.loops().empty());
  for (std::size_t v = 0; v < h34.n(); ++v) CHECK(h34.degree(v) == 2);
  // triangle-free
  for (std::size_t a = 0; a < h34.n(); ++a)
    for (std::size_t b = a + 1; b < h34.n(); ++b)
      for (std::size_t c = b + 1; c < h34.n(); ++c)
        CHECK_FALSE((h34.adjacent(a, b) && h34.adjacent(b, c) && h34.adjacent(a, c)));

  const auto h44 = build_H(make_params(4, f4, 2));
  REQUIRE(h44.n() == 30);
  for (std::size_t v = 0; v < h44.n(); ++v) CHECK(h44.degree(v) == 8);

  const Field f8 = Field::create(2, 3);
  const auto h28 = build_H(default_params(2, f8));
  REQUIRE(h28.n() == 4);
  CHECK(h28.edge_count() == 0);
}

TEST_CASE("neighbourhood split across H_t") {
  // |N(x) n H_t| = q^{k-3} for every vertex and every t, k >= 3
  struct Case { std::uint32_t k, h; };
  for (const auto& c : {Case{3, 2}, Case{4, 2}, Case{3, 3}}) {
    const Field f = Field::create(2, c.h);
    const auto params = default_params(c.k, f);
    const auto g = build_H(params);
    const std::uint64_t expect = c.k == 3 ? 1 : f.order();
    for (std::size_t v = 0; v < g.n(); ++v)
      for (FieldElement t : f.trace_one_set()) {
        const auto ht = hyperplane_Ht(params, t);
        std::uint64_t cnt = 0;
        for (std::size_t u = 0; u < g.n(); ++u)
          if (g.adjacent(v, u) && incident(f, g.label(u), ht)) ++cnt;
        REQUIRE(cnt == expect);
      }
  }
}

TEST_CASE("nonabsolute subgraph") {
  const Field f2 = Field::create(2, 1);
  const auto sp = make_form(FormKind::Symplectic, 4, f2);
  CHECK(nonabsolute_subgraph(f2, sp, 4).n() == 0);

  const Field f4 = Field::create(2, 2);
  const auto ps = make_form(FormKind::PseudoSymplectic, 3, f4);
  const auto gn = nonabsolute_subgraph(f4, ps, 3);
  REQUIRE(gn.n() == 16);
  CHECK(gn.loops().empty());
  // one exceptional vertex: U_3, whose perp is exactly H_inf, so all its
  // polarity-graph neighbours are absolute and it is isolated here
  for (std::size_t v = 0; v < gn.n(); ++v) {
    if (gn.label(v) == ProjPoint{{0, 0, 1}})
      CHECK(gn.degree(v) == 0);
    else
      CHECK(gn.degree(v) == 4);
  }

  const Field f5 = Field::create(5, 1);
  const auto orth = make_form(FormKind::OrthogonalSymmetric, 3, f5);
  const auto go = nonabsolute_subgraph(f5, orth, 3);
  std::size_t dmin = go.degree(0), dmax = dmin;
  for (std::size_t v = 0; v < go.n(); ++v) {
    dmin = std::min(dmin, go.degree(v));
    dmax = std::max(dmax, go.degree(v));
  }
  CHECK(dmin != dmax);  // not regular
}

TEST_CASE("isometry generators preserve the form") {
  struct Case { std::uint32_t k, h; };
  for (const auto& c : {Case{3, 2}, Case{4, 2}, Case{5, 1}, Case{3, 3}, Case{4, 3}, Case{6, 1}}) {
    const Field f = Field::create(2, c.h);
    const auto form = make_form(FormKind::PseudoSymplectic, c.k, f);
    for (const auto& m : isometry_generators(default_params(c.k, f))) {
      const auto mt = matrix_transpose(m);
      REQUIRE(matrix_product(f, mt, matrix_product(f, form.gram, m)) == form.gram);
    }
  }
  CHECK_THROWS_AS(isometry_generators(default_params(2, Field::create(2, 2))),
                  std::invalid_argument);
}

TEST_CASE("transitivity orbits") {
  CHECK(verify_transitivity(default_params(3, Field::create(2, 1))));  // orbit size 2
  CHECK(verify_transitivity(default_params(3, Field::create(2, 2))));
  CHECK(verify_transitivity(default_params(4, Field::create(2, 2))));
  CHECK(verify_transitivity(default_params(5, Field::create(2, 1))));
}

TEST_CASE("t0 invariance of (n, d) for small cases") {
  const Field f8 = Field::create(2, 3);
  for (std::uint32_t k : {3u, 4u}) {
    std::set<std::pair<std::size_t, std::size_t>> shapes;
    for (FieldElement t0 : f8.trace_one_set()) {
      const auto g = build_H(make_params(k, f8, t0));
      shapes.insert({g.n(), g.degree(0)});
    }
    CHECK(shapes.size() == 1);
  }
}
