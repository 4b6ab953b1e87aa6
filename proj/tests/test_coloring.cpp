#include "doctest.h"

#include "hh/automorphism.hpp"
#include "hh/coloring.hpp"
#include "hh/families.hpp"

using namespace hh;

TEST_CASE("greedy coloring is proper") {
  Graph h42 = hh_graph({4, 2});
  auto c = chi_upper_greedy(h42);
  CHECK(is_proper(h42, c));
  CHECK(c.color_count == 2);

  Graph h62 = hh_graph({6, 2});
  auto c62 = chi_upper_greedy(h62);
  CHECK(is_proper(h62, c62));

  Graph edgeless = build_graph(4, {});
  CHECK(chi_upper_greedy(edgeless).color_count == 1);
}

TEST_CASE("chi_exact known values") {
  auto c42 = chi_exact(hh_graph({4, 2}));
  CHECK(c42.exact);
  CHECK(c42.upper == 2);

  auto c52 = chi_exact(hh_graph({5, 2}));
  CHECK(c52.upper == 3);

  auto c62 = chi_exact(hh_graph({6, 2}));
  CHECK(c62.exact);
  CHECK(c62.upper == 4);
  CHECK(is_proper(hh_graph({6, 2}), c62.coloring));

  CHECK(chi_exact(hh_graph({6, 3})).upper == 2);
  CHECK(chi_exact(hh_graph({7, 3})).upper == 3);
}

TEST_CASE("constructive coloring: proper, within the bound") {
  for (auto p : {FamilyParams{4, 2}, FamilyParams{5, 2}, FamilyParams{7, 2},
                 FamilyParams{9, 2}, FamilyParams{7, 3}, FamilyParams{9, 4}}) {
    Graph g = hh_graph(p);
    auto c = constructive_coloring(p);
    CHECK(is_proper(g, c));
    CHECK(c.color_count <= p.n - 2 * p.r + 2);
  }
  CHECK(constructive_coloring({4, 2}).color_count == 2);
  CHECK(constructive_coloring({5, 2}).color_count <= 3);
  CHECK_THROWS(constructive_coloring({3, 2}));
}

TEST_CASE("chi grows by at most one per ground-set element") {
  int prev = -1;
  for (int n = 4; n <= 7; ++n) {
    auto c = chi_exact(hh_graph({n, 2}));
    REQUIRE(c.exact);
    if (prev >= 0) {
      CHECK(c.upper >= prev);
      CHECK(c.upper <= prev + 1);
    }
    prev = c.upper;
  }
}

TEST_CASE("fractional chromatic from certified alpha") {
  FamilyParams p{6, 2};
  Graph g = hh_graph(p);
  auto gens = sn_vertex_generators(p);
  CHECK(fractional_chromatic(g, gens, 22) == Rational(30, 11));
  CHECK(fractional_chromatic(hh_graph({8, 2}), sn_vertex_generators({8, 2}), 58) ==
        Rational(84, 29));
  CHECK(fractional_chromatic(hh_graph({7, 3}), sn_vertex_generators({7, 3}), 60) ==
        Rational(7, 3));
  CHECK_THROWS(fractional_chromatic(g, gens, 0));
}

TEST_CASE("fractional chromatic bounds") {
  // < r+1 for n >= r^2+2, and <= n/r always (on the computed instances)
  CHECK(fractional_chromatic(hh_graph({6, 2}), sn_vertex_generators({6, 2}), 22) <
        Rational(3));
  CHECK(fractional_chromatic(hh_graph({7, 2}), sn_vertex_generators({7, 2}), 37) <
        Rational(3));
  for (auto [p, alpha] : {std::pair{FamilyParams{5, 2}, 12LL},
                          {FamilyParams{6, 2}, 22LL},
                          {FamilyParams{7, 3}, 60LL}})
    CHECK(fractional_chromatic(hh_graph(p), sn_vertex_generators(p), alpha) <=
          Rational(p.n, p.r));
}

TEST_CASE("orbit fractional coloring covers exactly once") {
  FamilyParams p{5, 2};
  Graph g = hh_graph(p);
  auto gens = sn_vertex_generators(p);
  auto fc = orbit_fractional_coloring(g, gens, kneser_type_set(p, 1));
  CHECK(fc.total_weight == Rational(5, 2));
  for (const auto& [s, w] : fc.weighted_sets) {
    CHECK(w > Rational(0));
    CHECK(is_independent(g, s));
  }

  FamilyParams p4{4, 2};
  auto fc4 = orbit_fractional_coloring(hh_graph(p4), sn_vertex_generators(p4),
                                       recursive_type_set(p4));
  CHECK(fc4.total_weight == Rational(3));

  FamilyParams p6{6, 2};
  auto fc6 = orbit_fractional_coloring(hh_graph(p6), sn_vertex_generators(p6),
                                       hybrid_set(p6));
  CHECK(fc6.total_weight == Rational(30, 11));
}

TEST_CASE("orbit fractional coloring rejects bad input") {
  FamilyParams p{5, 2};
  Graph g = hh_graph(p);
  auto gens = sn_vertex_generators(p);
  CHECK_THROWS(orbit_fractional_coloring(g, gens, {}));
  auto e = g.edges().front();
  VertexSet dependent = {e.first, e.second};
  CHECK_THROWS(orbit_fractional_coloring(g, gens, dependent));
}
