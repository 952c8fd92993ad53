#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "steinergeo/relax.hpp"
#include "steinergeo/spanning.hpp"

using namespace steinergeo;

TEST_CASE("labeled spanning tree counts follow Cayley's formula") {
  CHECK(enumerate_spanning_trees(regular_polygon(3, 1.0)).size() == 3);
  CHECK(enumerate_spanning_trees(regular_polygon(5, 1.0)).size() == 125);
  CHECK(enumerate_spanning_trees(regular_polygon(6, 1.0)).size() == 1296);
}

TEST_CASE("every enumerated spanning tree is a tree") {
  const TerminalSet pent = regular_polygon(5, 1.0);
  for (const SpanningTree& t : enumerate_spanning_trees(pent)) {
    SteinerTopology topo{5, 0, t.edges};
    CHECK(topo.is_tree());
    double L = 0.0;
    for (const auto& [u, v] : t.edges) L += dist(pent.points[u], pent.points[v]);
    CHECK(L == doctest::Approx(t.total_length).epsilon(1e-12));
  }
}

TEST_CASE("hexagon brute-force minimum is 5") {
  double best = 1e300;
  for (const SpanningTree& t : enumerate_spanning_trees(regular_polygon(6, 1.0))) {
    best = std::min(best, t.total_length);
  }
  CHECK(best == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("minimum spanning tree worked values") {
  CHECK(minimum_spanning_tree(regular_polygon(4, 1.0)).total_length ==
        doctest::Approx(3.0).epsilon(1e-9));
  CHECK(minimum_spanning_tree(regular_polygon(6, 1.0)).total_length ==
        doctest::Approx(5.0).epsilon(1e-9));
  CHECK(minimum_spanning_tree(regular_polygon(3, 1.0)).total_length ==
        doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("greedy MST equals the brute-force minimum for every desk polygon") {
  for (int n = 3; n <= 7; ++n) {
    const TerminalSet poly = regular_polygon(n, 1.0);
    double brute = 1e300;
    for (const SpanningTree& t : enumerate_spanning_trees(poly)) {
      brute = std::min(brute, t.total_length);
    }
    CHECK(minimum_spanning_tree(poly).total_length == doctest::Approx(brute).epsilon(1e-9));
  }
}

TEST_CASE("MST ties break toward the lexicographically first edges") {
  const SpanningTree mst = minimum_spanning_tree(regular_polygon(6, 1.0));
  // all six sides tie at length 1; the first five in index order win
  CHECK(mst.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("global Steiner minimum never exceeds the MST length") {
  for (int n = 3; n <= 5; ++n) {
    const TerminalSet poly = regular_polygon(n, 1.0);
    const LocalMinimaResult minima = find_all_local_minima(poly, 100.0);
    REQUIRE(!minima.trees.empty());
    CHECK(minima.trees.front().total_length <=
          minimum_spanning_tree(poly).total_length + 1e-9);
  }
}

TEST_CASE("hexagon spanning catalog under the 6-unit cap") {
  const TerminalSet hex = regular_polygon(6, 1.0);
  const std::vector<SpanningGroup> groups = spanning_catalog(hex, 6.0);
  REQUIRE(!groups.empty());

  auto has_length = [&](double L) {
    for (const SpanningGroup& g : groups) {
      if (std::abs(g.length - L) < 1e-9) return true;
    }
    return false;
  };
  CHECK(has_length(5.0));
  CHECK(has_length(4.0 + std::sqrt(3.0)));
  CHECK(has_length(6.0));

  // multiplicities account for every enumerated tree under the cap
  int total = 0;
  for (const SpanningGroup& g : groups) {
    total += g.multiplicity;
    SteinerTopology topo{6, 0, g.representative.edges};
    CHECK(topo.is_tree());
    CHECK(hex.symmetry_order % g.q == 0);
  }
  int expected = 0;
  for (const SpanningTree& t : enumerate_spanning_trees(hex)) {
    if (t.total_length <= 6.0 + 1e-9) ++expected;
  }
  CHECK(total == expected);

  // a two-fold symmetric group exists at length 6 (the thick-pin photographs)
  bool twofold_six = false;
  for (const SpanningGroup& g : groups) {
    if (std::abs(g.length - 6.0) < 1e-9 && g.q == 2) twofold_six = true;
  }
  CHECK(twofold_six);
}

TEST_CASE("tight and empty caps") {
  const TerminalSet hex = regular_polygon(6, 1.0);
  const std::vector<SpanningGroup> only5 = spanning_catalog(hex, 5.0);
  REQUIRE(!only5.empty());
  for (const SpanningGroup& g : only5) CHECK(g.length == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(spanning_catalog(hex, 4.9).empty());
}

TEST_CASE("oversize terminal sets are rejected") {
  CHECK_THROWS_AS(enumerate_spanning_trees(regular_polygon(10, 1.0)), std::invalid_argument);
}
