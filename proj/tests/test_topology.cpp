#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "steinergeo/topology.hpp"

using namespace steinergeo;

namespace {

// Full-topology count oracle: (2n-4)! / (2^(n-2) (n-2)!)
long long full_topology_count(int n) {
  auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  return factorial(2 * n - 4) / ((1LL << (n - 2)) * factorial(n - 2));
}

}  // namespace

TEST_CASE("unique full topology on three terminals") {
  const auto topos = enumerate_topologies(3, 1);
  REQUIRE(topos.size() == 1);
  CHECK(topos[0].edges == std::vector<std::pair<int, int>>{{0, 3}, {1, 3}, {2, 3}});
}

TEST_CASE("full topology counts match the closed-form oracle") {
  for (int n = 3; n <= 6; ++n) {
    const auto topos = enumerate_topologies(n, n - 2);
    CHECK(static_cast<long long>(topos.size()) == full_topology_count(n));
  }
  CHECK(enumerate_topologies(4, 2).size() == 3);
  CHECK(enumerate_topologies(6, 4).size() == 105);
}

TEST_CASE("hexagon topology counts per Steiner count") {
  // cross-checked against an independent brute-force enumeration
  CHECK(enumerate_topologies(6, 0).size() == 1170);
  CHECK(enumerate_topologies(6, 1).size() == 2100);
  CHECK(enumerate_topologies(6, 2).size() == 1620);
  CHECK(enumerate_topologies(6, 3).size() == 630);
  const auto all = enumerate_topologies(6, 0, 4);
  CHECK(all.size() == 1170 + 2100 + 1620 + 630 + 105);
}

TEST_CASE("every enumerated topology satisfies the invariants") {
  for (int s = 0; s <= 3; ++s) {
    for (const SteinerTopology& t : enumerate_topologies(5, s)) {
      CHECK_NOTHROW(t.validate());
      CHECK(t.is_tree());
      const auto deg = t.degrees();
      for (int i = 0; i < t.terminal_count; ++i) {
        CHECK(deg[i] >= 1);
        CHECK(deg[i] <= 3);
      }
      for (int i = t.terminal_count; i < t.vertex_count(); ++i) CHECK(deg[i] == 3);
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_topologies(6, 2, 3);
  const auto b = enumerate_topologies(6, 2, 3);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].edges == b[i].edges);
    CHECK(a[i].steiner_count == b[i].steiner_count);
  }
}

TEST_CASE("out-of-range inputs are rejected") {
  CHECK_THROWS_AS(enumerate_topologies(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_topologies(9, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_topologies(6, 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_topologies(6, -1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_topologies(6, 3, 2), std::invalid_argument);
}

TEST_CASE("validate catches malformed topologies") {
  SteinerTopology cyclic{3, 1, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK_THROWS_AS(cyclic.validate(), std::invalid_argument);

  SteinerTopology bad_steiner_degree{4, 1, {{0, 4}, {1, 4}, {2, 0}, {3, 2}}};
  CHECK_THROWS_AS(bad_steiner_degree.validate(), std::invalid_argument);

  SteinerTopology too_many_steiner{3, 2, {{0, 3}, {1, 3}, {2, 4}, {3, 4}}};
  CHECK_THROWS_AS(too_many_steiner.validate(), std::invalid_argument);
}
