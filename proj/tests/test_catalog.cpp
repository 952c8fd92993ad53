#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "steinergeo/catalog.hpp"

using namespace steinergeo;

TEST_CASE("empirical length worked values") {
  CHECK(empirical_length(0, 3) == doctest::Approx(std::sqrt(27.0)).epsilon(1e-12));
  CHECK(empirical_length(0, 2) == doctest::Approx(std::sqrt(28.0)).epsilon(1e-12));
  CHECK(empirical_length(1, 2) == doctest::Approx(1 + std::sqrt(19.0)).epsilon(1e-12));
  CHECK(empirical_length(1, 1) == doctest::Approx(1 + std::sqrt(21.0)).epsilon(1e-12));
  CHECK(empirical_length(2, 1) == doctest::Approx(2 + std::sqrt(13.0)).epsilon(1e-12));
  CHECK(empirical_length(0, 1) == doctest::Approx(std::sqrt(31.0)).epsilon(1e-12));
  CHECK(empirical_length(4, 2) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(empirical_length(4, 1) == doctest::Approx(4 + std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("empirical length rejects out-of-domain arguments") {
  CHECK_THROWS_AS(empirical_length(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(empirical_length(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS(empirical_length(4, 3), std::invalid_argument);  // radical domain guard
  CHECK_THROWS_AS(empirical_length_p(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(empirical_length_p(0, 9), std::invalid_argument);
}

TEST_CASE("p-form agrees with the n-form and covers the formal minimal row") {
  CHECK(empirical_length_p(4, 3) == doctest::Approx(std::sqrt(27.0)).epsilon(1e-12));
  CHECK(empirical_length_p(2, 1) == doctest::Approx(2 + std::sqrt(13.0)).epsilon(1e-12));
  CHECK(empirical_length_p(6, 3) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(empirical_length_p(6, 5) == doctest::Approx(5.0).epsilon(1e-12));
  for (int p = 0; p <= 4; ++p) {
    for (int q = 1; q <= 2 + p && q <= 6 - (4 - p); ++q) {
      CHECK(empirical_length_p(p, q) == empirical_length(4 - p, q));
    }
  }
}

TEST_CASE("symmetry identity holds exactly") {
  const SymmetryIdentityReport report = symmetry_identity_check();
  CHECK(report.passed);
  CHECK(report.checked == 15);
  CHECK(report.max_abs_diff <= 1e-12);
  CHECK(empirical_length(2, 1) == empirical_length(2, 3));
  CHECK(empirical_length(1, 2) == empirical_length(1, 3));
  CHECK(empirical_length(0, 1) == empirical_length(0, 5));
}

TEST_CASE("catalog under the 6-unit cap") {
  const std::vector<CatalogEntry> entries = generate_catalog(6.0);

  auto has = [&](double L) {
    for (const CatalogEntry& e : entries) {
      if (std::abs(e.predicted_length - L) < 1e-12) return true;
    }
    return false;
  };
  CHECK(has(std::sqrt(27.0)));
  CHECK(has(std::sqrt(28.0)));
  CHECK(has(std::sqrt(31.0)));
  CHECK(has(1 + std::sqrt(19.0)));
  CHECK(has(1 + std::sqrt(21.0)));
  CHECK(has(2 + std::sqrt(12.0)));
  CHECK(has(2 + std::sqrt(13.0)));
  CHECK(has(3 + std::sqrt(7.0)));
  CHECK(has(6.0));
  CHECK(has(4 + std::sqrt(3.0)));
  CHECK(has(5.0));

  for (const CatalogEntry& e : entries) {
    if (e.p <= 4) CHECK(e.n == 4 - e.p);
    CHECK(e.predicted_length <= 6.0 + 1e-9);
    if (e.status == CatalogStatus::observed) {
      REQUIRE(e.matched_tree.has_value());
      CHECK(std::abs(e.matched_tree->length - e.predicted_length) <= 1e-9);
    }
  }

  // the sqrt(31) prediction is never realized
  for (const CatalogEntry& e : entries) {
    if (std::abs(e.predicted_length - std::sqrt(31.0)) < 1e-12) {
      CHECK(e.status == CatalogStatus::predicted_unobserved);
      CHECK(e.n == 0);
      CHECK(e.q == 1);
    }
  }

  // each n row carries at most 3 distinct lengths; only n = 0 carries 3
  for (int n = 0; n <= 4; ++n) {
    int distinct = 0;
    for (const CatalogEntry& e : entries) {
      if (e.n == n) ++distinct;
    }
    CHECK(distinct <= 3);
    if (n == 0) CHECK(distinct == 3);
  }
}

TEST_CASE("exactly the two documented exceptions") {
  const std::vector<CatalogEntry> entries = generate_catalog(6.0);
  int exceptions = 0;
  bool minimal_row = false, config_b_row = false;
  for (const CatalogEntry& e : entries) {
    if (e.status != CatalogStatus::exception) continue;
    ++exceptions;
    if (e.p == 6 && std::abs(e.predicted_length - 5.0) < 1e-12) minimal_row = true;
    if (e.n == 1 && e.q == 2 &&
        std::abs(e.predicted_length - (1 + std::sqrt(19.0))) < 1e-12) {
      config_b_row = true;
    }
  }
  CHECK(exceptions == 2);
  CHECK(minimal_row);
  CHECK(config_b_row);
}

TEST_CASE("catalog generation is deterministic and idempotent") {
  const auto a = generate_catalog(6.0);
  const auto b = generate_catalog(6.0);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].p == b[i].p);
    CHECK(a[i].q == b[i].q);
    CHECK(a[i].predicted_length == b[i].predicted_length);
    CHECK(a[i].status == b[i].status);
  }
}

TEST_CASE("catalog rejects a non-positive cap") {
  CHECK_THROWS_AS(generate_catalog(0.0), std::invalid_argument);
}
