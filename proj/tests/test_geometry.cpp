#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "steinergeo/geometry.hpp"

using namespace steinergeo;

namespace {

// Weiszfeld iteration: independent numeric oracle for the Fermat point.
Point2 geometric_median_oracle(const Point2& a, const Point2& b, const Point2& c) {
  Point2 x{(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
  const Point2 pts[3] = {a, b, c};
  for (int it = 0; it < 100000; ++it) {
    double wx = 0, wy = 0, wsum = 0;
    for (const Point2& p : pts) {
      const double d = std::max(dist(x, p), 1e-300);
      wx += p.x / d;
      wy += p.y / d;
      wsum += 1.0 / d;
    }
    const Point2 next{wx / wsum, wy / wsum};
    if (dist(next, x) < 1e-14) return next;
    x = next;
  }
  return x;
}

struct TriangleSample {
  Point2 a, b, c;
};

// Random triangle with all angles strictly below 120 degrees.
TriangleSample random_fermat_triangle(std::mt19937& rng) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  while (true) {
    const Point2 a{coord(rng), coord(rng)};
    const Point2 b{coord(rng), coord(rng)};
    const Point2 c{coord(rng), coord(rng)};
    if (std::abs(cross(b - a, c - a)) < 1e-3) continue;
    const double limit = 2.0 * kPi / 3.0 - 1e-3;
    if (vertex_angle(b, a, c) >= limit) continue;
    if (vertex_angle(a, b, c) >= limit) continue;
    if (vertex_angle(a, c, b) >= limit) continue;
    return {a, b, c};
  }
}

}  // namespace

TEST_CASE("regular polygon construction") {
  const TerminalSet hex = regular_polygon(6, 1.0);
  CHECK(hex.size() == 6);
  CHECK(hex.symmetry_order == 6);
  for (int k = 0; k < 6; ++k) {
    CHECK(norm(hex.points[k]) == doctest::Approx(1.0).epsilon(1e-12));  // circumradius = side
    CHECK(dist(hex.points[k], hex.points[(k + 1) % 6]) == doctest::Approx(1.0).epsilon(1e-12));
  }

  const TerminalSet square = regular_polygon(4, 1.0);
  CHECK(dist(square.points[0], square.points[2]) == doctest::Approx(std::sqrt(2.0)));

  const TerminalSet tri = regular_polygon(3, 1.0);
  CHECK(norm(tri.points[0]) == doctest::Approx(1.0 / std::sqrt(3.0)));

  CHECK_THROWS_AS(regular_polygon(2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(regular_polygon(6, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(regular_polygon(6, -1.0), std::invalid_argument);
}

TEST_CASE("angle normalization") {
  CHECK(Angle(0.0).radians() == 0.0);
  CHECK(Angle(2.0 * kPi).radians() == doctest::Approx(0.0));
  CHECK(Angle(-kPi / 2).radians() == doctest::Approx(3.0 * kPi / 2));
  CHECK(Angle::from_degrees(450.0).degrees() == doctest::Approx(90.0));
  CHECK_THROWS_AS(Angle(std::nan("")), std::invalid_argument);
}

TEST_CASE("triangle invariants") {
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 0}, {2, 0}), std::invalid_argument);
  const Triangle ccw({0, 0}, {1, 0}, {0, 1});
  CHECK(ccw.orientation == 1);
  const Triangle cw({0, 0}, {0, 1}, {1, 0});
  CHECK(cw.orientation == -1);
}

TEST_CASE("terminal set invariants") {
  CHECK_THROWS_AS(TerminalSet({{0, 0}, {1, 0}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(TerminalSet({{0, 0}, {1, 0}, {1, 0}}, 1), std::invalid_argument);
}

TEST_CASE("stem elevation worked values") {
  CHECK(stem_elevation(1, 1, Angle::from_degrees(60)).degrees() == doctest::Approx(30.0).epsilon(1e-12));
  CHECK(stem_elevation(1, 1, Angle::from_degrees(90)).degrees() == doctest::Approx(45.0).epsilon(1e-12));
  // derived: direct evaluation cross-checked against the Fermat-point oracle below
  CHECK(stem_elevation(1, 2, Angle::from_degrees(60)).radians() ==
        doctest::Approx(std::atan(std::sqrt(3.0) / 5.0)).epsilon(1e-12));

  CHECK_THROWS_AS(stem_elevation(1, 1, Angle::from_degrees(121)), std::invalid_argument);
  CHECK_THROWS_AS(stem_elevation(0, 1, Angle::from_degrees(60)), std::invalid_argument);
  CHECK_THROWS_AS(stem_elevation(1, -1, Angle::from_degrees(60)), std::invalid_argument);
}

TEST_CASE("stem elevation matches the numeric Fermat stem for (1, 2, 60deg)") {
  // triangle with b at the origin, c on the x axis
  const double l = 1.0, lp = 2.0, beta = kPi / 3.0;
  const Point2 b{0, 0}, c{l, 0}, a{lp * std::cos(beta), lp * std::sin(beta)};
  const Point2 f = geometric_median_oracle(a, b, c);
  const double measured = std::atan2(f.y, f.x);
  CHECK(stem_elevation(l, lp, Angle(beta)).radians() == doctest::Approx(measured).epsilon(1e-7));
}

namespace {

// 1-D oracle: minimize the summed distance along the symmetry axis of the
// isoceles right triangle by golden-section search.
double axis_minimum_right_isoceles() {
  const Point2 b{0, 0}, c{1, 0}, a{0, 1};
  auto f = [&](double t) {
    const Point2 x{t, t};
    return dist(x, a) + dist(x, b) + dist(x, c);
  };
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = 0.7;
  while (hi - lo > 1e-12) {
    const double m1 = hi - phi * (hi - lo);
    const double m2 = lo + phi * (hi - lo);
    if (f(m1) < f(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  return f(0.5 * (lo + hi));
}

}  // namespace

TEST_CASE("three-pin Steiner length") {
  CHECK(steiner_3_length(1, 1, Angle::from_degrees(60)) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(steiner_3_length(1, 1, Angle::from_degrees(130)) == doctest::Approx(2.0).epsilon(1e-12));
  // derived: 1-D minimization along the symmetry axis of the right isoceles triangle
  CHECK(steiner_3_length(1, 1, Angle::from_degrees(90)) ==
        doctest::Approx(axis_minimum_right_isoceles()).epsilon(1e-10));
  CHECK(steiner_3_length(1, 1, Angle::from_degrees(90)) ==
        doctest::Approx((1.0 + std::sqrt(3.0)) / std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(steiner_3_length(1, 1, Angle::from_degrees(0)), std::invalid_argument);
  CHECK_THROWS_AS(steiner_3_length(-1, 1, Angle::from_degrees(60)), std::invalid_argument);
}

TEST_CASE("three-pin length is continuous at 120 degrees") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> len(0.2, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double l = len(rng), lp = len(rng);
    // evaluate the interior-branch formula exactly at 120 degrees
    const double alpha = stem_elevation(l, lp, Angle(2.0 * kPi / 3.0)).radians();
    const double b = 2.0 * kPi / 3.0;
    const double formula =
        ((l - 2 * lp * std::cos(b)) * std::sin(alpha) +
         (l * std::sqrt(3.0) + 2 * lp * std::sin(b)) * std::cos(alpha)) /
        std::sqrt(3.0);
    CHECK(formula == doctest::Approx(l + lp).epsilon(1e-9));
    CHECK(steiner_3_length(l, lp, Angle(b)) == doctest::Approx(l + lp).epsilon(1e-12));
  }
}

TEST_CASE("three-pin length never loses to a two-edge spanning tree") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> len(0.2, 3.0);
  std::uniform_real_distribution<double> ang(0.05, kPi - 0.05);
  for (int i = 0; i < 1000; ++i) {
    const double l = len(rng), lp = len(rng), b = ang(rng);
    const double third = std::sqrt(l * l + lp * lp - 2 * l * lp * std::cos(b));
    const double best_spanning = std::min({l + lp, l + third, lp + third});
    CHECK(steiner_3_length(l, lp, Angle(b)) <= best_spanning + 1e-9);
  }
}

TEST_CASE("scale covariance of the three-pin length") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> len(0.2, 3.0);
  std::uniform_real_distribution<double> ang(0.05, kPi - 0.05);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double l = len(rng), lp = len(rng), b = ang(rng), k = scale(rng);
    const double base = steiner_3_length(l, lp, Angle(b));
    const double scaled = steiner_3_length(k * l, k * lp, Angle(b));
    CHECK(scaled == doctest::Approx(k * base).epsilon(1e-9));
  }
}

TEST_CASE("isoceles symmetry: equal arms put the stem on the axis") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> len(0.3, 2.0);
  std::uniform_real_distribution<double> ang(0.1, 2.0 * kPi / 3.0 - 0.05);
  for (int i = 0; i < 300; ++i) {
    const double l = len(rng);
    const double b = ang(rng);
    // l = l': BA = BC, apex at b; the Fermat point sits on the bisector axis
    const Point2 bp{0, 0}, cp{l, 0}, ap{l * std::cos(b), l * std::sin(b)};
    const FermatResult f = fermat_point(Triangle(ap, bp, cp));
    REQUIRE(!f.degenerate_at);
    CHECK(dist(f.point, ap) == doctest::Approx(dist(f.point, cp)).epsilon(1e-9));
    const double alpha = stem_elevation(l, l, Angle(b)).radians();
    CHECK(alpha == doctest::Approx(b / 2.0).epsilon(1e-9));
    // elevation of the stem is the same measured from either arm at b
    const double from_bc = vertex_angle(cp, bp, f.point);
    const double from_ba = vertex_angle(ap, bp, f.point);
    CHECK(from_bc == doctest::Approx(from_ba).epsilon(1e-9));
  }
}

TEST_CASE("fermat point worked values") {
  const FermatResult eq = fermat_point(Triangle({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}));
  REQUIRE(!eq.degenerate_at);
  CHECK(eq.point.x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eq.point.y == doctest::Approx(std::sqrt(3.0) / 6.0).epsilon(1e-12));

  const FermatResult deg = fermat_point(Triangle({0, 0}, {1, 0}, {-1, 0.2}));
  REQUIRE(deg.degenerate_at);
  CHECK(*deg.degenerate_at == 0);
  CHECK(deg.point.x == 0.0);
  CHECK(deg.point.y == 0.0);

  // derived from the symmetry-axis minimization of the right isoceles
  // triangle: closed form (3-sqrt(3))/6, cross-checked against Weiszfeld
  const FermatResult iso = fermat_point(Triangle({0, 0}, {1, 0}, {0, 1}));
  REQUIRE(!iso.degenerate_at);
  const double expected = (3.0 - std::sqrt(3.0)) / 6.0;
  CHECK(iso.point.x == doctest::Approx(expected).epsilon(1e-12));
  CHECK(iso.point.y == doctest::Approx(expected).epsilon(1e-12));
  const Point2 oracle = geometric_median_oracle({0, 0}, {1, 0}, {0, 1});
  CHECK(dist(iso.point, oracle) < 1e-7);
}

TEST_CASE("fermat stems meet pairwise at 120 degrees") {
  std::mt19937 rng(101);
  for (int i = 0; i < 1000; ++i) {
    const TriangleSample t = random_fermat_triangle(rng);
    const FermatResult f = fermat_point(Triangle(t.a, t.b, t.c));
    REQUIRE(!f.degenerate_at);
    const double third = 2.0 * kPi / 3.0;
    CHECK(std::abs(vertex_angle(t.a, f.point, t.b) - third) < 1e-9);
    CHECK(std::abs(vertex_angle(t.b, f.point, t.c) - third) < 1e-9);
    CHECK(std::abs(vertex_angle(t.c, f.point, t.a) - third) < 1e-9);
  }
}

TEST_CASE("fermat point agrees with the 2-D minimization oracle") {
  std::mt19937 rng(303);
  for (int i = 0; i < 1000; ++i) {
    const TriangleSample t = random_fermat_triangle(rng);
    const FermatResult f = fermat_point(Triangle(t.a, t.b, t.c));
    REQUIRE(!f.degenerate_at);
    const Point2 oracle = geometric_median_oracle(t.a, t.b, t.c);
    CHECK(dist(f.point, oracle) < 1e-7);
  }
}

TEST_CASE("three-pin length equals summed distances to the fermat point") {
  // spans the whole angle domain: triangles degenerate at any vertex resolve
  // to the vertex itself on both routes
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> len(0.2, 3.0);
  std::uniform_real_distribution<double> ang(0.05, kPi - 0.05);
  for (int i = 0; i < 1000; ++i) {
    const double l = len(rng), lp = len(rng), b = ang(rng);
    const Point2 bp{0, 0}, cp{l, 0}, ap{lp * std::cos(b), lp * std::sin(b)};
    const Triangle tri(ap, bp, cp);
    const FermatResult f = fermat_point(tri);
    const double summed = dist(f.point, ap) + dist(f.point, bp) + dist(f.point, cp);
    CHECK(steiner_3_length(l, lp, Angle(b)) == doctest::Approx(summed).epsilon(1e-9));
  }
}

TEST_CASE("similarity with matching chirality") {
  const Triangle t({0, 0}, {2, 0}, {0.5, 1.5});
  CHECK(similar_same_chirality(t, t, 1e-9) == doctest::Approx(1.0));

  const Triangle mirror({0, 0}, {2, 0}, {0.5, -1.5});
  CHECK(!similar_same_chirality(t, mirror, 1e-9).has_value());

  // configuration a: triangles BCG and GDH are both 30-60-90 with the same
  // handedness; the labeled correspondence is (B,C,G) <-> (D,H,G)
  const double s3 = std::sqrt(3.0);
  const Point2 B{0.5, s3 / 2}, C{-0.5, s3 / 2}, G{-0.5, s3 / 6}, D{-1, 0}, H{-0.5, 0};
  const auto scale = similar_same_chirality(Triangle(B, C, G), Triangle(D, H, G), 1e-9);
  REQUIRE(scale.has_value());
  CHECK(*scale == doctest::Approx(0.5).epsilon(1e-12));
}
