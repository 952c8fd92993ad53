#include "steinergeo/geometry.hpp"

#include <string>

namespace steinergeo {

Point2 line_intersection(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
  const Point2 d1 = p2 - p1;
  const Point2 d2 = q2 - q1;
  const double den = cross(d1, d2);
  if (std::abs(den) < 1e-14) {
    throw std::invalid_argument("line_intersection: lines are parallel");
  }
  const double t = cross(q1 - p1, d2) / den;
  return p1 + t * d1;
}

Triangle::Triangle(Point2 a_, Point2 b_, Point2 c_) : a(a_), b(b_), c(c_) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c)) {
    throw std::invalid_argument("Triangle: non-finite vertex");
  }
  const double signed_area = 0.5 * cross(b - a, c - a);
  if (std::abs(signed_area) <= kCollinearAreaTol) {
    throw std::invalid_argument("Triangle: vertices are collinear");
  }
  orientation = signed_area > 0.0 ? +1 : -1;
}

TerminalSet::TerminalSet(std::vector<Point2> pts, int sym_order)
    : points(std::move(pts)), symmetry_order(sym_order) {
  if (points.size() < 3) throw std::invalid_argument("TerminalSet: need at least 3 points");
  if (symmetry_order < 1) throw std::invalid_argument("TerminalSet: symmetry order must be positive");
  for (const Point2& p : points) {
    if (!is_finite(p)) throw std::invalid_argument("TerminalSet: non-finite coordinate");
  }
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (dist(points[i], points[j]) <= 1e-12) {
        throw std::invalid_argument("TerminalSet: duplicate terminals");
      }
    }
  }
}

Point2 TerminalSet::centroid() const {
  Point2 c{0.0, 0.0};
  for (const Point2& p : points) c = c + p;
  return (1.0 / static_cast<double>(points.size())) * c;
}

double TerminalSet::pin_spacing() const {
  double best = dist(points[0], points[1]);
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, dist(points[i], points[j]));
    }
  }
  return best;
}

TerminalSet regular_polygon(int n, double side) {
  if (n < 3) throw std::invalid_argument("regular_polygon: n must be >= 3");
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("regular_polygon: side must be positive");
  }
  const double radius = side / (2.0 * std::sin(kPi / n));
  std::vector<Point2> pts;
  pts.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * kPi * k / n;
    pts.push_back({radius * std::cos(theta), radius * std::sin(theta)});
  }
  return TerminalSet(std::move(pts), n);
}

Angle stem_elevation(double l, double l_prime, Angle angle_b) {
  if (!(l > 0.0) || !(l_prime > 0.0)) {
    throw std::invalid_argument("stem_elevation: lengths must be positive");
  }
  const double b = angle_b.radians();
  if (!(b > 0.0) || b > 2.0 * kPi / 3.0) {
    throw std::invalid_argument("stem_elevation: angle must lie in (0, 120] degrees");
  }
  const double num = l * std::sin(kPi / 3.0) - l_prime * std::sin(kPi / 3.0 - b);
  const double den = l * std::cos(kPi / 3.0) + l_prime * std::cos(kPi / 3.0 - b);
  return Angle(std::atan2(num, den));
}

double steiner_3_length(double l, double l_prime, Angle angle_b) {
  if (!(l > 0.0) || !(l_prime > 0.0)) {
    throw std::invalid_argument("steiner_3_length: lengths must be positive");
  }
  const double b = angle_b.radians();
  if (!(b > 0.0) || !(b < kPi)) {
    throw std::invalid_argument("steiner_3_length: angle must lie in (0, 180) degrees");
  }
  if (b >= 2.0 * kPi / 3.0) {
    return l + l_prime;  // no interior Steiner point past 120 degrees
  }
  // The tree degenerates at whichever vertex holds an angle of 120 degrees
  // or more; only then is the interior formula meaningful.
  const double third = std::sqrt(std::max(0.0, l * l + l_prime * l_prime - 2.0 * l * l_prime * std::cos(b)));
  const double cos_limit = std::cos(2.0 * kPi / 3.0);
  const double cos_a = (l_prime * l_prime + third * third - l * l) / (2.0 * l_prime * third);
  if (cos_a <= cos_limit) return l_prime + third;
  const double cos_c = (l * l + third * third - l_prime * l_prime) / (2.0 * l * third);
  if (cos_c <= cos_limit) return l + third;
  const double alpha = stem_elevation(l, l_prime, angle_b).radians();
  const double sa = std::sin(alpha), ca = std::cos(alpha);
  return ((l - 2.0 * l_prime * std::cos(b)) * sa + (l * std::sqrt(3.0) + 2.0 * l_prime * std::sin(b)) * ca) /
         std::sqrt(3.0);
}

FermatResult fermat_point(const Triangle& t) {
  const Point2 v[3] = {t.a, t.b, t.c};
  for (int i = 0; i < 3; ++i) {
    const double ang = vertex_angle(v[(i + 2) % 3], v[i], v[(i + 1) % 3]);
    if (ang >= 2.0 * kPi / 3.0) {
      return {v[i], i};
    }
  }
  // Interior point via the elevation construction: cast the stem rays
  // from b and c and intersect them.
  const double sgn = t.orientation > 0 ? 1.0 : -1.0;
  const double alpha_b =
      stem_elevation(dist(t.b, t.c), dist(t.a, t.b), Angle(vertex_angle(t.a, t.b, t.c))).radians();
  const double alpha_c =
      stem_elevation(dist(t.c, t.b), dist(t.a, t.c), Angle(vertex_angle(t.a, t.c, t.b))).radians();
  const Point2 u = rotate(t.c - t.b, sgn * alpha_b);
  const Point2 w = rotate(t.b - t.c, -sgn * alpha_c);
  const double den = cross(u, w);
  const double s = cross(t.c - t.b, w) / den;
  return {t.b + s * u, std::nullopt};
}

std::optional<double> similar_same_chirality(const Triangle& t1, const Triangle& t2, double tol) {
  if (t1.orientation != t2.orientation) return std::nullopt;
  const double angles1[3] = {vertex_angle(t1.c, t1.a, t1.b), vertex_angle(t1.a, t1.b, t1.c),
                             vertex_angle(t1.b, t1.c, t1.a)};
  const double angles2[3] = {vertex_angle(t2.c, t2.a, t2.b), vertex_angle(t2.a, t2.b, t2.c),
                             vertex_angle(t2.b, t2.c, t2.a)};
  for (int i = 0; i < 3; ++i) {
    if (std::abs(angles1[i] - angles2[i]) > tol) return std::nullopt;
  }
  return dist(t2.a, t2.b) / dist(t1.a, t1.b);
}

}  // namespace steinergeo
