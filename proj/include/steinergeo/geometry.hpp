#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace steinergeo {

inline constexpr double kPi = 3.14159265358979323846;

// Signed area below this magnitude counts as collinear.
inline constexpr double kCollinearAreaTol = 1e-12;

// Planar point in side units.
struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline Point2 rotate(Point2 v, double radians) {
  const double c = std::cos(radians), s = std::sin(radians);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// Unsigned angle between two direction vectors, in [0, pi].
inline double angle_between(Point2 u, Point2 v) {
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

// Interior angle at vertex `at` formed by points p and q.
inline double vertex_angle(Point2 p, Point2 at, Point2 q) {
  return angle_between(p - at, q - at);
}

// Intersection of the infinite lines p1p2 and q1q2. Throws if parallel.
Point2 line_intersection(Point2 p1, Point2 p2, Point2 q1, Point2 q2);

// Angle in radians, normalized to [0, 2*pi).
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians) : value_(normalize(radians)) {}
  static Angle from_degrees(double deg) { return Angle(deg * kPi / 180.0); }

  double radians() const { return value_; }
  double degrees() const { return value_ * 180.0 / kPi; }

 private:
  static double normalize(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("Angle: non-finite value");
    v = std::fmod(v, 2.0 * kPi);
    if (v < 0.0) v += 2.0 * kPi;
    if (v >= 2.0 * kPi) v = 0.0;
    return v;
  }
  double value_ = 0.0;
};

// Labeled triangle; b is the elevation reference vertex.
struct Triangle {
  Point2 a, b, c;
  int orientation = 0;  // +1 counterclockwise, -1 clockwise

  Triangle(Point2 a_, Point2 b_, Point2 c_);
};

// Ordered terminal coordinates plus the rotational order of the generating polygon.
struct TerminalSet {
  std::vector<Point2> points;
  int symmetry_order = 1;

  TerminalSet(std::vector<Point2> pts, int sym_order);

  int size() const { return static_cast<int>(points.size()); }
  Point2 centroid() const;
  // Smallest pairwise terminal distance (the pin spacing for regular polygons).
  double pin_spacing() const;
};

// n terminals of a regular n-gon, counterclockwise, vertex 0 on the positive
// x axis, consecutive spacing = side.
TerminalSet regular_polygon(int n, double side);

// Elevation of the stem toward the Steiner point, measured at the reference
// vertex from the side of length l. Requires 0 < angle_b <= 120 degrees.
Angle stem_elevation(double l, double l_prime, Angle angle_b);

// Length of the 3-terminal Steiner minimal tree with sides l, l' meeting at
// angle_b. Degenerate regime (angle_b >= 120 degrees) returns l + l'.
double steiner_3_length(double l, double l_prime, Angle angle_b);

struct FermatResult {
  Point2 point;
  std::optional<int> degenerate_at;  // 0 = a, 1 = b, 2 = c
};

// Point minimizing the summed distance to the triangle's vertices. Interior
// with pairwise 120-degree stems when all angles < 120 degrees, else the
// offending vertex flagged degenerate.
FermatResult fermat_point(const Triangle& t);

// Scale factor mapping t1 onto t2 under the labeled vertex correspondence,
// when angles agree within tol and handedness matches; absent otherwise.
std::optional<double> similar_same_chirality(const Triangle& t1, const Triangle& t2, double tol);

}  // namespace steinergeo
