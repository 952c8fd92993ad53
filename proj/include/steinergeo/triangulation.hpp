#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "steinergeo/geometry.hpp"
#include "steinergeo/relax.hpp"

namespace steinergeo {

// A chain corner is either a terminal of the polygon or a named link point.
struct ChainPointRef {
  enum class Kind { Terminal, Named };
  Kind kind = Kind::Terminal;
  int index = 0;

  static ChainPointRef terminal(int i) { return {Kind::Terminal, i}; }
  static ChainPointRef named(int i) { return {Kind::Named, i}; }
};

// Link points are carried either by a parametrized diagonal (distance x from
// its first endpoint, fixed or solved by bisection) or by the intersection of
// two lines through already-known points.
struct NamedPointDef {
  std::string name;
  enum class Kind { DiagonalParam, LineIntersection };
  Kind kind = Kind::LineIntersection;

  int diag_from = -1, diag_to = -1;
  bool solved = false;
  double fixed_param = 0.0;
  double bracket_lo = 0.0, bracket_hi = 0.0;

  ChainPointRef l1a, l1b, l2a, l2b;
};

struct ChainTriangleDef {
  std::array<ChainPointRef, 3> corners;
};

// Declared similarity between triangles: corner i of tri_a corresponds to
// corner corr[i] of tri_b.
struct SimilarPairDef {
  int tri_a = 0, tri_b = 0;
  std::array<int, 3> corr{0, 1, 2};
};

struct TriangleChainSpec {
  TerminalSet terminals;
  std::vector<NamedPointDef> named_points;
  std::vector<ChainTriangleDef> triangles;
  std::vector<std::pair<int, int>> trivial_extensions;
  std::vector<SimilarPairDef> declared_similar;
};

struct NamedConfiguration {
  std::string name;
  double exact_length = 0.0;
  int p = 0;
  int q = 1;
};

// Registered configurations: fig1a..fig1d (unit square), fig2a..fig2c and
// cfg_a..cfg_c (hexagon), penta (regular pentagon), octa_a..octa_c (octagon).
std::vector<NamedConfiguration> list_configurations();
const NamedConfiguration& configuration_info(const std::string& name);
TriangleChainSpec configuration_chain(const std::string& name);

// Distance x from the diagonal's first endpoint at which the stem elevations
// of the two triangles adjacent at `link` agree (within 1e-12), found by
// bisection down to bracket width 1e-13.
double solve_partition(const TriangleChainSpec& chain, const std::string& link, double bracket_lo,
                       double bracket_hi);

// Elevation mismatch (radians) at the named link for a trial partition x;
// the quantity solve_partition drives to zero.
double partition_residual(const TriangleChainSpec& chain, const std::string& link, double x);

// Full embedded tree for a registered configuration: link points solved,
// per-triangle Steiner trees constructed and glued, extension stems appended.
GeometricTree build_configuration(const std::string& name);

struct ChainValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

// Checks declared similarity (same chirality, free scale), collinear films
// through 2-triangle links, 120-degree meetings at 3-triangle links, link
// points on their declared diagonals, and non-overlapping triangle interiors.
ChainValidationReport validate_chain(const TriangleChainSpec& chain);

}  // namespace steinergeo
