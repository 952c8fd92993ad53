#pragma once

#include <string>
#include <utility>
#include <vector>

#include "steinergeo/geometry.hpp"
#include "steinergeo/topology.hpp"

namespace steinergeo {

struct RelaxOptions {
  double position_tolerance = 1e-12;
  int max_iterations = 100000;
  double collapse_distance = 1e-9;
};

// Embedded tree: fixed terminals plus relaxed Steiner coordinates.
struct GeometricTree {
  TerminalSet terminals;
  std::vector<Point2> steiner_points;
  SteinerTopology topology;  // post-collapse; indices 0..T-1 terminals, then Steiner
  double total_length = 0.0;
  int p = 0;     // Steiner count after degenerate collapse
  int q = 1;     // detected rotational symmetry order
  bool stable = false;

  Point2 position(int vertex) const {
    return vertex < terminals.size() ? terminals.points[vertex]
                                     : steiner_points[vertex - terminals.size()];
  }
};

struct RelaxTrace {
  std::vector<double> sweep_lengths;
  int sweeps = 0;
  int collapses = 0;
  bool converged = false;
};

// Relax Steiner positions to a local minimum of total length by cyclic
// Fermat-point iteration; Steiner vertices closer than collapse_distance to a
// neighbor are merged and the topology reclassified. Non-convergence after
// max_iterations leaves stable = false.
GeometricTree relax(const SteinerTopology& topology, const TerminalSet& terminals,
                    const RelaxOptions& options = {}, RelaxTrace* trace = nullptr);

// Strict soap-film test: every Steiner vertex has three edges pairwise at
// 120 degrees within angle_tol, and every terminal's incident edge pairs
// subtend at least 120 degrees - angle_tol.
bool is_stable(const GeometricTree& tree, double angle_tol);

// Largest divisor d of the terminal symmetry order whose rotation by 2*pi/d
// about the polygon center maps the edge set onto itself within tol.
int classify_symmetry(const GeometricTree& tree, double tol);
int classify_symmetry_edges(const TerminalSet& terminals,
                            const std::vector<std::pair<Point2, Point2>>& edges, double tol);

// Sum over terminals of (degree - 1).
int effective_nodal_total(const GeometricTree& tree);

// Canonical key of an embedded edge set under the polygon's dihedral group
// (rotations and reflections), built from coordinates rounded to 1e-8.
std::string dihedral_canonical_key(const TerminalSet& terminals,
                                   const std::vector<std::pair<Point2, Point2>>& edges);

struct LocalMinimaResult {
  std::vector<GeometricTree> trees;
  int topologies_relaxed = 0;
  int non_converged = 0;
  int rejected_unstable = 0;
  int deduplicated = 0;
};

// Relax every topology with steiner_count in [steiner_min, steiner_max], keep
// converged trees whose junctions satisfy the Steiner conditions and whose
// terminal angles are admissible (pin-stem extensions waived), deduplicate
// under the dihedral group, sort by length. threads = 0 uses the hardware
// concurrency; the output is identical for any thread count.
LocalMinimaResult local_minima_search(const TerminalSet& terminals, int steiner_min, int steiner_max,
                                      double max_length, const RelaxOptions& options = {},
                                      int threads = 0);

inline LocalMinimaResult find_all_local_minima(const TerminalSet& terminals, double max_length,
                                               const RelaxOptions& options = {}, int threads = 0) {
  return local_minima_search(terminals, 0, terminals.size() - 2, max_length, options, threads);
}

}  // namespace steinergeo
