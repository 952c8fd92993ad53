#pragma once

#include <utility>
#include <vector>

#include "steinergeo/geometry.hpp"

namespace steinergeo {

struct SpanningTree {
  std::vector<std::pair<int, int>> edges;  // terminal-index pairs
  double total_length = 0.0;
};

// All labeled spanning trees of the complete Euclidean graph on the
// terminals, generated through the Pruefer bijection. Requires <= 9 terminals.
std::vector<SpanningTree> enumerate_spanning_trees(const TerminalSet& terminals);

// Minimum-length spanning tree; ties broken by lexicographic edge order.
SpanningTree minimum_spanning_tree(const TerminalSet& terminals);

struct SpanningGroup {
  double length = 0.0;
  SpanningTree representative;
  int multiplicity = 0;
  int q = 1;
};

// Trees with total_length <= max_length, grouped by geometric congruence
// under the polygon's dihedral group, sorted by length.
std::vector<SpanningGroup> spanning_catalog(const TerminalSet& terminals, double max_length);

}  // namespace steinergeo
