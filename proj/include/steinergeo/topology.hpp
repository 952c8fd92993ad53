#pragma once

#include <utility>
#include <vector>

namespace steinergeo {

// Combinatorial tree over terminals 0..terminal_count-1 followed by
// degree-3 Steiner vertices.
struct SteinerTopology {
  int terminal_count = 0;
  int steiner_count = 0;
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return terminal_count + steiner_count; }
  std::vector<int> degrees() const;
  bool is_tree() const;  // connected with V-1 edges

  // Throws std::invalid_argument on any invariant violation: tree property,
  // Steiner degree exactly 3, terminal degree in {1,2,3},
  // steiner_count <= terminal_count - 2.
  void validate() const;
};

// All Steiner topologies with steiner_count in [steiner_min, steiner_max],
// deduplicated under relabeling of Steiner vertices (terminal labels fixed),
// in deterministic canonical order.
std::vector<SteinerTopology> enumerate_topologies(int terminal_count, int steiner_min, int steiner_max);

inline std::vector<SteinerTopology> enumerate_topologies(int terminal_count, int steiner_exact) {
  return enumerate_topologies(terminal_count, steiner_exact, steiner_exact);
}

}  // namespace steinergeo
