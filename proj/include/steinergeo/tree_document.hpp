#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "steinergeo/relax.hpp"
#include "steinergeo/spanning.hpp"

namespace steinergeo {

// Tree-exchange document. Vertex indices 0..T-1 are terminals, then Steiner
// points. Serialization uses one canonical field order and 15-significant-
// digit coordinates, so serialize(parse(s)) == s byte for byte.
struct TreeDocument {
  std::string name;
  std::vector<std::array<double, 2>> terminals;
  std::vector<std::array<double, 2>> steiner_points;
  std::vector<std::pair<int, int>> edges;
  double length = 0.0;
  int p = 0;
  int q = 1;
  bool stable = false;
};

TreeDocument to_document(const GeometricTree& tree, const std::string& name);
TreeDocument to_document(const SpanningTree& tree, const TerminalSet& terminals,
                         const std::string& name, int q);

std::string serialize(const TreeDocument& doc);

// Parses and validates: finite coordinates, indices in range, edges form a
// tree, stored length within 1e-9 of the recomputed edge sum.
TreeDocument parse_document(const std::string& json_text);

// 15-significant-digit number formatting shared by the JSON emitters.
std::string format_g15(double v);

}  // namespace steinergeo
