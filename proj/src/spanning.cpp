#include "steinergeo/spanning.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "steinergeo/relax.hpp"

namespace steinergeo {

namespace {

std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> deg(n, 1);
  for (int v : seq) deg[v]++;
  std::set<int> leaves;
  for (int i = 0; i < n; ++i) {
    if (deg[i] == 1) leaves.insert(i);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int v : seq) {
    const int u = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(u, v), std::max(u, v));
    if (--deg[v] == 1) leaves.insert(v);
  }
  const int u = *leaves.begin();
  const int v = *std::next(leaves.begin());
  edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges.begin(), edges.end());
  return edges;
}

double edges_length(const TerminalSet& t, const std::vector<std::pair<int, int>>& edges) {
  double L = 0.0;
  for (const auto& [u, v] : edges) L += dist(t.points[u], t.points[v]);
  return L;
}

}  // namespace

std::vector<SpanningTree> enumerate_spanning_trees(const TerminalSet& terminals) {
  const int n = terminals.size();
  if (n > 9) throw std::invalid_argument("enumerate_spanning_trees: terminal_count must be <= 9");
  std::vector<SpanningTree> out;
  if (n == 2) {
    out.push_back({{{0, 1}}, dist(terminals.points[0], terminals.points[1])});
    return out;
  }
  const int len = n - 2;
  std::vector<int> seq(len, 0);
  long long count = 1;
  for (int i = 0; i < len; ++i) count *= n;
  out.reserve(count);
  while (true) {
    SpanningTree tree;
    tree.edges = pruefer_decode(seq, n);
    tree.total_length = edges_length(terminals, tree.edges);
    out.push_back(std::move(tree));
    int pos = len - 1;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    seq[pos]++;
  }
  return out;
}

SpanningTree minimum_spanning_tree(const TerminalSet& terminals) {
  const int n = terminals.size();
  struct WeightedEdge {
    double w;
    int u, v;
  };
  std::vector<WeightedEdge> all;
  all.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      all.push_back({dist(terminals.points[i], terminals.points[j]), i, j});
    }
  }
  std::sort(all.begin(), all.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  SpanningTree tree;
  for (const WeightedEdge& e : all) {
    const int ru = find(e.u), rv = find(e.v);
    if (ru == rv) continue;
    parent[ru] = rv;
    tree.edges.emplace_back(e.u, e.v);
    tree.total_length += e.w;
    if (static_cast<int>(tree.edges.size()) == n - 1) break;
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

std::vector<SpanningGroup> spanning_catalog(const TerminalSet& terminals, double max_length) {
  std::vector<SpanningTree> all = enumerate_spanning_trees(terminals);
  std::vector<SpanningTree> kept;
  for (SpanningTree& t : all) {
    if (t.total_length <= max_length + 1e-9) kept.push_back(std::move(t));
  }
  std::sort(kept.begin(), kept.end(), [](const SpanningTree& a, const SpanningTree& b) {
    if (a.total_length != b.total_length) return a.total_length < b.total_length;
    return a.edges < b.edges;
  });
  std::map<std::string, size_t> groups;
  std::vector<SpanningGroup> out;
  for (SpanningTree& t : kept) {
    std::vector<std::pair<Point2, Point2>> coords;
    coords.reserve(t.edges.size());
    for (const auto& [u, v] : t.edges) {
      coords.emplace_back(terminals.points[u], terminals.points[v]);
    }
    const std::string key = dihedral_canonical_key(terminals, coords);
    auto it = groups.find(key);
    if (it == groups.end()) {
      SpanningGroup g;
      g.length = t.total_length;
      g.q = classify_symmetry_edges(terminals, coords, 1e-6);
      g.representative = std::move(t);
      g.multiplicity = 1;
      groups[key] = out.size();
      out.push_back(std::move(g));
    } else {
      out[it->second].multiplicity++;
    }
  }
  std::sort(out.begin(), out.end(), [](const SpanningGroup& a, const SpanningGroup& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.representative.edges < b.representative.edges;
  });
  return out;
}

}  // namespace steinergeo
