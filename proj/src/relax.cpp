#include "steinergeo/relax.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <thread>

namespace steinergeo {

namespace {

// Sum-of-distances minimizer over three anchor points, robust to collinear
// and coincident anchors (falls back to the best anchor itself). The area
// guard sits above the Triangle collinearity threshold.
Point2 junction_point(const Point2& u, const Point2& v, const Point2& w) {
  const double area2 = std::abs(cross(v - u, w - u));
  const double smallest_side = std::min({dist(u, v), dist(v, w), dist(w, u)});
  if (area2 > 1e-11 && smallest_side > 1e-10) {
    const FermatResult f = fermat_point(Triangle(u, v, w));
    return f.point;
  }
  const Point2 anchors[3] = {u, v, w};
  double best = -1.0;
  Point2 best_pt = u;
  for (const Point2& a : anchors) {
    const double s = dist(a, u) + dist(a, v) + dist(a, w);
    if (best < 0.0 || s < best) {
      best = s;
      best_pt = a;
    }
  }
  return best_pt;
}

struct Mesh {
  int T = 0;
  int N = 0;
  std::vector<Point2> pos;
  std::vector<std::set<int>> adj;
  std::vector<char> alive;

  double total_length() const {
    double L = 0.0;
    for (int i = 0; i < N; ++i) {
      if (!alive[i]) continue;
      for (int j : adj[i]) {
        if (j > i) L += dist(pos[i], pos[j]);
      }
    }
    return L;
  }
};

// Deterministic seed: Steiner vertices start at the centroid of adjacent
// terminals, unresolved ones are filled by neighbor averaging.
void seed_steiner(Mesh& m) {
  std::vector<char> assigned(m.N, 0);
  for (int i = 0; i < m.T; ++i) assigned[i] = 1;
  for (int s = m.T; s < m.N; ++s) {
    Point2 acc{0, 0};
    int cnt = 0;
    for (int j : m.adj[s]) {
      if (j < m.T) {
        acc = acc + m.pos[j];
        ++cnt;
      }
    }
    if (cnt > 0) {
      m.pos[s] = (1.0 / cnt) * acc;
      assigned[s] = 1;
    }
  }
  for (int pass = 0; pass < 3 * m.N; ++pass) {
    bool all = true;
    for (int s = m.T; s < m.N; ++s) {
      Point2 acc{0, 0};
      int cnt = 0;
      for (int j : m.adj[s]) {
        if (assigned[j]) {
          acc = acc + m.pos[j];
          ++cnt;
        }
      }
      if (cnt > 0) {
        m.pos[s] = (1.0 / cnt) * acc;
        assigned[s] = 1;
      }
      if (!assigned[s]) all = false;
    }
    if (all && pass >= 1) break;
  }
  // settle the harmonic seed
  for (int pass = 0; pass < 64; ++pass) {
    for (int s = m.T; s < m.N; ++s) {
      Point2 acc{0, 0};
      for (int j : m.adj[s]) acc = acc + m.pos[j];
      if (!m.adj[s].empty()) m.pos[s] = (1.0 / m.adj[s].size()) * acc;
    }
  }
}

// Merge Steiner vertex s into neighbor j, rewiring s's other edges.
void merge_vertex(Mesh& m, int s, int j) {
  m.alive[s] = 0;
  m.adj[j].erase(s);
  for (int k : m.adj[s]) {
    if (k == j) continue;
    m.adj[k].erase(s);
    m.adj[k].insert(j);
    m.adj[j].insert(k);
  }
  m.adj[s].clear();
}

}  // namespace

GeometricTree relax(const SteinerTopology& topology, const TerminalSet& terminals,
                    const RelaxOptions& options, RelaxTrace* trace) {
  if (topology.terminal_count != terminals.size()) {
    throw std::invalid_argument("relax: topology does not match terminal count");
  }
  if (!(options.position_tolerance > 0) || !(options.collapse_distance > 0) ||
      options.max_iterations <= 0) {
    throw std::invalid_argument("relax: options must be positive");
  }
  Mesh m;
  m.T = topology.terminal_count;
  m.N = topology.vertex_count();
  m.pos.resize(m.N);
  m.adj.resize(m.N);
  m.alive.assign(m.N, 1);
  for (int i = 0; i < m.T; ++i) m.pos[i] = terminals.points[i];
  for (const auto& [u, v] : topology.edges) {
    m.adj[u].insert(v);
    m.adj[v].insert(u);
  }
  seed_steiner(m);

  bool converged = (topology.steiner_count == 0);
  int collapses = 0;
  int sweeps = 0;
  for (int it = 0; it < options.max_iterations && !converged; ++it) {
    ++sweeps;
    double max_disp = 0.0;
    for (int s = m.T; s < m.N; ++s) {
      if (!m.alive[s] || m.adj[s].size() != 3) continue;
      auto nb = m.adj[s].begin();
      const int n0 = *nb++;
      const int n1 = *nb++;
      const int n2 = *nb;
      const Point2 np = junction_point(m.pos[n0], m.pos[n1], m.pos[n2]);
      max_disp = std::max(max_disp, dist(np, m.pos[s]));
      m.pos[s] = np;
    }
    bool merged = false;
    for (int s = m.T; s < m.N; ++s) {
      if (!m.alive[s]) continue;
      for (int j : m.adj[s]) {
        if (dist(m.pos[s], m.pos[j]) < options.collapse_distance) {
          merge_vertex(m, s, j);
          ++collapses;
          merged = true;
          break;
        }
      }
    }
    if (trace) trace->sweep_lengths.push_back(m.total_length());
    if (max_disp < options.position_tolerance && !merged) converged = true;
  }

  // Compact live vertices into the output tree.
  GeometricTree tree{terminals, {}, {}, 0.0, 0, 1, false};
  std::vector<int> remap(m.N, -1);
  for (int i = 0; i < m.T; ++i) remap[i] = i;
  int next = m.T;
  for (int s = m.T; s < m.N; ++s) {
    if (m.alive[s]) {
      remap[s] = next++;
      tree.steiner_points.push_back(m.pos[s]);
    }
  }
  tree.topology.terminal_count = m.T;
  tree.topology.steiner_count = next - m.T;
  for (int i = 0; i < m.N; ++i) {
    if (!m.alive[i] && i >= m.T) continue;
    for (int j : m.adj[i]) {
      if (j > i) tree.topology.edges.emplace_back(remap[i], remap[j]);
    }
  }
  std::sort(tree.topology.edges.begin(), tree.topology.edges.end());
  tree.p = tree.topology.steiner_count;
  for (const auto& [u, v] : tree.topology.edges) {
    tree.total_length += dist(tree.position(u), tree.position(v));
  }
  tree.q = classify_symmetry(tree, 1e-6);
  bool junctions_ok = true;
  {
    const std::vector<int> deg = tree.topology.degrees();
    for (int s = m.T; s < tree.topology.vertex_count(); ++s) {
      if (deg[s] != 3) junctions_ok = false;
    }
  }
  tree.stable = converged && junctions_ok;
  if (trace) {
    trace->sweeps = sweeps;
    trace->collapses = collapses;
    trace->converged = converged;
  }
  return tree;
}

bool is_stable(const GeometricTree& tree, double angle_tol) {
  const int T = tree.terminals.size();
  const int N = tree.topology.vertex_count();
  std::vector<std::vector<int>> adj(N);
  for (const auto& [u, v] : tree.topology.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  const double third = 2.0 * kPi / 3.0;
  for (int s = T; s < N; ++s) {
    if (adj[s].size() != 3) return false;
    for (size_t i = 0; i < 3; ++i) {
      for (size_t j = i + 1; j < 3; ++j) {
        const double ang = vertex_angle(tree.position(adj[s][i]), tree.position(s),
                                        tree.position(adj[s][j]));
        if (std::abs(ang - third) > angle_tol) return false;
      }
    }
  }
  for (int t = 0; t < T; ++t) {
    for (size_t i = 0; i < adj[t].size(); ++i) {
      for (size_t j = i + 1; j < adj[t].size(); ++j) {
        const double ang = vertex_angle(tree.position(adj[t][i]), tree.position(t),
                                        tree.position(adj[t][j]));
        if (ang < third - angle_tol) return false;
      }
    }
  }
  return true;
}

int classify_symmetry_edges(const TerminalSet& terminals,
                            const std::vector<std::pair<Point2, Point2>>& edges, double tol) {
  const Point2 c = terminals.centroid();
  auto maps_onto_itself = [&](double theta) {
    for (const auto& [p, q] : edges) {
      const Point2 rp = c + rotate(p - c, theta);
      const Point2 rq = c + rotate(q - c, theta);
      bool found = false;
      for (const auto& [a, b] : edges) {
        if ((dist(rp, a) < tol && dist(rq, b) < tol) || (dist(rp, b) < tol && dist(rq, a) < tol)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  for (int d = terminals.symmetry_order; d >= 2; --d) {
    if (terminals.symmetry_order % d != 0) continue;
    if (maps_onto_itself(2.0 * kPi / d)) return d;
  }
  return 1;
}

int classify_symmetry(const GeometricTree& tree, double tol) {
  std::vector<std::pair<Point2, Point2>> edges;
  edges.reserve(tree.topology.edges.size());
  for (const auto& [u, v] : tree.topology.edges) {
    edges.emplace_back(tree.position(u), tree.position(v));
  }
  return classify_symmetry_edges(tree.terminals, edges, tol);
}

int effective_nodal_total(const GeometricTree& tree) {
  const std::vector<int> deg = tree.topology.degrees();
  int total = 0;
  for (int t = 0; t < tree.terminals.size(); ++t) total += deg[t] - 1;
  return total;
}

namespace {

std::string edge_multiset_key(const std::vector<std::pair<Point2, Point2>>& edges) {
  std::vector<std::array<long long, 4>> rows;
  rows.reserve(edges.size());
  auto r8 = [](double v) { return static_cast<long long>(std::llround(v * 1e8)); };
  for (const auto& [p, q] : edges) {
    std::array<long long, 2> a{r8(p.x), r8(p.y)}, b{r8(q.x), r8(q.y)};
    if (b < a) std::swap(a, b);
    rows.push_back({a[0], a[1], b[0], b[1]});
  }
  std::sort(rows.begin(), rows.end());
  std::string key;
  key.reserve(rows.size() * 40);
  char buf[80];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%lld,%lld,%lld,%lld;", r[0], r[1], r[2], r[3]);
    key += buf;
  }
  return key;
}

}  // namespace

std::string dihedral_canonical_key(const TerminalSet& terminals,
                                   const std::vector<std::pair<Point2, Point2>>& edges) {
  const Point2 c = terminals.centroid();
  const int n = terminals.symmetry_order;
  std::string best;
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * kPi * k / n;
    for (int refl = 0; refl < 2; ++refl) {
      std::vector<std::pair<Point2, Point2>> transformed;
      transformed.reserve(edges.size());
      for (const auto& [p, q] : edges) {
        Point2 tp = p - c, tq = q - c;
        if (refl) {
          tp.y = -tp.y;
          tq.y = -tq.y;
        }
        transformed.emplace_back(c + rotate(tp, theta), c + rotate(tq, theta));
      }
      std::string key = edge_multiset_key(transformed);
      if (best.empty() || key < best) best = std::move(key);
    }
  }
  return best;
}

namespace {

// Terminal-angle admissibility with the pin-extension waiver: a sub-120
// angle at a terminal is tolerated only between a unit pin stem (a
// terminal-terminal edge of pin-spacing length) and an edge into the Steiner
// part of the tree. Film pairs violating 120 degrees otherwise reject the
// configuration.
bool terminal_angles_admissible(const GeometricTree& tree, double angle_tol) {
  const int T = tree.terminals.size();
  const double side = tree.terminals.pin_spacing();
  std::vector<std::vector<int>> adj(tree.topology.vertex_count());
  for (const auto& [u, v] : tree.topology.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  const double third = 2.0 * kPi / 3.0;
  auto is_pin_extension = [&](int a, int b) {
    return a < T && b < T && std::abs(dist(tree.position(a), tree.position(b)) - side) < 1e-9;
  };
  for (int t = 0; t < T; ++t) {
    for (size_t i = 0; i < adj[t].size(); ++i) {
      for (size_t j = i + 1; j < adj[t].size(); ++j) {
        const int a = adj[t][i], b = adj[t][j];
        const double ang = vertex_angle(tree.position(a), tree.position(t), tree.position(b));
        if (ang >= third - angle_tol) continue;
        const bool ext_a = is_pin_extension(t, a);
        const bool ext_b = is_pin_extension(t, b);
        const bool stem_a = a >= T;
        const bool stem_b = b >= T;
        const bool waived = (ext_a && stem_b) || (ext_b && stem_a);
        if (!waived) return false;
      }
    }
  }
  return true;
}

}  // namespace

LocalMinimaResult local_minima_search(const TerminalSet& terminals, int steiner_min, int steiner_max,
                                      double max_length, const RelaxOptions& options, int threads) {
  const std::vector<SteinerTopology> topologies =
      enumerate_topologies(terminals.size(), steiner_min, steiner_max);
  const int K = static_cast<int>(topologies.size());
  std::vector<GeometricTree> relaxed;
  relaxed.reserve(K);
  std::vector<char> converged_flags(K, 0);
  {
    std::vector<GeometricTree> slots(K, GeometricTree{terminals, {}, {}, 0.0, 0, 1, false});
    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min(nthreads, std::max(1, K));
    auto worker = [&](int tid) {
      for (int i = tid; i < K; i += nthreads) {
        RelaxTrace tr;
        slots[i] = relax(topologies[i], terminals, options, &tr);
        converged_flags[i] = tr.converged ? 1 : 0;
      }
    };
    std::vector<std::thread> pool;
    for (int tid = 1; tid < nthreads; ++tid) pool.emplace_back(worker, tid);
    worker(0);
    for (auto& th : pool) th.join();
    relaxed = std::move(slots);
  }

  LocalMinimaResult result;
  result.topologies_relaxed = K;
  std::map<std::string, size_t> seen;
  std::vector<std::pair<std::string, GeometricTree>> kept;
  for (int i = 0; i < K; ++i) {
    GeometricTree& tree = relaxed[i];
    if (!converged_flags[i]) {
      ++result.non_converged;
      continue;
    }
    if (!tree.stable || !terminal_angles_admissible(tree, 1e-7)) {
      ++result.rejected_unstable;
      continue;
    }
    if (tree.total_length > max_length + 1e-9) continue;
    std::vector<std::pair<Point2, Point2>> coords;
    for (const auto& [u, v] : tree.topology.edges) {
      coords.emplace_back(tree.position(u), tree.position(v));
    }
    std::string key = dihedral_canonical_key(terminals, coords);
    if (seen.count(key)) {
      ++result.deduplicated;
      continue;
    }
    seen[key] = kept.size();
    kept.emplace_back(std::move(key), std::move(tree));
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second.total_length != b.second.total_length) {
      return a.second.total_length < b.second.total_length;
    }
    return a.first < b.first;
  });
  for (auto& [key, tree] : kept) result.trees.push_back(std::move(tree));
  return result;
}

}  // namespace steinergeo
