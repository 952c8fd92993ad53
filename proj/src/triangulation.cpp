#include "steinergeo/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace steinergeo {

namespace {

constexpr double kPentaLength = 3.8911568233268529;  // derived numerically, no closed form claimed

ChainPointRef T(int i) { return ChainPointRef::terminal(i); }
ChainPointRef NP(int i) { return ChainPointRef::named(i); }

NamedPointDef diagonal_solved(std::string name, int from, int to, double lo, double hi) {
  NamedPointDef d;
  d.name = std::move(name);
  d.kind = NamedPointDef::Kind::DiagonalParam;
  d.diag_from = from;
  d.diag_to = to;
  d.solved = true;
  d.bracket_lo = lo;
  d.bracket_hi = hi;
  return d;
}

NamedPointDef intersection(std::string name, ChainPointRef a1, ChainPointRef a2, ChainPointRef b1,
                           ChainPointRef b2) {
  NamedPointDef d;
  d.name = std::move(name);
  d.kind = NamedPointDef::Kind::LineIntersection;
  d.l1a = a1;
  d.l1b = a2;
  d.l2a = b1;
  d.l2b = b2;
  return d;
}

struct ConfigDef {
  NamedConfiguration info;
  int polygon_n = 0;
  TriangleChainSpec (*make_chain)() = nullptr;
};

TriangleChainSpec make_fig1a() {
  TriangleChainSpec c{regular_polygon(4, 1.0), {}, {}, {}, {}};
  c.named_points.push_back(intersection("O", T(0), T(2), T(1), T(3)));
  c.triangles.push_back({{T(0), T(1), NP(0)}});
  c.triangles.push_back({{NP(0), T(2), T(3)}});
  c.declared_similar.push_back({0, 1, {1, 2, 0}});
  return c;
}

TriangleChainSpec make_fig1b() {
  TriangleChainSpec c{regular_polygon(4, 1.0), {}, {}, {}, {}};
  c.triangles.push_back({{T(0), T(1), T(2)}});
  c.trivial_extensions = {{2, 3}};
  return c;
}

TriangleChainSpec make_fig1c() {
  TriangleChainSpec c{regular_polygon(4, 1.0), {}, {}, {}, {}};
  c.trivial_extensions = {{0, 1}, {1, 2}, {2, 3}};
  return c;
}

TriangleChainSpec make_fig1d() {
  TriangleChainSpec c{regular_polygon(4, 1.0), {}, {}, {}, {}};
  c.trivial_extensions = {{0, 1}, {1, 3}, {2, 3}};
  return c;
}

TriangleChainSpec make_fig2a() {
  TriangleChainSpec c{regular_polygon(6, 1.0), {}, {}, {}, {}};
  c.trivial_extensions = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  return c;
}

TriangleChainSpec make_fig2b() {
  TriangleChainSpec c{regular_polygon(6, 1.0), {}, {}, {}, {}};
  c.named_points.push_back(intersection("O", T(0), T(3), T(2), T(5)));
  c.triangles.push_back({{T(0), T(1), NP(0)}});
  c.triangles.push_back({{T(2), T(3), NP(0)}});
  c.triangles.push_back({{T(4), T(5), NP(0)}});
  c.declared_similar.push_back({0, 1, {0, 1, 2}});
  c.declared_similar.push_back({1, 2, {0, 1, 2}});
  return c;
}

TriangleChainSpec make_fig2c() {
  TriangleChainSpec c{regular_polygon(6, 1.0), {}, {}, {}, {}};
  c.named_points.push_back(intersection("O", T(0), T(3), T(1), T(4)));
  c.named_points.push_back(intersection("G", T(1), T(3), T(2), T(5)));
  c.named_points.push_back(intersection("K", T(4), T(0), T(2), T(5)));
  c.triangles.push_back({{T(1), T(2), NP(1)}});
  c.triangles.push_back({{NP(1), T(3), NP(0)}});
  c.triangles.push_back({{NP(0), T(0), NP(2)}});
  c.triangles.push_back({{NP(2), T(4), T(5)}});
  c.declared_similar.push_back({0, 1, {1, 2, 0}});
  c.declared_similar.push_back({1, 2, {2, 1, 0}});
  c.declared_similar.push_back({2, 3, {2, 1, 0}});
  return c;
}

TriangleChainSpec make_cfg_a() {
  TriangleChainSpec c{regular_polygon(6, 1.0), {}, {}, {}, {}};
  c.named_points.push_back(diagonal_solved("H", 3, 0, 0.2, 0.9));
  c.named_points.push_back(intersection("G", T(2), NP(0), T(1), T(3)));
  c.triangles.push_back({{T(1), T(2), NP(1)}});
  c.triangles.push_back({{NP(1), T(3), NP(0)}});
  c.triangles.push_back({{NP(0), T(4), T(0)}});
  c.declared_similar.push_back({0, 1, {1, 2, 0}});
  c.declared_similar.push_back({1, 2, {1, 2, 0}});
  c.trivial_extensions = {{4, 5}};
  return c;
}

TriangleChainSpec make_cfg_b() {
  TriangleChainSpec c{regular_polygon(6, 1.0), {}, {}, {}, {}};
  c.named_points.push_back(diagonal_solved("H", 3, 0, 0.2, 1.2));
  c.named_points.push_back(intersection("G", T(1), NP(0), T(2), T(0)));
  c.triangles.push_back({{T(1), T(2), NP(1)}});
  c.triangles.push_back({{NP(1), NP(0), T(0)}});
  c.triangles.push_back({{NP(0), T(3), T(4)}});
  c.declared_similar.push_back({0, 1, {1, 2, 0}});
  c.trivial_extensions = {{4, 5}};
  return c;
}

TriangleChainSpec make_cfg_c() {
  TriangleChainSpec c{regular_polygon(6, 1.0), {}, {}, {}, {}};
  c.named_points.push_back(diagonal_solved("G", 3, 0, 0.05, 0.9));
  c.triangles.push_back({{T(2), NP(0), T(0)}});
  c.triangles.push_back({{NP(0), T(3), T(4)}});
  c.trivial_extensions = {{1, 2}, {4, 5}};
  return c;
}

TriangleChainSpec make_penta() {
  TriangleChainSpec c{regular_polygon(5, 1.0), {}, {}, {}, {}};
  c.named_points.push_back(diagonal_solved("H", 3, 0, 0.3, 1.0));
  c.named_points.push_back(intersection("G", T(2), NP(0), T(1), T(3)));
  c.triangles.push_back({{T(1), T(2), NP(1)}});
  c.triangles.push_back({{NP(1), T(3), NP(0)}});
  c.triangles.push_back({{NP(0), T(4), T(0)}});
  c.declared_similar.push_back({0, 1, {1, 2, 0}});
  c.declared_similar.push_back({1, 2, {1, 2, 0}});
  return c;
}

TriangleChainSpec make_octa_a() {
  TriangleChainSpec c{regular_polygon(8, 1.0), {}, {}, {}, {}};
  c.named_points.push_back(intersection("L1", T(0), T(2), T(1), T(5)));
  c.named_points.push_back(intersection("L2", T(0), T(3), T(1), T(5)));
  c.named_points.push_back(intersection("L3", T(1), T(5), T(3), T(7)));
  c.named_points.push_back(intersection("L4", T(4), T(7), T(1), T(5)));
  c.named_points.push_back(intersection("L5", T(4), T(6), T(1), T(5)));
  c.triangles.push_back({{T(1), T(2), NP(0)}});
  c.triangles.push_back({{NP(0), T(0), NP(1)}});
  c.triangles.push_back({{NP(1), T(3), NP(2)}});
  c.triangles.push_back({{NP(2), T(7), NP(3)}});
  c.triangles.push_back({{NP(3), T(4), NP(4)}});
  c.triangles.push_back({{NP(4), T(5), T(6)}});
  c.declared_similar.push_back({0, 1, {2, 1, 0}});
  c.declared_similar.push_back({1, 2, {2, 1, 0}});
  c.declared_similar.push_back({2, 3, {2, 1, 0}});
  c.declared_similar.push_back({3, 4, {2, 1, 0}});
  c.declared_similar.push_back({4, 5, {1, 2, 0}});
  return c;
}

TriangleChainSpec make_octa_b() {
  TriangleChainSpec c{regular_polygon(8, 1.0), {}, {}, {}, {}};
  c.named_points.push_back(intersection("L", T(0), T(3), T(1), T(6)));
  c.triangles.push_back({{T(0), T(1), NP(0)}});
  c.triangles.push_back({{NP(0), T(3), T(6)}});
  c.declared_similar.push_back({0, 1, {1, 2, 0}});
  c.trivial_extensions = {{1, 2}, {3, 4}, {5, 6}, {0, 7}};
  return c;
}

TriangleChainSpec make_octa_c() {
  TriangleChainSpec c{regular_polygon(8, 1.0), {}, {}, {}, {}};
  c.named_points.push_back(diagonal_solved("H", 0, 3, 0.05, 0.8));
  c.triangles.push_back({{T(6), T(0), NP(0)}});
  c.triangles.push_back({{NP(0), T(1), T(3)}});
  c.trivial_extensions = {{1, 2}, {3, 4}, {5, 6}, {0, 7}};
  return c;
}

const std::vector<ConfigDef>& registry() {
  static const std::vector<ConfigDef> defs = [] {
    const double s3 = std::sqrt(3.0);
    std::vector<ConfigDef> v;
    v.push_back({{"fig1a", 1.0 + s3, 2, 2}, 4, &make_fig1a});
    v.push_back({{"fig1b", 1.0 + (1.0 + s3) / std::sqrt(2.0), 1, 1}, 4, &make_fig1b});
    v.push_back({{"fig1c", 3.0, 0, 1}, 4, &make_fig1c});
    v.push_back({{"fig1d", 2.0 + std::sqrt(2.0), 0, 2}, 4, &make_fig1d});
    v.push_back({{"fig2a", 5.0, 0, 1}, 6, &make_fig2a});
    v.push_back({{"fig2b", std::sqrt(27.0), 4, 3}, 6, &make_fig2b});
    v.push_back({{"fig2c", std::sqrt(28.0), 4, 2}, 6, &make_fig2c});
    v.push_back({{"cfg_a", 1.0 + std::sqrt(21.0), 3, 1}, 6, &make_cfg_a});
    v.push_back({{"cfg_b", 1.0 + std::sqrt(19.0), 3, 1}, 6, &make_cfg_b});
    v.push_back({{"cfg_c", 2.0 + std::sqrt(13.0), 2, 1}, 6, &make_cfg_c});
    v.push_back({{"penta", kPentaLength, 3, 1}, 5, &make_penta});
    v.push_back({{"octa_a", (2.0 + std::sqrt(2.0)) * std::sqrt(4.0 + std::sqrt(6.0)), 6, 2}, 8,
                 &make_octa_a});
    v.push_back(
        {{"octa_b", 4.0 + 0.5 * (2.0 + std::sqrt(2.0)) * (1.0 + s3), 2, 1}, 8, &make_octa_b});
    v.push_back(
        {{"octa_c", 4.0 + 0.5 * (2.0 + std::sqrt(2.0)) * (1.0 + s3), 2, 1}, 8, &make_octa_c});
    return v;
  }();
  return defs;
}

const ConfigDef& find_config(const std::string& name) {
  for (const ConfigDef& d : registry()) {
    if (d.info.name == name) return d;
  }
  throw std::invalid_argument("unknown configuration: " + name);
}

// ---- chain evaluation -------------------------------------------------------

Point2 resolve_ref(const TriangleChainSpec& chain, const std::vector<Point2>& named,
                   ChainPointRef ref) {
  if (ref.kind == ChainPointRef::Kind::Terminal) return chain.terminals.points.at(ref.index);
  return named.at(ref.index);
}

// Named points are evaluated in order; intersections may reference earlier ones.
std::vector<Point2> resolve_named_points(const TriangleChainSpec& chain,
                                         const std::map<std::string, double>& params) {
  std::vector<Point2> named;
  named.reserve(chain.named_points.size());
  for (const NamedPointDef& d : chain.named_points) {
    if (d.kind == NamedPointDef::Kind::DiagonalParam) {
      const Point2 from = chain.terminals.points.at(d.diag_from);
      const Point2 to = chain.terminals.points.at(d.diag_to);
      double x = d.fixed_param;
      if (d.solved) {
        auto it = params.find(d.name);
        if (it == params.end()) {
          throw std::logic_error("chain parameter not solved: " + d.name);
        }
        x = it->second;
      }
      const double full = dist(from, to);
      named.push_back(from + (x / full) * (to - from));
    } else {
      const Point2 a1 = resolve_ref(chain, named, d.l1a);
      const Point2 a2 = resolve_ref(chain, named, d.l1b);
      const Point2 b1 = resolve_ref(chain, named, d.l2a);
      const Point2 b2 = resolve_ref(chain, named, d.l2b);
      named.push_back(line_intersection(a1, a2, b1, b2));
    }
  }
  return named;
}

std::array<Point2, 3> triangle_corners(const TriangleChainSpec& chain,
                                       const std::vector<Point2>& named, int tri) {
  const ChainTriangleDef& t = chain.triangles.at(tri);
  return {resolve_ref(chain, named, t.corners[0]), resolve_ref(chain, named, t.corners[1]),
          resolve_ref(chain, named, t.corners[2])};
}

int named_index(const TriangleChainSpec& chain, const std::string& link) {
  for (size_t i = 0; i < chain.named_points.size(); ++i) {
    if (chain.named_points[i].name == link) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown link point: " + link);
}

std::vector<int> triangles_using(const TriangleChainSpec& chain, int named_idx) {
  std::vector<int> tris;
  for (size_t t = 0; t < chain.triangles.size(); ++t) {
    for (const ChainPointRef& r : chain.triangles[t].corners) {
      if (r.kind == ChainPointRef::Kind::Named && r.index == named_idx) {
        tris.push_back(static_cast<int>(t));
        break;
      }
    }
  }
  return tris;
}

// Stem elevation at `link` inside triangle `tri`, measured from the ray
// link -> diag_end (a triangle corner lying on the solved diagonal).
double elevation_at_link(const TriangleChainSpec& chain, const std::vector<Point2>& named, int tri,
                         const Point2& link, int diag_end_terminal) {
  const ChainTriangleDef& t = chain.triangles.at(tri);
  Point2 diag_end{}, other{};
  bool have_end = false, have_other = false;
  for (const ChainPointRef& r : t.corners) {
    const Point2 p = resolve_ref(chain, named, r);
    if (r.kind == ChainPointRef::Kind::Terminal && r.index == diag_end_terminal) {
      diag_end = p;
      have_end = true;
    } else if (dist(p, link) > 1e-12) {
      other = p;
      have_other = true;
    }
  }
  if (!have_end || !have_other) {
    throw std::logic_error("elevation_at_link: triangle does not carry the diagonal endpoint");
  }
  const double l = dist(link, diag_end);
  const double l_prime = dist(other, link);
  const Angle b(vertex_angle(other, link, diag_end));
  return stem_elevation(l, l_prime, b).radians();
}

// Elevation mismatch between the two triangles adjacent at the solved link.
double link_residual(const TriangleChainSpec& chain, int named_idx, double x) {
  const NamedPointDef& d = chain.named_points.at(named_idx);
  std::map<std::string, double> params{{d.name, x}};
  const std::vector<Point2> named = resolve_named_points(chain, params);
  const Point2 link = named.at(named_idx);
  const std::vector<int> tris = triangles_using(chain, named_idx);
  if (tris.size() != 2) {
    throw std::logic_error("solved link must be shared by exactly two triangles");
  }
  int tri_from = -1, tri_to = -1;
  for (int t : tris) {
    for (const ChainPointRef& r : chain.triangles[t].corners) {
      if (r.kind != ChainPointRef::Kind::Terminal) continue;
      if (r.index == d.diag_from) tri_from = t;
      if (r.index == d.diag_to) tri_to = t;
    }
  }
  if (tri_from < 0 || tri_to < 0) {
    throw std::logic_error("solved link triangles must carry the diagonal endpoints");
  }
  return elevation_at_link(chain, named, tri_from, link, d.diag_from) -
         elevation_at_link(chain, named, tri_to, link, d.diag_to);
}

double bisect_link(const TriangleChainSpec& chain, int named_idx, double lo, double hi) {
  double flo = link_residual(chain, named_idx, lo);
  double fhi = link_residual(chain, named_idx, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::runtime_error("solve_partition: no sign change on bracket (unsolvable chain spec)");
  }
  while (hi - lo >= 1e-13) {
    const double mid = 0.5 * (lo + hi);
    const double fm = link_residual(chain, named_idx, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double x = 0.5 * (lo + hi);
  if (std::abs(link_residual(chain, named_idx, x)) > 1e-12) {
    throw std::runtime_error("solve_partition: elevations do not agree at the bisection root");
  }
  return x;
}

std::map<std::string, double> solve_chain_params(const TriangleChainSpec& chain) {
  std::map<std::string, double> params;
  for (size_t i = 0; i < chain.named_points.size(); ++i) {
    const NamedPointDef& d = chain.named_points[i];
    if (d.kind == NamedPointDef::Kind::DiagonalParam && d.solved) {
      params[d.name] = bisect_link(chain, static_cast<int>(i), d.bracket_lo, d.bracket_hi);
    }
  }
  return params;
}

bool triangles_overlap(const std::array<Point2, 3>& ta, const std::array<Point2, 3>& tb,
                       double slack) {
  auto ccw = [](std::array<Point2, 3> t) {
    if (cross(t[1] - t[0], t[2] - t[0]) < 0) std::swap(t[1], t[2]);
    return t;
  };
  const std::array<Point2, 3> A = ccw(ta), B = ccw(tb);
  auto separated_by_edge_of = [&](const std::array<Point2, 3>& P, const std::array<Point2, 3>& Q) {
    for (int i = 0; i < 3; ++i) {
      const Point2 p = P[i], q = P[(i + 1) % 3];
      bool all_outside = true;
      for (const Point2& v : Q) {
        if (cross(q - p, v - p) > slack) {
          all_outside = false;
          break;
        }
      }
      if (all_outside) return true;
    }
    return false;
  };
  return !(separated_by_edge_of(A, B) || separated_by_edge_of(B, A));
}

}  // namespace

std::vector<NamedConfiguration> list_configurations() {
  std::vector<NamedConfiguration> out;
  for (const ConfigDef& d : registry()) out.push_back(d.info);
  return out;
}

const NamedConfiguration& configuration_info(const std::string& name) {
  return find_config(name).info;
}

TriangleChainSpec configuration_chain(const std::string& name) { return find_config(name).make_chain(); }

double solve_partition(const TriangleChainSpec& chain, const std::string& link, double bracket_lo,
                       double bracket_hi) {
  const int idx = named_index(chain, link);
  const NamedPointDef& d = chain.named_points.at(idx);
  if (d.kind != NamedPointDef::Kind::DiagonalParam) {
    throw std::invalid_argument("solve_partition: link is not a diagonal-parameter point");
  }
  return bisect_link(chain, idx, bracket_lo, bracket_hi);
}

double partition_residual(const TriangleChainSpec& chain, const std::string& link, double x) {
  const int idx = named_index(chain, link);
  const NamedPointDef& d = chain.named_points.at(idx);
  if (d.kind != NamedPointDef::Kind::DiagonalParam) {
    throw std::invalid_argument("partition_residual: link is not a diagonal-parameter point");
  }
  return link_residual(chain, idx, x);
}

GeometricTree build_configuration(const std::string& name) {
  const ConfigDef& def = find_config(name);
  const TriangleChainSpec chain = def.make_chain();
  const std::map<std::string, double> params = solve_chain_params(chain);
  const std::vector<Point2> named = resolve_named_points(chain, params);

  const int T = chain.terminals.size();
  const int ntri = static_cast<int>(chain.triangles.size());
  std::vector<Point2> steiner;
  std::vector<std::pair<int, int>> edges;

  // One Fermat point per triangle.
  for (int t = 0; t < ntri; ++t) {
    const std::array<Point2, 3> c = triangle_corners(chain, named, t);
    const FermatResult f = fermat_point(Triangle(c[0], c[1], c[2]));
    if (f.degenerate_at) {
      throw std::runtime_error("build_configuration: degenerate chain triangle in " + name);
    }
    steiner.push_back(f.point);
  }
  auto fermat_vertex = [&](int tri) { return T + tri; };

  for (int t = 0; t < ntri; ++t) {
    for (const ChainPointRef& r : chain.triangles[t].corners) {
      if (r.kind == ChainPointRef::Kind::Terminal) {
        edges.emplace_back(std::min(r.index, fermat_vertex(t)), std::max(r.index, fermat_vertex(t)));
      }
    }
  }
  for (size_t npi = 0; npi < chain.named_points.size(); ++npi) {
    const std::vector<int> tris = triangles_using(chain, static_cast<int>(npi));
    if (tris.size() == 2) {
      // pass-through film: glue the two Fermat stems into one edge
      edges.emplace_back(std::min(fermat_vertex(tris[0]), fermat_vertex(tris[1])),
                         std::max(fermat_vertex(tris[0]), fermat_vertex(tris[1])));
    } else if (tris.size() == 3) {
      // the link is itself a Steiner vertex
      const int v = T + static_cast<int>(steiner.size());
      steiner.push_back(named[npi]);
      for (int t : tris) edges.emplace_back(std::min(fermat_vertex(t), v), std::max(fermat_vertex(t), v));
    } else if (!tris.empty()) {
      throw std::logic_error("build_configuration: link shared by an unsupported triangle count");
    }
  }
  for (const auto& [u, v] : chain.trivial_extensions) {
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());

  GeometricTree tree{chain.terminals, std::move(steiner), {}, 0.0, 0, 1, false};
  tree.topology.terminal_count = T;
  tree.topology.steiner_count = static_cast<int>(tree.steiner_points.size());
  tree.topology.edges = std::move(edges);
  tree.p = tree.topology.steiner_count;
  for (const auto& [u, v] : tree.topology.edges) {
    tree.total_length += dist(tree.position(u), tree.position(v));
  }
  tree.q = classify_symmetry(tree, 1e-6);
  // Valid critical point: every Steiner junction carries three films at 120°.
  {
    bool junctions_ok = true;
    const std::vector<int> deg = tree.topology.degrees();
    std::vector<std::vector<int>> adj(tree.topology.vertex_count());
    for (const auto& [u, v] : tree.topology.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (int s = T; s < tree.topology.vertex_count(); ++s) {
      if (deg[s] != 3) {
        junctions_ok = false;
        continue;
      }
      for (int i = 0; i < 3 && junctions_ok; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          const double ang =
              vertex_angle(tree.position(adj[s][i]), tree.position(s), tree.position(adj[s][j]));
          if (std::abs(ang - 2.0 * kPi / 3.0) > 1e-7) junctions_ok = false;
        }
      }
    }
    tree.stable = junctions_ok;
  }
  return tree;
}

ChainValidationReport validate_chain(const TriangleChainSpec& chain) {
  ChainValidationReport report;
  auto fail = [&report](const std::string& msg) {
    report.valid = false;
    report.violations.push_back(msg);
  };

  const std::map<std::string, double> params = solve_chain_params(chain);
  const std::vector<Point2> named = resolve_named_points(chain, params);

  const int ntri = static_cast<int>(chain.triangles.size());
  std::vector<Point2> fermat(ntri);
  std::vector<std::array<Point2, 3>> corners(ntri);
  for (int t = 0; t < ntri; ++t) {
    corners[t] = triangle_corners(chain, named, t);
    const FermatResult f = fermat_point(Triangle(corners[t][0], corners[t][1], corners[t][2]));
    if (f.degenerate_at) {
      fail("triangle " + std::to_string(t) + " is degenerate (angle >= 120 degrees)");
    }
    fermat[t] = f.point;
  }

  // (i) declared similarity with matching chirality, free scale
  for (const SimilarPairDef& sp : chain.declared_similar) {
    const auto& ca = corners.at(sp.tri_a);
    const auto& cb = corners.at(sp.tri_b);
    const Triangle t1(ca[0], ca[1], ca[2]);
    const Triangle t2(cb[sp.corr[0]], cb[sp.corr[1]], cb[sp.corr[2]]);
    const auto scale = similar_same_chirality(t1, t2, 1e-7);
    if (!scale || *scale <= 0.0) {
      fail("declared similar triangles " + std::to_string(sp.tri_a) + "," +
           std::to_string(sp.tri_b) + " fail the same-chirality similarity test");
    }
  }

  // (ii)/(iii) link conditions
  for (size_t npi = 0; npi < chain.named_points.size(); ++npi) {
    const std::vector<int> tris = triangles_using(chain, static_cast<int>(npi));
    const Point2 link = named[npi];
    if (tris.size() == 2) {
      const Point2 u = link - fermat[tris[0]];
      const Point2 v = fermat[tris[1]] - link;
      if (angle_between(u, v) > 1e-9) {
        fail("film through link " + chain.named_points[npi].name + " is not collinear");
      }
    } else if (tris.size() == 3) {
      for (size_t i = 0; i < 3; ++i) {
        for (size_t j = i + 1; j < 3; ++j) {
          const double ang = vertex_angle(fermat[tris[i]], link, fermat[tris[j]]);
          if (std::abs(ang - 2.0 * kPi / 3.0) > 1e-9) {
            fail("stems at 3-triangle link " + chain.named_points[npi].name +
                 " do not meet at 120 degrees");
          }
        }
      }
    }
    // link point on its declared diagonal segment
    const NamedPointDef& d = chain.named_points[npi];
    if (d.kind == NamedPointDef::Kind::DiagonalParam) {
      const Point2 from = chain.terminals.points.at(d.diag_from);
      const Point2 to = chain.terminals.points.at(d.diag_to);
      const double full = dist(from, to);
      const double x = dist(from, link);
      if (x < -1e-12 || x > full + 1e-12 || std::abs(cross(to - from, link - from)) > 1e-9) {
        fail("link " + d.name + " does not lie on its declared diagonal segment");
      }
    }
  }

  // triangle interiors must not overlap
  for (int i = 0; i < ntri; ++i) {
    for (int j = i + 1; j < ntri; ++j) {
      if (triangles_overlap(corners[i], corners[j], 1e-12)) {
        fail("triangles " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
  return report;
}

}  // namespace steinergeo
