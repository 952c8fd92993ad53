#include "steinergeo/tree_document.hpp"

#include <cmath>
#include <cstdio>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace steinergeo {

std::string format_g15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

TreeDocument to_document(const GeometricTree& tree, const std::string& name) {
  TreeDocument doc;
  doc.name = name;
  for (const Point2& p : tree.terminals.points) doc.terminals.push_back({p.x, p.y});
  for (const Point2& p : tree.steiner_points) doc.steiner_points.push_back({p.x, p.y});
  doc.edges = tree.topology.edges;
  doc.length = tree.total_length;
  doc.p = tree.p;
  doc.q = tree.q;
  doc.stable = tree.stable;
  return doc;
}

TreeDocument to_document(const SpanningTree& tree, const TerminalSet& terminals,
                         const std::string& name, int q) {
  TreeDocument doc;
  doc.name = name;
  for (const Point2& p : terminals.points) doc.terminals.push_back({p.x, p.y});
  doc.edges = tree.edges;
  doc.length = tree.total_length;
  doc.p = 0;
  doc.q = q;
  doc.stable = true;
  return doc;
}

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  return out;
}

void append_points(std::string& out, const std::vector<std::array<double, 2>>& pts) {
  out += '[';
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ',';
    out += '[';
    out += format_g15(pts[i][0]);
    out += ',';
    out += format_g15(pts[i][1]);
    out += ']';
  }
  out += ']';
}

}  // namespace

std::string serialize(const TreeDocument& doc) {
  std::string out = "{\"name\":\"" + escape_json(doc.name) + "\",\"terminals\":";
  append_points(out, doc.terminals);
  out += ",\"steiner_points\":";
  append_points(out, doc.steiner_points);
  out += ",\"edges\":[";
  for (size_t i = 0; i < doc.edges.size(); ++i) {
    if (i) out += ',';
    out += '[' + std::to_string(doc.edges[i].first) + ',' + std::to_string(doc.edges[i].second) + ']';
  }
  out += "],\"length\":";
  out += format_g15(doc.length);
  out += ",\"p\":" + std::to_string(doc.p);
  out += ",\"q\":" + std::to_string(doc.q);
  out += ",\"stable\":";
  out += doc.stable ? "true" : "false";
  out += "}";
  return out;
}

TreeDocument parse_document(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("TreeDocument: malformed JSON: ") + e.what());
  }
  TreeDocument doc;
  try {
    doc.name = j.at("name").get<std::string>();
    for (const auto& pt : j.at("terminals")) {
      doc.terminals.push_back({pt.at(0).get<double>(), pt.at(1).get<double>()});
    }
    for (const auto& pt : j.at("steiner_points")) {
      doc.steiner_points.push_back({pt.at(0).get<double>(), pt.at(1).get<double>()});
    }
    for (const auto& e : j.at("edges")) {
      doc.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    doc.length = j.at("length").get<double>();
    doc.p = j.at("p").get<int>();
    doc.q = j.at("q").get<int>();
    doc.stable = j.at("stable").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("TreeDocument: missing or mistyped field: ") + e.what());
  }

  const int N = static_cast<int>(doc.terminals.size() + doc.steiner_points.size());
  auto position = [&](int i) -> std::array<double, 2> {
    return i < static_cast<int>(doc.terminals.size())
               ? doc.terminals[i]
               : doc.steiner_points[i - doc.terminals.size()];
  };
  for (const auto& pt : doc.terminals) {
    if (!std::isfinite(pt[0]) || !std::isfinite(pt[1])) {
      throw std::invalid_argument("TreeDocument: non-finite terminal coordinate");
    }
  }
  for (const auto& pt : doc.steiner_points) {
    if (!std::isfinite(pt[0]) || !std::isfinite(pt[1])) {
      throw std::invalid_argument("TreeDocument: non-finite Steiner coordinate");
    }
  }
  if (static_cast<int>(doc.edges.size()) != N - 1) {
    throw std::invalid_argument("TreeDocument: edge count must be vertex count - 1");
  }
  std::vector<std::vector<int>> adj(N);
  for (const auto& [u, v] : doc.edges) {
    if (u < 0 || u >= N || v < 0 || v >= N || u == v) {
      throw std::invalid_argument("TreeDocument: edge index out of range");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(N, 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!bfs.empty()) {
    const int x = bfs.front();
    bfs.pop();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++visited;
        bfs.push(y);
      }
    }
  }
  if (visited != N) throw std::invalid_argument("TreeDocument: edges do not form a tree");
  double recomputed = 0.0;
  for (const auto& [u, v] : doc.edges) {
    const auto a = position(u), b = position(v);
    recomputed += std::hypot(a[0] - b[0], a[1] - b[1]);
  }
  if (std::abs(recomputed - doc.length) > 1e-9) {
    throw std::invalid_argument("TreeDocument: stored length disagrees with the edge sum");
  }
  return doc;
}

}  // namespace steinergeo
