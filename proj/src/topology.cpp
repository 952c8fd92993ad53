#include "steinergeo/topology.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace steinergeo {

std::vector<int> SteinerTopology::degrees() const {
  std::vector<int> deg(vertex_count(), 0);
  for (const auto& [u, v] : edges) {
    deg.at(u)++;
    deg.at(v)++;
  }
  return deg;
}

bool SteinerTopology::is_tree() const {
  const int n = vertex_count();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++visited;
        q.push(y);
      }
    }
  }
  return visited == n;
}

void SteinerTopology::validate() const {
  if (terminal_count < 3) throw std::invalid_argument("SteinerTopology: need >= 3 terminals");
  if (steiner_count < 0 || steiner_count > terminal_count - 2) {
    throw std::invalid_argument("SteinerTopology: steiner_count outside [0, n-2]");
  }
  if (!is_tree()) throw std::invalid_argument("SteinerTopology: edges do not form a tree");
  const std::vector<int> deg = degrees();
  for (int i = 0; i < terminal_count; ++i) {
    if (deg[i] < 1 || deg[i] > 3) {
      throw std::invalid_argument("SteinerTopology: terminal degree outside {1,2,3}");
    }
  }
  for (int i = terminal_count; i < vertex_count(); ++i) {
    if (deg[i] != 3) throw std::invalid_argument("SteinerTopology: Steiner degree must be 3");
  }
}

namespace {

// Decode a Pruefer sequence over N labeled vertices into tree edges.
std::vector<std::pair<int, int>> pruefer_to_edges(const std::vector<int>& seq, int N) {
  std::vector<int> deg(N, 1);
  for (int v : seq) deg[v]++;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(N - 1);
  std::set<int> leaves;
  for (int i = 0; i < N; ++i) {
    if (deg[i] == 1) leaves.insert(i);
  }
  for (int v : seq) {
    const int u = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(u, v), std::max(u, v));
    if (--deg[v] == 1) leaves.insert(v);
  }
  const int u = *leaves.begin();
  const int v = *std::next(leaves.begin());
  edges.emplace_back(std::min(u, v), std::max(u, v));
  return edges;
}

// Canonical edge list: Steiner labels are replaced by the order of their
// terminal-distance vectors. In a tree every internal vertex is uniquely
// determined by its distances to the leaves, so the key is collision-free.
std::vector<std::pair<int, int>> canonical_edges(const std::vector<std::pair<int, int>>& edges, int t,
                                                 int s) {
  const int N = t + s;
  if (s == 0) {
    std::vector<std::pair<int, int>> out = edges;
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<std::vector<int>> adj(N);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<int>> dvec(s);
  std::vector<int> dist(N);
  for (int root = 0; root < t; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    for (int st = 0; st < s; ++st) dvec[st].push_back(dist[t + st]);
  }
  std::vector<int> order(s);
  for (int i = 0; i < s; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return dvec[a] < dvec[b]; });
  std::vector<int> relabel(N);
  for (int i = 0; i < t; ++i) relabel[i] = i;
  for (int i = 0; i < s; ++i) relabel[t + order[i]] = t + i;
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    const int a = relabel[u], b = relabel[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Enumerate Pruefer sequences where terminals appear at most twice and each
// Steiner vertex exactly twice, recursing with remaining-slot pruning.
void gen_sequences(std::vector<int>& seq, int pos, int len, std::vector<int>& remaining,
                   int& steiner_needed, int t, int N,
                   std::set<std::vector<std::pair<int, int>>>& out, int s) {
  if (pos == len) {
    out.insert(canonical_edges(pruefer_to_edges(seq, N), t, s));
    return;
  }
  const int slots_left = len - pos;
  for (int v = 0; v < N; ++v) {
    if (remaining[v] == 0) continue;
    const bool is_steiner = v >= t;
    const int needed_after = steiner_needed - (is_steiner ? 1 : 0);
    if (needed_after > slots_left - 1) continue;
    remaining[v]--;
    if (is_steiner) steiner_needed--;
    seq[pos] = v;
    gen_sequences(seq, pos + 1, len, remaining, steiner_needed, t, N, out, s);
    remaining[v]++;
    if (is_steiner) steiner_needed++;
  }
}

}  // namespace

std::vector<SteinerTopology> enumerate_topologies(int terminal_count, int steiner_min, int steiner_max) {
  if (terminal_count < 3 || terminal_count > 8) {
    throw std::invalid_argument("enumerate_topologies: terminal_count must be in [3, 8]");
  }
  if (steiner_min < 0 || steiner_max > terminal_count - 2 || steiner_min > steiner_max) {
    throw std::invalid_argument("enumerate_topologies: steiner range outside [0, n-2]");
  }
  std::vector<SteinerTopology> result;
  for (int s = steiner_min; s <= steiner_max; ++s) {
    const int N = terminal_count + s;
    std::set<std::vector<std::pair<int, int>>> canon;
    const int len = N - 2;
    std::vector<int> remaining(N, 2);
    std::vector<int> seq(len, 0);
    int steiner_needed = 2 * s;
    gen_sequences(seq, 0, len, remaining, steiner_needed, terminal_count, N, canon, s);
    for (const auto& edges : canon) {
      SteinerTopology topo;
      topo.terminal_count = terminal_count;
      topo.steiner_count = s;
      topo.edges = edges;
      result.push_back(std::move(topo));
    }
  }
  return result;
}

}  // namespace steinergeo
