#include "dpcolor/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace dpcolor {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("Graph: loop edge");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) throw std::invalid_argument("Graph: duplicate edge");
    edges_.push_back({a, b});
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::pair{x.u, x.v} < std::pair{y.u, y.v}; });
  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph::neighbors");
  return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), key,
      [](const Edge& x, const Edge& y) { return std::pair{x.u, x.v} < std::pair{y.u, y.v}; });
  if (it != edges_.end() && *it == key) return static_cast<int>(it - edges_.begin());
  return -1;
}

bool Graph::connected() const { return components().size() <= 1; }

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n_, 0);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      comp.push_back(x);
      for (int y : adj_[x])
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

int Graph::cyclomatic_number() const {
  return edge_count() - vertex_count() + static_cast<int>(components().size());
}

Graph Graph::path(int n) {
  if (n < 1) throw std::invalid_argument("path: need n >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  es.push_back({0, n - 1});
  return Graph(n, es);
}

Graph Graph::complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: need n >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, es);
}

Graph Graph::theta(int a, int b) {
  if (a < 3 || b < 3) throw std::invalid_argument("theta: cycle lengths must be >= 3");
  return clique_sum(cycle(a), cycle(b), {{0, 0}, {1, 1}});
}

Graph Graph::unicyclic(int cycle_len, int tail_len) {
  if (cycle_len < 3) throw std::invalid_argument("unicyclic: cycle length must be >= 3");
  if (tail_len < 0) throw std::invalid_argument("unicyclic: negative tail");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < cycle_len; ++i) es.push_back({i, i + 1});
  es.push_back({0, cycle_len - 1});
  int prev = 0;
  for (int t = 0; t < tail_len; ++t) {
    es.push_back({prev, cycle_len + t});
    prev = cycle_len + t;
  }
  return Graph(cycle_len + tail_len, es);
}

Graph clique_sum(const Graph& g1, const Graph& g2,
                 const std::vector<std::pair<int, int>>& identify) {
  if (identify.empty()) throw std::invalid_argument("clique_sum: empty identification");
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<int> map2(n2, -1);
  std::set<int> targets;
  for (auto [a, b] : identify) {
    if (a < 0 || a >= n2 || b < 0 || b >= n1)
      throw std::invalid_argument("clique_sum: identification out of range");
    if (map2[a] != -1 || !targets.insert(b).second)
      throw std::invalid_argument("clique_sum: identification not injective");
    map2[a] = b;
  }
  for (auto [a1, b1] : identify)
    for (auto [a2, b2] : identify) {
      if (a1 == a2) continue;
      if (!g2.has_edge(a1, a2) || !g1.has_edge(b1, b2))
        throw std::invalid_argument("clique_sum: identified set is not a clique in both operands");
    }
  int next = n1;
  for (int v = 0; v < n2; ++v)
    if (map2[v] == -1) map2[v] = next++;
  std::set<std::pair<int, int>> es;
  for (const Edge& e : g1.edges()) es.insert({e.u, e.v});
  for (const Edge& e : g2.edges()) {
    int a = map2[e.u], b = map2[e.v];
    if (a > b) std::swap(a, b);
    es.insert({a, b});
  }
  return Graph(next, {es.begin(), es.end()});
}

Graph join_with_complete(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("join_with_complete: need p >= 1");
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges()) es.push_back({e.u, e.v});
  for (int i = 0; i < p; ++i) {
    for (int v = 0; v < n + i; ++v) es.push_back({v, n + i});
  }
  return Graph(n + p, es);
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge: no such edge");
  if (u > v) std::swap(u, v);
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges())
    if (!(e.u == u && e.v == v)) es.push_back({e.u, e.v});
  return Graph(g.vertex_count(), es);
}

Graph add_edge(const Graph& g, int u, int v) {
  if (g.has_edge(u, v)) throw std::invalid_argument("add_edge: edge already present");
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges()) es.push_back({e.u, e.v});
  es.push_back({u, v});
  return Graph(g.vertex_count(), es);
}

GirthInfo girth_and_count(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();

  // BFS from every root; a non-tree edge seen from root s at depths d(x), d(y)
  // witnesses a cycle of length d(x)+d(y)+1. The minimum over all roots is
  // exact because a BFS rooted on a shortest cycle cannot shortcut it.
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return {std::nullopt, 0};

  // Count cycles of length exactly `best`: root at the cycle's smallest
  // vertex, extend with larger vertices only, and fix the orientation by
  // requiring the first internal vertex below the last.
  long count = 0;
  std::vector<char> onpath(n, 0);
  std::vector<int> path;
  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    onpath.assign(n, 0);
    onpath[s] = 1;
    auto dfs = [&](auto&& self, int u, int depth) -> void {
      if (depth == best - 1) {
        if (g.has_edge(u, s) && path[1] < path[best - 1]) ++count;
        return;
      }
      for (int w : g.neighbors(u)) {
        if (w <= s || onpath[w]) continue;
        onpath[w] = 1;
        path.push_back(w);
        self(self, w, depth + 1);
        path.pop_back();
        onpath[w] = 0;
      }
    };
    dfs(dfs, s, 0);
  }
  return {best, count};
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<int> peel;
  peel.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    removed[best] = 1;
    peel.push_back(best);
    for (int w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  DegeneracyOrdering out;
  out.order.assign(peel.rbegin(), peel.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[out.order[i]] = i;
  out.back_degrees.resize(n);
  int maxback = 0;
  for (int i = 0; i < n; ++i) {
    int b = 0;
    for (int w : g.neighbors(out.order[i]))
      if (pos[w] < i) ++b;
    out.back_degrees[i] = b;
    maxback = std::max(maxback, b);
  }
  out.coloring_number = 1 + maxback;
  return out;
}

std::optional<EliminationOrdering> chordal_peo(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0), order(n);
  std::vector<char> picked(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (!picked[u] && (v == -1 || weight[u] > weight[v])) v = u;
    picked[v] = 1;
    order[i] = v;
    for (int w : g.neighbors(v))
      if (!picked[w]) ++weight[w];
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<int> alphas(n, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> later;
    for (int w : g.neighbors(order[i]))
      if (pos[w] > i) later.push_back(w);
    alphas[i] = static_cast<int>(later.size());
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return std::nullopt;
  }
  return EliminationOrdering{std::move(order), std::move(alphas), true};
}

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace dpcolor
