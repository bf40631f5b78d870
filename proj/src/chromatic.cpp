#include "dpcolor/chromatic.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace dpcolor {

namespace {

// scratch representation for the deletion-contraction recursion
struct Work {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, deduplicated
};

std::vector<std::vector<int>> work_adj(const Work& w) {
  std::vector<std::vector<int>> adj(w.n);
  for (auto [u, v] : w.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<int> component_labels(const Work& w, int& count) {
  auto adj = work_adj(w);
  std::vector<int> label(w.n, -1);
  count = 0;
  for (int s = 0; s < w.n; ++s) {
    if (label[s] != -1) continue;
    std::queue<int> q;
    q.push(s);
    label[s] = count;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (label[y] == -1) {
          label[y] = count;
          q.push(y);
        }
    }
    ++count;
  }
  return label;
}

Work induced(const Work& w, const std::vector<int>& label, int which) {
  std::vector<int> remap(w.n, -1);
  int next = 0;
  for (int v = 0; v < w.n; ++v)
    if (label[v] == which) remap[v] = next++;
  Work out;
  out.n = next;
  for (auto [u, v] : w.edges)
    if (label[u] == which) out.edges.push_back({remap[u], remap[v]});
  for (auto& [u, v] : out.edges)
    if (u > v) std::swap(u, v);
  return out;
}

Work contract(const Work& w, int u, int v) {
  // merge v into u, close the gap left by v
  std::set<std::pair<int, int>> es;
  auto remap = [&](int x) {
    if (x == v) x = u;
    return x > v ? x - 1 : x;
  };
  for (auto [a, b] : w.edges) {
    int x = remap(a), y = remap(b);
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    es.insert({x, y});
  }
  return Work{w.n - 1, {es.begin(), es.end()}};
}

Work erase_edge(const Work& w, size_t idx) {
  Work out;
  out.n = w.n;
  out.edges = w.edges;
  out.edges.erase(out.edges.begin() + static_cast<long>(idx));
  return out;
}

bool connected_without(const Work& w, size_t skip_idx) {
  if (w.n == 0) return true;
  std::vector<std::vector<int>> adj(w.n);
  for (size_t i = 0; i < w.edges.size(); ++i) {
    if (i == skip_idx) continue;
    adj[w.edges[i].first].push_back(w.edges[i].second);
    adj[w.edges[i].second].push_back(w.edges[i].first);
  }
  std::vector<char> seen(w.n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        q.push(y);
        ++reached;
      }
  }
  return reached == w.n;
}

IntPolynomial poly_pow(const IntPolynomial& p, int e) {
  IntPolynomial r = IntPolynomial::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

IntPolynomial tree_poly(int n) {
  // x (x-1)^(n-1)
  return IntPolynomial::monomial(1, 1) * poly_pow(IntPolynomial({Int(-1), Int(1)}), n - 1);
}

IntPolynomial cycle_poly(int n) {
  // (x-1)^n + (-1)^n (x-1)
  const IntPolynomial xm1({Int(-1), Int(1)});
  IntPolynomial r = poly_pow(xm1, n);
  const Int sign = (n % 2 == 0) ? 1 : -1;
  return r + IntPolynomial({-sign, sign});
}

IntPolynomial chrom_basic(const Work& g, long& nodes, long budget) {
  if (++nodes > budget) throw std::runtime_error("chromatic_polynomial: node budget exceeded");
  if (g.edges.empty()) return IntPolynomial::monomial(1, g.n);
  const auto [u, v] = g.edges.front();
  return chrom_basic(erase_edge(g, 0), nodes, budget) - chrom_basic(contract(g, u, v), nodes, budget);
}

IntPolynomial chrom_rec(const Work& g, long& nodes, long budget) {
  if (++nodes > budget) throw std::runtime_error("chromatic_polynomial: node budget exceeded");
  if (g.n == 0) return IntPolynomial::constant(1);
  if (g.edges.empty()) return IntPolynomial::monomial(1, g.n);

  int ncomp = 0;
  const auto label = component_labels(g, ncomp);
  if (ncomp > 1) {
    IntPolynomial prod = IntPolynomial::constant(1);
    for (int c = 0; c < ncomp; ++c) prod = prod * chrom_rec(induced(g, label, c), nodes, budget);
    return prod;
  }

  const int n = g.n;
  const auto e = static_cast<long>(g.edges.size());
  if (e == n - 1) return tree_poly(n);
  if (e == static_cast<long>(n) * (n - 1) / 2) return falling_factorial_poly(n);
  if (e == n) {
    auto adj = work_adj(g);
    bool all2 = true;
    for (int x = 0; x < n && all2; ++x) all2 = adj[x].size() == 2;
    if (all2) return cycle_poly(n);
  }

  // connected, not a tree: a non-bridge edge exists
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (!connected_without(g, i)) continue;
    const auto [u, v] = g.edges[i];
    return chrom_rec(erase_edge(g, i), nodes, budget) - chrom_rec(contract(g, u, v), nodes, budget);
  }
  throw std::logic_error("chromatic_polynomial: no non-bridge edge in a connected non-tree");
}

}  // namespace

IntPolynomial chromatic_polynomial(const Graph& g, const ChromaticOptions& opt) {
  if (g.vertex_count() < 1) throw std::invalid_argument("chromatic_polynomial: need n >= 1");
  Work w;
  w.n = g.vertex_count();
  for (const Edge& e : g.edges()) w.edges.push_back({e.u, e.v});
  long nodes = 0;
  return opt.closed_forms ? chrom_rec(w, nodes, opt.node_budget)
                          : chrom_basic(w, nodes, opt.node_budget);
}

Int eval_poly(const IntPolynomial& p, const Int& m) { return p.eval(m); }

IntPolynomial chordal_product_poly(const EliminationOrdering& peo) {
  if (!peo.perfect)
    throw std::invalid_argument("chordal_product_poly: ordering is not a verified PEO");
  IntPolynomial r = IntPolynomial::constant(1);
  for (int a : peo.alphas) r = r * IntPolynomial({Int(-a), Int(1)});
  return r;
}

IntPolynomial clique_sum_poly(const IntPolynomial& p1, const IntPolynomial& p2, int k) {
  if (k < 1) throw std::invalid_argument("clique_sum_poly: need k >= 1");
  IntPolynomial q = p1 * p2;
  for (int i = 0; i < k; ++i) q = q.divide_linear_exact(i);
  return q;
}

std::vector<Int> broken_circuit_coeffs(long s, int g, long t) {
  if (g < 3) throw std::invalid_argument("broken_circuit_coeffs: girth must be >= 3");
  if (t < 1) throw std::invalid_argument("broken_circuit_coeffs: need at least one girth cycle");
  if (s < g) throw std::invalid_argument("broken_circuit_coeffs: edge count below girth");
  std::vector<Int> a(g);
  for (int i = 0; i + 1 < g; ++i) a[i] = binomial(s, i);
  a[g - 1] = binomial(s, g - 1) - t;
  return a;
}

int chromatic_number(const IntPolynomial& p) {
  if (p.degree() < 0) throw std::invalid_argument("chromatic_number: zero polynomial");
  for (int m = 1; m <= p.degree() + 1; ++m)
    if (p.eval(m) > 0) return m;
  throw std::invalid_argument("chromatic_number: not a chromatic polynomial");
}

}  // namespace dpcolor
