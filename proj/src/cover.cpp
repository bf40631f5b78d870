#include "dpcolor/cover.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace dpcolor {

namespace {

bool is_permutation_of_m(const std::vector<int>& p, int m) {
  if (static_cast<int>(p.size()) != m) return false;
  std::vector<char> seen(m, 0);
  for (int x : p) {
    if (x < 0 || x >= m || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<int> identity_perm(int m) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  return p;
}

std::vector<int> shift_perm(int m) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = (i + 1) % m;
  return p;
}

std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  // (f o g)(x) = f(g(x))
  std::vector<int> h(g.size());
  for (size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

}  // namespace

Cover::Cover(Graph g, int fold, std::vector<std::vector<int>> perms)
    : graph_(std::move(g)), fold_(fold), perms_(std::move(perms)) {
  if (fold_ < 0) throw std::invalid_argument("Cover: negative fold");
  if (perms_.size() != static_cast<size_t>(graph_.edge_count()))
    throw std::invalid_argument("Cover: one permutation per edge required");
  for (const auto& p : perms_)
    if (!is_permutation_of_m(p, fold_))
      throw std::invalid_argument("Cover: matching is not a permutation of the fold");
}

Cover identity_cover(const Graph& g, int m) {
  if (m < 0) throw std::invalid_argument("identity_cover: negative fold");
  return Cover(g, m, std::vector<std::vector<int>>(g.edge_count(), identity_perm(m)));
}

Cover twisted_edge_cover(const Graph& g, int m, Edge e) {
  if (m < 2) throw std::invalid_argument("twisted_edge_cover: need m >= 2");
  const int idx = g.edge_index(e.u, e.v);
  if (idx < 0) throw std::invalid_argument("twisted_edge_cover: no such edge");
  std::vector<std::vector<int>> perms(g.edge_count(), identity_perm(m));
  perms[idx] = shift_perm(m);
  return Cover(g, m, std::move(perms));
}

Cover path_case_cover(const Graph& g, int m, int a1, int a2, int a3, int case_id) {
  if (case_id < 1 || case_id > 5) throw std::invalid_argument("path_case_cover: case must be 1..5");
  if (m < 2 || (case_id == 5 && m < 3))
    throw std::invalid_argument("path_case_cover: fold too small for this case");
  if (a1 == a2 || a2 == a3 || a1 == a3)
    throw std::invalid_argument("path_case_cover: path vertices must be distinct");
  const int e1 = g.edge_index(a1, a2), e2 = g.edge_index(a2, a3);
  if (e1 < 0 || e2 < 0) throw std::invalid_argument("path_case_cover: path edges missing");
  if (g.has_edge(a1, a3))
    throw std::invalid_argument("path_case_cover: path endpoints must be non-adjacent");

  const auto id = identity_perm(m), sh = shift_perm(m), shinv = invert(shift_perm(m));
  std::vector<int> pi1, pi2;  // oriented a1->a2 and a2->a3
  switch (case_id) {
    case 1: pi1 = id; pi2 = id; break;
    case 2: pi1 = id; pi2 = sh; break;
    case 3: pi1 = sh; pi2 = id; break;
    case 4: pi1 = sh; pi2 = shinv; break;
    default: pi1 = sh; pi2 = sh; break;
  }
  std::vector<std::vector<int>> perms(g.edge_count(), id);
  perms[e1] = a1 < a2 ? pi1 : invert(pi1);  // stored lower -> higher endpoint
  perms[e2] = a2 < a3 ? pi2 : invert(pi2);
  return Cover(g, m, std::move(perms));
}

Cover random_cover(const Graph& g, int m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("random_cover: need m >= 1");
  std::vector<std::vector<int>> perms;
  perms.reserve(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) perms.push_back(rng.permutation(m));
  return Cover(g, m, std::move(perms));
}

Cover random_cover(const Graph& g, int m, std::uint64_t seed) {
  Rng rng(seed);
  return random_cover(g, m, rng);
}

SpanningTree canonical_spanning_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  if (!g.connected())
    throw std::invalid_argument("canonical_spanning_tree: graph must be connected");
  SpanningTree st;
  st.parent.assign(n, -1);
  st.parent_edge.assign(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    st.bfs_order.push_back(x);
    for (int y : g.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = 1;
      st.parent[y] = x;
      st.parent_edge[y] = g.edge_index(x, y);
      q.push(y);
    }
  }
  std::vector<char> is_tree_edge(g.edge_count(), 0);
  for (int v = 0; v < n; ++v)
    if (st.parent_edge[v] >= 0) is_tree_edge[st.parent_edge[v]] = 1;
  for (int i = 0; i < g.edge_count(); ++i)
    if (!is_tree_edge[i]) st.non_tree_edges.push_back(i);
  return st;
}

Cover gauge_normalize(const Cover& c) {
  const Graph& g = c.graph();
  const int m = c.fold();
  const SpanningTree st = canonical_spanning_tree(g);

  // rho[v] relabels fiber(v); walking the tree top-down, pick rho[child] so
  // the oriented parent->child matching becomes the identity:
  // rho_c = rho_p o tau^{-1} where tau is the old matching oriented p->c.
  std::vector<std::vector<int>> rho(g.vertex_count());
  if (g.vertex_count() > 0) rho[0] = identity_perm(m);
  for (int v : st.bfs_order) {
    if (st.parent[v] < 0) continue;
    const int p = st.parent[v];
    const std::vector<int>& sigma = c.perm(st.parent_edge[v]);
    const std::vector<int> tau = p < v ? sigma : invert(sigma);
    rho[v] = compose(rho[p], invert(tau));
  }
  // every matching transforms as sigma' = rho_v o sigma o rho_u^{-1}
  std::vector<std::vector<int>> perms;
  perms.reserve(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge e = g.edges()[i];
    perms.push_back(compose(rho[e.v], compose(c.perm(i), invert(rho[e.u]))));
  }
  return Cover(g, m, std::move(perms));
}

TransversalCounter::TransversalCounter(const Graph& g, int m) : n_(g.vertex_count()), m_(m) {
  if (m < 0) throw std::invalid_argument("TransversalCounter: negative fold");
  const auto ord = degeneracy_ordering(g);
  std::vector<int> pos(n_);
  for (int i = 0; i < n_; ++i) pos[ord.order[i]] = i;
  back_.resize(n_);
  has_forward_.assign(n_, 0);
  for (int p = 0; p < n_; ++p) {
    const int w = ord.order[p];
    for (int x : g.neighbors(w)) {
      if (pos[x] > p) {
        has_forward_[p] = 1;
        continue;
      }
      const int u = std::min(w, x), v = std::max(w, x);
      back_[p].push_back({pos[x], g.edge_index(u, v), x == u});
    }
  }
}

Int TransversalCounter::count(std::span<const int* const> sigma,
                              std::span<const int* const> sigma_inv) const {
  if (n_ == 0) return 1;
  if (m_ == 0) return 0;
  std::vector<int> val(n_);
  std::vector<std::vector<char>> forb(n_, std::vector<char>(m_));

  auto rec = [&](auto&& self, int p) -> Int {
    if (p == n_) return 1;
    auto& fb = forb[p];
    std::fill(fb.begin(), fb.end(), 0);
    for (const Back& b : back_[p]) {
      const int earlier = val[b.earlier_pos];
      fb[b.forward ? sigma[b.edge_index][earlier] : sigma_inv[b.edge_index][earlier]] = 1;
    }
    if (!has_forward_[p]) {
      // nothing later looks at this vertex: multiply by its choice count
      int k = 0;
      for (int cidx = 0; cidx < m_; ++cidx)
        if (!fb[cidx]) ++k;
      if (k == 0) return 0;
      return Int(k) * self(self, p + 1);
    }
    Int total = 0;
    for (int cidx = 0; cidx < m_; ++cidx) {
      if (fb[cidx]) continue;
      val[p] = cidx;
      total += self(self, p + 1);
    }
    return total;
  };
  return rec(rec, 0);
}

ColoringCount count_colorings(const Cover& c) {
  const Graph& g = c.graph();
  TransversalCounter counter(g, c.fold());
  std::vector<std::vector<int>> inv_store;
  inv_store.reserve(g.edge_count());
  std::vector<const int*> sigma(g.edge_count()), sigma_inv(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    sigma[i] = c.perm(i).data();
    inv_store.push_back(invert(c.perm(i)));
    sigma_inv[i] = inv_store.back().data();
  }
  return counter.count(sigma, sigma_inv);
}

}  // namespace dpcolor
