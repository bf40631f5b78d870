#pragma once

// brute-force reference implementations, deliberately free of the library's
// shortcuts: plain odometer loops and full permutation enumeration

#include <algorithm>
#include <numeric>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"

namespace oracle {

using dpcolor::Cover;
using dpcolor::Graph;
using dpcolor::Int;

// all m^n color assignments, checked edge by edge
inline Int proper_colorings(const Graph& g, int m) {
  const int n = g.vertex_count();
  if (n == 0) return 1;
  if (m <= 0) return 0;
  std::vector<int> c(n, 0);
  Int total = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : g.edges())
      if (c[e.u] == c[e.v]) {
        ok = false;
        break;
      }
    if (ok) ++total;
    int i = 0;
    while (i < n && ++c[i] == m) c[i++] = 0;
    if (i == n) break;
  }
  return total;
}

// all m^n fiber-index assignments, checked against every matching
inline Int cover_colorings(const Cover& cov) {
  const Graph& g = cov.graph();
  const int n = g.vertex_count();
  const int m = cov.fold();
  if (n == 0) return 1;
  if (m <= 0) return 0;
  std::vector<int> j(n, 0);
  Int total = 0;
  while (true) {
    bool ok = true;
    const auto& edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (cov.perms()[k][j[edges[k].u]] == j[edges[k].v]) {
        ok = false;
        break;
      }
    if (ok) ++total;
    int i = 0;
    while (i < n && ++j[i] == m) j[i++] = 0;
    if (i == n) break;
  }
  return total;
}

// minimum transversal count over every full-matching cover: all (m!)^|E|
// permutation assignments, no gauge reduction at all
inline Int dp_min_full(const Graph& g, int m) {
  std::vector<std::vector<int>> perms;
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  const std::size_t ecount = g.edges().size();
  std::vector<std::vector<int>> chosen(ecount);
  Int best = -1;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == ecount) {
      const Int c = cover_colorings(Cover(g, m, chosen));
      if (best < 0 || c < best) best = c;
      return;
    }
    for (const auto& p : perms) {
      chosen[k] = p;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return best;
}

// perfect elimination ordering exists, by trying all n! vertex orders
inline bool has_peo(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    bool good = true;
    for (int i = 0; i < n && good; ++i) {
      std::vector<int> later;
      for (int w : g.neighbors(order[i]))
        if (pos[w] > i) later.push_back(w);
      for (std::size_t a = 0; a < later.size() && good; ++a)
        for (std::size_t b = a + 1; b < later.size() && good; ++b)
          if (!g.has_edge(later[a], later[b])) good = false;
    }
    if (good) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return n == 0;
}

// largest clique by subset enumeration (n <= 20)
inline int clique_number(const Graph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    bool clique = true;
    for (std::size_t a = 0; a < vs.size() && clique; ++a)
      for (std::size_t b = a + 1; b < vs.size() && clique; ++b)
        if (!g.has_edge(vs[a], vs[b])) clique = false;
    if (clique) best = std::max(best, static_cast<int>(vs.size()));
  }
  return best;
}

// minimum over all vertex orders of the largest back degree
inline int min_max_back_degree(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    int worst = 0;
    for (int i = 0; i < n; ++i) {
      int back = 0;
      for (int w : g.neighbors(order[i]))
        if (pos[w] < i) ++back;
      worst = std::max(worst, back);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// every simple cycle once: smallest vertex first, direction fixed by
// second < last; returns the sorted multiset of lengths
inline std::vector<int> cycle_lengths(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> lengths;
  std::vector<int> path;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> void {
    const int cur = path.back();
    for (int w : g.neighbors(cur)) {
      if (w == path.front() && path.size() >= 3) {
        if (path[1] < path.back()) lengths.push_back(static_cast<int>(path.size()));
        continue;
      }
      if (used[w] || w < path.front()) continue;
      used[w] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    rec(rec);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace oracle
