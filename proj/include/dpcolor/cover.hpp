#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dpcolor/bigint.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/rng.hpp"

namespace dpcolor {

using ColoringCount = Int;

// m-fold cover of a graph with one perfect matching per edge, encoded as a
// permutation of {0..m-1}: for edge (u,v) with u < v, fiber vertex (u,i) is
// matched to (v, perm[i]). Fiber cliques are implicit. A coloring of the
// cover is a transversal hitting every fiber once and no matching edge.
class Cover {
 public:
  Cover(Graph g, int fold, std::vector<std::vector<int>> perms);

  const Graph& graph() const { return graph_; }
  int fold() const { return fold_; }
  const std::vector<std::vector<int>>& perms() const { return perms_; }
  const std::vector<int>& perm(int edge_index) const { return perms_.at(edge_index); }

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  Graph graph_;
  int fold_ = 0;
  std::vector<std::vector<int>> perms_;  // parallel to graph_.edges()
};

Cover identity_cover(const Graph& g, int m);

// identity everywhere except e, which carries the cyclic shift i -> i+1 (mod m)
Cover twisted_edge_cover(const Graph& g, int m, Edge e);

// Cover that is the identity except on the two edges of the path a1-a2-a3
// (a1a3 must not be an edge). The five cases fix the matchings of (a1,a2) and
// (a2,a3), oriented a1->a2 and a2->a3, to:
//   1: id, id    2: id, shift    3: shift, id
//   4: shift, inverse shift      5: shift, shift   (case 5 needs m >= 3)
// where shift is i -> i+1 (mod m).
Cover path_case_cover(const Graph& g, int m, int a1, int a2, int a3, int case_id);

// independent uniformly random matching on every edge
Cover random_cover(const Graph& g, int m, std::uint64_t seed);
Cover random_cover(const Graph& g, int m, Rng& rng);

// fiber relabeling making every canonical-spanning-tree matching the
// identity; the coloring count is invariant
Cover gauge_normalize(const Cover& c);

ColoringCount count_colorings(const Cover& c);

// BFS spanning tree from vertex 0, neighbors visited in ascending order;
// requires a connected graph
struct SpanningTree {
  std::vector<int> parent;          // -1 at the root
  std::vector<int> parent_edge;     // edge index to parent, -1 at the root
  std::vector<int> bfs_order;
  std::vector<int> non_tree_edges;  // edge indices, ascending
};
SpanningTree canonical_spanning_tree(const Graph& g);

// Backtracking counter prepared once per (graph, fold): vertices are swept in
// degeneracy order and each earlier-assigned neighbor forbids exactly one
// index through its edge's matching. Reusable across matchings, safe to call
// concurrently.
class TransversalCounter {
 public:
  TransversalCounter(const Graph& g, int m);

  // sigma[e] / sigma_inv[e] point at m-element permutation arrays for edge e
  Int count(std::span<const int* const> sigma, std::span<const int* const> sigma_inv) const;

 private:
  struct Back {
    int earlier_pos;
    int edge_index;
    bool forward;  // earlier endpoint is the edge's lower endpoint
  };
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Back>> back_;
  std::vector<char> has_forward_;
};

}  // namespace dpcolor
