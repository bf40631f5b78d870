#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dpcolor {

struct Edge {
  int u = 0;
  int v = 0;  // always u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. The edge list is sorted
// lexicographically and adjacency lists ascending; instances are immutable
// after construction, so edge indices are stable and canonical.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  int edge_index(int u, int v) const;  // -1 if absent
  bool connected() const;
  std::vector<std::vector<int>> components() const;
  // |E| - |V| + #components; number of independent cycles
  int cyclomatic_number() const;

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  // two cycles of lengths a and b >= 3 sharing exactly one edge
  static Graph theta(int a, int b);
  // cycle of length cycle_len with a pendant path of tail_len extra vertices
  // hanging off vertex 0
  static Graph unicyclic(int cycle_len, int tail_len);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// Glue g2 onto g1, identifying g2-vertices with g1-vertices via `identify`
// (pairs of (g2 vertex, g1 vertex)). The identified sets must induce cliques
// of equal size in both operands. Unidentified g2-vertices are appended after
// g1's, in ascending order of their g2 labels.
Graph clique_sum(const Graph& g1, const Graph& g2,
                 const std::vector<std::pair<int, int>>& identify);

// g plus p new mutually adjacent vertices, each adjacent to all of g
Graph join_with_complete(const Graph& g, int p);

Graph delete_edge(const Graph& g, int u, int v);
Graph add_edge(const Graph& g, int u, int v);

struct GirthInfo {
  std::optional<int> girth;  // nullopt for forests
  long cycle_count = 0;      // cycles of length exactly girth
};
GirthInfo girth_and_count(const Graph& g);

struct DegeneracyOrdering {
  std::vector<int> order;
  std::vector<int> back_degrees;  // neighbors of order[i] among order[0..i-1]
  int coloring_number = 1;        // 1 + max back degree
};
// min-degree peeling, ties broken by smallest vertex id
DegeneracyOrdering degeneracy_ordering(const Graph& g);

struct EliminationOrdering {
  std::vector<int> order;
  std::vector<int> alphas;  // later-neighbor counts along the order
  bool perfect = false;
};
// maximum cardinality search followed by explicit verification that every
// vertex's later neighborhood is a clique; nullopt iff the graph is not chordal
std::optional<EliminationOrdering> chordal_peo(const Graph& g);

std::string to_string(const Edge& e);

}  // namespace dpcolor
