#include "doctest.h"

#include <numeric>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/verify.hpp"
#include "oracle.hpp"

using namespace dpcolor;

TEST_CASE("identity cover realizes the chromatic polynomial") {
  for (const auto& [name, g] : standard_battery()) {
    CAPTURE(name);
    const IntPolynomial p = chromatic_polynomial(g);
    for (int m = 1; m <= 4; ++m) CHECK(count_colorings(identity_cover(g, m)) == p.eval(m));
  }
}

TEST_CASE("counter agrees with the m^n odometer oracle") {
  Rng rng(2026);
  for (const auto& [name, g] : standard_battery()) {
    if (g.vertex_count() > 5) continue;
    CAPTURE(name);
    for (int m = 1; m <= 3; ++m)
      for (int rep = 0; rep < 20; ++rep) {
        const Cover c = random_cover(g, m, rng);
        CHECK(count_colorings(c) == oracle::cover_colorings(c));
      }
  }
}

TEST_CASE("twisted covers") {
  CHECK(count_colorings(twisted_edge_cover(Graph::cycle(4), 3, {0, 1})) == 15);
  CHECK(count_colorings(twisted_edge_cover(Graph::cycle(6), 3, {0, 1})) == 63);
  CHECK(count_colorings(twisted_edge_cover(Graph::complete(2), 2, {0, 1})) == 2);
  // odd cycle: the twist overshoots the extremal value P(C_3,3) = 6
  CHECK(count_colorings(twisted_edge_cover(Graph::cycle(3), 3, {0, 1})) == 9);

  CHECK_THROWS(twisted_edge_cover(Graph::cycle(4), 1, {0, 1}));
  CHECK_THROWS(twisted_edge_cover(Graph::cycle(4), 3, {0, 2}));
}

TEST_CASE("cycle count depends only on the holonomy's fixed points") {
  // one non-identity matching on a cycle: count = (m-1)^n + (-1)^n (f-1)
  // with f the permutation's fixed-point count
  std::vector<int> perm{0, 1, 2};
  const int m = 3;
  do {
    int fixed = 0;
    for (int i = 0; i < m; ++i)
      if (perm[i] == i) ++fixed;
    for (int n : {4, 5}) {
      const Graph g = Graph::cycle(n);
      std::vector<std::vector<int>> perms(n);
      std::vector<int> id(m);
      std::iota(id.begin(), id.end(), 0);
      for (int i = 0; i < n; ++i) perms[i] = id;
      perms[0] = perm;  // edge (0,1)
      const Int want =
          int_pow(Int(m - 1), n) + Int(n % 2 == 0 ? 1 : -1) * Int(fixed - 1);
      CHECK(count_colorings(Cover(g, m, perms)) == want);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("path case covers on theta(3,4)") {
  const Graph g = Graph::theta(3, 4);
  // path 0-1-3 along the four-cycle side; (0,3) is not an edge
  const std::vector<Int> expected{Int(18), Int(15), Int(21), Int(27), Int(24)};
  for (int cs = 1; cs <= 5; ++cs)
    CHECK(count_colorings(path_case_cover(g, 3, 0, 1, 3, cs)) == expected[cs - 1]);

  CHECK_THROWS(path_case_cover(g, 2, 0, 1, 3, 5));   // case 5 needs m >= 3
  CHECK_THROWS(path_case_cover(g, 3, 0, 1, 2, 1));   // (0,2) is a chord
  CHECK_THROWS(path_case_cover(g, 3, 0, 1, 1, 1));   // not three distinct vertices
  CHECK_THROWS(path_case_cover(g, 3, 0, 3, 1, 1));   // (0,3) is not an edge
  CHECK_THROWS(path_case_cover(g, 3, 0, 1, 3, 6));   // no such case
}

TEST_CASE("random covers are reproducible and never beat the minimum") {
  const Graph g = Graph::cycle(4);
  const Cover a = random_cover(g, 3, 77);
  const Cover b = random_cover(g, 3, 77);
  CHECK(a == b);
  const Cover c = random_cover(g, 3, 78);
  CHECK_FALSE(a == c);

  for (std::uint64_t seed = 0; seed < 50; ++seed)
    CHECK(count_colorings(random_cover(g, 3, seed)) >= 15);
}

TEST_CASE("gauge normalization fixes the tree and keeps the count") {
  const Graph g = Graph::theta(3, 4);
  const auto tree = canonical_spanning_tree(g);
  Rng rng(99);
  for (int rep = 0; rep < 100; ++rep) {
    const Cover c = random_cover(g, 3, rng);
    const Cover n = gauge_normalize(c);
    for (int v = 1; v < g.vertex_count(); ++v) {
      const auto& p = n.perm(tree.parent_edge[v]);
      for (int i = 0; i < 3; ++i) CHECK(p[i] == i);
    }
    CHECK(count_colorings(n) == count_colorings(c));
  }

  // a twist on a tree edge migrates onto the free edge, count unchanged
  const Graph c4 = Graph::cycle(4);
  const Cover twisted = twisted_edge_cover(c4, 3, {0, 1});
  const Cover norm = gauge_normalize(twisted);
  CHECK(count_colorings(norm) == 15);
  const auto c4tree = canonical_spanning_tree(c4);
  REQUIRE(c4tree.non_tree_edges.size() == 1);
  const auto& free_perm = norm.perm(c4tree.non_tree_edges[0]);
  bool is_identity = true;
  for (int i = 0; i < 3; ++i)
    if (free_perm[i] != i) is_identity = false;
  CHECK_FALSE(is_identity);
}

TEST_CASE("canonical spanning tree of the four-cycle") {
  const auto t = canonical_spanning_tree(Graph::cycle(4));
  CHECK(t.parent == std::vector<int>{-1, 0, 1, 0});
  CHECK(t.bfs_order == std::vector<int>{0, 1, 3, 2});
  REQUIRE(t.non_tree_edges.size() == 1);
  const Edge& free_edge = Graph::cycle(4).edges()[t.non_tree_edges[0]];
  CHECK(free_edge == Edge{2, 3});

  CHECK_THROWS(canonical_spanning_tree(Graph(3, {{0, 1}})));
}

TEST_CASE("degenerate folds") {
  CHECK(count_colorings(identity_cover(Graph::complete(2), 1)) == 0);
  CHECK(count_colorings(identity_cover(Graph::path(3), 0)) == 0);
  CHECK(count_colorings(identity_cover(Graph::complete(1), 3)) == 3);
}

TEST_CASE("cover construction validates its matchings") {
  const Graph g = Graph::path(2);
  CHECK_THROWS(Cover(g, 3, {}));                       // missing permutation
  CHECK_THROWS(Cover(g, 3, {{0, 1}}));                 // wrong length
  CHECK_THROWS(Cover(g, 3, {{0, 0, 2}}));              // not a bijection
  CHECK_NOTHROW(Cover(g, 3, {{2, 0, 1}}));
}
