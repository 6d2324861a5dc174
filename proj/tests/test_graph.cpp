#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bei/graph.hpp"

using namespace bei;

TEST_CASE("constructors and edge bookkeeping") {
  Graph P = path_graph(4);
  CHECK(P.edge_count() == 3);
  CHECK(P.has_edge(1, 2));
  CHECK(P.has_edge(3, 4));
  CHECK(!P.has_edge(1, 3));

  Graph C = cycle_graph(5);
  CHECK(C.edge_count() == 5);
  for (int v = 1; v <= 5; ++v) CHECK(C.degree(v) == 2);

  Graph K = complete_graph(6);
  CHECK(K.edge_count() == 15);
  CHECK(is_complete(K));
  CHECK(!is_complete(P));

  Graph M = complete_multipartite({2, 3});
  CHECK(M.edge_count() == 6);
  auto sig = complete_multipartite_signature(M);
  REQUIRE(sig.has_value());
  CHECK(*sig == std::vector<int>{3, 2});
  CHECK(!complete_multipartite_signature(path_graph(4)).has_value());
}

TEST_CASE("classification predicates") {
  CHECK(is_path_graph(path_graph(5)));
  CHECK(!is_path_graph(cycle_graph(5)));
  CHECK(is_cycle_graph(cycle_graph(4)));
  CHECK(is_forest(disjoint_union(path_graph(3), path_graph(2))));
  CHECK(!is_forest(cycle_graph(3)));
  CHECK(is_connected(complete_graph(4)));
  CHECK(!is_connected(disjoint_union(path_graph(2), path_graph(2))));

  CHECK(is_chordal(path_graph(5)).chordal);
  CHECK(!is_chordal(cycle_graph(4)).chordal);
  CHECK(is_chordal(complete_graph(5)).chordal);

  // Paths in their natural labelling are closed; C4 is not closed under any
  // labelling.
  CHECK(is_closed(path_graph(4)).closed);
  CHECK(!is_closed(cycle_graph(4)).closed);
  CHECK(is_closed(complete_graph(5)).closed);

  CHECK(is_block_graph(path_graph(4)));
  CHECK(!is_block_graph(cycle_graph(4)));
  Graph two_tri(5);  // triangles 1-2-3 and 3-4-5 sharing the cut point 3
  two_tri.add_edge(1, 2);
  two_tri.add_edge(1, 3);
  two_tri.add_edge(2, 3);
  two_tri.add_edge(3, 4);
  two_tri.add_edge(3, 5);
  two_tri.add_edge(4, 5);
  CHECK(is_block_graph(two_tri));
  CHECK(is_generalized_block_graph(two_tri));
}

TEST_CASE("components, cut structure, simplicial vertices") {
  Graph G = disjoint_union(path_graph(3), complete_graph(2));
  auto comps = connected_components(G);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].count() == 3);
  CHECK(comps[1].count() == 2);

  Graph P = path_graph(4);
  auto ce = cut_edges(P);
  CHECK(ce.size() == 3);
  CHECK(cut_points(P).elements() == std::vector<int>{2, 3});
  // Removing any path edge leaves both endpoints in a single maximal clique,
  // so every edge of a path is a free cut edge.
  auto fce = free_cut_edges(P);
  REQUIRE(fce.size() == 3);
  CHECK(simplicial_vertices(P).elements() == std::vector<int>{1, 4});

  CHECK(cut_edges(cycle_graph(5)).empty());
  CHECK(simplicial_vertices(complete_graph(4)).count() == 4);
}

TEST_CASE("maximal cliques and leaf orders") {
  Graph two_tri(4);  // triangles 1-2-3, 2-3-4 glued on an edge
  two_tri.add_edge(1, 2);
  two_tri.add_edge(1, 3);
  two_tri.add_edge(2, 3);
  two_tri.add_edge(2, 4);
  two_tri.add_edge(3, 4);
  auto C = maximal_cliques(two_tri);
  REQUIRE(C.facets.size() == 2);
  CHECK(C.facets[0].count() == 3);
  CHECK(C.facets[1].count() == 3);

  auto L = leaf_order(C);
  CHECK(L.is_quasi_forest);

  CHECK(!leaf_order(maximal_cliques(cycle_graph(4))).is_quasi_forest);
}

TEST_CASE("join and reduced graph") {
  // K1 * P2 is a triangle.
  Graph J = join(complete_graph(1), path_graph(2));
  CHECK(J.n == 3);
  CHECK(is_complete(J));

  // K1 * 2K1 = P3 with the cone in the middle under relabelling.
  Graph J2 = join(complete_graph(1), disjoint_union(complete_graph(1), complete_graph(1)));
  CHECK(J2.edge_count() == 2);
  CHECK(is_path_graph(J2));

  // A complete graph has no cut edges, so reduction fixes it.
  CHECK(reduced_graph(complete_graph(4)) == complete_graph(4));
  // Every edge of P2 is a free cut edge, so R(P2) is edgeless.
  CHECK(reduced_graph(path_graph(2)).edge_count() == 0);
}

TEST_CASE("simple paths and induced path length") {
  Graph C = cycle_graph(4);
  auto paths = simple_paths(C, 1, 3);
  CHECK(paths.size() == 2);  // around each side
  CHECK(longest_induced_path_length(path_graph(5)) == 4);
  CHECK(longest_induced_path_length(complete_graph(5)) == 1);
}

TEST_CASE("graph6 round trip is bit exact") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + (int)(rng() % 7);
    Graph G(n);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % 2) G.add_edge(u, v);
    std::string s = to_graph6(G);
    CHECK(from_graph6(s) == G);
    CHECK(to_graph6(from_graph6(s)) == s);
  }
}

TEST_CASE("adjacency text round trip") {
  Graph G = cycle_graph(4);
  CHECK(from_adjacency_text(to_adjacency_text(G)) == G);
}

TEST_CASE("canonical keys are isomorphism invariants") {
  Graph C = cycle_graph(5);
  std::mt19937 rng(11);
  std::vector<int> perm{1, 2, 3, 4, 5};
  for (int t = 0; t < 10; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph H(5);
    for (auto [u, v] : C.edges()) H.add_edge(perm[u - 1], perm[v - 1]);
    CHECK(canonical_key(H) == canonical_key(C));
  }
  CHECK(canonical_key(path_graph(5)) != canonical_key(cycle_graph(5)));
  Graph back = from_canonical_key(5, canonical_key(C));
  CHECK(canonical_key(back) == canonical_key(C));
}

TEST_CASE("isomorphism class counts [OEIS A000088]") {
  std::vector<size_t> expect{1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    auto classes = enumerate_graphs(n);
    CHECK(classes.size() == expect[n - 1]);
    std::set<uint64_t> keys;
    for (auto& G : classes) keys.insert(canonical_key(G));
    CHECK(keys.size() == classes.size());  // pairwise non-isomorphic
  }
}

TEST_CASE("induced subgraphs and edge deletion") {
  Graph C = cycle_graph(5);
  VertexSet W;
  W.add(1);
  W.add(2);
  W.add(4);
  std::vector<int> old_labels;
  Graph H = induced_subgraph(C, W, &old_labels);
  CHECK(H.n == 3);
  CHECK(H.edge_count() == 1);  // only 1-2 survives
  CHECK(old_labels == std::vector<int>{1, 2, 4});

  Graph D = delete_edges(C, {{1, 2}});
  CHECK(D.edge_count() == 4);
  CHECK(is_path_graph(D));
}

TEST_CASE("complement and multifan") {
  CHECK(complement(complete_graph(4)).edge_count() == 0);
  CHECK(canonical_key(complement(cycle_graph(5))) == canonical_key(cycle_graph(5)));

  // K1 * (P2 | P2): 5 vertices, cone 1 joined to two disjoint edges.
  Graph F = multifan({2, 2});
  CHECK(F.n == 5);
  CHECK(F.degree(1) == 4);
  CHECK(F.edge_count() == 6);
}

TEST_CASE("ge closure adds exactly the fill edges at one vertex pair") {
  // Closure of P3 at the ends through the middle: 1-2-3 with e = {1,3}
  // added to G gives the triangle's worth of fill.
  Graph P = path_graph(3);
  Graph H = ge_closure(P, 1, 3);
  CHECK(H.has_edge(1, 2));
  CHECK(H.has_edge(2, 3));
}
