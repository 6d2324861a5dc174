#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bei/binomial_edge.hpp"
#include "bei/resolution.hpp"

using namespace bei;

TEST_CASE("edge ideal generators") {
  Ring R = Ring::edge_ring(3);
  Ideal J = binomial_edge_ideal(R, path_graph(3));
  CHECK(J.gens.size() == 2);
  CHECK(poly_to_string(R, edge_binomial(R, 1, 2)) == "-x2*y1 + x1*y2");
  Ideal Z = binomial_edge_ideal(R, Graph(3));
  CHECK(Z.is_zero_ideal());
}

TEST_CASE("restricted edge ideal keeps original labels") {
  Ring R = Ring::edge_ring(4);
  VertexSet W;
  W.add(2);
  W.add(3);
  Ideal I = restricted_edge_ideal(R, path_graph(4), W);
  REQUIRE(I.gens.size() == 1);
  CHECK(poly_equal(I.gens[0], edge_binomial(R, 2, 3)));
}

TEST_CASE("cut sets of small graphs") {
  CHECK(cut_sets(path_graph(3)).sets.size() == 2);      // {} and {2}
  CHECK(cut_sets(complete_graph(4)).sets.size() == 1);  // only {}
  // C4: {} plus the two antipodal pairs.
  auto c4 = cut_sets(cycle_graph(4));
  CHECK(c4.sets.size() == 3);
  VertexSet odd, even;
  odd.add(1);
  odd.add(3);
  even.add(2);
  even.add(4);
  CHECK(std::count(c4.sets.begin(), c4.sets.end(), odd) == 1);
  CHECK(std::count(c4.sets.begin(), c4.sets.end(), even) == 1);
  // Every member of every cut set is a cut point of the restricted graph,
  // i.e. removing T grows the component count strictly at each element.
  for (auto& T : cut_sets(cycle_graph(5)).sets) CHECK(T.count() != 1);
}

TEST_CASE("prime components and their ideals") {
  Graph P = path_graph(3);
  VertexSet T;
  T.add(2);
  PrimeComponent pc = prime_component(P, T);
  CHECK(pc.c() == 2);
  Ring R = Ring::edge_ring(3);
  Ideal PT = component_ideal(R, pc);
  // (x2, y2) plus nothing else: the two parts are singletons.
  CHECK(ideal_membership(poly_var(R, R.xvar(2)), PT));
  CHECK(ideal_membership(poly_var(R, R.yvar(2)), PT));
  CHECK(!ideal_membership(poly_var(R, R.xvar(1)), PT));
  CHECK(krull_dim(PT) == 4);  // height n + |T| - c = 3 + 1 - 2 = 2
}

TEST_CASE("minimal primes identity on named graphs") {
  for (auto [n, G] : std::vector<std::pair<int, Graph>>{{3, path_graph(3)},
                                                        {4, cycle_graph(4)},
                                                        {4, complete_graph(4)},
                                                        {5, multifan({2, 2})}}) {
    Ring R = Ring::edge_ring(n);
    CheckEvidence ev = minimal_primes_identity_check(R, G);
    INFO(to_graph6(G));
    for (auto& note : ev.notes) INFO(note);
    CHECK(ev.ok);
  }
}

TEST_CASE("height and dimension formulas on named graphs") {
  for (auto [n, G] : std::vector<std::pair<int, Graph>>{
           {3, path_graph(3)},
           {4, cycle_graph(4)},
           {5, disjoint_union(path_graph(3), path_graph(2))}}) {
    Ring R = Ring::edge_ring(n);
    CheckEvidence ev = dim_formula_check(R, G);
    INFO(to_graph6(G));
    for (auto& note : ev.notes) INFO(note);
    CHECK(ev.ok);
  }
}

TEST_CASE("colon path ideal of a triangle edge") {
  // In K3 with e = {1,3}: the non-direct paths from 1 to 3 are just 1-2-3,
  // so I = (y2, x2).
  Ring R = Ring::edge_ring(3);
  Ideal I = colon_path_ideal(R, complete_graph(3), 1, 3);
  CHECK(ideal_equal(I, Ideal(R, {poly_var(R, R.xvar(2)), poly_var(R, R.yvar(2))})));
  // With a direct edge only, no longer paths: (0).
  Graph single(3);
  single.add_edge(1, 2);
  Ideal none = colon_path_ideal(R, single, 1, 2);
  CHECK(none.is_zero_ideal());
}

TEST_CASE("colon identity against the quotient oracle") {
  // Every edge of these graphs: J_{G-e} : f_e = J_{(G-e)_e} + I_G.
  for (auto [n, G] : std::vector<std::pair<int, Graph>>{
           {3, complete_graph(3)}, {4, cycle_graph(4)}, {4, complete_graph(4)}}) {
    Ring R = Ring::edge_ring(n);
    for (auto [u, v] : G.edges()) {
      CheckEvidence ev = colon_identity_check(R, G, u, v);
      INFO(to_graph6(G) << " e={" << u << "," << v << "}");
      for (auto& note : ev.notes) INFO(note);
      CHECK(ev.ok);
    }
  }
}

TEST_CASE("simplicial colon structure") {
  // Triangle with a pendant: 1-2-3 triangle, edge 3-4. Vertex 1 is
  // simplicial of degree 2; take e = {1,2}.
  Graph G(4);
  G.add_edge(1, 2);
  G.add_edge(1, 3);
  G.add_edge(2, 3);
  G.add_edge(3, 4);
  Ring R = Ring::edge_ring(4);
  CheckEvidence ev = simplicial_colon_check(R, G, 1, 2);
  for (auto& note : ev.notes) INFO(note);
  CHECK(ev.ok);
  // Preconditions are enforced.
  CHECK_THROWS_AS(simplicial_colon_check(R, path_graph(4), 2, 3), std::invalid_argument);
}

TEST_CASE("join cut sets match brute force") {
  Graph A = disjoint_union(path_graph(2), complete_graph(1));  // disconnected
  Graph B = disjoint_union(complete_graph(1), complete_graph(1));
  CutSetFamily direct = cut_sets(join(A, B));
  CutSetFamily formula = join_cutsets(A, B);
  auto sorted = [](CutSetFamily f) {
    std::sort(f.sets.begin(), f.sets.end());
    return f.sets;
  };
  CHECK(sorted(direct) == sorted(formula));
  CHECK_THROWS_AS(join_cutsets(path_graph(2), B), std::invalid_argument);
}

TEST_CASE("join decomposition identities") {
  Graph A = disjoint_union(complete_graph(1), complete_graph(1));
  Graph B = disjoint_union(path_graph(2), complete_graph(1));
  CheckEvidence ev = join_decomposition_check(A, B);
  for (auto& note : ev.notes) INFO(note);
  CHECK(ev.ok);
}

TEST_CASE("generalized block decomposition") {
  // Two triangles glued at a vertex: a block graph with c(G) = 2 blocks...
  Graph G(5);
  G.add_edge(1, 2);
  G.add_edge(1, 3);
  G.add_edge(2, 3);
  G.add_edge(3, 4);
  G.add_edge(3, 5);
  G.add_edge(4, 5);
  CheckEvidence ev = generalized_block_decomposition_check(G);
  for (auto& note : ev.notes) INFO(note);
  CHECK(ev.ok);

  // ... and a star, whose facets are the edges at the hub.
  CheckEvidence ev2 = generalized_block_decomposition_check(complete_multipartite({1, 3}));
  for (auto& note : ev2.notes) INFO(note);
  CHECK(ev2.ok);
}

TEST_CASE("pair ideal of two edges is a single 2x2 relation") {
  Ring R = Ring::pair_ring(2, 2);
  Ideal I = pair_ideal(R, path_graph(2), path_graph(2));
  REQUIRE(I.gens.size() == 1);
  CHECK(I.gens[0].t.size() == 2);
  CHECK(I.gens[0].degree() == 2);
}
