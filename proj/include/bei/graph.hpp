#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <stdexcept>

namespace bei {

// Vertices are labeled 1..n throughout the public API; bit v-1 of a mask
// stands for vertex v.
struct VertexSet {
  uint32_t bits = 0;

  VertexSet() = default;
  explicit VertexSet(uint32_t b) : bits(b) {}

  bool contains(int v) const { return bits & (1u << (v - 1)); }
  void add(int v) { bits |= 1u << (v - 1); }
  void remove(int v) { bits &= ~(1u << (v - 1)); }
  int count() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(const VertexSet& o) const { return (bits & ~o.bits) == 0; }
  std::vector<int> elements() const {
    std::vector<int> r;
    for (uint32_t b = bits; b; b &= b - 1) r.push_back(__builtin_ctz(b) + 1);
    return r;
  }
  bool operator==(const VertexSet& o) const { return bits == o.bits; }
  bool operator<(const VertexSet& o) const { return bits < o.bits; }
};

// Collection of vertex subsets; canonicalize() sorts and deduplicates.
struct SetCollection {
  std::vector<VertexSet> sets;
  void canonicalize();
  bool operator==(const SetCollection& o) const { return sets == o.sets; }
};

struct Graph {
  int n = 0;
  std::vector<uint32_t> adj;  // adj[v-1] = neighbor mask of v

  Graph() = default;
  explicit Graph(int nn) : n(nn), adj(nn, 0) {
    if (nn < 0 || nn > 31) throw std::invalid_argument("Graph: vertex count out of range");
  }

  bool has_edge(int u, int v) const { return adj[u - 1] & (1u << (v - 1)); }
  void add_edge(int u, int v) {
    if (u == v || u < 1 || v < 1 || u > n || v > n)
      throw std::invalid_argument("Graph: bad edge");
    adj[u - 1] |= 1u << (v - 1);
    adj[v - 1] |= 1u << (u - 1);
  }
  void remove_edge(int u, int v) {
    adj[u - 1] &= ~(1u << (v - 1));
    adj[v - 1] &= ~(1u << (u - 1));
  }
  uint32_t neighbors(int v) const { return adj[v - 1]; }
  int degree(int v) const { return __builtin_popcount(adj[v - 1]); }

  // Edges in canonical (min,max) order, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;
  bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

struct CliqueComplex {
  std::vector<VertexSet> facets;  // pairwise incomparable, sorted
};

struct LeafOrder {
  bool is_quasi_forest = false;
  std::vector<int> order;     // indices into the complex's facet list
  std::vector<int> branches;  // branches[i] = facet index acting as branch of order[i] (-1 for the first)
};

std::vector<VertexSet> connected_components(const Graph& G);
CliqueComplex maximal_cliques(const Graph& G);
VertexSet simplicial_vertices(const Graph& G);
VertexSet free_vertices(const Graph& G);
std::vector<std::pair<int, int>> cut_edges(const Graph& G);
VertexSet cut_points(const Graph& G);
std::vector<std::pair<int, int>> free_cut_edges(const Graph& G);
// Removes all free cut edges of G in one pass; with iterate=true repeats
// until none remain (optional mode, not used by the theorem checks).
Graph reduced_graph(const Graph& G, bool iterate = false);

struct ChordalityResult {
  bool chordal = false;
  std::vector<int> peo;  // perfect elimination ordering when chordal
};
ChordalityResult is_chordal(const Graph& G);
bool is_block_graph(const Graph& G);
bool is_generalized_block_graph(const Graph& G);

struct ClosedResult {
  bool closed = false;
  std::vector<int> labeling;  // labeling[v-1] = new label of v when closed
};
// Exhaustive relabeling search for the interval-facet characterization.
ClosedResult is_closed(const Graph& G, int limit = 10);

Graph join(const Graph& G1, const Graph& G2);
SetCollection collection_join(const SetCollection& A, const SetCollection& B);
// G plus all edges inside N(v) and inside N(w); {v,w} must be a non-edge.
Graph ge_closure(const Graph& G, int v, int w);

std::vector<std::vector<int>> simple_paths(const Graph& G, int i, int j);
int longest_induced_path_length(const Graph& G, int limit = 12);
LeafOrder leaf_order(const CliqueComplex& C);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& sizes);
// K_1 * (P_{n_1} | ... | P_{n_t}); the cone vertex gets label 1.
Graph multifan(const std::vector<int>& path_sizes);
Graph induced_subgraph(const Graph& G, const VertexSet& W,
                       std::vector<int>* old_labels = nullptr);
Graph delete_edges(const Graph& G, const std::vector<std::pair<int, int>>& E);
Graph disjoint_union(const Graph& G1, const Graph& G2);
Graph complement(const Graph& G);
bool is_connected(const Graph& G);
bool is_path_graph(const Graph& G);
bool is_cycle_graph(const Graph& G);
bool is_forest(const Graph& G);
bool is_complete(const Graph& G);
// Part sizes (descending) when G is complete multipartite, else nullopt.
std::optional<std::vector<int>> complete_multipartite_signature(const Graph& G);

// graph6 bytes per the standard encoding (n <= 62 here); the ">>graph6<<"
// header is accepted on input and never emitted.
std::string to_graph6(const Graph& G);
Graph from_graph6(const std::string& s);

// Fixture format "n; i j; i j; ...".
std::string to_adjacency_text(const Graph& G);
Graph from_adjacency_text(const std::string& s);

// Lexicographically minimal upper-triangle adjacency bitstring over all
// relabelings (graph6 bit order); usable for n <= 7 isomorphism classes.
uint64_t canonical_key(const Graph& G);
Graph from_canonical_key(int n, uint64_t key);
std::vector<Graph> enumerate_graphs(int n);  // one per isomorphism class

}  // namespace bei
