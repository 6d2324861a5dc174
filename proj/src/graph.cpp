#include "bei/graph.hpp"

#include "bei/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bei {

void SetCollection::canonicalize() {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (has_edge(u, v)) e.push_back({u, v});
  return e;
}

int Graph::edge_count() const {
  int c = 0;
  for (int v = 1; v <= n; ++v) c += degree(v);
  return c / 2;
}

namespace {

uint32_t full_mask(int n) { return n == 32 ? ~0u : (1u << n) - 1; }

// Component containing `start`, restricted to `allowed`.
uint32_t flood(const Graph& G, int start, uint32_t allowed) {
  uint32_t comp = 1u << (start - 1);
  uint32_t frontier = comp;
  while (frontier) {
    uint32_t next = 0;
    for (uint32_t f = frontier; f; f &= f - 1)
      next |= G.adj[__builtin_ctz(f)];
    next &= allowed & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<VertexSet> components_within(const Graph& G, uint32_t allowed) {
  std::vector<VertexSet> comps;
  uint32_t left = allowed;
  while (left) {
    int v = __builtin_ctz(left) + 1;
    uint32_t c = flood(G, v, allowed);
    comps.push_back(VertexSet(c));
    left &= ~c;
  }
  return comps;
}

int component_count(const Graph& G, uint32_t allowed) {
  int k = 0;
  uint32_t left = allowed;
  while (left) {
    int v = __builtin_ctz(left) + 1;
    left &= ~flood(G, v, allowed);
    ++k;
  }
  return k;
}

bool induces_clique(const Graph& G, uint32_t mask) {
  for (uint32_t m = mask; m; m &= m - 1) {
    int v = __builtin_ctz(m) + 1;
    if ((G.neighbors(v) & mask) != (mask & ~(1u << (v - 1)))) return false;
  }
  return true;
}

void bron_kerbosch(const Graph& G, uint32_t r, uint32_t p, uint32_t x,
                   std::vector<uint32_t>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  uint32_t px = p | x;
  int pivot = __builtin_ctz(px) + 1;
  int best = -1;
  for (uint32_t m = px; m; m &= m - 1) {
    int u = __builtin_ctz(m) + 1;
    int cnt = __builtin_popcount(p & G.neighbors(u));
    if (cnt > best) best = cnt, pivot = u;
  }
  uint32_t cand = p & ~G.neighbors(pivot);
  for (uint32_t m = cand; m; m &= m - 1) {
    int v = __builtin_ctz(m) + 1;
    uint32_t vb = 1u << (v - 1);
    bron_kerbosch(G, r | vb, p & G.neighbors(v), x & G.neighbors(v), out);
    p &= ~vb;
    x |= vb;
  }
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& G) {
  return components_within(G, full_mask(G.n));
}

CliqueComplex maximal_cliques(const Graph& G) {
  std::vector<uint32_t> raw;
  uint32_t nonisolated = 0;
  for (int v = 1; v <= G.n; ++v)
    if (G.degree(v)) nonisolated |= 1u << (v - 1);
  if (nonisolated) bron_kerbosch(G, 0, nonisolated, 0, raw);
  // Isolated vertices contribute singleton facets.
  for (int v = 1; v <= G.n; ++v)
    if (!G.degree(v)) raw.push_back(1u << (v - 1));
  std::sort(raw.begin(), raw.end(), [](uint32_t a, uint32_t b) {
    int la = __builtin_ctz(a), lb = __builtin_ctz(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  CliqueComplex C;
  for (uint32_t f : raw) C.facets.push_back(VertexSet(f));
  return C;
}

VertexSet simplicial_vertices(const Graph& G) {
  VertexSet s;
  for (int v = 1; v <= G.n; ++v)
    if (induces_clique(G, G.neighbors(v))) s.add(v);
  return s;
}

VertexSet free_vertices(const Graph& G) {
  auto C = maximal_cliques(G);
  VertexSet s;
  for (int v = 1; v <= G.n; ++v) {
    int cnt = 0;
    for (auto& f : C.facets)
      if (f.contains(v)) ++cnt;
    if (cnt == 1) s.add(v);
  }
  return s;
}

std::vector<std::pair<int, int>> cut_edges(const Graph& G) {
  std::vector<std::pair<int, int>> r;
  int base = component_count(G, full_mask(G.n));
  for (auto [u, v] : G.edges()) {
    Graph H = G;
    H.remove_edge(u, v);
    if (component_count(H, full_mask(G.n)) > base) r.push_back({u, v});
  }
  return r;
}

VertexSet cut_points(const Graph& G) {
  VertexSet s;
  int before = component_count(G, full_mask(G.n));
  for (int v = 1; v <= G.n; ++v) {
    if (G.degree(v) == 0) continue;  // isolated vertex just disappears
    uint32_t without = full_mask(G.n) & ~(1u << (v - 1));
    if (component_count(G, without) > before) s.add(v);
  }
  return s;
}

std::vector<std::pair<int, int>> free_cut_edges(const Graph& G) {
  std::vector<std::pair<int, int>> r;
  for (auto e : cut_edges(G)) {
    Graph H = G;
    H.remove_edge(e.first, e.second);
    VertexSet fv = free_vertices(H);
    if (fv.contains(e.first) && fv.contains(e.second)) r.push_back(e);
  }
  return r;
}

Graph reduced_graph(const Graph& G, bool iterate) {
  Graph H = G;
  for (;;) {
    auto fce = free_cut_edges(H);
    if (fce.empty()) return H;
    for (auto e : fce) H.remove_edge(e.first, e.second);
    if (!iterate) return H;
  }
}

ChordalityResult is_chordal(const Graph& G) {
  // Maximum cardinality search; the reverse visit order is a PEO iff chordal.
  ChordalityResult res;
  int n = G.n;
  std::vector<int> weight(n + 1, 0), order;
  std::vector<bool> seen(n + 1, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 1; v <= n; ++v)
      if (!seen[v] && (best == -1 || weight[v] > weight[best])) best = v;
    seen[best] = true;
    order.push_back(best);
    for (uint32_t m = G.neighbors(best); m; m &= m - 1) {
      int u = __builtin_ctz(m) + 1;
      if (!seen[u]) ++weight[u];
    }
  }
  // order is the MCS visit order; reversed it is the candidate PEO.
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    uint32_t later = 0;
    for (uint32_t m = G.neighbors(v); m; m &= m - 1) {
      int u = __builtin_ctz(m) + 1;
      if (pos[u] > i) later |= 1u << (u - 1);
    }
    if (later && !induces_clique(G, later)) return res;
  }
  res.chordal = true;
  res.peo = order;
  return res;
}

bool is_generalized_block_graph(const Graph& G) {
  if (!is_chordal(G).chordal) return false;
  auto C = maximal_cliques(G);
  size_t r = C.facets.size();
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j)
      for (size_t k = j + 1; k < r; ++k) {
        uint32_t a = C.facets[i].bits, b = C.facets[j].bits, c = C.facets[k].bits;
        if (a & b & c) {
          if ((a & b) != (a & c) || (a & b) != (b & c)) return false;
        }
      }
  return true;
}

bool is_block_graph(const Graph& G) {
  if (!is_chordal(G).chordal) return false;
  auto C = maximal_cliques(G);
  for (size_t i = 0; i < C.facets.size(); ++i)
    for (size_t j = i + 1; j < C.facets.size(); ++j)
      if (__builtin_popcount(C.facets[i].bits & C.facets[j].bits) > 1) return false;
  return true;
}

ClosedResult is_closed(const Graph& G, int limit) {
  if (G.n > limit)
    throw ResourceError("is_closed: undecided at configured bound");
  ClosedResult res;
  auto C = maximal_cliques(G);
  std::vector<int> perm(G.n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (auto& f : C.facets) {
      int lo = G.n + 1, hi = 0, cnt = 0;
      for (uint32_t m = f.bits; m; m &= m - 1) {
        int lab = perm[__builtin_ctz(m)];
        lo = std::min(lo, lab);
        hi = std::max(hi, lab);
        ++cnt;
      }
      if (hi - lo + 1 != cnt) {
        ok = false;
        break;
      }
    }
    if (ok) {
      res.closed = true;
      res.labeling = perm;
      return res;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

Graph join(const Graph& G1, const Graph& G2) {
  Graph G(G1.n + G2.n);
  for (auto [u, v] : G1.edges()) G.add_edge(u, v);
  for (auto [u, v] : G2.edges()) G.add_edge(u + G1.n, v + G1.n);
  for (int u = 1; u <= G1.n; ++u)
    for (int v = 1; v <= G2.n; ++v) G.add_edge(u, v + G1.n);
  return G;
}

SetCollection collection_join(const SetCollection& A, const SetCollection& B) {
  SetCollection r;
  for (auto& a : A.sets)
    for (auto& b : B.sets) r.sets.push_back(VertexSet(a.bits | b.bits));
  r.canonicalize();
  return r;
}

Graph ge_closure(const Graph& G, int v, int w) {
  if (G.has_edge(v, w)) throw std::invalid_argument("ge_closure: {v,w} is an edge");
  Graph H = G;
  for (uint32_t nb : {G.neighbors(v), G.neighbors(w)}) {
    auto vs = VertexSet(nb).elements();
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j) H.add_edge(vs[i], vs[j]);
  }
  return H;
}

namespace {

void paths_dfs(const Graph& G, int cur, int target, uint32_t used,
               std::vector<int>& stack, std::vector<std::vector<int>>& out) {
  if (cur == target) {
    out.push_back(stack);
    return;
  }
  for (uint32_t m = G.neighbors(cur); m; m &= m - 1) {
    int u = __builtin_ctz(m) + 1;
    if (used & (1u << (u - 1))) continue;
    stack.push_back(u);
    paths_dfs(G, u, target, used | (1u << (u - 1)), stack, out);
    stack.pop_back();
  }
}

bool induces_path(const Graph& G, uint32_t mask) {
  int k = __builtin_popcount(mask);
  if (k == 1) return true;
  int deg1 = 0;
  for (uint32_t m = mask; m; m &= m - 1) {
    int v = __builtin_ctz(m) + 1;
    int d = __builtin_popcount(G.neighbors(v) & mask);
    if (d == 0 || d > 2) return false;
    if (d == 1) ++deg1;
  }
  if (deg1 != 2) return false;
  int v0 = __builtin_ctz(mask) + 1;
  return __builtin_popcount(flood(G, v0, mask)) == k;
}

}  // namespace

std::vector<std::vector<int>> simple_paths(const Graph& G, int i, int j) {
  if (i == j) throw std::invalid_argument("simple_paths: endpoints equal");
  std::vector<std::vector<int>> out;
  std::vector<int> stack{i};
  paths_dfs(G, i, j, 1u << (i - 1), stack, out);
  return out;
}

int longest_induced_path_length(const Graph& G, int limit) {
  if (G.n > limit) throw ResourceError("longest_induced_path_length: vertex cap exceeded");
  int best = 0;
  for (uint32_t mask = 1; mask < (1u << G.n); ++mask) {
    int k = __builtin_popcount(mask);
    if (k - 1 <= best) continue;
    if (induces_path(G, mask)) best = k - 1;
  }
  return best;
}

LeafOrder leaf_order(const CliqueComplex& C) {
  LeafOrder res;
  int r = (int)C.facets.size();
  std::vector<bool> alive(r, true);
  std::vector<int> removed, branch_of;
  for (int step = 0; step < r - 1; ++step) {
    int pick = -1, pick_branch = -1;
    for (int f = 0; f < r && pick < 0; ++f) {
      if (!alive[f]) continue;
      for (int g = 0; g < r && pick < 0; ++g) {
        if (g == f || !alive[g]) continue;
        bool branch = true;
        for (int h = 0; h < r; ++h) {
          if (h == f || !alive[h]) continue;
          uint32_t hf = C.facets[h].bits & C.facets[f].bits;
          if (hf & ~(C.facets[g].bits & C.facets[f].bits)) {
            branch = false;
            break;
          }
        }
        if (branch) pick = f, pick_branch = g;
      }
    }
    if (pick < 0) return res;  // no leaf among >= 2 facets: not a quasi-forest
    alive[pick] = false;
    removed.push_back(pick);
    branch_of.push_back(pick_branch);
  }
  res.is_quasi_forest = true;
  for (int f = 0; f < r; ++f)
    if (alive[f]) res.order.push_back(f);
  res.branches.assign(res.order.size(), -1);
  for (int k = (int)removed.size() - 1; k >= 0; --k) {
    res.order.push_back(removed[k]);
    res.branches.push_back(branch_of[k]);
  }
  return res;
}

Graph path_graph(int n) {
  Graph G(n);
  for (int i = 1; i < n; ++i) G.add_edge(i, i + 1);
  return G;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
  Graph G = path_graph(n);
  G.add_edge(n, 1);
  return G;
}

Graph complete_graph(int n) {
  Graph G(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) G.add_edge(i, j);
  return G;
}

Graph complete_multipartite(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("complete_multipartite: bad part size");
    n += s;
  }
  Graph G(n);
  std::vector<int> part;
  for (size_t p = 0; p < sizes.size(); ++p)
    for (int k = 0; k < sizes[p]; ++k) part.push_back((int)p);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (part[u - 1] != part[v - 1]) G.add_edge(u, v);
  return G;
}

Graph multifan(const std::vector<int>& path_sizes) {
  Graph paths(0);
  for (int s : path_sizes) paths = disjoint_union(paths, path_graph(s));
  return join(complete_graph(1), paths);
}

Graph induced_subgraph(const Graph& G, const VertexSet& W, std::vector<int>* old_labels) {
  auto verts = W.elements();
  Graph H((int)verts.size());
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (G.has_edge(verts[i], verts[j])) H.add_edge((int)i + 1, (int)j + 1);
  if (old_labels) *old_labels = verts;
  return H;
}

Graph delete_edges(const Graph& G, const std::vector<std::pair<int, int>>& E) {
  Graph H = G;
  for (auto [u, v] : E) {
    if (!H.has_edge(u, v)) throw std::invalid_argument("delete_edges: not an edge");
    H.remove_edge(u, v);
  }
  return H;
}

Graph disjoint_union(const Graph& G1, const Graph& G2) {
  Graph G(G1.n + G2.n);
  for (auto [u, v] : G1.edges()) G.add_edge(u, v);
  for (auto [u, v] : G2.edges()) G.add_edge(u + G1.n, v + G1.n);
  return G;
}

Graph complement(const Graph& G) {
  Graph H(G.n);
  for (int u = 1; u <= G.n; ++u)
    for (int v = u + 1; v <= G.n; ++v)
      if (!G.has_edge(u, v)) H.add_edge(u, v);
  return H;
}

bool is_connected(const Graph& G) {
  return G.n <= 1 || component_count(G, full_mask(G.n)) == 1;
}

bool is_path_graph(const Graph& G) {
  if (G.n == 1) return true;
  return is_connected(G) && induces_path(G, full_mask(G.n));
}

bool is_cycle_graph(const Graph& G) {
  if (G.n < 3 || !is_connected(G)) return false;
  for (int v = 1; v <= G.n; ++v)
    if (G.degree(v) != 2) return false;
  return true;
}

bool is_forest(const Graph& G) {
  int comps = component_count(G, full_mask(G.n));
  return G.edge_count() == G.n - comps;
}

bool is_complete(const Graph& G) { return G.edge_count() == G.n * (G.n - 1) / 2; }

std::optional<std::vector<int>> complete_multipartite_signature(const Graph& G) {
  // Parts = connected components of the complement; each must be independent in G.
  auto comps = connected_components(complement(G));
  std::vector<int> sizes;
  for (auto& c : comps) {
    for (int u : c.elements())
      for (int v : c.elements())
        if (u < v && G.has_edge(u, v)) return std::nullopt;
    sizes.push_back(c.count());
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return sizes;
}

std::string to_graph6(const Graph& G) {
  if (G.n > 62) throw std::invalid_argument("to_graph6: n > 62 unsupported");
  std::string s;
  s.push_back((char)(G.n + 63));
  int bit = 5;
  char cur = 0;
  for (int v = 2; v <= G.n; ++v)
    for (int u = 1; u < v; ++u) {
      if (G.has_edge(u, v)) cur |= (char)(1 << bit);
      if (--bit < 0) {
        s.push_back((char)(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) s.push_back((char)(cur + 63));
  return s;
}

Graph from_graph6(const std::string& input) {
  std::string s = input;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("from_graph6: empty input");
  int n = s[0] - 63;
  if (n < 0 || n > 62) throw std::invalid_argument("from_graph6: bad vertex count byte");
  Graph G(n);
  size_t idx = 1;
  int bit = 5;
  for (int v = 2; v <= n; ++v)
    for (int u = 1; u < v; ++u) {
      if (idx >= s.size()) throw std::invalid_argument("from_graph6: truncated");
      if ((s[idx] - 63) & (1 << bit)) G.add_edge(u, v);
      if (--bit < 0) {
        bit = 5;
        ++idx;
      }
    }
  return G;
}

std::string to_adjacency_text(const Graph& G) {
  std::ostringstream os;
  os << G.n;
  for (auto [u, v] : G.edges()) os << "; " << u << " " << v;
  return os.str();
}

Graph from_adjacency_text(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("from_adjacency_text: empty");
  Graph G(std::stoi(parts[0]));
  for (size_t k = 1; k < parts.size(); ++k) {
    std::stringstream es(parts[k]);
    int u, v;
    if (!(es >> u >> v)) {
      std::string rest;
      es.clear();
      es >> rest;
      if (rest.empty()) continue;  // trailing separator
      throw std::invalid_argument("from_adjacency_text: bad edge entry");
    }
    G.add_edge(u, v);
  }
  return G;
}

uint64_t canonical_key(const Graph& G) {
  if (G.n > 11) throw std::invalid_argument("canonical_key: n too large");
  int nbits = G.n * (G.n - 1) / 2;
  // Simple exhaustive minimization with early exit; n <= 7 in practice.
  std::vector<int> perm(G.n);
  std::iota(perm.begin(), perm.end(), 1);
  uint64_t best = ~0ull;
  do {
    uint64_t key = 0;
    int bit = 0;
    bool worse = false;
    for (int v = 2; v <= G.n && !worse; ++v)
      for (int u = 1; u < v; ++u) {
        uint64_t b = G.has_edge(perm[u - 1], perm[v - 1]) ? 1 : 0;
        key |= b << (nbits - 1 - bit);
        ++bit;
        if ((key >> (nbits - bit)) > (best >> (nbits - bit))) {
          worse = true;
          break;
        }
      }
    if (!worse && key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph from_canonical_key(int n, uint64_t key) {
  int nbits = n * (n - 1) / 2;
  Graph G(n);
  int bit = 0;
  for (int v = 2; v <= n; ++v)
    for (int u = 1; u < v; ++u) {
      if ((key >> (nbits - 1 - bit)) & 1) G.add_edge(u, v);
      ++bit;
    }
  return G;
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_graphs: n must be in 1..7");
  int nbits = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (uint64_t mask = 0; mask < (1ull << nbits); ++mask) {
    Graph G = from_canonical_key(n, mask);
    if (canonical_key(G) == mask) out.push_back(G);
  }
  return out;
}

}  // namespace bei
