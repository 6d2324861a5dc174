#include "bei/binomial_edge.hpp"

#include <algorithm>

#include "bei/resolution.hpp"

namespace bei {

namespace {

void check_edge_ring(const Ring& R, const Graph& G) {
  if (R.nvertices != G.n)
    throw std::invalid_argument("edge ring / graph vertex count mismatch");
}

// Component count of the induced subgraph on `mask` (isolated vertices in
// the mask count as components).
int comp_count(const Graph& G, uint32_t mask) {
  int count = 0;
  uint32_t seen = 0;
  for (int v = 1; v <= G.n; ++v) {
    uint32_t bit = 1u << (v - 1);
    if (!(mask & bit) || (seen & bit)) continue;
    ++count;
    uint32_t frontier = bit;
    while (frontier) {
      seen |= frontier;
      uint32_t next = 0;
      for (uint32_t f = frontier; f; f &= f - 1)
        next |= G.adj[__builtin_ctz(f)];
      frontier = next & mask & ~seen;
    }
  }
  return count;
}

Ideal vars_plus_zero(const Ring& R, const VertexSet& W) {
  Ideal I(R, {});
  for (int v : W.elements()) {
    I.gens.push_back(poly_var(R, R.xvar(v)));
    I.gens.push_back(poly_var(R, R.yvar(v)));
  }
  return I;
}

}  // namespace

Poly edge_binomial(const Ring& R, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > R.nvertices || j > R.nvertices)
    throw std::invalid_argument("edge_binomial: bad vertex pair");
  std::vector<Term> t;
  t.push_back({1, mono_mul(mono_var(R.xvar(i)), mono_var(R.yvar(j)))});
  t.push_back({R.field.neg(1), mono_mul(mono_var(R.xvar(j)), mono_var(R.yvar(i)))});
  return poly_normalize(R, std::move(t), R.order);
}

Ideal binomial_edge_ideal(const Ring& R, const Graph& G) {
  check_edge_ring(R, G);
  Ideal I(R, {});
  for (auto& [i, j] : G.edges()) I.gens.push_back(edge_binomial(R, i, j));
  return I;
}

Ideal restricted_edge_ideal(const Ring& R, const Graph& G, const VertexSet& W) {
  check_edge_ring(R, G);
  Ideal I(R, {});
  for (auto& [i, j] : G.edges())
    if (W.contains(i) && W.contains(j)) I.gens.push_back(edge_binomial(R, i, j));
  return I;
}

Ideal pair_ideal(const Ring& R, const Graph& G1, const Graph& G2) {
  if (R.nvars != G1.n * G2.n)
    throw std::invalid_argument("pair_ideal: ring size mismatch");
  int n = G2.n;
  Ideal I(R, {});
  for (auto& [i, j] : G1.edges()) {
    for (auto& [t, l] : G2.edges()) {
      std::vector<Term> terms;
      terms.push_back({1, mono_mul(mono_var(Ring::pairvar(n, i, t)),
                                   mono_var(Ring::pairvar(n, j, l)))});
      terms.push_back({R.field.neg(1), mono_mul(mono_var(Ring::pairvar(n, i, l)),
                                                mono_var(Ring::pairvar(n, j, t)))});
      I.gens.push_back(poly_normalize(R, std::move(terms), R.order));
    }
  }
  return I;
}

PrimeComponent prime_component(const Graph& G, const VertexSet& T) {
  PrimeComponent pc;
  pc.T = T;
  uint32_t rest = ((G.n == 31 ? 0x7fffffffu : (1u << G.n) - 1)) & ~T.bits;
  uint32_t seen = 0;
  for (int v = 1; v <= G.n; ++v) {
    uint32_t bit = 1u << (v - 1);
    if (!(rest & bit) || (seen & bit)) continue;
    uint32_t comp = 0, frontier = bit;
    while (frontier) {
      comp |= frontier;
      seen |= frontier;
      uint32_t next = 0;
      for (uint32_t f = frontier; f; f &= f - 1) next |= G.adj[__builtin_ctz(f)];
      frontier = next & rest & ~seen;
    }
    pc.parts.push_back(VertexSet(comp));
  }
  return pc;
}

Ideal component_ideal(const Ring& R, const PrimeComponent& pc) {
  Ideal I = vars_plus_zero(R, pc.T);
  for (auto& part : pc.parts) {
    auto vs = part.elements();
    for (size_t a = 0; a < vs.size(); ++a)
      for (size_t b = a + 1; b < vs.size(); ++b)
        I.gens.push_back(edge_binomial(R, vs[a], vs[b]));
  }
  return I;
}

CutSetFamily cut_sets(const Graph& G, int limit) {
  if (G.n > limit) throw ResourceError("cut_sets: vertex count exceeds the limit");
  uint32_t full = (1u << G.n) - 1;
  CutSetFamily fam;
  for (uint32_t t = 0; t <= full; ++t) {
    uint32_t rest = full & ~t;
    int base = comp_count(G, rest);
    bool ok = true;
    for (uint32_t b = t; b && ok; b &= b - 1) {
      uint32_t bit = b & (~b + 1);
      if (comp_count(G, rest | bit) >= base) ok = false;
    }
    if (ok) fam.sets.push_back(VertexSet(t));
  }
  std::sort(fam.sets.begin(), fam.sets.end());
  return fam;
}

CheckEvidence minimal_primes_identity_check(const Ring& R, const Graph& G) {
  check_edge_ring(R, G);
  CheckEvidence ev;
  Ideal J = binomial_edge_ideal(R, G);
  CutSetFamily fam = cut_sets(G);
  std::vector<Ideal> primes;
  for (auto& T : fam.sets) primes.push_back(component_ideal(R, prime_component(G, T)));

  if (J.is_zero_ideal()) {
    // Edgeless graph: the only cut set is the empty set and P_empty = (0).
    ev.require(fam.sets.size() == 1 && primes[0].is_zero_ideal(),
               "edgeless graph has the single component P_empty = (0)");
    return ev;
  }

  Ideal inter = primes[0];
  for (size_t k = 1; k < primes.size(); ++k) inter = ideal_intersect(inter, primes[k]);
  ev.require(ideal_equal(J, inter), "J_G = intersection of P_T over C(G)");

  for (size_t a = 0; a < primes.size(); ++a) {
    for (size_t b = 0; b < primes.size(); ++b) {
      if (a == b) continue;
      bool contained = true;
      for (auto& g : primes[a].gens)
        if (!ideal_membership(g, primes[b])) {
          contained = false;
          break;
        }
      if (contained) {
        ev.require(false, "prime components pairwise incomparable");
        return ev;
      }
    }
  }
  ev.require(true, "prime components pairwise incomparable");
  return ev;
}

CheckEvidence dim_formula_check(const Ring& R, const Graph& G) {
  check_edge_ring(R, G);
  CheckEvidence ev;
  int n = G.n;
  uint32_t full = (1u << n) - 1;

  for (auto& T : cut_sets(G).sets) {
    PrimeComponent pc = prime_component(G, T);
    Ideal P = component_ideal(R, pc);
    int height = 2 * n - krull_dim(P);
    ev.require(height == n + T.count() - pc.c(),
               "height P_T = n + |T| - c(T) for T = {" + std::to_string(T.bits) + "}");
  }

  int best = 0;
  for (uint32_t t = 0; t <= full; ++t) {
    VertexSet T(t);
    int c = comp_count(G, full & ~t);
    best = std::max(best, n - T.count() + c);
  }
  Ideal J = binomial_edge_ideal(R, G);
  ev.require(krull_dim(J) == best, "dim S/J_G = max(n - |T| + c(T))");
  return ev;
}

Ideal colon_path_ideal(const Ring& R, const Graph& G, int i, int j) {
  check_edge_ring(R, G);
  if (!G.has_edge(i, j)) throw std::invalid_argument("colon_path_ideal: not an edge");
  std::vector<Poly> gens;
  for (auto& path : simple_paths(G, i, j)) {
    int s = (int)path.size() - 2;  // interior vertices i_1..i_s
    if (s < 1) continue;           // the direct edge contributes a unit; excluded
    for (int t = 0; t <= s; ++t) {
      Monomial m;
      for (int k = 1; k <= s; ++k)
        m = mono_mul(m, mono_var(k <= t ? R.yvar(path[k]) : R.xvar(path[k])));
      gens.push_back(poly_term(R, 1, m));
    }
  }
  Ideal I(R, {});
  // deduplicate
  for (auto& g : gens) {
    bool dup = false;
    for (auto& h : I.gens) dup = dup || poly_equal(g, h);
    if (!dup) I.gens.push_back(g);
  }
  return I;
}

CheckEvidence colon_identity_check(const Ring& R, const Graph& G, int i, int j) {
  check_edge_ring(R, G);
  CheckEvidence ev;
  Graph Gdel = G;
  Gdel.remove_edge(i, j);
  Ideal Jdel = binomial_edge_ideal(R, Gdel);
  Poly fe = edge_binomial(R, i, j);
  Ideal quotient = ideal_quotient(Jdel, fe);

  Graph closure = ge_closure(Gdel, i, j);
  Ideal Jclosure = binomial_edge_ideal(R, closure);
  Ideal IG = colon_path_ideal(R, G, i, j);
  Ideal rhs = ideal_sum(Jclosure, IG);
  ev.require(ideal_equal(quotient, rhs), "J_{G-e} : f_e = J_{(G-e)_e} + I_G");

  bool cut = false;
  for (auto& e : cut_edges(G))
    cut = cut || (e == std::make_pair(std::min(i, j), std::max(i, j)));
  if (cut)
    ev.require(ideal_equal(quotient, Jclosure), "cut edge: J_{G-e} : f_e = J_{(G-e)_e}");
  return ev;
}

CheckEvidence simplicial_colon_check(const Ring& R, const Graph& G, int v, int w) {
  check_edge_ring(R, G);
  if (!simplicial_vertices(G).contains(v) || G.degree(v) < 2 || !G.has_edge(v, w))
    throw std::invalid_argument("simplicial_colon_check: precondition violated");
  CheckEvidence ev;
  int n = G.n;

  VertexSet others(G.neighbors(v));
  others.remove(w);
  Ideal IG = colon_path_ideal(R, G, std::min(v, w), std::max(v, w));
  ev.require(ideal_equal(IG, vars_plus_zero(R, others)),
             "I_G = (x_i, y_i : i in N(v) minus w)");

  Graph Gdel = G;
  Gdel.remove_edge(v, w);
  Ideal quotient = ideal_quotient(binomial_edge_ideal(R, Gdel), edge_binomial(R, v, w));

  Graph H = ge_closure(Gdel, v, w);
  VertexSet rest;
  for (int u = 1; u <= n; ++u)
    if (u != v && !others.contains(u)) rest.add(u);
  Ideal split = ideal_sum(vars_plus_zero(R, others), restricted_edge_ideal(R, H, rest));
  ev.require(ideal_equal(quotient, split),
             "colon = (vars over N(v) minus w) + J_H off {v} u (N(v) minus w)");

  BettiTable t = minimal_free_resolution(quotient);
  ev.require(regularity_ideal(quotient, t) <= n - 2, "reg(J_{G-e} : f_e) <= n - 2");
  return ev;
}

CutSetFamily join_cutsets(const Graph& G1, const Graph& G2, int limit) {
  if (is_connected(G1) || is_connected(G2))
    throw std::invalid_argument("join_cutsets: formula needs two disconnected inputs");
  int n1 = G1.n, n2 = G2.n;
  if (n1 + n2 > limit) throw ResourceError("join_cutsets: vertex count exceeds the limit");

  // Family of cut sets of one side's components, in join labels.
  auto side_family = [&](const Graph& G, int shift) {
    SetCollection acc;
    acc.sets.push_back(VertexSet());
    for (auto& compset : connected_components(G)) {
      std::vector<int> labels;
      Graph H = induced_subgraph(G, compset, &labels);
      SetCollection fam;
      for (auto& T : cut_sets(H).sets) {
        VertexSet mapped;
        for (int v : T.elements()) mapped.add(labels[v - 1] + shift);
        fam.sets.push_back(mapped);
      }
      fam.canonicalize();
      acc = collection_join(acc, fam);
    }
    return acc;
  };

  VertexSet full1, full2;
  for (int v = 1; v <= n1; ++v) full1.add(v);
  for (int v = 1; v <= n2; ++v) full2.add(n1 + v);

  CutSetFamily fam;
  fam.sets.push_back(VertexSet());
  for (auto& T : side_family(G1, 0).sets) fam.sets.push_back(VertexSet(T.bits | full2.bits));
  for (auto& T : side_family(G2, n1).sets) fam.sets.push_back(VertexSet(T.bits | full1.bits));
  std::sort(fam.sets.begin(), fam.sets.end());
  fam.sets.erase(std::unique(fam.sets.begin(), fam.sets.end()), fam.sets.end());
  return fam;
}

CheckEvidence join_decomposition_check(const Graph& G1, const Graph& G2, uint32_t p) {
  if (is_connected(G1) || is_connected(G2))
    throw std::invalid_argument("join_decomposition_check: inputs must be disconnected");
  CheckEvidence ev;
  int n1 = G1.n, n2 = G2.n, n = n1 + n2;
  Graph G = join(G1, G2);
  Ring R = Ring::edge_ring(n, p);

  VertexSet full1, full2;
  for (int v = 1; v <= n1; ++v) full1.add(v);
  for (int v = 1; v <= n2; ++v) full2.add(n1 + v);

  // G2's copy inside the join carries the shifted labels; G1 keeps its own.
  Ideal J2 = restricted_edge_ideal(R, G, full2);
  Ideal J1 = restricted_edge_ideal(R, G, full1);
  Ideal Jkn = binomial_edge_ideal(R, complete_graph(n));

  Ideal Q = ideal_sum(vars_plus_zero(R, full1), J2);
  Ideal Qp = ideal_intersect(Jkn, ideal_sum(vars_plus_zero(R, full2), J1));

  Ideal JG = binomial_edge_ideal(R, G);
  ev.require(ideal_equal(JG, ideal_intersect(Q, Qp)), "J_{G1*G2} = Q n Q'");

  PrimeComponent kn2;
  kn2.parts.push_back(full2);
  Ideal rhs = ideal_sum(vars_plus_zero(R, full1), component_ideal(R, kn2));
  ev.require(ideal_equal(ideal_sum(Q, Qp), rhs), "Q + Q' = (vars over [n1]) + J_{K_{n2}}");
  return ev;
}

CheckEvidence generalized_block_decomposition_check(const Graph& G, uint32_t p) {
  CliqueComplex cc = maximal_cliques(G);
  if (!is_connected(G) || !is_generalized_block_graph(G) || cc.facets.size() < 2)
    throw std::invalid_argument(
        "generalized_block_decomposition_check: needs a connected generalized "
        "block graph with c(G) > 1");
  CheckEvidence ev;
  int n = G.n;
  Ring R = Ring::edge_ring(n, p);

  LeafOrder lo = leaf_order(cc);
  ev.require(lo.is_quasi_forest, "clique complex of a connected chordal graph is a quasi-tree");
  if (!lo.is_quasi_forest) return ev;

  const VertexSet& Fc = cc.facets[lo.order.back()];
  uint32_t abits = 0;
  for (size_t k = 0; k < cc.facets.size(); ++k)
    if ((int)k != lo.order.back()) abits |= cc.facets[k].bits & Fc.bits;
  VertexSet A(abits);
  ev.require(!A.empty(), "the leaf meets the rest of the complex (G connected)");

  uint32_t merged = Fc.bits;
  for (auto& F : cc.facets)
    if ((F.bits & Fc.bits) == abits && F.bits != Fc.bits && (abits & F.bits) == abits)
      merged |= F.bits;
  // branches are exactly the facets meeting F_c in A
  Graph Gp = G;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if ((merged & (1u << (u - 1))) && (merged & (1u << (v - 1))) && !Gp.has_edge(u, v))
        Gp.add_edge(u, v);

  CutSetFamily fam = cut_sets(G);
  Ideal Q(R, {}), Qp(R, {});
  bool qset = false, qpset = false;
  for (auto& T : fam.sets) {
    bool disjoint = (T.bits & abits) == 0;
    bool contains = (abits & ~T.bits) == 0;
    ev.require(disjoint || contains, "dichotomy: A n T empty or A inside T");
    Ideal P = component_ideal(R, prime_component(G, T));
    if (disjoint) {
      Q = qset ? ideal_intersect(Q, P) : P;
      qset = true;
    } else {
      Qp = qpset ? ideal_intersect(Qp, P) : P;
      qpset = true;
    }
  }
  ev.require(qset && qpset, "both C(G) classes of the split are nonempty");
  if (!qset || !qpset) return ev;

  ev.require(ideal_equal(Q, binomial_edge_ideal(R, Gp)), "Q = J_{G'}");

  VertexSet rest;
  for (int v = 1; v <= n; ++v)
    if (!A.contains(v)) rest.add(v);
  Ideal vars_A = Ideal(R, {});
  for (int v : A.elements()) {
    vars_A.gens.push_back(poly_var(R, R.xvar(v)));
    vars_A.gens.push_back(poly_var(R, R.yvar(v)));
  }
  ev.require(ideal_equal(Qp, ideal_sum(vars_A, restricted_edge_ideal(R, G, rest))),
             "Q' = (vars over A) + J_{G off A}");
  ev.require(ideal_equal(binomial_edge_ideal(R, G), ideal_intersect(Q, Qp)),
             "J_G = Q n Q'");
  ev.require(ideal_equal(ideal_sum(Q, Qp),
                         ideal_sum(vars_A, restricted_edge_ideal(R, Gp, rest))),
             "Q + Q' = (vars over A) + J_{G' off A}");
  return ev;
}

}  // namespace bei
