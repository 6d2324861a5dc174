#pragma once

#include "bei/graph.hpp"
#include "bei/ideal.hpp"

namespace bei {

// f_{ij} = x_i y_j - x_j y_i in an edge ring.
Poly edge_binomial(const Ring& R, int i, int j);

// J_G, generated by f_{ij} over the edges of G; (0) for an edgeless graph.
// R must be an edge ring with R.nvertices == G.n.
Ideal binomial_edge_ideal(const Ring& R, const Graph& G);

// J_G restricted to the edges inside W, in the original labels.
Ideal restricted_edge_ideal(const Ring& R, const Graph& G, const VertexSet& W);

// Binomial edge ideal of the pair (G1, G2): p_{e,f} = x_it x_jl - x_il x_jt
// for e = {i,j} in G1, f = {t,l} in G2, in a pair ring on |G1| x |G2| slots.
Ideal pair_ideal(const Ring& R, const Graph& G1, const Graph& G2);

// P_T(G) as combinatorial data: T plus the connected components of G - T.
struct PrimeComponent {
  VertexSet T;
  std::vector<VertexSet> parts;  // sorted by minimum element
  int c() const { return (int)parts.size(); }
};

PrimeComponent prime_component(const Graph& G, const VertexSet& T);

// (x_i, y_i : i in T) + J of the complete graph on each part.
Ideal component_ideal(const Ring& R, const PrimeComponent& pc);

// The family C(G): empty set plus every T whose members are all cut points
// of G restricted to ([n] \ T) + {i}. Indexes the minimal primes of J_G.
struct CutSetFamily {
  std::vector<VertexSet> sets;  // sorted; always contains the empty set
};

CutSetFamily cut_sets(const Graph& G, int limit = 10);

// Outcome of a structural check, with one note per asserted identity so a
// failure names exactly what broke.
struct CheckEvidence {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    notes.push_back(std::string(cond ? "ok: " : "FAIL: ") + what);
    if (!cond) ok = false;
  }
};

// J_G equals the intersection of P_T(G) over T in C(G), and those primes are
// pairwise incomparable.
CheckEvidence minimal_primes_identity_check(const Ring& R, const Graph& G);

// height P_T = n + |T| - c(T) for every T in C(G), and
// dim S/J_G = max over all T of (n - |T| + c(T)).
CheckEvidence dim_formula_check(const Ring& R, const Graph& G);

// The monomial ideal I_G of the colon theorem: generators g_{P,t} =
// y_{i_1}..y_{i_t} x_{i_{t+1}}..x_{i_s} over simple paths i,i_1,..,i_s,j in
// G with s >= 1 (the direct edge is excluded; validated against the
// ideal-quotient oracle in colon_identity_check).
Ideal colon_path_ideal(const Ring& R, const Graph& G, int i, int j);

// J_{G-e} : f_e = J_{(G-e)_e} + I_G for e = {i,j}; for a cut edge also the
// plain form J_{G-e} : f_e = J_{(G-e)_e}.
CheckEvidence colon_identity_check(const Ring& R, const Graph& G, int i, int j);

// For a simplicial vertex v of degree >= 2 and an edge e = {v,w}: I_G is
// exactly the variables over N(v) minus w, the colon splits off those
// variables, and its regularity is at most n - 2.
CheckEvidence simplicial_colon_check(const Ring& R, const Graph& G, int v, int w);

// C(G1 * G2) by the closed formula for two disconnected inputs:
// {empty} u (join of the component families of G1) o {[n2]} u (same for G2)
// o {[n1]}, in the labels of join(G1, G2). Throws if either input is
// connected.
CutSetFamily join_cutsets(const Graph& G1, const Graph& G2, int limit = 10);

// Q = (vars over [n1]) + J_{G2}, Q' = J_{K_n} n ((vars over [n2]) + J_{G1});
// asserts J_{G1*G2} = Q n Q' and Q + Q' = (vars over [n1]) + J_{K_{[n2]}}.
// Both inputs must be disconnected.
CheckEvidence join_decomposition_check(const Graph& G1, const Graph& G2,
                                       uint32_t p = kDefaultChar);

// The leaf decomposition of a connected generalized block graph with
// c(G) > 1: splits C(G) by the common branch intersection A, asserts the
// dichotomy (A n T empty vs A inside T), Q = J_{G'}, Q' = (vars over A) +
// J_{G restricted off A}, J_G = Q n Q', and Q + Q' = (vars over A) +
// J_{G' restricted off A}.
CheckEvidence generalized_block_decomposition_check(const Graph& G,
                                                    uint32_t p = kDefaultChar);

}  // namespace bei
