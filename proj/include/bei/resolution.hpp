#pragma once

#include <map>

#include "bei/ideal.hpp"

namespace bei {

// Graded Betti numbers beta_{i,j}. For tables of S/I, (0,0) -> 1 is the
// free rank in homological degree zero.
struct BettiTable {
  std::map<std::pair<int, int>, long> b;

  long get(int i, int j) const {
    auto it = b.find({i, j});
    return it == b.end() ? 0 : it->second;
  }
  void set(int i, int j, long v) {
    if (v) b[{i, j}] = v;
  }
  int proj_dim() const;           // max i with a nonzero entry
  int regularity() const;         // max j - i
  int max_internal_degree() const;
  bool operator==(const BettiTable& o) const { return b == o.b; }
};

// Module-term bookkeeping for one level of a free resolution: generators of
// the syzygy module expressed over the previous level's generators.
struct ModTerm {
  uint32_t c;
  int comp;
  Monomial m;
};

struct ModPoly {
  std::vector<ModTerm> t;  // sorted descending in the level's Schreyer order
  bool is_zero() const { return t.empty(); }
  const ModTerm& lead() const { return t.front(); }
};

struct ResolutionLevel {
  std::vector<ModPoly> gens;
  std::vector<int> degs;  // internal degree of each generator
};

struct SchreyerResolution {
  const Ring* ring = nullptr;
  // levels[0].gens are the ideal's reduced GB elements viewed in S^1.
  std::vector<ResolutionLevel> levels;
};

// One syzygy step: generators of the syzygy module of I's generator list,
// which must already be a Groebner basis (checked; throws otherwise). All
// same-lead-component S-pairs are reduced with representation tracking under
// the induced Schreyer order. The full resolution below iterates this step.
ResolutionLevel first_syzygies(const Ideal& I, const Budget& budget = {});

SchreyerResolution schreyer_resolution(const Ideal& I, const Budget& budget = {});

// Betti table of S/I: ranks of the minimalized Schreyer resolution, obtained
// by cancelling the degree-0 strands of the differentials over GF(p).
BettiTable minimal_free_resolution(const Ideal& I, const Budget& budget = {});

// Betti table of the ideal itself: beta_{i,j}(I) = beta_{i+1,j}(S/I).
BettiTable betti_of_ideal(const BettiTable& quotient_table);

int regularity_quotient(const BettiTable& t);           // reg(S/I)
int regularity_ideal(const Ideal& I, const BettiTable& t);  // reg(I), 0 for I = 0
int proj_dim_quotient(const BettiTable& t);
int proj_dim_ideal(const BettiTable& t);

// Independent oracle: beta_{i,j} = dim_K H_i(K(x;S) tensor S/I)_j with the
// Koszul complex on all variables, computed block-by-block in the Z^n
// multigrading of an edge ring (deg x_i = deg y_i = e_i). Internal degree is
// truncated at 2n+2 with a boundary tripwire.
BettiTable koszul_betti_oracle(const Ideal& I, const Budget& budget = {});

// Numerator of the Hilbert series of S/in(I) over (1-t)^nvars, as
// coefficients indexed by degree. Independent of the resolution path.
std::vector<long long> hilbert_numerator(const Ideal& I, const Budget& budget = {});

// JSON-shaped {"i,j": rank} serialization and a Macaulay-style triangle.
std::string betti_to_json(const BettiTable& t);
std::string betti_to_triangle(const BettiTable& t);

}  // namespace bei
