#pragma once

#include <optional>

#include "bei/errors.hpp"
#include "bei/poly.hpp"

namespace bei {

struct Budget {
  long max_pairs = 2000000;      // S-pairs processed per Buchberger run
  size_t max_terms = 4000000;    // term bound on any intermediate polynomial
};

struct Ideal {
  const Ring* ring = nullptr;
  std::vector<Poly> gens;

  // Reduced GB cache, set once by groebner() and then frozen.
  mutable std::optional<std::vector<Poly>> gb;
  mutable MonomialOrder gb_order = MonomialOrder::degrevlex();

  Ideal() = default;
  Ideal(const Ring& R, std::vector<Poly> g) : ring(&R), gens(std::move(g)) {}

  bool is_zero_ideal() const {
    for (auto& g : gens)
      if (!g.is_zero()) return false;
    return true;
  }
};

// Multivariate division: remainder of f against B, no term of the result
// divisible by any lead term of B. Highest reducible term first, divisors in
// list order. If quotients != nullptr it receives one cofactor per element
// of B, with f = sum q_i b_i + remainder.
Poly normal_form(const Ring& R, const Poly& f, const std::vector<Poly>& B,
                 const MonomialOrder& ord, std::vector<Poly>* quotients = nullptr);

// Reduced Groebner basis (Buchberger, Gebauer-Moller pair elimination,
// normal selection strategy). Deterministic; independent of generator order.
std::vector<Poly> reduced_groebner(const Ring& R, const std::vector<Poly>& gens,
                                   const MonomialOrder& ord, const Budget& budget = {});

// Cached-GB access on an ideal (computes under `ord` on first use; a second
// call with another order recomputes without touching the cache).
const std::vector<Poly>& groebner(const Ideal& I, const MonomialOrder& ord,
                                  const Budget& budget = {});

bool ideal_membership(const Poly& f, const Ideal& I, const Budget& budget = {});
bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget = {});

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J, const Budget& budget = {});
Ideal ideal_quotient(const Ideal& I, const Poly& f, const Budget& budget = {});

// Generators of I restricted to the subring without the variables in V
// (block-order elimination). V is a bitmask over variable slots.
Ideal eliminate(const Ideal& I, uint32_t vars, const Budget& budget = {});

// Krull dimension of S/I via the initial ideal: nvars minus a minimum vertex
// cover of the lead-term supports, found by branch and bound.
int krull_dim(const Ideal& I, const Budget& budget = {});

// I + (x_i, y_i : i in W); W is a 1-based vertex bitmask over an edge ring.
Ideal variables_plus(const Ideal& I, uint32_t W);

// Exact division q = f / g; throws std::logic_error if g does not divide f.
Poly poly_div_exact(const Ring& R, const Poly& f, const Poly& g, const MonomialOrder& ord);

}  // namespace bei
