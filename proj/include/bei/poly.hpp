#pragma once

#include <string>
#include <vector>

#include "bei/ring.hpp"

namespace bei {

struct Term {
  uint32_t c = 0;  // in 1..p-1 for stored terms
  Monomial m;
};

// Term list sorted strictly descending under the active order. The zero
// polynomial is the empty list.
struct Poly {
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
  int degree() const;  // -1 for zero
};

Poly poly_zero();
Poly poly_const(const Ring& R, uint32_t c);
Poly poly_term(const Ring& R, uint32_t c, const Monomial& m);
Poly poly_var(const Ring& R, int v);

// Sort terms, combine duplicates, drop zeros.
Poly poly_normalize(const Ring& R, std::vector<Term> terms, const MonomialOrder& ord);

Poly poly_add(const Ring& R, const Poly& a, const Poly& b, const MonomialOrder& ord);
Poly poly_sub(const Ring& R, const Poly& a, const Poly& b, const MonomialOrder& ord);
Poly poly_neg(const Ring& R, const Poly& a);
Poly poly_scale(const Ring& R, const Poly& a, uint32_t c);
Poly poly_mul_term(const Ring& R, const Poly& a, uint32_t c, const Monomial& m);
Poly poly_mul(const Ring& R, const Poly& a, const Poly& b, const MonomialOrder& ord);
Poly poly_monic(const Ring& R, const Poly& a);

bool poly_equal(const Poly& a, const Poly& b);
bool poly_is_homogeneous(const Poly& a);

// Re-sort a polynomial's terms for a different order (same ring).
Poly poly_reorder(const Ring& R, const Poly& a, const MonomialOrder& ord);

// Deterministic text form: terms in stored order; coefficients c > p/2 print
// as subtraction of p-c, so f_12 prints as "x1*y2 - x2*y1". Parsing accepts
// "+", "-", integer coefficients, '*' separators and '^' powers.
std::string poly_to_string(const Ring& R, const Poly& a);
Poly poly_parse(const Ring& R, const std::string& text);

}  // namespace bei
