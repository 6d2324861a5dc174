#pragma once

#include <string>
#include <vector>

#include "bei/field.hpp"
#include "bei/monomial.hpp"

namespace bei {

constexpr uint32_t kDefaultChar = 32003;

// Polynomial ring over GF(p) with named variables and a default order.
// The binomial-edge ring on n graph vertices has 2n variables laid out as
// x_1..x_n, y_1..y_n (x_i in slot i-1, y_i in slot n+i-1).
struct Ring {
  int nvars = 0;
  PrimeField field;
  std::vector<std::string> names;
  MonomialOrder order = MonomialOrder::degrevlex();
  int nvertices = 0;  // graph vertex count for edge rings, 0 otherwise

  Ring(int nv, uint32_t p, std::vector<std::string> nm,
       MonomialOrder ord = MonomialOrder::degrevlex())
      : nvars(nv), field(p), names(std::move(nm)), order(ord) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("Ring: bad variable count");
    if ((int)names.size() != nvars) throw std::invalid_argument("Ring: name count mismatch");
  }

  static Ring edge_ring(int n, uint32_t p = kDefaultChar,
                        MonomialOrder ord = MonomialOrder::degrevlex()) {
    std::vector<std::string> nm;
    for (int i = 1; i <= n; ++i) nm.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) nm.push_back("y" + std::to_string(i));
    Ring r(2 * n, p, std::move(nm), ord);
    r.nvertices = n;
    return r;
  }

  static Ring pair_ring(int m, int n, uint32_t p = kDefaultChar) {
    std::vector<std::string> nm;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j) nm.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
    return Ring(m * n, p, std::move(nm));
  }

  // Slot of x_i / y_i (i is 1-based) in an edge ring.
  int xvar(int i) const { return i - 1; }
  int yvar(int i) const { return nvertices + i - 1; }
  // Slot of x_{ij} in a pair ring on m x n variables.
  static int pairvar(int n, int i, int j) { return (i - 1) * n + (j - 1); }

  bool same_as(const Ring& o) const {
    return nvars == o.nvars && field.p == o.field.p && names == o.names;
  }
};

}  // namespace bei
