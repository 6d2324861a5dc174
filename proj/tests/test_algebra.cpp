#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bei/binomial_edge.hpp"
#include "bei/ideal.hpp"

using namespace bei;

namespace {

// Oracle: textbook Buchberger criterion. B is a Groebner basis iff every
// S-polynomial reduces to zero against B.
bool buchberger_criterion(const Ring& R, const std::vector<Poly>& B,
                          const MonomialOrder& ord) {
  for (size_t i = 0; i < B.size(); ++i)
    for (size_t j = i + 1; j < B.size(); ++j) {
      auto &f = B[i], &g = B[j];
      Monomial l = mono_lcm(f.lead().m, g.lead().m);
      Poly s = poly_sub(R,
                        poly_mul_term(R, f, R.field.inv(f.lead().c), mono_div(l, f.lead().m)),
                        poly_mul_term(R, g, R.field.inv(g.lead().c), mono_div(l, g.lead().m)),
                        ord);
      if (!normal_form(R, s, B, ord).is_zero()) return false;
    }
  return true;
}

// Oracle: reducedness. Monic, and no term of any element is divisible by the
// lead of another.
bool is_reduced_basis(const Ring&, const std::vector<Poly>& B) {
  for (auto& f : B) {
    if (f.lead().c != 1) return false;
    for (auto& g : B) {
      if (&f == &g) continue;
      for (auto& t : f.t)
        if (mono_divides(g.lead().m, t.m)) return false;
    }
  }
  return true;
}

Poly random_poly(const Ring& R, std::mt19937& rng, int terms, int maxdeg) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    int d = 1 + (int)(rng() % maxdeg);
    for (int j = 0; j < d; ++j) {
      int v = (int)(rng() % R.nvars);
      m.exp[v]++;
      m.deg++;
    }
    ts.push_back({(uint32_t)(1 + rng() % (R.field.p - 1)), m});
  }
  return poly_normalize(R, std::move(ts), R.order);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField F(32003);
  CHECK(F.add(32002, 1) == 0);
  CHECK(F.sub(0, 1) == 32002);
  CHECK(F.mul(2, 16002) == 1);
  for (uint32_t a : {1u, 2u, 777u, 32002u}) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK(F.neg(5) == 31998);
  CHECK_THROWS_AS(PrimeField(32004), std::invalid_argument);
}

TEST_CASE("polynomial string round trip and arithmetic") {
  Ring R = Ring::edge_ring(3);
  Poly f = edge_binomial(R, 1, 2);
  CHECK(poly_to_string(R, f) == "-x2*y1 + x1*y2");
  CHECK(poly_equal(poly_parse(R, poly_to_string(R, f)), f));
  CHECK(poly_sub(R, f, f, R.order).is_zero());
  CHECK(poly_is_homogeneous(f));
  Poly g = poly_parse(R, "x1^2*y3 + 5*x2");
  CHECK(!poly_is_homogeneous(g));
  CHECK(g.degree() == 3);

  // (f + g) - g = f under any order.
  Poly h = poly_sub(R, poly_add(R, f, g, R.order), g, R.order);
  CHECK(poly_equal(h, f));
}

TEST_CASE("normal form is a remainder with cofactors") {
  Ring R = Ring::edge_ring(3);
  std::mt19937 rng(5);
  for (int t = 0; t < 25; ++t) {
    std::vector<Poly> B{random_poly(R, rng, 3, 3), random_poly(R, rng, 2, 2)};
    B.erase(std::remove_if(B.begin(), B.end(), [](const Poly& p) { return p.is_zero(); }),
            B.end());
    if (B.empty()) continue;
    Poly f = random_poly(R, rng, 4, 4);
    std::vector<Poly> q;
    Poly r = normal_form(R, f, B, R.order, &q);
    // No term of r is divisible by any lead of B.
    for (auto& tm : r.t)
      for (auto& b : B) CHECK(!mono_divides(b.lead().m, tm.m));
    // f == sum q_i b_i + r.
    Poly acc = r;
    for (size_t i = 0; i < B.size(); ++i)
      acc = poly_add(R, acc, poly_mul(R, q[i], B[i], R.order), R.order);
    CHECK(poly_equal(acc, f));
  }
}

TEST_CASE("groebner bases pass the Buchberger criterion and are reduced") {
  for (int n : {3, 4}) {
    Ring R = Ring::edge_ring(n);
    for (auto& G : enumerate_graphs(n)) {
      Ideal J = binomial_edge_ideal(R, G);
      if (J.is_zero_ideal()) continue;
      auto gb = reduced_groebner(R, J.gens, R.order);
      CHECK(buchberger_criterion(R, gb, R.order));
      CHECK(is_reduced_basis(R, gb));
      // Every generator reduces to zero against the basis.
      for (auto& g : J.gens) CHECK(normal_form(R, g, gb, R.order).is_zero());
    }
  }
}

TEST_CASE("reduced groebner basis is independent of generator order") {
  Ring R = Ring::edge_ring(4);
  Ideal J = binomial_edge_ideal(R, cycle_graph(4));
  auto gb1 = reduced_groebner(R, J.gens, R.order);
  auto gens = J.gens;
  std::reverse(gens.begin(), gens.end());
  auto gb2 = reduced_groebner(R, gens, R.order);
  REQUIRE(gb1.size() == gb2.size());
  for (size_t i = 0; i < gb1.size(); ++i) CHECK(poly_equal(gb1[i], gb2[i]));
}

TEST_CASE("frozen oracle: GB of the path ideal J_P3") {
  Ring R = Ring::edge_ring(3);
  Ideal J = binomial_edge_ideal(R, path_graph(3));
  auto& gb = groebner(J, R.order);
  REQUIRE(gb.size() == 2);
  CHECK(poly_to_string(R, gb[0]) == "x2*y1 - x1*y2");
  CHECK(poly_to_string(R, gb[1]) == "x3*y2 - x2*y3");
}

TEST_CASE("membership, equality, sum") {
  Ring R = Ring::edge_ring(3);
  Ideal J = binomial_edge_ideal(R, path_graph(3));
  CHECK(ideal_membership(edge_binomial(R, 1, 2), J));
  // f_13 is not in J_P3 (the path 1-2-3 is not closed off).
  CHECK(!ideal_membership(edge_binomial(R, 1, 3), J));
  // ... but y2 * f_13 is: y2 f_13 = y3 f_12 - y1 f_23 up to sign.
  Poly w = poly_mul(R, poly_var(R, R.yvar(2)), edge_binomial(R, 1, 3), R.order);
  CHECK(ideal_membership(w, J));

  Ideal K3 = binomial_edge_ideal(R, complete_graph(3));
  CHECK(!ideal_equal(J, K3));
  Ideal S = ideal_sum(J, Ideal(R, {edge_binomial(R, 1, 3)}));
  CHECK(ideal_equal(S, K3));
}

TEST_CASE("intersection and quotient on principal ideals") {
  Ring R = Ring::edge_ring(2);
  Poly x1 = poly_var(R, R.xvar(1)), y1 = poly_var(R, R.yvar(1));
  Ideal A(R, {x1}), B(R, {y1});
  Ideal I = ideal_intersect(A, B);
  CHECK(ideal_equal(I, Ideal(R, {poly_mul(R, x1, y1, R.order)})));

  Ideal Q = ideal_quotient(Ideal(R, {poly_mul(R, x1, y1, R.order)}), x1);
  CHECK(ideal_equal(Q, B));
  // (I : f) = (1) when f is in I.
  Ideal U = ideal_quotient(A, x1);
  CHECK(ideal_membership(poly_const(R, 1), U));
}

TEST_CASE("random intersection sanity: I cap J contains products and sits inside both") {
  Ring R = Ring::edge_ring(3);
  std::mt19937 rng(99);
  for (int t = 0; t < 8; ++t) {
    Poly f = random_poly(R, rng, 2, 2), g = random_poly(R, rng, 2, 2);
    if (f.is_zero() || g.is_zero()) continue;
    Ideal A(R, {f}), B(R, {g});
    Ideal I = ideal_intersect(A, B);
    CHECK(ideal_membership(poly_mul(R, f, g, R.order), I));
    for (auto& h : I.gens) {
      CHECK(ideal_membership(h, A));
      CHECK(ideal_membership(h, B));
    }
  }
}

TEST_CASE("elimination computes the subring contraction") {
  // In GF(p)[x1,x2,y1,y2]: eliminate x1 from (x1 - y1 y2, x2 - y1) and the
  // contraction keeps x2 - y1.
  Ring R = Ring::edge_ring(2);
  Poly f = poly_parse(R, "x1 - y1*y2"), g = poly_parse(R, "x2 - y1");
  Ideal I(R, {f, g});
  Ideal E = eliminate(I, 1u << R.xvar(1));
  CHECK(ideal_membership(g, E));
  for (auto& h : E.gens)
    for (auto& tm : h.t) CHECK(tm.m.exp[R.xvar(1)] == 0);
}

TEST_CASE("krull dimension of classic quotients") {
  {
    Ring R = Ring::edge_ring(3);
    CHECK(krull_dim(binomial_edge_ideal(R, path_graph(3))) == 4);      // n + 1
    CHECK(krull_dim(binomial_edge_ideal(R, complete_graph(3))) == 4);  // n + 1
    CHECK(krull_dim(Ideal(R, {})) == 6);
  }
  {
    Ring R = Ring::edge_ring(5);
    CHECK(krull_dim(binomial_edge_ideal(R, complete_graph(5))) == 6);
  }
}

TEST_CASE("budgets fail loudly") {
  Ring R = Ring::edge_ring(4);
  Ideal J = binomial_edge_ideal(R, cycle_graph(4));
  Budget tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(reduced_groebner(R, J.gens, R.order, tiny), ResourceError);
}

TEST_CASE("poly_div_exact inverts multiplication") {
  Ring R = Ring::edge_ring(3);
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    Poly f = random_poly(R, rng, 3, 2), g = random_poly(R, rng, 2, 2);
    if (f.is_zero() || g.is_zero()) continue;
    Poly fg = poly_mul(R, f, g, R.order);
    CHECK(poly_equal(poly_div_exact(R, fg, g, R.order), f));
  }
  CHECK_THROWS_AS(poly_div_exact(R, poly_var(R, 0), poly_var(R, 1), R.order),
                  std::logic_error);
}
