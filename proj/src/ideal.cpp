#include "bei/ideal.hpp"

#include <algorithm>
#include <map>

namespace bei {

Poly normal_form(const Ring& R, const Poly& f, const std::vector<Poly>& B,
                 const MonomialOrder& ord, std::vector<Poly>* quotients) {
  if (quotients) quotients->assign(B.size(), poly_zero());
  Poly rem;
  Poly cur = f;
  while (!cur.is_zero()) {
    const Term& lt = cur.lead();
    bool reduced = false;
    for (size_t k = 0; k < B.size(); ++k) {
      if (B[k].is_zero()) continue;
      if (!mono_divides(B[k].lead().m, lt.m)) continue;
      Monomial q = mono_div(lt.m, B[k].lead().m);
      uint32_t c = R.field.mul(lt.c, R.field.inv(B[k].lead().c));
      cur = poly_sub(R, cur, poly_mul_term(R, B[k], c, q), ord);
      if (quotients)
        (*quotients)[k] = poly_add(R, (*quotients)[k], poly_term(R, c, q), ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.t.push_back(lt);
      cur.t.erase(cur.t.begin());
    }
  }
  return rem;
}

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
};

// Normal strategy: minimal lcm degree, ties by (i, j).
bool pair_less(const Pair& a, const Pair& b) {
  if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

Poly spoly(const Ring& R, const Poly& f, const Poly& g, const MonomialOrder& ord) {
  Monomial l = mono_lcm(f.lead().m, g.lead().m);
  Poly a = poly_mul_term(R, f, R.field.inv(f.lead().c), mono_div(l, f.lead().m));
  Poly b = poly_mul_term(R, g, R.field.inv(g.lead().c), mono_div(l, g.lead().m));
  return poly_sub(R, a, b, ord);
}

// Gebauer-Moller update: add generator t to the basis, maintaining the pair
// set with the coprime and chain criteria.
void gm_update(const Ring&, std::vector<Poly>& basis, std::vector<Pair>& pairs,
               const Poly& t, const MonomialOrder& ord) {
  (void)ord;
  int nt = (int)basis.size();
  const Monomial& lt = t.lead().m;

  std::vector<Pair> fresh;
  for (int i = 0; i < nt; ++i) {
    if (basis[i].is_zero()) continue;
    fresh.push_back({i, nt, mono_lcm(basis[i].lead().m, lt)});
  }
  // Drop new pairs whose lcm is a proper multiple of another new pair's lcm.
  std::vector<bool> keep(fresh.size(), true);
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    for (size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || !keep[b]) continue;
      if (fresh[b].lcm != fresh[a].lcm && mono_divides(fresh[b].lcm, fresh[a].lcm)) {
        keep[a] = false;
        break;
      }
    }
  }
  // Among equal lcms keep the first; drop coprime-lead pairs entirely.
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    for (size_t b = a + 1; b < fresh.size(); ++b)
      if (keep[b] && fresh[b].lcm == fresh[a].lcm) keep[b] = false;
    if (mono_coprime(basis[fresh[a].i].lead().m, lt)) keep[a] = false;
  }
  // Chain criterion on old pairs.
  std::vector<Pair> surviving;
  for (auto& pr : pairs) {
    bool drop = mono_divides(lt, pr.lcm) &&
                mono_lcm(basis[pr.i].lead().m, lt) != pr.lcm &&
                mono_lcm(basis[pr.j].lead().m, lt) != pr.lcm;
    if (!drop) surviving.push_back(pr);
  }
  for (size_t a = 0; a < fresh.size(); ++a)
    if (keep[a]) surviving.push_back(fresh[a]);
  pairs = std::move(surviving);
  basis.push_back(t);
}

}  // namespace

std::vector<Poly> reduced_groebner(const Ring& R, const std::vector<Poly>& gens,
                                   const MonomialOrder& ord, const Budget& budget) {
  std::vector<Poly> input;
  for (auto& g : gens) {
    Poly p = poly_reorder(R, g, ord);
    if (!p.is_zero()) input.push_back(poly_monic(R, p));
  }
  // Deterministic start independent of generator order.
  std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
    if (a.t.size() != b.t.size()) return a.t.size() < b.t.size();
    for (size_t i = 0; i < a.t.size(); ++i) {
      int c = mono_cmp(a.t[i].m, b.t[i].m, R.nvars, ord);
      if (c != 0) return c < 0;
      if (a.t[i].c != b.t[i].c) return a.t[i].c < b.t[i].c;
    }
    return false;
  });
  input.erase(std::unique(input.begin(), input.end(),
                          [](const Poly& a, const Poly& b) { return poly_equal(a, b); }),
              input.end());

  std::vector<Poly> basis;
  std::vector<Pair> pairs;
  for (auto& g : input) {
    Poly r = normal_form(R, g, basis, ord);
    if (!r.is_zero()) gm_update(R, basis, pairs, poly_monic(R, r), ord);
  }

  long processed = 0;
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair pr = *it;
    pairs.erase(it);
    if (++processed > budget.max_pairs)
      throw ResourceError("groebner: S-pair budget exceeded");
    Poly s = spoly(R, basis[pr.i], basis[pr.j], ord);
    Poly r = normal_form(R, s, basis, ord);
    if (r.t.size() > budget.max_terms)
      throw ResourceError("groebner: term budget exceeded");
    if (!r.is_zero()) gm_update(R, basis, pairs, poly_monic(R, r), ord);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (mono_divides(basis[j].lead().m, basis[i].lead().m) &&
          (basis[j].lead().m != basis[i].lead().m || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Tail-reduce for the unique reduced GB.
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = normal_form(R, minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(poly_monic(R, r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return mono_cmp(a.lead().m, b.lead().m, R.nvars, ord) > 0;
  });
  return reduced;
}

const std::vector<Poly>& groebner(const Ideal& I, const MonomialOrder& ord,
                                  const Budget& budget) {
  if (!I.gb || !(I.gb_order == ord)) {
    I.gb = reduced_groebner(*I.ring, I.gens, ord, budget);
    I.gb_order = ord;
  }
  return *I.gb;
}

bool ideal_membership(const Poly& f, const Ideal& I, const Budget& budget) {
  const Ring& R = *I.ring;
  auto& gb = groebner(I, R.order, budget);
  return normal_form(R, poly_reorder(R, f, R.order), gb, R.order).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget) {
  if (!I.ring->same_as(*J.ring))
    throw std::invalid_argument("ideal_equal: ring mismatch");
  const MonomialOrder ord = I.ring->order;
  auto& a = groebner(I, ord, budget);
  auto& b = groebner(J, ord, budget);
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!poly_equal(a[i], b[i])) return false;
  return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!I.ring->same_as(*J.ring)) throw std::invalid_argument("ideal_sum: ring mismatch");
  std::vector<Poly> g = I.gens;
  g.insert(g.end(), J.gens.begin(), J.gens.end());
  return Ideal(*I.ring, std::move(g));
}

namespace {

// Shift a polynomial into the tag ring (variable slots moved up by one).
Poly shift_up(const Ring& Rt, const Poly& f) {
  Poly r;
  for (auto& tm : f.t) {
    Monomial m;
    for (int v = kMaxVars - 1; v >= 1; --v) m.exp[v] = tm.m.exp[v - 1];
    m.exp[0] = 0;
    m.deg = tm.m.deg;
    r.t.push_back({tm.c, m});
  }
  return poly_reorder(Rt, r, Rt.order);
}

Poly shift_down(const Ring& R, const Poly& f) {
  Poly r;
  for (auto& tm : f.t) {
    Monomial m;
    for (int v = 0; v < kMaxVars - 1; ++v) m.exp[v] = tm.m.exp[v + 1];
    m.deg = tm.m.deg;
    r.t.push_back({tm.c, m});
  }
  return poly_reorder(R, r, R.order);
}

}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J, const Budget& budget) {
  if (!I.ring->same_as(*J.ring))
    throw std::invalid_argument("ideal_intersect: ring mismatch");
  const Ring& R = *I.ring;
  if (R.nvars + 1 > kMaxVars) throw ResourceError("ideal_intersect: too many variables");

  std::vector<std::string> names;
  names.push_back("@t");
  names.insert(names.end(), R.names.begin(), R.names.end());
  Ring Rt(R.nvars + 1, R.field.p, std::move(names), MonomialOrder::elim(1));

  Poly tv = poly_var(Rt, 0);
  Poly one_minus_t = poly_sub(Rt, poly_const(Rt, 1), tv, Rt.order);
  std::vector<Poly> gens;
  for (auto& f : I.gens)
    if (!f.is_zero()) gens.push_back(poly_mul(Rt, tv, shift_up(Rt, f), Rt.order));
  for (auto& g : J.gens)
    if (!g.is_zero()) gens.push_back(poly_mul(Rt, one_minus_t, shift_up(Rt, g), Rt.order));

  auto gb = reduced_groebner(Rt, gens, Rt.order, budget);
  std::vector<Poly> result;
  for (auto& g : gb) {
    bool has_tag = false;
    for (auto& tm : g.t)
      if (tm.m.exp[0]) { has_tag = true; break; }
    if (!has_tag) result.push_back(shift_down(R, g));
  }
  return Ideal(R, std::move(result));
}

Poly poly_div_exact(const Ring& R, const Poly& f, const Poly& g, const MonomialOrder& ord) {
  if (g.is_zero()) throw std::invalid_argument("poly_div_exact: divide by zero");
  std::vector<Poly> q;
  Poly rem = normal_form(R, f, {g}, ord, &q);
  if (!rem.is_zero()) throw std::logic_error("poly_div_exact: not divisible");
  return q[0];
}

Ideal ideal_quotient(const Ideal& I, const Poly& f, const Budget& budget) {
  const Ring& R = *I.ring;
  if (f.is_zero()) throw std::invalid_argument("ideal_quotient: zero divisor polynomial");
  Ideal fI(R, {f});
  Ideal meet = ideal_intersect(I, fI, budget);
  std::vector<Poly> gens;
  for (auto& g : meet.gens) gens.push_back(poly_div_exact(R, g, f, R.order));
  return Ideal(R, std::move(gens));
}

Ideal eliminate(const Ideal& I, uint32_t vars, const Budget& budget) {
  const Ring& R = *I.ring;
  // Permute the eliminated variables to the front, GB under a block order,
  // then keep the generators free of them.
  std::vector<int> perm;  // new slot -> old slot
  for (int v = 0; v < R.nvars; ++v)
    if (vars & (1u << v)) perm.push_back(v);
  int k = (int)perm.size();
  for (int v = 0; v < R.nvars; ++v)
    if (!(vars & (1u << v))) perm.push_back(v);

  std::vector<std::string> names;
  for (int v : perm) names.push_back(R.names[v]);
  Ring Re(R.nvars, R.field.p, std::move(names), MonomialOrder::elim(k));

  std::vector<int> inv(R.nvars);
  for (int s = 0; s < R.nvars; ++s) inv[perm[s]] = s;

  auto map_poly = [&](const Poly& f, const std::vector<int>& slot_map, const Ring& target) {
    Poly r;
    for (auto& tm : f.t) {
      Monomial m;
      for (int v = 0; v < R.nvars; ++v) m.exp[slot_map[v]] = tm.m.exp[v];
      m.deg = tm.m.deg;
      r.t.push_back({tm.c, m});
    }
    return poly_reorder(target, r, target.order);
  };

  std::vector<Poly> gens;
  for (auto& f : I.gens) gens.push_back(map_poly(f, inv, Re));
  auto gb = reduced_groebner(Re, gens, Re.order, budget);

  std::vector<int> back(R.nvars);
  for (int s = 0; s < R.nvars; ++s) back[s] = perm[s];
  std::vector<Poly> result;
  for (auto& g : gb) {
    bool uses = false;
    for (auto& tm : g.t)
      for (int v = 0; v < k && !uses; ++v)
        if (tm.m.exp[v]) uses = true;
    if (!uses) {
      Poly r;
      for (auto& tm : g.t) {
        Monomial m;
        for (int s = 0; s < R.nvars; ++s) m.exp[back[s]] = tm.m.exp[s];
        m.deg = tm.m.deg;
        r.t.push_back({tm.c, m});
      }
      result.push_back(poly_reorder(R, r, R.order));
    }
  }
  return Ideal(R, std::move(result));
}

namespace {

// Minimum hitting set over the supports, branch and bound.
void cover_search(const std::vector<uint32_t>& supports, size_t idx, uint32_t chosen,
                  int size, int& best) {
  if (size >= best) return;
  while (idx < supports.size() && (supports[idx] & chosen)) ++idx;
  if (idx == supports.size()) {
    best = size;
    return;
  }
  uint32_t s = supports[idx];
  for (int v = 0; v < kMaxVars; ++v)
    if (s & (1u << v)) cover_search(supports, idx + 1, chosen | (1u << v), size + 1, best);
}

}  // namespace

int krull_dim(const Ideal& I, const Budget& budget) {
  const Ring& R = *I.ring;
  if (R.nvars > 24) throw ResourceError("krull_dim: more than 24 variables");
  auto& gb = groebner(I, R.order, budget);
  if (gb.size() == 1 && gb[0].lead().m.is_one()) return -1;  // unit ideal
  std::vector<uint32_t> supports;
  for (auto& g : gb) {
    uint32_t s = 0;
    for (int v = 0; v < R.nvars; ++v)
      if (g.lead().m.exp[v]) s |= 1u << v;
    supports.push_back(s);
  }
  int best = R.nvars + 1;
  cover_search(supports, 0, 0, 0, best);
  if (supports.empty()) best = 0;
  return R.nvars - best;
}

Ideal variables_plus(const Ideal& I, uint32_t W) {
  const Ring& R = *I.ring;
  if (R.nvertices == 0) throw std::invalid_argument("variables_plus: not an edge ring");
  std::vector<Poly> gens = I.gens;
  for (int i = 1; i <= R.nvertices; ++i) {
    if (W & (1u << (i - 1))) {
      gens.push_back(poly_var(R, R.xvar(i)));
      gens.push_back(poly_var(R, R.yvar(i)));
    }
  }
  return Ideal(R, std::move(gens));
}

}  // namespace bei
