#include "bei/resolution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace bei {

int BettiTable::proj_dim() const {
  int pd = 0;
  for (auto& [ij, v] : b) pd = std::max(pd, ij.first);
  return pd;
}

int BettiTable::regularity() const {
  int r = 0;
  for (auto& [ij, v] : b) r = std::max(r, ij.second - ij.first);
  return r;
}

int BettiTable::max_internal_degree() const {
  int d = 0;
  for (auto& [ij, v] : b) d = std::max(d, ij.second);
  return d;
}

namespace {

// ----- shared sparse rank over GF(p) ---------------------------------------
// Columns as sorted (row, value) lists; elimination pivots on the largest row.
struct SparseRank {
  const PrimeField& F;
  std::unordered_map<int, std::vector<std::pair<int, uint32_t>>> pivot_of_row;
  long rank = 0;

  explicit SparseRank(const PrimeField& f) : F(f) {}

  static void axpy(const PrimeField& F, std::vector<std::pair<int, uint32_t>>& dst,
                   uint32_t c, const std::vector<std::pair<int, uint32_t>>& src) {
    std::vector<std::pair<int, uint32_t>> out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() && j < src.size()) {
      if (dst[i].first < src[j].first) {
        out.push_back(dst[i++]);
      } else if (dst[i].first > src[j].first) {
        out.push_back({src[j].first, F.mul(c, src[j].second)});
        ++j;
      } else {
        uint32_t v = F.add(dst[i].second, F.mul(c, src[j].second));
        if (v) out.push_back({dst[i].first, v});
        ++i, ++j;
      }
    }
    for (; i < dst.size(); ++i) out.push_back(dst[i]);
    for (; j < src.size(); ++j) out.push_back({src[j].first, F.mul(c, src[j].second)});
    dst = std::move(out);
  }

  void add_column(std::vector<std::pair<int, uint32_t>> col) {
    std::sort(col.begin(), col.end());
    // combine duplicates
    std::vector<std::pair<int, uint32_t>> c;
    for (auto& e : col) {
      if (!c.empty() && c.back().first == e.first) {
        c.back().second = F.add(c.back().second, e.second);
        if (!c.back().second) c.pop_back();
      } else if (e.second % F.p) {
        c.push_back({e.first, e.second % F.p});
      }
    }
    while (!c.empty()) {
      int r = c.back().first;
      auto it = pivot_of_row.find(r);
      if (it == pivot_of_row.end()) {
        uint32_t inv = F.inv(c.back().second);
        for (auto& e : c) e.second = F.mul(e.second, inv);
        pivot_of_row.emplace(r, std::move(c));
        ++rank;
        return;
      }
      axpy(F, c, F.neg(c.back().second), it->second);
    }
  }
};

// Rank of a sparse column set: first peel columns that own a row no other
// column touches (each such column is independent and its pivot row can be
// retired without changing the rest), then run Gaussian elimination on the
// residue. The peeling pass removes most of a Koszul differential in O(nnz).
long sparse_rank_peeling(const PrimeField& F,
                         std::vector<std::vector<std::pair<int, uint32_t>>> cols,
                         int nrows) {
  // combine duplicate rows within each column first
  for (auto& c : cols) {
    std::sort(c.begin(), c.end());
    std::vector<std::pair<int, uint32_t>> merged;
    for (auto& e : c) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second = F.add(merged.back().second, e.second % F.p);
        if (!merged.back().second) merged.pop_back();
      } else if (e.second % F.p) {
        merged.push_back({e.first, e.second % F.p});
      }
    }
    c = std::move(merged);
  }

  std::vector<int> row_count(nrows, 0);
  std::vector<std::vector<int>> row_cols(nrows);
  for (size_t k = 0; k < cols.size(); ++k)
    for (auto& [r, v] : cols[k]) {
      ++row_count[r];
      row_cols[r].push_back((int)k);
    }
  std::vector<char> dead_col(cols.size(), 0), dead_row(nrows, 0);
  std::vector<int> queue;
  for (int r = 0; r < nrows; ++r)
    if (row_count[r] == 1) queue.push_back(r);

  long rank = 0;
  while (!queue.empty()) {
    int r = queue.back();
    queue.pop_back();
    if (dead_row[r] || row_count[r] != 1) continue;
    int kc = -1;
    for (int k : row_cols[r])
      if (!dead_col[k]) kc = k;
    if (kc < 0) continue;
    ++rank;
    dead_col[kc] = 1;
    dead_row[r] = 1;
    for (auto& [rr, v] : cols[kc]) {
      if (dead_row[rr]) continue;
      if (--row_count[rr] == 1) queue.push_back(rr);
    }
  }

  SparseRank sr(F);
  for (size_t k = 0; k < cols.size(); ++k) {
    if (dead_col[k]) continue;
    std::vector<std::pair<int, uint32_t>> col;
    for (auto& [r, v] : cols[k])
      if (!dead_row[r]) col.push_back({r, v});
    sr.add_column(std::move(col));
  }
  return rank + sr.rank;
}

// ----- Schreyer frame ------------------------------------------------------

struct Frame {
  const Ring* R;
  std::vector<ResolutionLevel> levels;
  std::vector<std::vector<Monomial>> total;       // per level, per generator
  std::vector<std::vector<std::vector<int>>> path;

  // Compare module terms of F_{k+1}, whose components index level-k
  // generators; k = -1 means F_0 = S^1.
  int term_cmp(int k, const ModTerm& a, const ModTerm& b) const {
    if (k < 0) return mono_cmp(a.m, b.m, R->nvars, R->order);
    Monomial ta = mono_mul(a.m, total[k][a.comp]);
    Monomial tb = mono_mul(b.m, total[k][b.comp]);
    int c = mono_cmp(ta, tb, R->nvars, R->order);
    if (c) return c;
    const auto& pa = path[k][a.comp];
    const auto& pb = path[k][b.comp];
    for (size_t i = 0; i < pa.size() && i < pb.size(); ++i)
      if (pa[i] != pb[i]) return pa[i] < pb[i] ? 1 : -1;
    return 0;
  }

  ModPoly normalize(int k, std::vector<ModTerm> terms) const {
    std::sort(terms.begin(), terms.end(),
              [&](const ModTerm& a, const ModTerm& b) { return term_cmp(k, a, b) > 0; });
    ModPoly p;
    const PrimeField& F = R->field;
    for (auto& t : terms) {
      if (!p.t.empty() && p.t.back().comp == t.comp && p.t.back().m == t.m) {
        p.t.back().c = F.add(p.t.back().c, t.c % F.p);
        if (!p.t.back().c) p.t.pop_back();
      } else if (t.c % F.p) {
        p.t.push_back({t.c % F.p, t.comp, t.m});
      }
    }
    return p;
  }

  ModPoly sub_mul(int k, const ModPoly& a, uint32_t c, const Monomial& m,
                  const ModPoly& g) const {
    // a - c * m * g, merged under the level order
    const PrimeField& F = R->field;
    std::vector<ModTerm> terms = a.t;
    for (auto& t : g.t) terms.push_back({F.mul(F.neg(c), t.c), t.comp, mono_mul(t.m, m)});
    return normalize(k, std::move(terms));
  }
};

// Syzygies of levels[k].gens; result becomes levels[k+1].
ResolutionLevel syzygy_step(Frame& fr, int k, const Budget& budget, long& work) {
  const Ring& R = *fr.R;
  const PrimeField& F = R.field;
  auto& gens = fr.levels[k].gens;
  auto& degs = fr.levels[k].degs;
  int kprev = k - 1;  // module order context for F_k terms

  // group generator indices by lead component
  std::map<int, std::vector<int>> by_comp;
  for (size_t c = 0; c < gens.size(); ++c) by_comp[gens[c].lead().comp].push_back((int)c);

  struct Syz {
    ModPoly p;
    int deg;
  };
  std::vector<Syz> syzygies;

  for (auto& [comp, idxs] : by_comp) {
    for (size_t a = 0; a < idxs.size(); ++a) {
      for (size_t b = a + 1; b < idxs.size(); ++b) {
        int i = idxs[a], j = idxs[b];
        if (++work > budget.max_pairs)
          throw ResourceError("schreyer: syzygy pair budget exceeded");
        const Monomial& ui = gens[i].lead().m;
        const Monomial& uj = gens[j].lead().m;
        Monomial l = mono_lcm(ui, uj);
        uint32_t ci = F.inv(gens[i].lead().c);
        uint32_t cj = F.inv(gens[j].lead().c);
        std::vector<ModTerm> sig;
        sig.push_back({ci, i, mono_div(l, ui)});
        sig.push_back({F.neg(cj), j, mono_div(l, uj)});
        ModPoly s = fr.sub_mul(kprev, ModPoly{}, F.neg(ci), mono_div(l, ui), gens[i]);
        s = fr.sub_mul(kprev, s, cj, mono_div(l, uj), gens[j]);
        // full reduction; must reach zero since the level is a GB
        while (!s.is_zero()) {
          const ModTerm& lt = s.lead();
          int divisor = -1;
          for (size_t t = 0; t < gens.size(); ++t) {
            if (gens[t].lead().comp == lt.comp &&
                mono_divides(gens[t].lead().m, lt.m)) {
              divisor = (int)t;
              break;
            }
          }
          if (divisor < 0)
            throw std::logic_error("schreyer: S-pair does not reduce to zero");
          uint32_t c = F.mul(lt.c, F.inv(gens[divisor].lead().c));
          Monomial q = mono_div(lt.m, gens[divisor].lead().m);
          s = fr.sub_mul(kprev, s, c, q, gens[divisor]);
          sig.push_back({F.neg(c), divisor, q});
        }
        ModPoly syz = fr.normalize(k, std::move(sig));
        if (!syz.is_zero())
          syzygies.push_back({syz, degs[i] + l.deg - ui.deg});
      }
    }
  }

  // Minimalize leads: keep a generating GB of the syzygy module.
  std::vector<bool> keep(syzygies.size(), true);
  for (size_t a = 0; a < syzygies.size(); ++a) {
    if (!keep[a]) continue;
    for (size_t b = 0; b < syzygies.size(); ++b) {
      if (a == b || !keep[b]) continue;
      const ModTerm& la = syzygies[a].p.lead();
      const ModTerm& lb = syzygies[b].p.lead();
      if (la.comp == lb.comp && mono_divides(lb.m, la.m) &&
          (lb.m != la.m || b < a)) {
        keep[a] = false;
        break;
      }
    }
  }
  std::vector<Syz> kept;
  for (size_t a = 0; a < syzygies.size(); ++a)
    if (keep[a]) kept.push_back(std::move(syzygies[a]));
  // Deterministic order: lead component ascending, lead monomial descending.
  std::stable_sort(kept.begin(), kept.end(), [&](const Syz& x, const Syz& y) {
    if (x.p.lead().comp != y.p.lead().comp) return x.p.lead().comp < y.p.lead().comp;
    return mono_cmp(x.p.lead().m, y.p.lead().m, R.nvars, R.order) > 0;
  });

  ResolutionLevel next;
  for (auto& s : kept) {
    next.gens.push_back(std::move(s.p));
    next.degs.push_back(s.deg);
  }
  return next;
}

void push_meta(Frame& fr, int k) {
  // Schreyer data for level-k generators as the basis of F_{k+1}.
  auto& lvl = fr.levels[k];
  std::vector<Monomial> tot;
  std::vector<std::vector<int>> pth;
  for (size_t c = 0; c < lvl.gens.size(); ++c) {
    const ModTerm& lt = lvl.gens[c].lead();
    if (k == 0) {
      tot.push_back(lt.m);
      pth.push_back({(int)c});
    } else {
      tot.push_back(mono_mul(lt.m, fr.total[k - 1][lt.comp]));
      auto p = fr.path[k - 1][lt.comp];
      p.push_back((int)c);
      pth.push_back(std::move(p));
    }
  }
  fr.total.push_back(std::move(tot));
  fr.path.push_back(std::move(pth));
}

Frame build_frame(const Ideal& I, const Budget& budget, int max_levels) {
  const Ring& R = *I.ring;
  Frame fr;
  fr.R = &R;
  for (auto& g : I.gens)
    if (!g.is_zero() && !poly_is_homogeneous(g))
      throw std::invalid_argument("resolution: ideal must be homogeneous");

  auto gb = groebner(I, R.order, budget);
  ResolutionLevel lvl0;
  for (auto& g : gb) {
    if (g.lead().m.is_one())
      throw std::invalid_argument("resolution: unit ideal");
    ModPoly p;
    for (auto& t : g.t) p.t.push_back({t.c, 0, t.m});
    lvl0.gens.push_back(std::move(p));
    lvl0.degs.push_back(g.lead().m.deg);
  }
  fr.levels.push_back(std::move(lvl0));
  push_meta(fr, 0);

  long work = 0;
  for (int k = 0;; ++k) {
    if (fr.levels[k].gens.empty()) break;
    if (k >= max_levels)
      throw ResourceError("schreyer: resolution exceeded the level cap");
    ResolutionLevel next = syzygy_step(fr, k, budget, work);
    if (next.gens.empty()) break;
    fr.levels.push_back(std::move(next));
    push_meta(fr, k + 1);
  }
  return fr;
}

}  // namespace

ResolutionLevel first_syzygies(const Ideal& I, const Budget& budget) {
  const Ring& R = *I.ring;
  // The generator list itself must be a GB: its reduced GB lead ideal must be
  // generated by the given leads.
  std::vector<Poly> gens;
  for (auto& g : I.gens)
    if (!g.is_zero()) gens.push_back(poly_monic(R, poly_reorder(R, g, R.order)));
  auto gb = reduced_groebner(R, gens, R.order, budget);
  for (auto& g : gb) {
    bool covered = false;
    for (auto& h : gens)
      if (mono_divides(h.lead().m, g.lead().m)) covered = true;
    if (!covered)
      throw std::invalid_argument("first_syzygies: generators are not a Groebner basis");
  }
  if (gens.empty()) return {};

  Frame fr;
  fr.R = &R;
  ResolutionLevel lvl0;
  for (auto& g : gens) {
    ModPoly p;
    for (auto& t : g.t) p.t.push_back({t.c, 0, t.m});
    lvl0.gens.push_back(std::move(p));
    lvl0.degs.push_back(g.lead().m.deg);
  }
  fr.levels.push_back(std::move(lvl0));
  push_meta(fr, 0);
  long work = 0;
  return syzygy_step(fr, 0, budget, work);
}

SchreyerResolution schreyer_resolution(const Ideal& I, const Budget& budget) {
  Frame fr = build_frame(I, budget, 2 * I.ring->nvars);
  SchreyerResolution res;
  res.ring = I.ring;
  res.levels = std::move(fr.levels);
  return res;
}

BettiTable minimal_free_resolution(const Ideal& I, const Budget& budget) {
  BettiTable t;
  if (I.is_zero_ideal()) {
    t.set(0, 0, 1);
    return t;
  }
  const Ring& R = *I.ring;
  Frame fr = build_frame(I, budget, 2 * R.nvars);
  int L = (int)fr.levels.size();  // F_i for i = 1..L have bases levels[i-1]

  // Constant-strand ranks of each differential d_i : F_i -> F_{i-1},
  // per internal degree. d_1 hits F_0 (degree-0 target) and the generators
  // have positive degree, so r_1 = 0.
  // rank[i][j] for i in 2..L.
  std::map<std::pair<int, int>, long> rank;
  for (int i = 2; i <= L; ++i) {
    auto& cols = fr.levels[i - 1];
    auto& rows = fr.levels[i - 2];
    std::map<int, SparseRank> per_degree;
    for (size_t c = 0; c < cols.gens.size(); ++c) {
      int j = cols.degs[c];
      std::vector<std::pair<int, uint32_t>> col;
      for (auto& tm : cols.gens[c].t)
        if (tm.m.is_one() && rows.degs[tm.comp] == j) col.push_back({tm.comp, tm.c});
      auto it = per_degree.find(j);
      if (it == per_degree.end())
        it = per_degree.emplace(j, SparseRank(R.field)).first;
      it->second.add_column(std::move(col));
    }
    for (auto& [j, sr] : per_degree)
      if (sr.rank) rank[{i, j}] = sr.rank;
  }

  t.set(0, 0, 1);
  auto rk = [&](int i, int j) {
    auto it = rank.find({i, j});
    return it == rank.end() ? 0L : it->second;
  };
  for (int i = 1; i <= L; ++i) {
    std::map<int, long> counts;
    for (int d : fr.levels[i - 1].degs) ++counts[d];
    for (auto& [j, c] : counts) {
      long beta = c - rk(i, j) - rk(i + 1, j);
      if (beta < 0) throw std::logic_error("betti: negative rank bookkeeping");
      t.set(i, j, beta);
    }
  }
  return t;
}

BettiTable betti_of_ideal(const BettiTable& quotient_table) {
  BettiTable t;
  for (auto& [ij, v] : quotient_table.b)
    if (ij.first >= 1) t.set(ij.first - 1, ij.second, v);
  return t;
}

int regularity_quotient(const BettiTable& t) { return t.regularity(); }

int regularity_ideal(const Ideal& I, const BettiTable& t) {
  if (I.is_zero_ideal()) return 0;
  return t.regularity() + 1;
}

int proj_dim_quotient(const BettiTable& t) { return t.proj_dim(); }

int proj_dim_ideal(const BettiTable& t) { return t.proj_dim() - 1; }

// ----- Koszul oracle -------------------------------------------------------

namespace {

struct MdegKey {
  std::array<uint8_t, 16> a{};
  bool operator==(const MdegKey& o) const { return a == o.a; }
  bool operator<(const MdegKey& o) const { return a < o.a; }
};
struct MdegHash {
  size_t operator()(const MdegKey& k) const {
    size_t h = 1469598103934665603ull;
    for (auto v : k.a) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

struct MonoKey {
  std::array<uint8_t, kMaxVars> e{};
  bool operator==(const MonoKey& o) const { return e == o.e; }
};
struct MonoHash {
  size_t operator()(const MonoKey& k) const {
    size_t h = 1469598103934665603ull;
    for (auto v : k.e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

}  // namespace

namespace {

// Koszul homology of one variable-connected piece of the ideal, supported on
// the vertex set `verts`. Blocks are the Z^n multidegrees with support inside
// `verts` and total degree at most 2|verts| + 2.
BettiTable koszul_component(const Ring& R, const std::vector<Poly>& gb,
                            const std::vector<int>& verts) {
  int n = R.nvertices;
  int m = (int)verts.size();
  int jmax = 2 * m + 2;
  const PrimeField& F = R.field;

  std::vector<Monomial> leads;
  for (auto& g : gb) leads.push_back(g.lead().m);
  auto is_standard = [&](const Monomial& mo) {
    for (auto& l : leads)
      if (mono_divides(l, mo)) return false;
    return true;
  };

  // Standard monomial bases per multidegree, with index maps.
  std::unordered_map<MdegKey, std::vector<Monomial>, MdegHash> std_basis;
  std::unordered_map<MdegKey, std::unordered_map<MonoKey, int, MonoHash>, MdegHash> std_index;
  auto basis_of = [&](const MdegKey& a) -> const std::vector<Monomial>& {
    auto it = std_basis.find(a);
    if (it != std_basis.end()) return it->second;
    std::vector<Monomial> basis;
    std::function<void(int, Monomial&)> rec = [&](int k, Monomial& mo) {
      if (k == m) {
        if (is_standard(mo)) basis.push_back(mo);
        return;
      }
      int v = verts[k];
      for (int ux = 0; ux <= a.a[v - 1]; ++ux) {
        Monomial mm = mo;
        mm.exp[R.xvar(v)] = (uint8_t)ux;
        mm.exp[R.yvar(v)] = (uint8_t)(a.a[v - 1] - ux);
        mm.deg = mo.deg + a.a[v - 1];
        rec(k + 1, mm);
      }
    };
    Monomial m0;
    rec(0, m0);
    auto& idx = std_index[a];
    for (size_t k = 0; k < basis.size(); ++k) {
      MonoKey mk;
      mk.e = basis[k].exp;
      idx[mk] = (int)k;
    }
    return std_basis.emplace(a, std::move(basis)).first->second;
  };

  // Transition maps: multiplication by the variable in `slot` from the basis
  // at `a` to the basis at a + e_{vertex(slot)}, reduced to normal form.
  // Computed once per (a, slot) and shared by every Koszul subset.
  using Transition = std::vector<std::vector<std::pair<int, uint32_t>>>;
  struct TransHash {
    size_t operator()(const std::pair<MdegKey, int>& k) const {
      return MdegHash{}(k.first) * 31 + (size_t)k.second;
    }
  };
  std::unordered_map<std::pair<MdegKey, int>, Transition, TransHash> trans_cache;
  auto vertex_of_slot = [&](int s) { return s < n ? s + 1 : s - n + 1; };
  auto transition = [&](const MdegKey& a, int slot) -> const Transition& {
    auto key = std::make_pair(a, slot);
    auto it = trans_cache.find(key);
    if (it != trans_cache.end()) return it->second;
    auto& src = basis_of(a);
    MdegKey at = a;
    ++at.a[vertex_of_slot(slot) - 1];
    basis_of(at);
    auto& idx = std_index[at];
    Transition tr(src.size());
    for (size_t mi = 0; mi < src.size(); ++mi) {
      Monomial xm = mono_mul(src[mi], mono_var(slot));
      Poly nf;
      if (is_standard(xm)) {
        nf = Poly{{{1, xm}}};
      } else {
        nf = normal_form(R, poly_term(R, 1, xm), gb, R.order);
      }
      for (auto& tm : nf.t) {
        MonoKey mk;
        mk.e = tm.m.exp;
        auto iit = idx.find(mk);
        if (iit == idx.end())
          throw std::logic_error("koszul oracle: normal form not standard");
        tr[mi].push_back({iit->second, tm.c});
      }
    }
    return trans_cache.emplace(key, std::move(tr)).first->second;
  };

  // Vertex support of each GB element (multigraded, so the lead term carries
  // the full support).
  std::vector<uint32_t> gsupp;
  for (auto& g : gb) {
    uint32_t s = 0;
    for (int v : verts)
      if (g.lead().m.exp[R.xvar(v)] || g.lead().m.exp[R.yvar(v)]) s |= 1u << (v - 1);
    gsupp.push_back(s);
  }

  // A Tor block at multidegree a only involves monomials of multidegree <= a
  // componentwise, hence only GB elements supported inside supp(a). So the
  // block equals the corresponding block of the sub-ideal cut out by those
  // elements, and its homology must vanish for |a| > 2|supp(a)|. We therefore
  // group blocks by their exact support U and truncate each group at
  // |a| <= 2|U| + 2, keeping the two boundary layers as a tripwire.
  BettiTable t;
  t.b[{0, 0}] += 1;  // the empty-support block
  for (uint32_t umask = 1; umask < (1u << m); ++umask) {
    std::vector<int> uverts;
    for (int k = 0; k < m; ++k)
      if (umask & (1u << k)) uverts.push_back(verts[k]);
    int mu = (int)uverts.size();
    uint32_t uvbits = 0;
    for (int v : uverts) uvbits |= 1u << (v - 1);
    // Every vertex of U must touch a generator supported inside U; otherwise
    // some x_v, y_v act freely and all full-support blocks are exact.
    uint32_t covered = 0;
    for (auto s : gsupp)
      if ((s & ~uvbits) == 0) covered |= s;
    if (covered != uvbits) continue;
    int ujmax = std::min(2 * mu + 2, jmax);

    std::vector<int> vars;
    for (int v : uverts) vars.push_back(R.xvar(v));
    for (int v : uverts) vars.push_back(R.yvar(v));
    std::sort(vars.begin(), vars.end());
    int vcount = (int)vars.size();

    // Multidegrees with support exactly U and |a| <= ujmax.
    std::vector<MdegKey> all_mdegs;
    {
      std::function<void(int, int, MdegKey&)> rec = [&](int k, int left, MdegKey& a) {
        if (k == mu) {
          all_mdegs.push_back(a);
          return;
        }
        for (int v = 1; v <= left - (mu - 1 - k); ++v) {
          a.a[uverts[k] - 1] = (uint8_t)v;
          rec(k + 1, left - v, a);
        }
        a.a[uverts[k] - 1] = 0;
      };
      MdegKey a;
      if (ujmax >= mu) rec(0, ujmax, a);
    }

    for (auto& a : all_mdegs) {
      int adeg = 0;
      for (int v : uverts) adeg += a.a[v - 1];

    // Subsets of Koszul slots are tracked as local bitmasks over `vars`.
    // `offs[i][sub]` is the contiguous row/column base of the group (sub, r)
    // inside homological level i, giving O(1) row-id lookup during assembly.
    struct Group {
      uint32_t sub;
      MdegKey r;
      const std::vector<Monomial>* basis;
    };
    std::vector<std::vector<int>> offs(vcount + 1,
                                       std::vector<int>(1u << vcount, -1));
    std::vector<long> dims(vcount + 2, 0);
    std::vector<std::vector<Group>> subsets_by_i(vcount + 1);
    for (uint32_t sub = 0; sub < (1u << vcount); ++sub) {
      MdegKey r = a;
      bool ok = true;
      int i = 0;
      for (int b = 0; b < vcount && ok; ++b) {
        if (!(sub & (1u << b))) continue;
        int vx = vertex_of_slot(vars[b]) - 1;
        if (r.a[vx] == 0) {
          ok = false;
          break;
        }
        --r.a[vx];
        ++i;
      }
      if (!ok) continue;
      auto& basis = basis_of(r);
      if (basis.empty()) continue;
      offs[i][sub] = (int)dims[i];
      dims[i] += (long)basis.size();
      subsets_by_i[i].push_back({sub, r, &basis});
    }

    std::vector<long> ranks(vcount + 2, 0);
    for (int i = 1; i <= vcount; ++i) {
      if (dims[i] == 0 || dims[i - 1] == 0) continue;
      std::vector<std::vector<std::pair<int, uint32_t>>> cols;
      cols.reserve(dims[i]);
      for (auto& grp : subsets_by_i[i]) {
        auto& basis = *grp.basis;
        // per-slot data shared across the subset's columns
        struct Slot {
          int rowbase;
          const Transition* tr;
          bool negate;
        };
        std::vector<Slot> slots;
        int sign_pos = 0;
        for (int b = 0; b < vcount; ++b) {
          if (!(grp.sub & (1u << b))) continue;
          Slot sl;
          sl.rowbase = offs[i - 1][grp.sub & ~(1u << b)];
          sl.tr = &transition(grp.r, vars[b]);
          sl.negate = sign_pos % 2 != 0;
          slots.push_back(sl);
          ++sign_pos;
        }
        for (size_t mi = 0; mi < basis.size(); ++mi) {
          size_t nnz = 0;
          for (auto& sl : slots) nnz += (*sl.tr)[mi].size();
          std::vector<std::pair<int, uint32_t>> col;
          col.reserve(nnz);
          for (auto& sl : slots) {
            for (auto& [ti, c] : (*sl.tr)[mi])
              col.push_back({sl.rowbase + ti, sl.negate ? F.neg(c) : c});
          }
          cols.push_back(std::move(col));
        }
      }
      ranks[i] = sparse_rank_peeling(F, std::move(cols), (int)dims[i - 1]);
    }
    for (int i = 0; i <= vcount; ++i) {
      long h = dims[i] - ranks[i] - ranks[i + 1];
      if (h < 0) throw std::logic_error("koszul oracle: negative homology rank");
      if (h) {
        if (adeg > 2 * mu)
          throw ResourceError("koszul oracle: homology at the degree truncation boundary");
        t.b[{i, adeg}] += h;
      }
    }
    }
  }
  return t;
}

BettiTable tensor_betti(const BettiTable& a, const BettiTable& b) {
  BettiTable t;
  for (auto& [ij1, v1] : a.b)
    for (auto& [ij2, v2] : b.b)
      t.b[{ij1.first + ij2.first, ij1.second + ij2.second}] += v1 * v2;
  return t;
}

}  // namespace

BettiTable koszul_betti_oracle(const Ideal& I, const Budget& budget) {
  const Ring& R = *I.ring;
  int n = R.nvertices;
  if (n == 0) throw std::invalid_argument("koszul oracle: needs an edge ring");
  if (R.nvars > 10) throw ResourceError("koszul oracle: more than 10 variables");
  BettiTable t;
  t.set(0, 0, 1);
  if (I.is_zero_ideal()) return t;
  auto gb = groebner(I, R.order, budget);

  auto mdeg_of = [&](const Monomial& m) {
    MdegKey k;
    for (int i = 1; i <= n; ++i)
      k.a[i - 1] = (uint8_t)(m.exp[R.xvar(i)] + m.exp[R.yvar(i)]);
    return k;
  };
  for (auto& g : gb) {
    MdegKey k0 = mdeg_of(g.t[0].m);
    for (auto& tm : g.t)
      if (!(mdeg_of(tm.m) == k0))
        throw std::invalid_argument("koszul oracle: ideal is not vertex-multigraded");
  }

  // Partition the GB by vertex support: variable-disjoint pieces contribute
  // by tensor product, so each piece is resolved in its own vertex set.
  std::vector<int> piece(n + 1, 0);
  int npieces = 0;
  auto support = [&](const Poly& g) {
    uint32_t s = 0;
    for (auto& tm : g.t)
      for (int v = 1; v <= n; ++v)
        if (tm.m.exp[R.xvar(v)] || tm.m.exp[R.yvar(v)]) s |= 1u << (v - 1);
    return s;
  };
  std::vector<uint32_t> supports;
  for (auto& g : gb) supports.push_back(support(g));
  std::vector<int> gpiece(gb.size(), 0);
  for (size_t g = 0; g < gb.size(); ++g) {
    if (gpiece[g]) continue;
    ++npieces;
    uint32_t acc = supports[g];
    gpiece[g] = npieces;
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t h = 0; h < gb.size(); ++h) {
        if (gpiece[h] || !(supports[h] & acc)) continue;
        gpiece[h] = npieces;
        acc |= supports[h];
        grew = true;
      }
    }
    for (int v = 1; v <= n; ++v)
      if (acc & (1u << (v - 1))) piece[v] = npieces;
  }

  for (int k = 1; k <= npieces; ++k) {
    std::vector<Poly> sub_gb;
    for (size_t g = 0; g < gb.size(); ++g)
      if (gpiece[g] == k) sub_gb.push_back(gb[g]);
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v)
      if (piece[v] == k) verts.push_back(v);
    t = tensor_betti(t, koszul_component(R, sub_gb, verts));
  }
  return t;
}

// ----- Hilbert numerator ---------------------------------------------------

namespace {

std::vector<long long> poly1_sub_shift(const std::vector<long long>& A,
                                       const std::vector<long long>& B, int shift) {
  std::vector<long long> r = A;
  if (r.size() < B.size() + shift) r.resize(B.size() + shift, 0);
  for (size_t k = 0; k < B.size(); ++k) r[k + shift] -= B[k];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> g) {
  std::vector<Monomial> out;
  for (size_t i = 0; i < g.size(); ++i) {
    bool red = false;
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      if (mono_divides(g[j], g[i]) && (g[j] != g[i] || j < i)) {
        red = true;
        break;
      }
    }
    if (!red) out.push_back(g[i]);
  }
  return out;
}

std::vector<long long> hilb_rec(std::vector<Monomial> gens, long& nodes) {
  if (++nodes > 2000000) throw ResourceError("hilbert_numerator: node budget exceeded");
  if (gens.empty()) return {1};
  for (auto& g : gens)
    if (g.is_one()) return {};
  Monomial g = gens.back();
  gens.pop_back();
  std::vector<long long> A = hilb_rec(gens, nodes);
  std::vector<Monomial> colon;
  for (auto& m : gens) {
    Monomial q;
    int d = 0;
    for (int v = 0; v < kMaxVars; ++v) {
      q.exp[v] = (uint8_t)std::max(0, (int)m.exp[v] - (int)g.exp[v]);
      d += q.exp[v];
    }
    q.deg = d;
    colon.push_back(q);
  }
  colon = minimalize_monomials(std::move(colon));
  std::vector<long long> B = hilb_rec(std::move(colon), nodes);
  return poly1_sub_shift(A, B, g.deg);
}

}  // namespace

std::vector<long long> hilbert_numerator(const Ideal& I, const Budget& budget) {
  const Ring& R = *I.ring;
  auto gb = groebner(I, R.order, budget);
  std::vector<Monomial> leads;
  for (auto& g : gb) leads.push_back(g.lead().m);
  long nodes = 0;
  auto r = hilb_rec(std::move(leads), nodes);
  if (r.empty()) r = {0};
  return r;
}

std::string betti_to_json(const BettiTable& t) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [ij, v] : t.b) {
    if (!first) os << ",";
    os << "\"" << ij.first << "," << ij.second << "\":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string betti_to_triangle(const BettiTable& t) {
  int pd = t.proj_dim(), reg = t.regularity();
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= pd; ++i) os << i << "\t";
  os << "\n";
  for (int r = 0; r <= reg; ++r) {
    os << r << ":    ";
    for (int i = 0; i <= pd; ++i) {
      long v = t.get(i, i + r);
      if (v)
        os << v << "\t";
      else
        os << ".\t";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace bei
