#include "bei/census.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace bei {

namespace {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
    case Outcome::Resource: return "resource_error";
  }
  return "?";
}

Verdict pass(std::string name, std::string detail = "") {
  return {std::move(name), Outcome::Pass, std::move(detail)};
}
Verdict fail(std::string name, std::string detail) {
  return {std::move(name), Outcome::Fail, std::move(detail)};
}
Verdict skipped(std::string name, std::string reason) {
  return {std::move(name), Outcome::Skipped, std::move(reason)};
}

// All (i,j) appearing in either table.
std::vector<std::pair<int, int>> support(const BettiTable& a, const BettiTable& b) {
  std::vector<std::pair<int, int>> s;
  for (auto& [ij, v] : a.b) s.push_back(ij);
  for (auto& [ij, v] : b.b) s.push_back(ij);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool is_join_of_two(const Graph& G, Graph* G1, Graph* G2) {
  if (G.n < 2) return false;
  Graph co = complement(G);
  auto comps = connected_components(co);
  if (comps.size() < 2) return false;
  VertexSet rest;
  for (size_t k = 1; k < comps.size(); ++k) rest.bits |= comps[k].bits;
  *G1 = induced_subgraph(G, comps[0]);
  *G2 = induced_subgraph(G, rest);
  return true;
}

}  // namespace

const BettiTable& BettiCache::quotient_betti(const Graph& G) {
  auto key = std::make_pair(G.n, canonical_key(G));
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  Ring R = Ring::edge_ring(G.n, p);
  Ideal J = binomial_edge_ideal(R, G);
  return table.emplace(key, minimal_free_resolution(J)).first->second;
}

BettiTable BettiCache::ideal_betti(const Graph& G) {
  return betti_of_ideal(quotient_betti(G));
}

int BettiCache::reg_quotient_of(const Graph& G) { return quotient_betti(G).regularity(); }

int BettiCache::reg_ideal_of(const Graph& G) {
  if (G.edge_count() == 0) return 0;
  return reg_quotient_of(G) + 1;
}

int BettiCache::pd_quotient_of(const Graph& G) { return quotient_betti(G).proj_dim(); }

Verdict check_matsuda_murai(const Graph& G, BettiCache& C) {
  int r = C.reg_ideal_of(G);
  if (r <= G.n) return pass("matsuda-murai", "reg=" + std::to_string(r));
  return fail("matsuda-murai", "reg=" + std::to_string(r) + " > n=" + std::to_string(G.n));
}

Verdict check_conjecture_A(const Graph& G, BettiCache& C) {
  if (!is_connected(G)) return skipped("conjecture-A", "disconnected");
  if (is_path_graph(G)) return skipped("conjecture-A", "path (excluded by hypothesis)");
  std::string tags;
  if (!simplicial_vertices(G).empty()) tags += " simplicial-vertex";
  if (!cut_edges(G).empty()) tags += " cut-edge";
  Graph a, b;
  if (is_join_of_two(G, &a, &b)) tags += " join";
  if (is_cycle_graph(G)) tags += " cycle";
  int r = C.reg_ideal_of(G);
  std::string d = "reg=" + std::to_string(r) + (tags.empty() ? " no-main-case" : tags);
  if (r <= G.n - 1) return pass("conjecture-A", d);
  return fail("conjecture-A", d + " exceeds n-1");
}

Verdict check_conjecture_B(const Graph& G, BettiCache& C) {
  int c = (int)maximal_cliques(G).facets.size();
  int r = C.reg_ideal_of(G);
  std::string tags;
  if (is_closed(G).closed) tags += " closed";
  if (is_generalized_block_graph(G)) tags += " generalized-block";
  bool reduced_route = true;
  Graph RG = reduced_graph(G);
  for (auto& comp : connected_components(RG)) {
    Graph H = induced_subgraph(RG, comp);
    if (!is_closed(H).closed && !is_generalized_block_graph(H)) reduced_route = false;
  }
  if (reduced_route) tags += " reduced-components-route";
  if (r == c + 1) tags += " sharp";
  std::string d = "reg=" + std::to_string(r) + " c=" + std::to_string(c) + tags;
  if (r <= c + 1) return pass("conjecture-B", d);
  return fail("conjecture-B", d + " exceeds c+1");
}

Verdict check_cut_edge_recursion(const Graph& G, std::pair<int, int> e, BettiCache& C) {
  auto ce = cut_edges(G);
  std::string name = "cut-edge-recursion {" + std::to_string(e.first) + "," +
                     std::to_string(e.second) + "}";
  if (std::find(ce.begin(), ce.end(), e) == ce.end())
    return skipped(name, "not a cut edge");

  Graph D = G;
  D.remove_edge(e.first, e.second);
  Graph H = ge_closure(D, e.first, e.second);

  const BettiTable& qG = C.quotient_betti(G);
  const BettiTable& qD = C.quotient_betti(D);
  BettiTable bG = betti_of_ideal(qG);
  BettiTable bD = betti_of_ideal(qD);
  BettiTable bH = C.ideal_betti(H);
  bool d_nonzero = D.edge_count() > 0;
  std::vector<std::string> problems;

  // colon1(a), ideal indexing, i,j >= 1
  for (auto& [i, j] : support(bG, bD))
    if (i >= 1 && bG.get(i, j) > bD.get(i, j) + bH.get(i - 1, j - 2))
      problems.push_back("colon1(a) at (" + std::to_string(i) + "," + std::to_string(j) + ")");

  // colon1(b,c): quotient forms hold unconditionally, ideal forms need J_D != 0
  if (qG.proj_dim() > std::max(qD.proj_dim(), C.quotient_betti(H).proj_dim() + 1))
    problems.push_back("colon1(b) quotient pd bound");
  if (qG.regularity() > std::max(qD.regularity(), C.reg_quotient_of(H) + 2))
    problems.push_back("colon1(c) quotient reg bound");
  if (d_nonzero) {
    if (bG.proj_dim() > std::max(bD.proj_dim(), bH.proj_dim() + 1))
      problems.push_back("colon1(b) ideal pd bound");
    if (C.reg_ideal_of(G) > std::max(C.reg_ideal_of(D), C.reg_ideal_of(H) + 1))
      problems.push_back("colon1(c) ideal reg bound");
  }

  // linear strand, cut edge: inequality
  for (auto& [i, j] : support(bG, bD))
    if (i >= 1 && j == i + 2 && bG.get(i, j) > bD.get(i, j))
      problems.push_back("linear-strand bound at i=" + std::to_string(i));

  auto fce = free_cut_edges(G);
  bool free_edge = std::find(fce.begin(), fce.end(), e) != fce.end();
  if (free_edge) {
    for (auto& [i, j] : support(qG, qD)) {
      if (i < 1) continue;
      if (qG.get(i, j) != qD.get(i, j) + qD.get(i - 1, j - 2))
        problems.push_back("colon2(a) quotient equality at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    }
    if (qG.proj_dim() != qD.proj_dim() + 1) problems.push_back("colon2(b) quotient pd");
    if (qG.regularity() != qD.regularity() + 1) problems.push_back("colon2(c) quotient reg");
    if (d_nonzero) {
      for (auto& [i, j] : support(bG, bD))
        if (i >= 1 && bG.get(i, j) != bD.get(i, j) + bD.get(i - 1, j - 2))
          problems.push_back("colon2(a) ideal equality at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
      if (bG.proj_dim() != bD.proj_dim() + 1) problems.push_back("colon2(b) ideal pd");
      if (C.reg_ideal_of(G) != C.reg_ideal_of(D) + 1) problems.push_back("colon2(c) ideal reg");
      for (auto& [i, j] : support(bG, bD))
        if (i >= 1 && j == i + 2 && bG.get(i, j) != bD.get(i, j))
          problems.push_back("linear-strand equality at i=" + std::to_string(i));
    }
  }

  std::string tag = free_edge ? "free-cut-edge" : "cut-edge";
  if (problems.empty()) return pass(name, tag);
  std::string d = tag;
  for (auto& s : problems) d += "; " + s;
  return fail(name, d);
}

Verdict check_reg_reduced(const Graph& G, BettiCache& C) {
  if (!is_connected(G)) return skipped("reg-reduced", "disconnected");
  Graph RG = reduced_graph(G);
  int fce = (int)free_cut_edges(G).size();
  auto comps = connected_components(RG);
  bool all_have_edges = true;
  int sum_ideal = 0, sum_quotient = 0;
  for (auto& comp : comps) {
    Graph H = induced_subgraph(RG, comp);
    if (H.edge_count() == 0) all_have_edges = false;
    sum_ideal += C.reg_ideal_of(H);
    sum_quotient += C.reg_quotient_of(H);
  }
  int rq = C.reg_quotient_of(G);
  if (rq != sum_quotient + fce)
    return fail("reg-reduced", "quotient identity: reg(S/J_G)=" + std::to_string(rq) +
                                   " vs sum+" + std::to_string(fce));
  if (all_have_edges) {
    int r = C.reg_ideal_of(G);
    if (r != sum_ideal)
      return fail("reg-reduced", "reg(J_G)=" + std::to_string(r) +
                                     " != sum reg(J_{R_i})=" + std::to_string(sum_ideal));
    return pass("reg-reduced", "reg=" + std::to_string(r) + " over " +
                                   std::to_string(comps.size()) + " components");
  }
  return pass("reg-reduced", "degenerate (edgeless component); quotient identity holds");
}

Verdict check_closed_reg_formula(const Graph& G, BettiCache& C) {
  if (!is_connected(G)) return skipped("closed-reg-formula", "disconnected");
  if (G.edge_count() == 0) return skipped("closed-reg-formula", "no edges (J_G = 0)");
  Graph RG = reduced_graph(G);
  if (!is_closed(RG).closed) return skipped("closed-reg-formula", "R(G) not closed");
  auto comps = connected_components(RG);
  int q = (int)comps.size();
  int fce = (int)free_cut_edges(G).size();
  int sum_l = 0;
  for (auto& comp : comps) sum_l += longest_induced_path_length(induced_subgraph(RG, comp));
  int r = C.reg_ideal_of(G);
  std::string agree = (r == sum_l + fce) ? "printed-form agrees" : "printed-form disagrees";
  std::string d = "reg=" + std::to_string(r) + " sum_l=" + std::to_string(sum_l) +
                  " q=" + std::to_string(q) + "; " + agree +
                  " (sum_l+fce=" + std::to_string(sum_l + fce) + ")";
  if (r == sum_l + q) return pass("closed-reg-formula", d);
  return fail("closed-reg-formula", d);
}

Verdict check_join_theorem(const Graph& G1, const Graph& G2, BettiCache& C) {
  Graph G = join(G1, G2);
  int n = G.n;
  int r1 = C.reg_ideal_of(G1), r2 = C.reg_ideal_of(G2);
  int rj = C.reg_ideal_of(G);
  std::vector<std::string> problems;

  if (is_complete(G1) && is_complete(G2)) {
    if (rj != 2) problems.push_back("complete join: reg != 2");
  } else {
    int expect = std::max({r1, r2, 3});
    if (rj != expect)
      problems.push_back("reg=" + std::to_string(rj) + " != max{" + std::to_string(r1) +
                         "," + std::to_string(r2) + ",3}");
  }
  if (!is_path_graph(G) || n >= 4) {
    if (rj > n - 1) problems.push_back("ConjA-join: reg > n-1");
  }
  int c1 = (int)maximal_cliques(G1).facets.size();
  int c2 = (int)maximal_cliques(G2).facets.size();
  int cj = (int)maximal_cliques(G).facets.size();
  if (cj != c1 * c2) problems.push_back("c(G1*G2) != c(G1)c(G2)");
  if (r1 <= c1 + 1 && r2 <= c2 + 1 && rj > cj + 1)
    problems.push_back("ConjB-join propagation");
  auto sig = complete_multipartite_signature(G);
  if (sig && !is_complete(G) && rj != 3)
    problems.push_back("reg-t-partite: reg != 3");

  std::string d = "reg=" + std::to_string(rj) + " parts reg " + std::to_string(r1) + "," +
                  std::to_string(r2);
  if (problems.empty()) return pass("join-theorem", d);
  for (auto& s : problems) d += "; " + s;
  return fail("join-theorem", d);
}

Verdict check_forest_linear_betti(const Graph& G, BettiCache& C) {
  if (!is_forest(G)) return skipped("forest-linear-betti", "not a forest");
  if (G.n < 4) return skipped("forest-linear-betti", "n < 4");
  BettiTable b = C.ideal_betti(G);
  for (auto& [ij, v] : b.b)
    if (ij.first == 1 && ij.second > G.n)
      return fail("forest-linear-betti",
                  "beta_{1," + std::to_string(ij.second) + "} = " + std::to_string(v));
  return pass("forest-linear-betti");
}

namespace {

Verdict clamp_resource(const std::function<Verdict()>& f, const std::string& name) {
  try {
    return f();
  } catch (const ResourceError& ex) {
    return {name, Outcome::Resource, ex.what()};
  }
}

}  // namespace

CheckReport report_for(const Graph& G, const CensusConfig& cfg, BettiCache& C) {
  CheckReport r;
  r.graph6 = to_graph6(G);
  r.canonical = G.n <= 7 ? canonical_key(G) : 0;
  r.n = G.n;
  r.p = cfg.p;
  r.connected = is_connected(G);
  r.chordal = is_chordal(G).chordal;
  r.closed = is_closed(G).closed;
  r.block = is_block_graph(G);
  r.generalized_block = is_generalized_block_graph(G);
  r.path = is_path_graph(G);
  r.cycle = is_cycle_graph(G);
  r.forest = is_forest(G);
  r.multipartite = complete_multipartite_signature(G);
  r.cliques = (int)maximal_cliques(G).facets.size();
  r.induced_path = longest_induced_path_length(G);
  r.cutsets = (int)cut_sets(G).sets.size();

  Ring R = Ring::edge_ring(G.n, cfg.p);
  r.betti = C.quotient_betti(G);
  r.reg_quotient = r.betti.regularity();
  r.reg_ideal = C.reg_ideal_of(G);
  r.pd = r.betti.proj_dim();
  r.dim = krull_dim(binomial_edge_ideal(R, G));

  const std::string& s = cfg.suite;
  bool all = s == "all";
  if (all || s == "conjA") {
    r.verdicts.push_back(clamp_resource([&] { return check_matsuda_murai(G, C); },
                                        "matsuda-murai"));
    r.verdicts.push_back(clamp_resource([&] { return check_conjecture_A(G, C); },
                                        "conjecture-A"));
  }
  if (all || s == "conjB")
    r.verdicts.push_back(clamp_resource([&] { return check_conjecture_B(G, C); },
                                        "conjecture-B"));
  if (all || s == "colon") {
    for (auto& e : cut_edges(G)) {
      std::string name = "cut-edge-recursion {" + std::to_string(e.first) + "," +
                         std::to_string(e.second) + "}";
      r.verdicts.push_back(
          clamp_resource([&] { return check_cut_edge_recursion(G, e, C); }, name));
    }
    if (G.n <= cfg.colon_n_max) {
      for (auto& e : G.edges()) {
        std::string name = "colon-identity {" + std::to_string(e.first) + "," +
                           std::to_string(e.second) + "}";
        r.verdicts.push_back(clamp_resource(
            [&]() -> Verdict {
              CheckEvidence ev = colon_identity_check(R, G, e.first, e.second);
              std::string d;
              for (auto& note : ev.notes) d += (d.empty() ? "" : "; ") + note;
              return {name, ev.ok ? Outcome::Pass : Outcome::Fail, d};
            },
            name));
      }
    }
  }
  if (all || s == "reduced") {
    r.verdicts.push_back(clamp_resource([&] { return check_reg_reduced(G, C); },
                                        "reg-reduced"));
    r.verdicts.push_back(clamp_resource([&] { return check_closed_reg_formula(G, C); },
                                        "closed-reg-formula"));
    r.verdicts.push_back(clamp_resource([&] { return check_forest_linear_betti(G, C); },
                                        "forest-linear-betti"));
  }
  if (all || s == "join") {
    Graph a, b;
    if (is_join_of_two(G, &a, &b))
      r.verdicts.push_back(clamp_resource([&] { return check_join_theorem(a, b, C); },
                                          "join-theorem"));
    else
      r.verdicts.push_back(skipped("join-theorem", "not a join of two graphs"));
  }
  return r;
}

CensusSummary run_census(const std::vector<Graph>& graphs, const CensusConfig& cfg) {
  BettiCache cache(cfg.p);
  CensusSummary sum;
  for (auto& G : graphs) {
    CheckReport rep = report_for(G, cfg, cache);
    for (auto& v : rep.verdicts) {
      switch (v.outcome) {
        case Outcome::Pass: ++sum.passed; break;
        case Outcome::Fail: ++sum.failed; break;
        case Outcome::Skipped: ++sum.skipped; break;
        case Outcome::Resource: ++sum.resource; break;
      }
    }
    sum.reports.push_back(std::move(rep));
  }
  return sum;
}

std::string summary_to_json(const CensusSummary& s, const CensusConfig& cfg) {
  nlohmann::ordered_json root;
  root["schema"] = "bei-report/1";
  root["char"] = cfg.p;
  root["suite"] = cfg.suite;
  root["counts"] = {{"pass", s.passed},
                    {"fail", s.failed},
                    {"skipped", s.skipped},
                    {"resource_error", s.resource}};
  auto& reports = root["reports"] = nlohmann::ordered_json::array();
  for (auto& r : s.reports) {
    nlohmann::ordered_json jr;
    jr["graph6"] = r.graph6;
    jr["canonical"] = r.canonical;
    jr["n"] = r.n;
    jr["char"] = r.p;
    jr["flags"] = {{"connected", r.connected},
                   {"chordal", r.chordal},
                   {"closed", r.closed},
                   {"block", r.block},
                   {"generalized_block", r.generalized_block},
                   {"path", r.path},
                   {"cycle", r.cycle},
                   {"forest", r.forest}};
    if (r.multipartite)
      jr["multipartite"] = *r.multipartite;
    else
      jr["multipartite"] = nullptr;
    jr["invariants"] = {{"cliques", r.cliques},
                        {"induced_path", r.induced_path},
                        {"cutsets", r.cutsets},
                        {"reg_quotient", r.reg_quotient},
                        {"reg_ideal", r.reg_ideal},
                        {"pd", r.pd},
                        {"dim", r.dim}};
    nlohmann::ordered_json betti;
    for (auto& [ij, v] : r.betti.b)
      betti[std::to_string(ij.first) + "," + std::to_string(ij.second)] = v;
    jr["betti"] = betti;
    auto& verdicts = jr["verdicts"] = nlohmann::ordered_json::array();
    for (auto& v : r.verdicts)
      verdicts.push_back({{"check", v.name},
                          {"outcome", outcome_name(v.outcome)},
                          {"detail", v.detail}});
    reports.push_back(std::move(jr));
  }
  return root.dump(2);
}

std::string summary_to_csv(const CensusSummary& s) {
  std::ostringstream os;
  os << "graph6,n,check,outcome,detail\n";
  for (auto& r : s.reports) {
    for (auto& v : r.verdicts) {
      std::string d = v.detail;
      std::replace(d.begin(), d.end(), ',', ';');
      os << r.graph6 << "," << r.n << "," << v.name << "," << outcome_name(v.outcome)
         << "," << d << "\n";
    }
  }
  return os.str();
}

std::string summary_to_text(const CensusSummary& s) {
  std::ostringstream os;
  for (auto& r : s.reports) {
    os << r.graph6 << " (n=" << r.n << ", reg=" << r.reg_ideal << ", c=" << r.cliques
       << ", pd=" << r.pd << ", dim=" << r.dim << ")\n";
    for (auto& v : r.verdicts) {
      os << "  [" << outcome_name(v.outcome) << "] " << v.name;
      if (!v.detail.empty()) os << " - " << v.detail;
      os << "\n";
    }
  }
  os << "pass=" << s.passed << " fail=" << s.failed << " skipped=" << s.skipped
     << " resource=" << s.resource << "\n";
  return os.str();
}

}  // namespace bei
