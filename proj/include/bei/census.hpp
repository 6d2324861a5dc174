#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bei/binomial_edge.hpp"
#include "bei/resolution.hpp"

namespace bei {

enum class Outcome { Pass, Fail, Skipped, Resource };

struct Verdict {
  std::string name;
  Outcome outcome = Outcome::Pass;
  std::string detail;  // case tags, skip reasons, or failure evidence
};

// Shared Betti-table memo for one characteristic; keyed by isomorphism
// class so the census never resolves the same graph twice.
struct BettiCache {
  uint32_t p = kDefaultChar;
  std::map<std::pair<int, uint64_t>, BettiTable> table;

  explicit BettiCache(uint32_t prime = kDefaultChar) : p(prime) {}

  const BettiTable& quotient_betti(const Graph& G);
  BettiTable ideal_betti(const Graph& G);  // beta_{i,j}(J_G)
  int reg_quotient_of(const Graph& G);
  int reg_ideal_of(const Graph& G);  // 0 when J_G = (0)
  int pd_quotient_of(const Graph& G);
};

struct CheckReport {
  std::string graph6;
  uint64_t canonical = 0;
  int n = 0;
  uint32_t p = kDefaultChar;

  bool connected = false, chordal = false, closed = false;
  bool block = false, generalized_block = false;
  bool path = false, cycle = false, forest = false;
  std::optional<std::vector<int>> multipartite;

  int cliques = 0;        // c(G)
  int induced_path = 0;   // ell(G)
  int cutsets = 0;        // |C(G)|
  int reg_quotient = 0, reg_ideal = 0, pd = 0, dim = 0;
  BettiTable betti;       // of S/J_G

  std::vector<Verdict> verdicts;
};

Verdict check_matsuda_murai(const Graph& G, BettiCache& C);
// Connected non-paths only (others skipped); tagged with the main-theorem
// cases that apply: simplicial vertex, cut edge, join, cycle.
Verdict check_conjecture_A(const Graph& G, BettiCache& C);
// All graphs; tagged with the proven routes (closed, generalized block,
// reduced components all closed-or-generalized-block).
Verdict check_conjecture_B(const Graph& G, BettiCache& C);
// Cut-edge mapping-cone bounds; equalities when e is a free cut edge.
Verdict check_cut_edge_recursion(const Graph& G, std::pair<int, int> e, BettiCache& C);
Verdict check_reg_reduced(const Graph& G, BettiCache& C);
Verdict check_closed_reg_formula(const Graph& G, BettiCache& C);
Verdict check_join_theorem(const Graph& G1, const Graph& G2, BettiCache& C);
Verdict check_forest_linear_betti(const Graph& G, BettiCache& C);

struct CensusConfig {
  uint32_t p = kDefaultChar;
  std::string suite = "all";  // all, conjA, conjB, colon, join, reduced
  int colon_n_max = 5;        // ideal-equality colon checks are capped here
};

struct CensusSummary {
  int passed = 0, failed = 0, skipped = 0, resource = 0;
  std::vector<CheckReport> reports;
};

CheckReport report_for(const Graph& G, const CensusConfig& cfg, BettiCache& C);
CensusSummary run_census(const std::vector<Graph>& graphs, const CensusConfig& cfg);

std::string summary_to_json(const CensusSummary& s, const CensusConfig& cfg);
std::string summary_to_csv(const CensusSummary& s);
std::string summary_to_text(const CensusSummary& s);

}  // namespace bei
