#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bei/census.hpp"

using namespace bei;

namespace {

// Accepts a graph6 string, an adjacency-text string ("n; i j; ..."), or a
// path to a file whose first line is either format.
Graph load_graph(const std::string& arg) {
  std::string text = arg;
  std::ifstream in(arg);
  if (in.good()) {
    std::getline(in, text);
  }
  if (text.find(';') != std::string::npos) return from_adjacency_text(text);
  return from_graph6(text);
}

std::vector<Graph> load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(line.find(';') != std::string::npos ? from_adjacency_text(line)
                                                         : from_graph6(line));
  }
  return graphs;
}

uint32_t default_char() {
  if (const char* env = std::getenv("BEI_CHAR")) return (uint32_t)std::stoul(env);
  return kDefaultChar;
}

int finish(const CensusSummary& sum, const CensusConfig& cfg, const std::string& format) {
  if (format == "json")
    std::cout << summary_to_json(sum, cfg) << "\n";
  else if (format == "csv")
    std::cout << summary_to_csv(sum);
  else
    std::cout << summary_to_text(sum);
  return sum.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bei: binomial edge ideal laboratory"};
  app.require_subcommand(1);
  uint32_t p = default_char();
  app.add_option("--char", p, "field characteristic (odd prime)");

  std::string graph_arg, edge_arg, format = "text", suite = "all", file_arg;
  int n_max = 5;

  auto* classify = app.add_subcommand("classify", "classification flags of a graph");
  classify->add_option("graph", graph_arg)->required();

  auto* ideal_cmd = app.add_subcommand("ideal", "generators and reduced GB of J_G");
  ideal_cmd->add_option("graph", graph_arg)->required();

  auto* primes = app.add_subcommand("primes", "cut sets and minimal primes of J_G");
  primes->add_option("graph", graph_arg)->required();

  auto* betti = app.add_subcommand("betti", "graded Betti table of S/J_G");
  betti->add_option("graph", graph_arg)->required();

  auto* reg = app.add_subcommand("reg", "regularity, pd, and dimension");
  reg->add_option("graph", graph_arg)->required();

  auto* colon = app.add_subcommand("colon", "colon-ideal structure at an edge");
  colon->add_option("graph", graph_arg)->required();
  colon->add_option("--edge", edge_arg, "edge i,j")->required();

  auto* verify = app.add_subcommand("verify", "run theorem checks on all small graphs");
  verify->add_option("--suite", suite, "all, conjA, conjB, colon, join, reduced");
  verify->add_option("--n-max", n_max, "largest vertex count (<= 7)");
  verify->add_option("--format", format, "json, csv, text");

  auto* census = app.add_subcommand("census", "run all checks on a graph6 file");
  census->add_option("file", file_arg)->required();
  census->add_option("--format", format, "json, csv, text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed() || betti->parsed() || reg->parsed()) {
      Graph G = load_graph(graph_arg);
      CensusConfig cfg{p, "none", 5};
      BettiCache cache(p);
      CheckReport r = report_for(G, cfg, cache);
      if (classify->parsed()) {
        CensusSummary s;
        s.reports.push_back(r);
        std::cout << summary_to_json(s, cfg) << "\n";
      } else if (betti->parsed()) {
        std::cout << betti_to_triangle(r.betti) << betti_to_json(r.betti) << "\n";
      } else {
        std::cout << "reg(S/J) = " << r.reg_quotient << "\nreg(J) = " << r.reg_ideal
                  << "\npd(S/J) = " << r.pd << "\ndim(S/J) = " << r.dim << "\n";
      }
      return 0;
    }
    if (ideal_cmd->parsed()) {
      Graph G = load_graph(graph_arg);
      Ring R = Ring::edge_ring(G.n, p);
      Ideal J = binomial_edge_ideal(R, G);
      std::cout << "generators:\n";
      for (auto& g : J.gens) std::cout << "  " << poly_to_string(R, g) << "\n";
      std::cout << "reduced GB (degrevlex):\n";
      for (auto& g : groebner(J, R.order)) std::cout << "  " << poly_to_string(R, g) << "\n";
      return 0;
    }
    if (primes->parsed()) {
      Graph G = load_graph(graph_arg);
      Ring R = Ring::edge_ring(G.n, p);
      for (auto& T : cut_sets(G).sets) {
        PrimeComponent pc = prime_component(G, T);
        std::cout << "T = {";
        bool first = true;
        for (int v : T.elements()) {
          std::cout << (first ? "" : ",") << v;
          first = false;
        }
        std::cout << "}  c(T) = " << pc.c() << "  generators:";
        for (auto& g : component_ideal(R, pc).gens)
          std::cout << " " << poly_to_string(R, g);
        std::cout << "\n";
      }
      return 0;
    }
    if (colon->parsed()) {
      Graph G = load_graph(graph_arg);
      int i = 0, j = 0;
      if (std::sscanf(edge_arg.c_str(), "%d,%d", &i, &j) != 2)
        throw std::invalid_argument("--edge expects i,j");
      Ring R = Ring::edge_ring(G.n, p);
      CheckEvidence ev = colon_identity_check(R, G, i, j);
      for (auto& note : ev.notes) std::cout << note << "\n";
      Graph D = G;
      D.remove_edge(i, j);
      Ideal q = ideal_quotient(binomial_edge_ideal(R, D), edge_binomial(R, i, j));
      std::cout << "J_{G-e} : f_e reduced GB:\n";
      for (auto& g : groebner(q, R.order)) std::cout << "  " << poly_to_string(R, g) << "\n";
      return ev.ok ? 0 : 1;
    }
    if (verify->parsed()) {
      if (n_max < 1 || n_max > 7) throw std::invalid_argument("--n-max must be 1..7");
      std::vector<Graph> graphs;
      for (int n = 1; n <= n_max; ++n)
        for (auto& G : enumerate_graphs(n)) graphs.push_back(G);
      CensusConfig cfg{p, suite, 5};
      return finish(run_census(graphs, cfg), cfg, format);
    }
    if (census->parsed()) {
      CensusConfig cfg{p, "all", 5};
      return finish(run_census(load_graph_file(file_arg), cfg), cfg, format);
    }
  } catch (const ResourceError& ex) {
    std::cerr << "resource error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
