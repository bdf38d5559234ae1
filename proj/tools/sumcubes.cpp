// sumcubes: residue tables, De Bruijn graphs and cycles, and bounded search
// for x^3 + y^3 + z^3 = k.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sumcubes/commands.hpp"

namespace cli = sumcubes::cli;

int main(int argc, char** argv) {
  CLI::App app{"Sum-of-three-cubes residue analysis, De Bruijn cycles and bounded search"};
  app.require_subcommand(1);

  auto* classes = app.add_subcommand("classes", "Residue triples and signed spellings for every class mod 9");

  cli::GraphOptions graph_opts;
  auto add_graph_flags = [&](CLI::App* sub) {
    sub->add_option("--alphabet", graph_opts.alphabet, "Symbols, e.g. 01 or 018")->capture_default_str();
    sub->add_option("--order", graph_opts.order, "Edge length n (>= 2)")->capture_default_str();
    sub->add_option("--subgraph", graph_opts.subgraph, "Fixture subgraph: E0, E1 or E2");
    sub->add_option("--edges", graph_opts.edges_file, "Edge list file, one gram per line");
  };
  auto* graph = app.add_subcommand("graph", "Emit a De Bruijn graph or fixture subgraph as DOT");
  add_graph_flags(graph);
  graph->add_option("--dot", graph_opts.dot_file, "Write DOT to this file instead of stdout");
  graph->add_option("--dashed", graph_opts.dashed, "Draw edges of this fixture dashed");
  graph->add_option("--class", graph_opts.highlight_class, "Highlight edges summing to this class (018, order 3)")
      ->check(CLI::Range(0, 8));

  auto* cycle = app.add_subcommand("cycle", "Print the deterministic Eulerian cycle of a graph");
  add_graph_flags(cycle);

  std::string cycle_text, validate_alphabet = "018", against = "full";
  int validate_order = 3;
  auto* validate = app.add_subcommand("validate", "Check a cyclic string's windows against an edge set");
  validate->add_option("cycle", cycle_text, "Cyclic string")->required();
  validate->add_option("--alphabet", validate_alphabet)->capture_default_str();
  validate->add_option("--order", validate_order)->capture_default_str();
  validate->add_option("--against", against, "full, E0, E1 or E2")->capture_default_str();

  cli::SearchOptions search_opts;
  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--bound", search_opts.bound, "Search |x|,|y|,|z| <= B")->capture_default_str();
    sub->add_option("--out", search_opts.out_file, "Write CSV here (summary goes to stdout)");
    sub->add_option("--jobs", search_opts.workers, "Worker threads (0 = all cores)")->capture_default_str();
  };
  std::string k_text;
  auto* search = app.add_subcommand("search", "Find all representations of k within a bound");
  search->add_option("k", k_text, "Target integer (negatives allowed)")->required();
  add_search_flags(search);

  std::int64_t from = 0, to = 0;
  auto* scan = app.add_subcommand("scan", "Search every k in a range");
  scan->add_option("--from", from)->required();
  scan->add_option("--to", to)->required();
  add_search_flags(scan);

  std::string corpus_path;
  auto* verify = app.add_subcommand("verify", "Verify a CSV corpus with header k,x,y,z");
  verify->add_option("file", corpus_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kUsageError;
  }

  if (*classes) return cli::cmd_classes(std::cout);
  if (*graph) return cli::cmd_graph(graph_opts, std::cout, std::cerr);
  if (*cycle) return cli::cmd_cycle(graph_opts, std::cout, std::cerr);
  if (*validate) return cli::cmd_validate(cycle_text, validate_alphabet, validate_order, against, std::cout, std::cerr);
  if (*search) return cli::cmd_search(k_text, search_opts, std::cout, std::cerr);
  if (*scan) return cli::cmd_scan(from, to, search_opts, std::cout, std::cerr);
  if (*verify) return cli::cmd_verify_corpus(corpus_path, std::cout, std::cerr);
  return cli::kUsageError;
}
