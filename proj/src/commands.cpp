#include "sumcubes/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "sumcubes/corpus.hpp"
#include "sumcubes/debruijn.hpp"
#include "sumcubes/fixtures.hpp"
#include "sumcubes/residue.hpp"
#include "sumcubes/search.hpp"

namespace sumcubes::cli {

namespace {

// Whole-file write so partial output never lands on disk.
bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text) || !f.flush()) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

std::string join(const std::vector<Gram>& grams) {
  std::string out;
  for (const auto& g : grams) out += (out.empty() ? "" : " ") + g;
  return out;
}

// Full graph, named fixture, or edge file, as selected by the options.
EdgeSubgraph select_graph(const GraphOptions& opts) {
  if (opts.subgraph) {
    auto g = fixtures::by_name(*opts.subgraph);
    if (!g) throw std::invalid_argument("unknown subgraph '" + *opts.subgraph + "' (expected E0, E1 or E2)");
    return *g;
  }
  const Alphabet alphabet(opts.alphabet);
  if (opts.edges_file) {
    std::ifstream f(*opts.edges_file);
    if (!f) throw std::invalid_argument("cannot read '" + *opts.edges_file + "'");
    return read_edge_list(f, alphabet, opts.order);
  }
  return build_graph(alphabet, opts.order).as_subgraph();
}

}  // namespace

int cmd_classes(std::ostream& out) {
  std::ostringstream os;
  for (int z = 0; z < 9; ++z) {
    const auto triples = decompose(Residue(z));
    os << "class " << z << ':';
    if (triples.empty()) {
      os << " infeasible\n";
      continue;
    }
    os << ' ' << triples.size() << (triples.size() == 1 ? " triple\n" : " triples\n");
    for (const auto& t : triples) {
      const auto spellings = signed_spellings(t);
      os << "  " << spell(t) << "  spellings(" << spellings.size() << "):";
      for (const auto& s : spellings) os << ' ' << spell(s);
      os << '\n';
    }
  }
  out << os.str();
  return kSuccess;
}

int cmd_graph(const GraphOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto g = select_graph(opts);
    DotOptions dot;
    if (opts.subgraph) dot.name = *opts.subgraph;
    if (opts.dashed) {
      const auto d = fixtures::by_name(*opts.dashed);
      if (!d) throw std::invalid_argument("unknown subgraph '" + *opts.dashed + "' (expected E0, E1 or E2)");
      dot.dashed.insert(d->edges().begin(), d->edges().end());
    }
    if (opts.highlight_class) {
      const auto full = build_graph(g.alphabet(), g.order());
      const auto hl = edges_for_class(full, Residue(*opts.highlight_class));
      dot.highlight.insert(hl.begin(), hl.end());
    }
    const auto text = to_dot(g, dot);
    if (opts.dot_file) {
      if (!write_file(*opts.dot_file, text, err)) return kUsageError;
      out << "wrote " << *opts.dot_file << ": " << g.nodes().size() << " nodes, " << g.edges().size() << " edges\n";
    } else {
      out << text;
    }
    return kSuccess;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_cycle(const GraphOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto g = select_graph(opts);
    const auto seq = circuit_to_sequence(eulerian_circuit(g));
    std::ostringstream os;
    os << "cycle " << seq.str() << '\n'
       << "length " << seq.size() << '\n'
       << "least-rotation " << seq.canonical().str() << '\n';
    out << os.str();
    return kSuccess;
  } catch (const NotEulerian& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_validate(const std::string& cycle, const std::string& alphabet, int order, const std::string& against,
                 std::ostream& out, std::ostream& err) {
  try {
    GraphOptions opts;
    opts.alphabet = alphabet;
    opts.order = order;
    if (against != "full") opts.subgraph = against;
    const auto target = select_graph(opts);
    const CyclicSequence seq(cycle, target.alphabet());
    const auto report = validate_cycle(seq, target);

    std::ostringstream os;
    os << "windows " << report.window_count << '\n'
       << "covered " << report.covered.size() << '/' << target.edges().size() << '\n'
       << "missing " << report.missing.size() << (report.missing.empty() ? "" : ": " + join(report.missing)) << '\n'
       << "extra " << report.extra.size() << (report.extra.empty() ? "" : ": " + join(report.extra)) << '\n'
       << "duplicates " << report.duplicates.size() << (report.duplicates.empty() ? "" : ":");
    for (const auto& [g, n] : report.duplicates) os << ' ' << g << 'x' << n;
    os << '\n' << "verdict " << (report.exact() ? "complete" : report.complete() ? "complete-with-surplus" : "incomplete")
       << '\n';
    out << os.str();
    return report.exact() ? kSuccess : kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

namespace {

int emit_search(const std::vector<SearchResult>& results, const SearchOptions& opts, std::ostream& out,
                std::ostream& err) {
  std::ostringstream csv;
  write_search_csv(csv, results);

  std::ostringstream summary;
  std::size_t total = 0, skipped = 0;
  for (const auto& r : results) {
    summary << "k=" << r.k << " class=" << r.cls.value();
    if (r.skipped) {
      summary << " infeasible (class " << r.cls.value() << ")\n";
      ++skipped;
    } else {
      summary << " representations=" << r.representations.size() << " pairs=" << r.stats.pairs_scanned
              << " pruned_z=" << r.stats.z_pruned << '\n';
      total += r.representations.size();
    }
  }
  summary << "total: " << results.size() << " k, " << skipped << " skipped, " << total << " representations\n";

  if (opts.out_file) {
    if (!write_file(*opts.out_file, csv.str(), err)) return kUsageError;
    out << summary.str();
  } else {
    out << csv.str();
    err << summary.str();
  }
  return kSuccess;
}

}  // namespace

int cmd_search(const std::string& k, const SearchOptions& opts, std::ostream& out, std::ostream& err) {
  const auto target = parse_integer(k);
  if (!target) {
    err << "error: not an integer: '" << k << "'\n";
    return kUsageError;
  }
  try {
    return emit_search({search_k(*target, SearchBounds{opts.bound})}, opts, out, err);
  } catch (const BoundOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_scan(std::int64_t from, std::int64_t to, const SearchOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    return emit_search(scan_range(from, to, SearchBounds{opts.bound}, opts.workers), opts, out, err);
  } catch (const BoundOverflow& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_verify_corpus(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path);
  if (!f) {
    err << "error: cannot read '" << path << "'\n";
    return kUsageError;
  }
  Corpus corpus;
  try {
    corpus = read_corpus(f);
  } catch (const CorpusFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::vector<ReportRow> rows;
  rows.reserve(corpus.rows.size());
  std::size_t invalid = 0;
  for (const auto& row : corpus.rows) {
    rows.push_back(check_row(row));
    if (!rows.back().valid) ++invalid;
  }
  std::ostringstream report;
  write_report_csv(report, rows);
  out << report.str();

  std::ostringstream diag;
  for (const auto& e : corpus.errors) diag << "line " << e.line << ": " << e.message << '\n';
  for (const auto& r : rows)
    if (!r.valid) diag << "line " << r.line << ": invalid, " << r.diagnostic << '\n';
  diag << "rows=" << rows.size() << " valid=" << rows.size() - invalid << " invalid=" << invalid
       << " parse_errors=" << corpus.errors.size() << '\n';
  err << diag.str();

  if (!corpus.errors.empty()) return kUsageError;
  return invalid == 0 ? kSuccess : kValidationFailure;
}

}  // namespace sumcubes::cli
