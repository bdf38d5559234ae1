#pragma once

// De Bruijn graphs over small alphabets. Nodes are (n-1)-grams, edges are
// n-grams, and an edge runs from its prefix to its suffix. Edges are named by
// their gram, so an edge set is a set of strings.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumcubes/residue.hpp"

namespace sumcubes {

using Gram = std::string;

/// Ordered set of single-character symbols. The order drives every tie-break.
class Alphabet {
 public:
  /// Throws std::invalid_argument on an empty or repeated symbol list.
  explicit Alphabet(std::string_view symbols);

  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }
  int rank(char c) const { return rank_[static_cast<unsigned char>(c)]; }
  bool contains_all(std::string_view s) const;

  /// Lexicographic order on grams using symbol rank.
  bool less(std::string_view a, std::string_view b) const;
  void sort(std::vector<Gram>& grams) const;

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

 private:
  std::string symbols_;
  std::array<int, 256> rank_{};
};

struct GramLess {
  const Alphabet* alphabet;
  bool operator()(const Gram& a, const Gram& b) const { return alphabet->less(a, b); }
};

/// Splits an n-gram into the (prefix, suffix) nodes it connects.
std::pair<Gram, Gram> edge_endpoints(std::string_view edge, int order);

/// A set of n-grams over an alphabet; nodes are whatever the edges touch.
class EdgeSubgraph {
 public:
  /// Throws std::invalid_argument if order < 2 or an edge has the wrong length or symbols.
  EdgeSubgraph(Alphabet alphabet, int order, std::vector<Gram> edges);

  const Alphabet& alphabet() const { return alphabet_; }
  int order() const { return order_; }
  /// Sorted, duplicate-free.
  const std::vector<Gram>& edges() const { return edges_; }
  std::vector<Gram> nodes() const;
  bool contains(std::string_view edge) const;
  bool empty() const { return edges_.empty(); }

  bool operator==(const EdgeSubgraph& o) const {
    return alphabet_ == o.alphabet_ && order_ == o.order_ && edges_ == o.edges_;
  }

 private:
  Alphabet alphabet_;
  int order_;
  std::vector<Gram> edges_;
};

/// The complete graph B(alphabet, n): k^(n-1) nodes, k^n edges.
class DeBruijnGraph {
 public:
  DeBruijnGraph(Alphabet alphabet, int order, std::vector<Gram> nodes, std::vector<Gram> edges);

  const Alphabet& alphabet() const { return all_.alphabet(); }
  int order() const { return all_.order(); }
  const std::vector<Gram>& nodes() const { return nodes_; }
  const std::vector<Gram>& edges() const { return all_.edges(); }
  const EdgeSubgraph& as_subgraph() const { return all_; }

 private:
  std::vector<Gram> nodes_;
  EdgeSubgraph all_;
};

/// Throws std::invalid_argument when order < 2.
DeBruijnGraph build_graph(const Alphabet& alphabet, int order);

struct Imbalance {
  Gram node;
  int in_degree;
  int out_degree;
  bool operator==(const Imbalance&) const = default;
};

struct EulerianDiagnostic {
  bool eulerian = false;
  bool empty = false;
  std::vector<Imbalance> unbalanced;
  /// Strongly connected components over nodes with nonzero degree.
  std::vector<std::vector<Gram>> components;

  std::string describe() const;
};

EulerianDiagnostic check_eulerian(const EdgeSubgraph& g);
inline bool is_eulerian(const EdgeSubgraph& g) { return check_eulerian(g).eulerian; }
inline bool is_eulerian(const DeBruijnGraph& g) { return is_eulerian(g.as_subgraph()); }

class NotEulerian : public std::runtime_error {
 public:
  explicit NotEulerian(EulerianDiagnostic d)
      : std::runtime_error("graph is not Eulerian: " + d.describe()), diagnostic_(std::move(d)) {}
  const EulerianDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  EulerianDiagnostic diagnostic_;
};

/// Hierholzer's algorithm from the smallest active node, always following the
/// smallest unused outgoing edge. Throws NotEulerian, or std::invalid_argument
/// for an empty edge set.
std::vector<Gram> eulerian_circuit(const EdgeSubgraph& g);
inline std::vector<Gram> eulerian_circuit(const DeBruijnGraph& g) {
  return eulerian_circuit(g.as_subgraph());
}

/// Non-empty cyclic string; windows wrap around as many times as needed.
class CyclicSequence {
 public:
  explicit CyclicSequence(std::string symbols);
  /// As above, also rejecting symbols outside `alphabet`.
  CyclicSequence(std::string symbols, const Alphabet& alphabet);

  const std::string& str() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  char operator[](std::size_t i) const { return symbols_[i % symbols_.size()]; }
  Gram window(std::size_t start, int n) const;
  /// Lexicographically least rotation (plain char order).
  CyclicSequence canonical() const;

  bool operator==(const CyclicSequence&) const = default;

 private:
  std::string symbols_;
};

/// Writes each edge's last symbol. Throws std::invalid_argument if the edges
/// do not chain into a closed walk.
CyclicSequence circuit_to_sequence(std::span<const Gram> circuit);

CyclicSequence debruijn_sequence(const Alphabet& alphabet, int order);

/// The size() windows of length n, in reading order (a multiset).
std::vector<Gram> windows(const CyclicSequence& s, int n);

struct CoverageReport {
  std::size_t window_count = 0;
  std::vector<Gram> covered;
  std::vector<Gram> missing;
  std::vector<Gram> extra;
  std::vector<std::pair<Gram, std::size_t>> duplicates;

  bool complete() const { return missing.empty(); }
  bool exact() const { return missing.empty() && extra.empty() && duplicates.empty(); }
};

CoverageReport validate_cycle(const CyclicSequence& s, const EdgeSubgraph& target);

EdgeSubgraph reverse_edges(const EdgeSubgraph& g);

/// Edges of B({0,1,8},3) whose symbols sum to z mod 9. Throws
/// std::invalid_argument for any other graph.
std::vector<Gram> edges_for_class(const DeBruijnGraph& g, Residue z);

struct DotOptions {
  std::string name = "debruijn";
  std::set<Gram> highlight;
  std::set<Gram> dashed;
};

std::string to_dot(const EdgeSubgraph& g, const DotOptions& options = {});
inline std::string to_dot(const DeBruijnGraph& g, const DotOptions& options = {}) {
  return to_dot(g.as_subgraph(), options);
}

/// One gram per line; blank lines and lines starting with '#' are skipped.
EdgeSubgraph read_edge_list(std::istream& in, const Alphabet& alphabet, int order);
void write_edge_list(std::ostream& out, const EdgeSubgraph& g);

}  // namespace sumcubes
