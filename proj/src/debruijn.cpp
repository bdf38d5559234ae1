#include "sumcubes/debruijn.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace sumcubes {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  rank_.fill(-1);
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = rank_[static_cast<unsigned char>(symbols_[i])];
    if (slot >= 0) throw std::invalid_argument(std::string("repeated alphabet symbol '") + symbols_[i] + "'");
    slot = static_cast<int>(i);
  }
}

bool Alphabet::contains_all(std::string_view s) const {
  return std::all_of(s.begin(), s.end(), [this](char c) { return contains(c); });
}

bool Alphabet::less(std::string_view a, std::string_view b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [this](char x, char y) { return rank(x) < rank(y); });
}

void Alphabet::sort(std::vector<Gram>& grams) const {
  std::sort(grams.begin(), grams.end(), GramLess{this});
}

std::pair<Gram, Gram> edge_endpoints(std::string_view edge, int order) {
  if (order < 2 || edge.size() != static_cast<std::size_t>(order))
    throw std::invalid_argument("edge '" + std::string(edge) + "' is not a " + std::to_string(order) + "-gram");
  return {Gram(edge.substr(0, edge.size() - 1)), Gram(edge.substr(1))};
}

EdgeSubgraph::EdgeSubgraph(Alphabet alphabet, int order, std::vector<Gram> edges)
    : alphabet_(std::move(alphabet)), order_(order), edges_(std::move(edges)) {
  if (order_ < 2) throw std::invalid_argument("order must be at least 2");
  for (const auto& e : edges_) {
    if (e.size() != static_cast<std::size_t>(order_))
      throw std::invalid_argument("edge '" + e + "' is not a " + std::to_string(order_) + "-gram");
    if (!alphabet_.contains_all(e))
      throw std::invalid_argument("edge '" + e + "' uses symbols outside alphabet '" + alphabet_.symbols() + "'");
  }
  alphabet_.sort(edges_);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<Gram> EdgeSubgraph::nodes() const {
  std::vector<Gram> out;
  out.reserve(edges_.size() * 2);
  for (const auto& e : edges_) {
    auto [from, to] = edge_endpoints(e, order_);
    out.push_back(std::move(from));
    out.push_back(std::move(to));
  }
  alphabet_.sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool EdgeSubgraph::contains(std::string_view edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), Gram(edge), GramLess{&alphabet_});
}

DeBruijnGraph::DeBruijnGraph(Alphabet alphabet, int order, std::vector<Gram> nodes,
                             std::vector<Gram> edges)
    : nodes_(std::move(nodes)), all_(std::move(alphabet), order, std::move(edges)) {}

namespace {

// All grams of the given length in alphabet order (odometer enumeration).
std::vector<Gram> all_grams(const Alphabet& alphabet, int length) {
  const auto& sym = alphabet.symbols();
  std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
  std::vector<Gram> out;
  while (true) {
    Gram g(static_cast<std::size_t>(length), sym[0]);
    for (std::size_t i = 0; i < digits.size(); ++i) g[i] = sym[digits[i]];
    out.push_back(std::move(g));
    std::size_t pos = digits.size();
    while (pos > 0 && ++digits[pos - 1] == sym.size()) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

}  // namespace

DeBruijnGraph build_graph(const Alphabet& alphabet, int order) {
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  return DeBruijnGraph(alphabet, order, all_grams(alphabet, order - 1), all_grams(alphabet, order));
}

namespace {

// Compact adjacency over the active nodes of an edge set.
struct Adjacency {
  std::vector<Gram> nodes;                     // sorted
  std::vector<std::vector<std::size_t>> out;   // edge indices, ascending
  std::vector<std::vector<std::size_t>> in;    // source node indices
  std::vector<std::size_t> head;               // edge -> target node
};

Adjacency make_adjacency(const EdgeSubgraph& g) {
  Adjacency a;
  a.nodes = g.nodes();
  GramLess less{&g.alphabet()};
  auto index = [&](const Gram& n) {
    return static_cast<std::size_t>(std::lower_bound(a.nodes.begin(), a.nodes.end(), n, less) - a.nodes.begin());
  };
  a.out.resize(a.nodes.size());
  a.in.resize(a.nodes.size());
  a.head.resize(g.edges().size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto [from, to] = edge_endpoints(g.edges()[e], g.order());
    const auto u = index(from), v = index(to);
    a.out[u].push_back(e);
    a.in[v].push_back(u);
    a.head[e] = v;
  }
  return a;
}

// Kosaraju with explicit stacks.
std::vector<std::vector<std::size_t>> strong_components(const Adjacency& a) {
  const std::size_t n = a.nodes.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> finish;
  finish.reserve(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < a.out[v].size()) {
        const auto w = a.head[a.out[v][next++]];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<long> comp(n, -1);
  std::vector<std::vector<std::size_t>> comps;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    comps.emplace_back();
    std::vector<std::size_t> stack{*it};
    comp[*it] = static_cast<long>(comps.size() - 1);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (auto u : a.in[v])
        if (comp[u] < 0) {
          comp[u] = comp[*it];
          stack.push_back(u);
        }
    }
  }
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end());
  return comps;
}

}  // namespace

std::string EulerianDiagnostic::describe() const {
  std::ostringstream os;
  if (empty) {
    os << "empty edge set";
    return os.str();
  }
  if (unbalanced.empty()) {
    os << "balanced";
  } else {
    os << unbalanced.size() << " unbalanced node(s):";
    for (const auto& u : unbalanced) os << ' ' << u.node << "(in=" << u.in_degree << ",out=" << u.out_degree << ')';
  }
  os << "; " << components.size() << " strongly connected component(s)";
  if (components.size() > 1) {
    os << ':';
    for (const auto& c : components) {
      os << " {";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << '}';
    }
  }
  return os.str();
}

EulerianDiagnostic check_eulerian(const EdgeSubgraph& g) {
  EulerianDiagnostic d;
  if (g.empty()) {
    d.empty = true;
    d.eulerian = true;
    return d;
  }
  const auto adj = make_adjacency(g);
  for (std::size_t v = 0; v < adj.nodes.size(); ++v) {
    const int in = static_cast<int>(adj.in[v].size()), out = static_cast<int>(adj.out[v].size());
    if (in != out) d.unbalanced.push_back({adj.nodes[v], in, out});
  }
  for (const auto& c : strong_components(adj)) {
    std::vector<Gram> names;
    for (auto v : c) names.push_back(adj.nodes[v]);
    d.components.push_back(std::move(names));
  }
  d.eulerian = d.unbalanced.empty() && d.components.size() == 1;
  return d;
}

std::vector<Gram> eulerian_circuit(const EdgeSubgraph& g) {
  if (g.empty()) throw std::invalid_argument("cannot build a circuit over an empty edge set");
  auto diagnostic = check_eulerian(g);
  if (!diagnostic.eulerian) throw NotEulerian(std::move(diagnostic));

  const auto adj = make_adjacency(g);
  std::vector<std::size_t> cursor(adj.nodes.size(), 0);
  // (node, edge taken to reach it); the root has no incoming edge.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, kNone}};
  std::vector<Gram> circuit;
  circuit.reserve(g.edges().size());
  while (!stack.empty()) {
    const auto [v, via] = stack.back();
    if (cursor[v] < adj.out[v].size()) {
      const auto e = adj.out[v][cursor[v]++];
      stack.emplace_back(adj.head[e], e);
    } else {
      if (via != kNone) circuit.push_back(g.edges()[via]);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

CyclicSequence::CyclicSequence(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("cyclic sequence must not be empty");
}

CyclicSequence::CyclicSequence(std::string symbols, const Alphabet& alphabet)
    : CyclicSequence(std::move(symbols)) {
  for (char c : symbols_)
    if (!alphabet.contains(c))
      throw std::invalid_argument(std::string("symbol '") + c + "' is not in alphabet '" + alphabet.symbols() + "'");
}

Gram CyclicSequence::window(std::size_t start, int n) const {
  Gram g(static_cast<std::size_t>(n), '\0');
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = (*this)[start + j];
  return g;
}

CyclicSequence CyclicSequence::canonical() const {
  std::string best = symbols_;
  for (std::size_t i = 1; i < symbols_.size(); ++i) {
    std::string rot = symbols_.substr(i) + symbols_.substr(0, i);
    if (rot < best) best = std::move(rot);
  }
  return CyclicSequence(std::move(best));
}

CyclicSequence circuit_to_sequence(std::span<const Gram> circuit) {
  if (circuit.empty()) throw std::invalid_argument("empty circuit");
  const auto n = circuit.front().size();
  std::string out;
  out.reserve(circuit.size());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const auto& e = circuit[i];
    const auto& next = circuit[(i + 1) % circuit.size()];
    if (e.size() != n || n < 2) throw std::invalid_argument("circuit edges differ in length");
    if (std::string_view(e).substr(1) != std::string_view(next).substr(0, n - 1))
      throw std::invalid_argument("edge " + e + " does not chain into " + next);
    out.push_back(e.back());
  }
  return CyclicSequence(std::move(out));
}

CyclicSequence debruijn_sequence(const Alphabet& alphabet, int order) {
  const auto g = build_graph(alphabet, order);
  const auto circuit = eulerian_circuit(g);
  return circuit_to_sequence(circuit);
}

std::vector<Gram> windows(const CyclicSequence& s, int n) {
  std::vector<Gram> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.window(i, n));
  return out;
}

CoverageReport validate_cycle(const CyclicSequence& s, const EdgeSubgraph& target) {
  const auto& alphabet = target.alphabet();
  std::map<Gram, std::size_t, GramLess> counts(GramLess{&alphabet});
  CoverageReport r;
  const auto ws = windows(s, target.order());
  r.window_count = ws.size();
  for (const auto& w : ws) ++counts[w];
  for (const auto& e : target.edges()) (counts.count(e) ? r.covered : r.missing).push_back(e);
  for (const auto& [w, c] : counts) {
    if (!target.contains(w)) r.extra.push_back(w);
    if (c > 1) r.duplicates.emplace_back(w, c);
  }
  return r;
}

EdgeSubgraph reverse_edges(const EdgeSubgraph& g) {
  std::vector<Gram> out;
  out.reserve(g.edges().size());
  for (const auto& e : g.edges()) out.emplace_back(e.rbegin(), e.rend());
  return EdgeSubgraph(g.alphabet(), g.order(), std::move(out));
}

std::vector<Gram> edges_for_class(const DeBruijnGraph& g, Residue z) {
  auto sym = g.alphabet().symbols();
  std::sort(sym.begin(), sym.end());
  if (sym != "018" || g.order() != 3)
    throw std::invalid_argument("residue classes are only defined on B({0,1,8}, 3)");
  std::vector<Gram> out;
  for (const auto& e : g.edges()) {
    int sum = 0;
    for (char c : e) sum += c - '0';
    if (Residue(sum % 9) == z) out.push_back(e);
  }
  return out;
}

std::string to_dot(const EdgeSubgraph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph \"" << options.name << "\" {\n";
  for (const auto& n : g.nodes()) os << "  \"" << n << "\" [label=\"" << n << "\"];\n";
  for (const auto& e : g.edges()) {
    const auto [from, to] = edge_endpoints(e, g.order());
    os << "  \"" << from << "\" -> \"" << to << "\" [label=\"" << e << '"';
    if (options.dashed.count(e)) os << ", style=dashed";
    if (options.highlight.count(e)) os << ", color=red, penwidth=2";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

EdgeSubgraph read_edge_list(std::istream& in, const Alphabet& alphabet, int order) {
  std::vector<Gram> edges;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    edges.push_back(line.substr(first, last - first + 1));
  }
  return EdgeSubgraph(alphabet, order, std::move(edges));
}

void write_edge_list(std::ostream& out, const EdgeSubgraph& g) {
  for (const auto& e : g.edges()) out << e << '\n';
}

}  // namespace sumcubes
