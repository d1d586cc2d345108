#pragma once

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "orthocolor/errors.hpp"

namespace orthocolor {

struct Coloring;

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Rational = boost::rational<long long>;
using Edge = std::pair<int, int>;  // 1-based endpoints, first < second

/// Immutable simple graph. Vertices are 1-based externally; internally each
/// vertex owns an adjacency bitset (bit w-1 of row u-1 set iff u ~ w), so
/// neighborhood intersections in the search engine are single AND passes.
class Graph {
 public:
  /// Builds the graph with exactly the given edges. Unordered pairs are
  /// accepted in either orientation. Self-loops, out-of-range endpoints and
  /// duplicate edges are rejected.
  Graph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return v_; }
  long long edge_count() const { return e_; }

  bool adjacent(int u, int w) const { return rows_[u - 1].test(w - 1); }
  int degree(int u) const { return static_cast<int>(rows_[u - 1].count()); }

  /// Adjacency row of vertex u; bits are 0-based (bit w-1 <-> vertex w).
  const Bitset& neighbor_bits(int u) const { return rows_[u - 1]; }

  /// Edges in canonical (sorted) order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

 private:
  int v_ = 0;
  long long e_ = 0;
  std::vector<Bitset> rows_;
};

struct DegreeStats {
  int max_degree = 0;        // Delta
  long long edge_count = 0;  // e
  Rational average_degree;   // D = 2e/v, exact
};

Graph graph_from_edges(int vertex_count, const std::vector<Edge>& edges);

DegreeStats degree_stats(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // index u in 1..v(g); 0 when dropped
  std::vector<int> new_to_old;  // index u in 1..v(sub); entry 0 unused
};

/// Keeps the given vertices, renumbered 1..|keep| in ascending old order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

/// True iff the vertices are pairwise adjacent (|vs| <= 1 counts as a clique).
bool verify_clique(const Graph& g, const std::vector<int>& vs);

inline constexpr int kDefaultProductVertexCap = 20000;

/// Or-product: vertex (u,x) -> index (u-1)*|V(h)| + x; (u,x) ~ (u',x') iff
/// u ~ u' in g or x ~ x' in h (and the vertices differ).
Graph or_product(const Graph& g, const Graph& h,
                 int vertex_cap = kDefaultProductVertexCap);

/// Same vertex set as g; u ~ w iff u ~ w in g or some family member assigns
/// u and w equal colors. Every member must be total and proper on g.
Graph coloring_extended_supergraph(const Graph& g,
                                   const std::vector<Coloring>& family);

// Text format: optional comment lines "c ...", one header "p <v> <e>", then
// exactly e lines "e <u> <w>" with 1-based endpoints and u < w. Anything
// else is rejected.
Graph read_graph_text(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph_text(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace orthocolor
