#include "orthocolor/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "orthocolor/coloring.hpp"

namespace orthocolor {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidColor: return "InvalidColor";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::DuplicateCell: return "DuplicateCell";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::UnverifiedFamily: return "UnverifiedFamily";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges)
    : v_(vertex_count) {
  if (v_ < 1) fail(ErrorCode::InvalidArgument, "vertex count must be positive");
  rows_.assign(v_, Bitset(static_cast<std::size_t>(v_)));
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > v_ || b < 1 || b > v_)
      fail(ErrorCode::InvalidVertex,
           "edge (" + std::to_string(a) + "," + std::to_string(b) +
               ") leaves 1.." + std::to_string(v_));
    if (a == b)
      fail(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(a));
    if (rows_[a - 1].test(b - 1))
      fail(ErrorCode::DuplicateEdge,
           "edge (" + std::to_string(a) + "," + std::to_string(b) +
               ") listed twice");
    rows_[a - 1].set(b - 1);
    rows_[b - 1].set(a - 1);
    ++e_;
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(e_));
  for (int u = 1; u <= v_; ++u)
    for (std::size_t w = rows_[u - 1].find_next(u - 1); w != Bitset::npos;
         w = rows_[u - 1].find_next(w))
      out.emplace_back(u, static_cast<int>(w) + 1);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return v_ == other.v_ && e_ == other.e_ && rows_ == other.rows_;
}

Graph graph_from_edges(int vertex_count, const std::vector<Edge>& edges) {
  return Graph(vertex_count, edges);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.edge_count = g.edge_count();
  for (int u = 1; u <= g.vertex_count(); ++u)
    stats.max_degree = std::max(stats.max_degree, g.degree(u));
  stats.average_degree = Rational(2 * stats.edge_count, g.vertex_count());
  return stats;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  if (keep.empty()) fail(ErrorCode::EmptySelection, "no vertices selected");
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int u : sorted)
    if (u < 1 || u > g.vertex_count())
      fail(ErrorCode::InvalidVertex, "vertex " + std::to_string(u));

  const int sub_v = static_cast<int>(sorted.size());
  std::vector<int> old_to_new(g.vertex_count() + 1, 0);
  std::vector<int> new_to_old(sub_v + 1, 0);
  for (int i = 0; i < sub_v; ++i) {
    old_to_new[sorted[i]] = i + 1;
    new_to_old[i + 1] = sorted[i];
  }
  std::vector<Edge> edges;
  for (int i = 0; i < sub_v; ++i)
    for (int j = i + 1; j < sub_v; ++j)
      if (g.adjacent(sorted[i], sorted[j])) edges.emplace_back(i + 1, j + 1);
  return InducedSubgraph{Graph(sub_v, edges), std::move(old_to_new),
                         std::move(new_to_old)};
}

bool verify_clique(const Graph& g, const std::vector<int>& vs) {
  for (int u : vs)
    if (u < 1 || u > g.vertex_count())
      fail(ErrorCode::InvalidVertex, "vertex " + std::to_string(u));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
  return true;
}

Graph or_product(const Graph& g, const Graph& h, int vertex_cap) {
  const long long vg = g.vertex_count();
  const long long vh = h.vertex_count();
  if (vg * vh > vertex_cap)
    fail(ErrorCode::SizeLimitExceeded,
         "or-product has " + std::to_string(vg * vh) +
             " vertices, cap is " + std::to_string(vertex_cap));
  const int v = static_cast<int>(vg * vh);
  std::vector<Edge> edges;
  // (u,x) -> (u-1)*vh + x, 1-based.
  for (int a = 1; a <= v; ++a) {
    const int ua = (a - 1) / static_cast<int>(vh) + 1;
    const int xa = (a - 1) % static_cast<int>(vh) + 1;
    for (int b = a + 1; b <= v; ++b) {
      const int ub = (b - 1) / static_cast<int>(vh) + 1;
      const int xb = (b - 1) % static_cast<int>(vh) + 1;
      if ((ua != ub && g.adjacent(ua, ub)) || (xa != xb && h.adjacent(xa, xb)))
        edges.emplace_back(a, b);
    }
  }
  return Graph(v, edges);
}

Graph coloring_extended_supergraph(const Graph& g,
                                   const std::vector<Coloring>& family) {
  const int v = g.vertex_count();
  std::vector<Bitset> rows(v, Bitset(static_cast<std::size_t>(v)));
  for (int u = 1; u <= v; ++u) rows[u - 1] = g.neighbor_bits(u);

  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    const Coloring& c = family[idx];
    if (c.vertex_count() != v)
      fail(ErrorCode::SizeMismatch,
           "coloring " + std::to_string(idx) + " has " +
               std::to_string(c.vertex_count()) + " entries, graph has " +
               std::to_string(v));
    if (!c.total() || !is_proper(g, c))
      fail(ErrorCode::ImproperColoring,
           "coloring " + std::to_string(idx) +
               " is not a proper total coloring of the base graph");
    for (int u = 1; u <= v; ++u)
      for (int w = u + 1; w <= v; ++w)
        if (c.color_of(u) == c.color_of(w)) {
          rows[u - 1].set(w - 1);
          rows[w - 1].set(u - 1);
        }
  }
  std::vector<Edge> edges;
  for (int u = 1; u <= v; ++u)
    for (std::size_t w = rows[u - 1].find_next(u - 1); w != Bitset::npos;
         w = rows[u - 1].find_next(w))
      edges.emplace_back(u, static_cast<int>(w) + 1);
  return Graph(v, edges);
}

Graph read_graph_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long v = -1, e = -1, seen = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      fail(ErrorCode::ParseError, "blank line " + std::to_string(lineno));
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (v >= 0)
        fail(ErrorCode::ParseError,
             "second header at line " + std::to_string(lineno));
      std::string rest;
      if (!(ss >> v >> e) || v < 1 || e < 0 || (ss >> rest))
        fail(ErrorCode::ParseError,
             "bad header at line " + std::to_string(lineno));
      continue;
    }
    if (tag == "e") {
      if (v < 0)
        fail(ErrorCode::ParseError,
             "edge before header at line " + std::to_string(lineno));
      long long a = 0, b = 0;
      std::string rest;
      if (!(ss >> a >> b) || (ss >> rest))
        fail(ErrorCode::ParseError,
             "bad edge at line " + std::to_string(lineno));
      if (a >= b)
        fail(ErrorCode::ParseError, "edge endpoints must satisfy u < w at line " +
                                        std::to_string(lineno));
      edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      ++seen;
      continue;
    }
    fail(ErrorCode::ParseError,
         "unrecognized line tag '" + tag + "' at line " + std::to_string(lineno));
  }
  if (v < 0) fail(ErrorCode::ParseError, "missing 'p <v> <e>' header");
  if (seen != e)
    fail(ErrorCode::ParseError, "header declares " + std::to_string(e) +
                                    " edges, found " + std::to_string(seen));
  return Graph(static_cast<int>(v), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_graph_text(in);
}

void write_graph_text(const Graph& g, std::ostream& out) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, w] : g.edges()) out << "e " << u << ' ' << w << '\n';
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  write_graph_text(g, out);
}

}  // namespace orthocolor
