#pragma once

#include "orthocolor/coloring.hpp"
#include "orthocolor/graph.hpp"

namespace orthocolor {

struct SearchOptions {
  double time_cap_seconds = 60.0;
  long long node_cap = 100000000;
  bool symmetry_breaking = true;
  // Accepted for forward compatibility; the engine currently runs
  // single-threaded, which satisfies the determinism contract.
  bool parallel = false;
};

enum class SearchStatus { Found, Exhausted, Capped };

const char* to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  ColoringFamily witness;  // populated iff status == Found, verified
  long long nodes_explored = 0;
};

/// Proper total n-coloring search: descending-degree vertex order, forward
/// checking, first color class pinned on a greedily grown clique.
SearchOutcome is_n_colorable(const Graph& g, int n,
                             const SearchOptions& opts = {});

/// k mutually orthogonal total n-colorings, searched as one pass assigning
/// every vertex a k-tuple of colors. Symmetry breaking canonicalizes colors
/// by first occurrence per coordinate and orders coordinates
/// lexicographically by color sequence.
SearchOutcome find_family(const Graph& g, int n, int k,
                          const SearchOptions& opts = {});

/// Same search with the first |prefix| coordinates pinned to the given
/// (verified) family; symmetry breaking applies to free coordinates only.
SearchOutcome find_family_with_prefix(const Graph& g, int n, int k,
                                      const ColoringFamily& prefix,
                                      const SearchOptions& opts = {});

struct ExactN {
  bool unbounded = false;    // n >= v: rainbow colorings, no finite cap
  long long value = 0;       // 0 when no proper n-coloring exists
  ColoringFamily witness;    // size == value (empty for 0/unbounded)
  bool incomplete = false;   // a cap was hit; value is a lower bound only
  long long nodes_explored = 0;
};

/// Exact N(G,n): grows k until exhaustion, stopping early when a found
/// family meets an applicable upper bound. Graphs with no proper n-coloring
/// yield 0 by convention.
ExactN exact_n(const Graph& g, int n, const SearchOptions& opts = {});

/// One more mutually orthogonal coloring for a verified family, via an
/// n-coloring of the coloring-extended supergraph. The witness is checked
/// orthogonal to every member and proper on g before returning.
SearchOutcome extend_family(const Graph& g, const ColoringFamily& fam,
                            const SearchOptions& opts = {});

}  // namespace orthocolor
