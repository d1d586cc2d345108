#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orthocolor/graph.hpp"

namespace orthocolor {

/// Assignment of colors 1..color_count to vertices; 0 marks an uncolored
/// vertex, so partial colorings are first-class. assignment[i] belongs to
/// vertex i+1.
struct Coloring {
  int color_count = 0;
  std::vector<int> assignment;

  int vertex_count() const { return static_cast<int>(assignment.size()); }
  bool total() const;
  int color_of(int vertex) const { return assignment[vertex - 1]; }
};

/// n = v and vertex i gets color i. Orthogonal to everything, itself included.
Coloring rainbow_coloring(int v);

enum class VerifyStatus { Unchecked, Verified, Failed };

/// Ordered list of colorings over one graph, all sharing v and n.
struct ColoringFamily {
  int color_count = 0;
  int vertex_count = 0;
  std::vector<Coloring> colorings;
  VerifyStatus verified = VerifyStatus::Unchecked;

  int size() const { return static_cast<int>(colorings.size()); }
};

/// Validates the shared-shape invariants and wraps the colorings.
ColoringFamily make_family(int n, int v, std::vector<Coloring> colorings);

struct VerificationReport {
  // (coloring index, offending edge); indices are 0-based.
  std::vector<std::pair<int, Edge>> proper_failures;
  // ((coloring i, coloring j), (vertex u, vertex w)) with i < j, u < w.
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>
      orthogonality_failures;

  bool ok() const {
    return proper_failures.empty() && orthogonality_failures.empty();
  }
};

/// No edge may join two vertices carrying the same nonzero color.
bool is_proper(const Graph& g, const Coloring& c);

/// No two distinct vertices may repeat a (nonzero, nonzero) color pair.
/// Symmetric; runs in O(v) over an ordered-pair table.
bool are_orthogonal(const Coloring& a, const Coloring& b);

/// Checks every member proper and every unordered pair orthogonal, listing
/// all violations. Updates fam.verified.
VerificationReport verify_family(const Graph& g, ColoringFamily& fam);

// Family file: {"colorings": [[...], ...], "n": int, "v": int}; 0 = empty
// cell. Writing what was read reproduces the bytes exactly.
std::string family_to_json(const ColoringFamily& fam);
ColoringFamily family_from_json(const std::string& text);
ColoringFamily read_family_file(const std::string& path);
void write_family_file(const ColoringFamily& fam, const std::string& path);

}  // namespace orthocolor
