#include "orthocolor/coloring.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace orthocolor {

using nlohmann::json;

bool Coloring::total() const {
  return std::none_of(assignment.begin(), assignment.end(),
                      [](int c) { return c == 0; });
}

Coloring rainbow_coloring(int v) {
  Coloring c;
  c.color_count = v;
  c.assignment.resize(v);
  for (int i = 0; i < v; ++i) c.assignment[i] = i + 1;
  return c;
}

ColoringFamily make_family(int n, int v, std::vector<Coloring> colorings) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "color count must be positive");
  if (v < 1) fail(ErrorCode::InvalidArgument, "vertex count must be positive");
  for (std::size_t i = 0; i < colorings.size(); ++i) {
    const Coloring& c = colorings[i];
    if (c.vertex_count() != v || c.color_count != n)
      fail(ErrorCode::SizeMismatch,
           "coloring " + std::to_string(i) + " does not match (v=" +
               std::to_string(v) + ", n=" + std::to_string(n) + ")");
    for (int entry : c.assignment)
      if (entry < 0 || entry > n)
        fail(ErrorCode::InvalidColor,
             "coloring " + std::to_string(i) + " holds color " +
                 std::to_string(entry) + " outside 0.." + std::to_string(n));
  }
  ColoringFamily fam;
  fam.color_count = n;
  fam.vertex_count = v;
  fam.colorings = std::move(colorings);
  return fam;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.vertex_count() != g.vertex_count())
    fail(ErrorCode::SizeMismatch,
         "coloring has " + std::to_string(c.vertex_count()) +
             " entries, graph has " + std::to_string(g.vertex_count()));
  for (const auto& [u, w] : g.edges()) {
    const int cu = c.color_of(u), cw = c.color_of(w);
    if (cu != 0 && cu == cw) return false;
  }
  return true;
}

bool are_orthogonal(const Coloring& a, const Coloring& b) {
  if (a.vertex_count() != b.vertex_count())
    fail(ErrorCode::SizeMismatch, "colorings have different lengths");
  // One slot per ordered color pair; only fully colored vertices count.
  const long long width = b.color_count;
  std::vector<char> used(static_cast<std::size_t>(a.color_count) *
                             std::max<std::size_t>(1, width),
                         0);
  for (int i = 0; i < a.vertex_count(); ++i) {
    const int ca = a.assignment[i], cb = b.assignment[i];
    if (ca == 0 || cb == 0) continue;
    const std::size_t key = static_cast<std::size_t>(ca - 1) * width + (cb - 1);
    if (used[key]) return false;
    used[key] = 1;
  }
  return true;
}

VerificationReport verify_family(const Graph& g, ColoringFamily& fam) {
  if (fam.size() == 0) fail(ErrorCode::InvalidArgument, "empty family");
  if (fam.vertex_count != g.vertex_count())
    fail(ErrorCode::SizeMismatch, "family vertex count " +
                                      std::to_string(fam.vertex_count) +
                                      " does not match the graph");
  VerificationReport report;
  const auto edges = g.edges();
  for (int i = 0; i < fam.size(); ++i) {
    const Coloring& c = fam.colorings[i];
    for (const auto& [u, w] : edges) {
      const int cu = c.color_of(u), cw = c.color_of(w);
      if (cu != 0 && cu == cw) report.proper_failures.emplace_back(i, Edge{u, w});
    }
  }
  const int n = fam.color_count;
  for (int i = 0; i < fam.size(); ++i) {
    for (int j = i + 1; j < fam.size(); ++j) {
      const Coloring& a = fam.colorings[i];
      const Coloring& b = fam.colorings[j];
      // Group vertices by ordered color pair; every group of size >= 2
      // contributes all its vertex pairs as violations.
      std::vector<std::vector<int>> slots(static_cast<std::size_t>(n) * n);
      for (int x = 1; x <= fam.vertex_count; ++x) {
        const int ca = a.color_of(x), cb = b.color_of(x);
        if (ca == 0 || cb == 0) continue;
        slots[static_cast<std::size_t>(ca - 1) * n + (cb - 1)].push_back(x);
      }
      for (const auto& group : slots)
        for (std::size_t s = 0; s < group.size(); ++s)
          for (std::size_t t = s + 1; t < group.size(); ++t)
            report.orthogonality_failures.push_back(
                {{i, j}, {group[s], group[t]}});
    }
  }
  fam.verified = report.ok() ? VerifyStatus::Verified : VerifyStatus::Failed;
  return report;
}

std::string family_to_json(const ColoringFamily& fam) {
  json doc;
  doc["n"] = fam.color_count;
  doc["v"] = fam.vertex_count;
  json cols = json::array();
  for (const Coloring& c : fam.colorings) cols.push_back(c.assignment);
  doc["colorings"] = cols;
  return doc.dump() + "\n";
}

ColoringFamily family_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("family JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("v") ||
      !doc.contains("colorings") || !doc["n"].is_number_integer() ||
      !doc["v"].is_number_integer() || !doc["colorings"].is_array())
    fail(ErrorCode::ParseError,
         "family JSON needs integer 'n', integer 'v' and array 'colorings'");
  const int n = doc["n"].get<int>();
  const int v = doc["v"].get<int>();
  std::vector<Coloring> colorings;
  for (const auto& entry : doc["colorings"]) {
    if (!entry.is_array())
      fail(ErrorCode::ParseError, "each coloring must be an array");
    Coloring c;
    c.color_count = n;
    for (const auto& value : entry) {
      if (!value.is_number_integer())
        fail(ErrorCode::ParseError, "colors must be integers");
      c.assignment.push_back(value.get<int>());
    }
    colorings.push_back(std::move(c));
  }
  return make_family(n, v, std::move(colorings));
}

ColoringFamily read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return family_from_json(buffer.str());
}

void write_family_file(const ColoringFamily& fam, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  out << family_to_json(fam);
}

}  // namespace orthocolor
