#include "orthocolor/families.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace orthocolor {

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Equi: return "equi";
    case FamilyKind::RowLatin: return "row_latin";
    case FamilyKind::ColumnLatin: return "column_latin";
    case FamilyKind::Rook: return "rook";
    case FamilyKind::SingleDiagonal: return "single_diagonal";
    case FamilyKind::DoubleDiagonal: return "double_diagonal";
    case FamilyKind::Gerechte: return "gerechte";
    case FamilyKind::Sudoku: return "sudoku";
    case FamilyKind::Polyomino: return "polyomino";
    case FamilyKind::Cube: return "cube";
  }
  return "unknown";
}

namespace {

FamilySpec square_spec(FamilyKind kind, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "order must be positive");
  FamilySpec spec;
  spec.kind = kind;
  spec.rows = n;
  spec.cols = n;
  return spec;
}

}  // namespace

FamilySpec FamilySpec::equi(int n) { return square_spec(FamilyKind::Equi, n); }
FamilySpec FamilySpec::row_latin(int n) {
  return square_spec(FamilyKind::RowLatin, n);
}
FamilySpec FamilySpec::column_latin(int n) {
  return square_spec(FamilyKind::ColumnLatin, n);
}
FamilySpec FamilySpec::rook(int m, int n) {
  if (m < 1 || n < 1) fail(ErrorCode::InvalidArgument, "grid sides must be positive");
  FamilySpec spec;
  spec.kind = FamilyKind::Rook;
  spec.rows = m;
  spec.cols = n;
  return spec;
}
FamilySpec FamilySpec::single_diagonal(int n) {
  return square_spec(FamilyKind::SingleDiagonal, n);
}
FamilySpec FamilySpec::double_diagonal(int n) {
  return square_spec(FamilyKind::DoubleDiagonal, n);
}
FamilySpec FamilySpec::gerechte(int n, std::vector<std::vector<int>> region_of) {
  FamilySpec spec = square_spec(FamilyKind::Gerechte, n);
  spec.region_of = std::move(region_of);
  return spec;
}
FamilySpec FamilySpec::sudoku(int b) {
  if (b < 1) fail(ErrorCode::InvalidArgument, "box side must be positive");
  FamilySpec spec;
  spec.kind = FamilyKind::Sudoku;
  spec.rows = b * b;
  spec.cols = b * b;
  spec.box = b;
  return spec;
}
FamilySpec FamilySpec::polyomino(std::vector<std::pair<int, int>> cells) {
  FamilySpec spec;
  spec.kind = FamilyKind::Polyomino;
  spec.cells = std::move(cells);
  return spec;
}
FamilySpec FamilySpec::cube() {
  FamilySpec spec;
  spec.kind = FamilyKind::Cube;
  return spec;
}

int CellNumbering::vertex_of(int r, int c) const {
  for (std::size_t k = 0; k < cell_of.size(); ++k)
    if (cell_of[k].first == r && cell_of[k].second == c)
      return static_cast<int>(k) + 1;
  return 0;
}

std::string CellNumbering::to_text() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < cell_of.size(); ++k)
    out << "cell " << cell_of[k].first << ' ' << cell_of[k].second
        << " -> vertex " << k + 1 << '\n';
  return out.str();
}

namespace {

// Expands sudoku(b) into its gerechte box partition.
std::vector<std::vector<int>> box_partition(int b) {
  const int n = b * b;
  std::vector<std::vector<int>> region(n, std::vector<int>(n, 0));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      region[r - 1][c - 1] = ((r - 1) / b) * b + (c - 1) / b + 1;
  return region;
}

void check_partition(int n, const std::vector<std::vector<int>>& region_of) {
  if (static_cast<int>(region_of.size()) != n)
    fail(ErrorCode::InvalidPartition, "expected " + std::to_string(n) + " rows");
  std::vector<int> sizes(n + 1, 0);
  for (const auto& row : region_of) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::InvalidPartition, "expected " + std::to_string(n) +
                                            " region ids per row");
    for (int id : row) {
      if (id < 1 || id > n)
        fail(ErrorCode::InvalidPartition,
             "region id " + std::to_string(id) + " outside 1.." +
                 std::to_string(n));
      ++sizes[id];
    }
  }
  for (int id = 1; id <= n; ++id)
    if (sizes[id] != n)
      fail(ErrorCode::InvalidPartition,
           "region " + std::to_string(id) + " has " + std::to_string(sizes[id]) +
               " cells, expected " + std::to_string(n));
}

FamilyGraph grid_family(const FamilySpec& spec) {
  const int m = spec.rows, n = spec.cols;
  CellNumbering numbering;
  numbering.rows = m;
  numbering.cols = n;
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= n; ++c) numbering.cell_of.emplace_back(r, c);

  std::vector<std::vector<int>> region;
  if (spec.kind == FamilyKind::Gerechte) {
    check_partition(n, spec.region_of);
    region = spec.region_of;
  } else if (spec.kind == FamilyKind::Sudoku) {
    region = box_partition(spec.box);
  }

  const auto forbidden = [&](int r1, int c1, int r2, int c2) {
    switch (spec.kind) {
      case FamilyKind::Equi:
        return false;
      case FamilyKind::RowLatin:
        return r1 == r2;
      case FamilyKind::ColumnLatin:
        return c1 == c2;
      case FamilyKind::Rook:
        return r1 == r2 || c1 == c2;
      case FamilyKind::SingleDiagonal:
        return r1 == r2 || c1 == c2 || (r1 == c1 && r2 == c2);
      case FamilyKind::DoubleDiagonal:
        return r1 == r2 || c1 == c2 || (r1 == c1 && r2 == c2) ||
               (r1 + c1 == n + 1 && r2 + c2 == n + 1);
      case FamilyKind::Gerechte:
      case FamilyKind::Sudoku:
        return r1 == r2 || c1 == c2 ||
               region[r1 - 1][c1 - 1] == region[r2 - 1][c2 - 1];
      default:
        return false;
    }
  };

  const int v = m * n;
  std::vector<Edge> edges;
  for (int a = 1; a <= v; ++a) {
    const auto [r1, c1] = numbering.cell_of[a - 1];
    for (int b = a + 1; b <= v; ++b) {
      const auto [r2, c2] = numbering.cell_of[b - 1];
      if (forbidden(r1, c1, r2, c2)) edges.emplace_back(a, b);
    }
  }
  return FamilyGraph{Graph(v, edges), std::move(numbering)};
}

FamilyGraph polyomino_family(const FamilySpec& spec) {
  CellNumbering numbering;
  std::vector<std::pair<int, int>> cells = spec.cells;
  for (const auto& [r, c] : cells)
    if (r < 1 || c < 1)
      fail(ErrorCode::InvalidArgument, "cell coordinates must be positive");
  std::sort(cells.begin(), cells.end());
  for (std::size_t i = 1; i < cells.size(); ++i)
    if (cells[i] == cells[i - 1])
      fail(ErrorCode::DuplicateCell,
           "cell (" + std::to_string(cells[i].first) + "," +
               std::to_string(cells[i].second) + ") listed twice");
  if (cells.empty()) fail(ErrorCode::InvalidArgument, "no cells given");
  for (const auto& [r, c] : cells) {
    numbering.rows = std::max(numbering.rows, r);
    numbering.cols = std::max(numbering.cols, c);
  }
  numbering.cell_of = cells;

  const int v = static_cast<int>(cells.size());
  std::vector<Edge> edges;
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b)
      if (cells[a - 1].first == cells[b - 1].first ||
          cells[a - 1].second == cells[b - 1].second)
        edges.emplace_back(a, b);
  return FamilyGraph{Graph(v, edges), std::move(numbering)};
}

FamilyGraph cube_family() {
  // Corners of the unit cube as 3-bit strings; edges flip one bit.
  std::vector<Edge> edges;
  for (int a = 1; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b)
      if (std::popcount(static_cast<unsigned>((a - 1) ^ (b - 1))) == 1)
        edges.emplace_back(a, b);
  return FamilyGraph{Graph(8, edges), CellNumbering{}};
}

}  // namespace

FamilyGraph generate_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Polyomino:
      return polyomino_family(spec);
    case FamilyKind::Cube:
      return cube_family();
    default:
      return grid_family(spec);
  }
}

}  // namespace orthocolor
