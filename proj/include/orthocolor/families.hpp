#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orthocolor/graph.hpp"

namespace orthocolor {

// Latin-structure graphs: cells of a grid, adjacent when the structure
// forbids them to share a symbol.
enum class FamilyKind {
  Equi,            // no edges
  RowLatin,        // same row
  ColumnLatin,     // same column
  Rook,            // same row or column (latin squares, latin rectangles)
  SingleDiagonal,  // rook plus all pairs on the main diagonal
  DoubleDiagonal,  // single diagonal plus all pairs on the back diagonal
  Gerechte,        // rook plus all pairs inside a partition region
  Sudoku,          // gerechte with the b x b box partition
  Polyomino,       // listed cells only, same row or column
  Cube,            // the 8-vertex 3-regular cube skeleton
};

const char* to_string(FamilyKind kind);

struct FamilySpec {
  FamilyKind kind = FamilyKind::Rook;
  int rows = 0;  // m (rook); n for square families
  int cols = 0;  // n
  int box = 0;   // b, sudoku only
  // Gerechte: region_of[r-1][c-1] in 1..n; every region gets exactly n cells.
  std::vector<std::vector<int>> region_of;
  // Polyomino: distinct (row, col) cells, any positive coordinates.
  std::vector<std::pair<int, int>> cells;

  static FamilySpec equi(int n);
  static FamilySpec row_latin(int n);
  static FamilySpec column_latin(int n);
  static FamilySpec rook(int m, int n);
  static FamilySpec single_diagonal(int n);
  static FamilySpec double_diagonal(int n);
  static FamilySpec gerechte(int n, std::vector<std::vector<int>> region_of);
  static FamilySpec sudoku(int b);
  static FamilySpec polyomino(std::vector<std::pair<int, int>> cells);
  static FamilySpec cube();
};

/// Cell <-> vertex table. Grid families use the global row-major rule
/// (r,c) -> (r-1)*cols + c; polyominoes number their cells row-major.
struct CellNumbering {
  int rows = 0;
  int cols = 0;
  std::vector<std::pair<int, int>> cell_of;  // cell_of[k-1] = (r,c) of vertex k

  int vertex_of(int r, int c) const;  // 0 when (r,c) is not a cell
  std::string to_text() const;        // "cell r c -> vertex k" lines
};

struct FamilyGraph {
  Graph graph;
  CellNumbering numbering;
};

FamilyGraph generate_family(const FamilySpec& spec);

}  // namespace orthocolor
