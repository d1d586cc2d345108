#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "orthocolor/coloring.hpp"
#include "orthocolor/graph.hpp"

namespace orthocolor {

/// n x n grid over symbols 1..n; every row and column is a permutation.
struct LatinSquare {
  int order = 0;
  std::vector<std::vector<int>> grid;  // grid[r-1][c-1]

  int at(int r, int c) const { return grid[r - 1][c - 1]; }
};

bool is_latin(const LatinSquare& sq);
bool squares_orthogonal(const LatinSquare& a, const LatinSquare& b);

/// Square <-> coloring of the n x n rook graph under row-major numbering.
Coloring coloring_from_square(const LatinSquare& sq);
LatinSquare square_from_coloring(const Coloring& c);

// Text form: n lines of n space-separated symbols.
std::string square_to_text(const LatinSquare& sq);
LatinSquare square_from_text(std::istream& in);

/// Squares as a coloring family over the rook graph (for the JSON format).
ColoringFamily family_from_squares(const std::vector<LatinSquare>& squares);

inline constexpr int kDefaultPrimePowerCap = 64;

bool is_prime_power(int q);

/// The classical complete set: q-1 squares L_a(i,j) = a*i + j over GF(q).
/// Field elements are encoded by coefficient vectors of the polynomial
/// representation (digits of the element index in base p, low degree
/// first), using a fixed built-in irreducible polynomial per prime power.
/// Latinness and pairwise orthogonality are asserted before returning.
std::vector<LatinSquare> finite_field_mols(int q,
                                           int cap = kDefaultPrimePowerCap);

struct MolsExtraction {
  std::vector<LatinSquare> mols;  // k-2 pairwise orthogonal squares
  LatinSquare row_square;         // entry(i,j) = i
  LatinSquare column_square;      // entry(i,j) = j
  std::vector<LatinSquare> equi_family;  // the k-2 squares plus both above
  // sigma-permuted squares with pairwise-distinct main diagonals (k-3 of
  // them, k >= 3); sigma makes the *last* extracted square constant on the
  // main diagonal.
  std::vector<LatinSquare> single_diagonal_family;
  std::vector<int> sigma;  // row permutation, sigma[i-1] = source row of row i
};

/// Reads a verified family on a graph of order n^2 as squares: entry (i,j)
/// of square m is the color the m-th coloring gives the unique vertex
/// colored i by the second-to-last and j by the last coloring.
MolsExtraction mols_from_colorings(const ColoringFamily& fam);

/// Color (u,x) of the or-product by the pair (a(u), b(x)), flattened to
/// 1..n_a*n_b. Both inputs must be total and proper; the result is checked
/// proper on or_product(g, h).
Coloring compose_colorings(const Graph& g, const Coloring& a, const Graph& h,
                           const Coloring& b);

/// min(m-1, n-1) pairwise orthogonal squares of order m*n, built by
/// composing the finite-field families along the row-major embedding of the
/// order-mn rook graph inside the or-product of the order-m and order-n
/// rook graphs. Verified before returning.
std::vector<LatinSquare> kronecker_mols(int m, int n);

}  // namespace orthocolor
