#pragma once

// Fillings (lists of columns, left to right), the filling map f(w,T), content,
// ord, descents and arms, and the reconstruction of σ from τ = ord(σ).
//
// Type A fillings of shape μ are C^{μ₁} ... C^1 (shortest column on the left).
// Type C fillings of shape 2μ are C_r^{μ₁} C_l^{μ₁} ... C_r^1 C_l^1, so the
// columns come in (r, l) pairs.

#include <string>
#include <vector>

#include "chargelab/chain.hpp"
#include "chargelab/folding.hpp"
#include "chargelab/kn.hpp"

namespace chargelab {

struct Filling {
  LieType type;
  std::vector<Column> columns;

  friend bool operator==(const Filling&, const Filling&) = default;
};

// Checks letters, distinct absolute values per column, weakly increasing
// heights left to right, and (type C) an even number of columns paired by height.
void validate_filling(const Filling& f);

// Column heights read from the right: μ'_1, μ'_2, ... (type C: one per pair).
Partition column_heights(const Filling& f);
// The partition μ of the shape (type C: μ, not 2μ).
Partition shape(const Filling& f);

Filling filling_map(const MuChain& chain, const FoldingPair& fp);

// Type C counts (#i − #ī)/2 and throws ValidationError("content-parity") on an
// odd difference.
Weight content(const Filling& f);

Filling ord(const Filling& f);

struct Cell {
  int column;  // 0-based, from the left
  int row;     // 1-based, from the top

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Type A: C^j(i) > C^{j+1}(i), compared with the left neighbour. Type C: only
// r-columns against the l-column on their left.
std::vector<Cell> descents(const Filling& f);
// Cells strictly to the left in the same row.
int arm(const Filling& f, Cell c);
// Σ arm over descents; halved in type C.
int arm_statistic(const Filling& f);

// The unique σ with increasing rightmost column, adjacent columns satisfying
// Condition 2 and ord(σ) = τ.
Filling reconstruct_sigma(const Filling& tau);

// τ ∈ B_μ: increasing columns (type A) or split KN columns (type C).
bool in_b_mu(const Filling& tau);
// σ in the image of f on admissible pairs: increasing rightmost column,
// Condition 1 between neighbours, and (type C) sorted r/l pairs forming split
// KN columns. Returns the name of the first violated condition, or "".
std::string image_violation(const Filling& sigma);

// All of B_μ in lexicographic order of column choices.
std::vector<Filling> enumerate_b_mu(const LieType& type, const Weight& mu);

// Rows of the tableau, one line each, columns separated by spaces.
std::string pretty(const Filling& f);

}  // namespace chargelab
