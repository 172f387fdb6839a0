#pragma once

// Greedy reconstruction of quantum Bruhat graph paths from target columns,
// and with it the inverse of the filling map on admissible pairs.

#include <vector>

#include "chargelab/chain.hpp"
#include "chargelab/filling.hpp"
#include "chargelab/folding.hpp"

namespace chargelab {

struct PathA {
  std::vector<RootLabel> roots;  // transpositions (i, m) in the order applied
  WeylElement end;
};

// Scans the positions in `positions` (barred positions allowed in type C) and
// applies (i, m) whenever v(i) ≺ v(m) ≺ c, stopping at the position holding c.
// Throws ValidationError("unreachable") when c never shows up.
PathA path_a(const WeylElement& u, int i, Letter c, const std::vector<Letter>& positions);

struct PathC {
  std::vector<RootLabel> head;  // T_A, from (i, k+1), ..., (i, n)
  std::vector<RootLabel> tail;  // T_C, possibly starting with (i, ī)
  WeylElement end;
};

// M(u, i, C'): ≺_{u(i)}-maximum of u(i) and the u(l), #C' < l <= n, with
// u(i) ≺ u(l) ⪯ C'(i).
Letter path_c_pivot(const WeylElement& u, int i, const Column& target);

// Requires u[i+1, k] = C'[i+1, k] with k = #C'.
PathC path_c(const WeylElement& u, int i, const Column& target);

// The admissible pair mapped to sigma. Throws ValidationError naming the
// violated image condition when sigma is outside the image.
FoldingPair inverse_filling_map(const MuChain& chain, const Filling& sigma);

}  // namespace chargelab
