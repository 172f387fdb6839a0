#pragma once

// Columns over [n] / [n̄], the adjacency conditions on a pair of columns C'C
// (C' on the left), Kashiwara–Nakashima columns and their splitting, and maxcol.

#include <string>
#include <string_view>
#include <vector>

#include "chargelab/weyl.hpp"

namespace chargelab {

using Column = std::vector<Letter>;

std::string to_string(const Column& column);
// Comma or space separated letters, e.g. "1,3,-3" or "1 3 3b".
Column parse_column(std::string_view text);

bool is_increasing(const Column& column);
// Entries lie in the alphabet of `type` and have distinct absolute values.
bool is_type_column(const LieType& type, const Column& column);

// Condition 1/1': for 1 <= i < l <= #C', neither C(i) = C'(l) nor
// C(i) ≺ C'(l) ≺ C'(i) in the circular order starting at C(i).
bool condition1(const LieType& type, const Column& left, const Column& right);
// Condition 2/2': C'(i) is the ≺_{C(i)}-minimum of C'(i), ..., C'(#C').
bool condition2(const LieType& type, const Column& left, const Column& right);

// int(C, C'): letters strictly between C(i) and C'(i) for some i, minus ±C(i).
Column interior(const LieType& type, const Column& left, const Column& right);

struct PairReport {
  bool condition1 = false;
  bool condition2 = false;
  bool r1 = false;  // {|C(i)|} = {|C'(i)|}
  bool r2 = false;  // C(i) <= C'(i) <= n or n̄ <= C(i) <= C'(i)
  bool r3 = false;  // int(C, C') empty
  Column interior;
};

// Requires equal heights.
PairReport check_pair_conditions(const LieType& type, const Column& left, const Column& right);

// The distance form of the definition: no z at position p and z̄ at q with
// q − p <= k − z. Requires a strictly increasing column.
bool is_kn_column(const Column& column);

struct SplitColumn {
  Column right;  // rC
  Column left;   // lC

  friend bool operator==(const SplitColumn&, const SplitColumn&) = default;
};

// Splits via the substitution sets I, J. Throws ValidationError with condition
// "kn" when J does not exist.
SplitColumn split_column(const Column& column);

// Inverse of split_column: positive part of rC together with negative part of lC.
Column unsplit(const SplitColumn& split);

// True when (right, left) is the split of a KN column.
bool is_split_column(const Column& right, const Column& left);

// Entrywise-largest sorted list <= A avoiding B, over the integers.
std::vector<int> maxcol(const std::vector<int>& a, const std::vector<int>& b);
// Same, but throws ValidationError("range") if an entry drops below `lowest`.
std::vector<int> maxcol_bounded(const std::vector<int>& a, const std::vector<int>& b, int lowest);

// |D'_-| = maxcol(|D_-|, D'_+) and D_+ = (D'_+ ∪ |D'_-|) \ |D_-|, for sorted D'D.
bool maxcol_formulas_hold(const Column& right, const Column& left);

// All KN columns of height k over [n̄], in lexicographic alphabet order.
std::vector<Column> enumerate_kn_columns(int n, int k);
// All increasing columns of height k over [n] (type A) or over [n̄] without
// pairs z, z̄ (type C).
std::vector<Column> enumerate_columns(const LieType& type, int k);

}  // namespace chargelab
