#pragma once

// Charge words and the charge statistic in types A and C.
//
// Column labels are encoded as integers: in type A the label j of the j-th
// column from the right; in type C the labels 1 < 1' < 2 < 2' < ... become
// 1, 2, 3, 4, ... (j -> 2j−1, j' -> 2j), so l-columns get odd codes.

#include <string>
#include <vector>

#include "chargelab/filling.hpp"

namespace chargelab {

struct Biletter {
  Letter top;
  int label;
};

std::string label_to_string(const LieType& type, int label);

// Biletters sorted by decreasing top letter, then decreasing label.
std::vector<Biletter> charge_word(const Filling& tau);
std::vector<int> bottom_word(const std::vector<Biletter>& word);

struct ChargeTrace {
  std::vector<int> iteration;  // per letter of the word, 1-based
  std::vector<int> per_iteration;
  int charge = 0;
};

// Lascoux–Schützenberger charge of a word with partition content.
// Throws ValidationError("partition-content") otherwise.
ChargeTrace ls_charge_traced(const std::vector<int>& word);
int ls_charge(const std::vector<int>& word);
std::vector<int> parse_word(const std::string& text);

// The type C charge of an encoded word (see above). Throws
// ValidationError("charge-order") when a selected j' lies right of the
// previously selected j.
ChargeTrace charge_c_traced(const std::vector<int>& word);

// Charge of τ ∈ B_μ via its charge word, dispatching on type.
ChargeTrace charge_traced(const Filling& tau);
int charge_A(const Filling& tau);
int charge_C(const Filling& tau);
int charge(const Filling& tau);

// Two-line rendering of cw(τ) with iteration indices, e.g. "6 5 ...\n1_3 1_2 ...".
std::string render_biword(const LieType& type, const std::vector<Biletter>& word, const ChargeTrace& trace);

}  // namespace chargelab
