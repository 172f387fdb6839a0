#pragma once

// The ω_k-chains Γ(k) and their concatenation into a μ-chain
// Γ = Γ^{μ₁} ... Γ^1 with Γ^j = Γ(μ'_j). In type C each Γ(k) is further split
// as Γ_r(k) Γ_l(k). Chain positions are 1-based throughout.

#include <string>
#include <string_view>
#include <vector>

#include "chargelab/weyl.hpp"

namespace chargelab {

using Partition = std::vector<int>;

Partition conjugate(const Partition& lambda);
std::vector<int> parse_int_list(std::string_view text);

// Validates `parts` as a dominant weight for `type` (a partition with at most
// n-1 parts in type A, at most n parts in type C) and pads it with zeros to
// length n. Throws ValidationError with condition "dominance" otherwise.
Weight dominant_weight(const LieType& type, const std::vector<int>& parts);

// Γ(k) in the order of the explicit construction.
std::vector<RootLabel> omega_chain(const LieType& type, int k);
// Type C halves: Γ_r(k) = Γ_2 ... Γ_k and Γ_l(k) = Γ_{k1} ... Γ_{kk}.
std::vector<RootLabel> omega_chain_right(const LieType& type, int k);
std::vector<RootLabel> omega_chain_left(const LieType& type, int k);
// Γ_{ki}, the i-th block of Γ_l(k).
std::vector<RootLabel> omega_chain_block(const LieType& type, int k, int i);

enum class PartKind { Whole, Right, Left };

// A factor of the μ-chain: the whole Γ^j (type A) or one of Γ_r^j, Γ_l^j.
struct ChainPart {
  int column;  // j, with 1 the longest column
  PartKind kind;
  int height;  // μ'_j
  int first;   // first position (1-based)
  int last;    // last position; last == first - 1 when empty
};

class MuChain {
 public:
  // The chain built from the explicit ω_k-chains. `mu` must be dominant.
  static MuChain build(const LieType& type, const Weight& mu);
  // An arbitrary root sequence (no factor structure); levels are still computed.
  static MuChain from_roots(const LieType& type, Weight mu, std::vector<RootLabel> roots);

  const LieType& type() const { return type_; }
  const Weight& mu() const { return mu_; }
  // μ'_1 ≥ μ'_2 ≥ ... (column heights, longest first).
  const Partition& column_heights() const { return heights_; }
  int columns() const { return static_cast<int>(heights_.size()); }

  int size() const { return static_cast<int>(roots_.size()); }
  RootLabel root(int position) const { return roots_[static_cast<std::size_t>(position - 1)]; }
  // l_i = #{j <= i : β_j = β_i}
  int level(int position) const { return levels_[static_cast<std::size_t>(position - 1)]; }
  const std::vector<RootLabel>& roots() const { return roots_; }

  // Factors in chain order (column μ₁ first).
  const std::vector<ChainPart>& parts() const { return parts_; }
  const ChainPart& part(int column, PartKind kind) const;
  // Position of `r` inside `part`, or 0 when absent. Roots are distinct within a part.
  int find(const ChainPart& part, RootLabel r) const;

 private:
  MuChain(LieType type, Weight mu) : type_(type), mu_(std::move(mu)) {}
  void compute_levels();

  LieType type_;
  Weight mu_;
  Partition heights_;
  std::vector<RootLabel> roots_;
  std::vector<int> levels_;
  std::vector<ChainPart> parts_;
};

// Bar-separated rendering: "((1,4),(1,3) | (1,4))" in type A,
// "( | (1,2̄),(1,1̄) || (1,2̄) | ...)" in type C (single bars split Γ_r/Γ_l).
std::string to_string(const MuChain& chain);

}  // namespace chargelab
