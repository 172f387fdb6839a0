#pragma once

// Folding pairs (w, J) over a μ-chain: the folded chain π(w,J), fold signs,
// weight, level, admissibility and enumeration of the admissible set.

#include <functional>
#include <vector>

#include "chargelab/chain.hpp"
#include "chargelab/qbg.hpp"
#include "chargelab/weyl.hpp"

namespace chargelab {

struct FoldingPair {
  WeylElement w;
  std::vector<int> J;  // strictly increasing chain positions

  friend bool operator==(const FoldingPair&, const FoldingPair&) = default;
};

enum class FoldSign { Positive, Negative };

struct FoldedChain {
  std::vector<WeylElement> elements;  // w_0, ..., w_s
  std::vector<FoldSign> signs;        // sign of j_1, ..., j_s
  std::vector<int> positive;          // J⁺
  std::vector<int> negative;          // J⁻

  const WeylElement& end() const { return elements.back(); }
};

// Throws ValidationError when J is not strictly increasing inside [1, m] or
// the types differ.
void validate_folding_pair(const MuChain& chain, const FoldingPair& fp);

FoldedChain fold_chain(const MuChain& chain, const FoldingPair& fp);

// w r̂_{j_1} ... r̂_{j_s}(μ), with r̂_j : λ ↦ λ − (⟨λ,β_j∨⟩ − l_j) β_j.
Weight weight_of(const MuChain& chain, const FoldingPair& fp);

// Σ_{j ∈ J⁻} l_j
int level_of(const MuChain& chain, const FoldingPair& fp);

// The defining identity ℓ(w) + ℓ(end) − #J + 2 Σ_{J⁻} ⟨ρ,β_j∨⟩ = 0.
bool is_admissible_by_identity(const MuChain& chain, const FoldingPair& fp);
// end(w,J) = 1 and every step w_i → w_{i−1} is a quantum Bruhat graph edge.
bool is_admissible_by_path(const MuChain& chain, const FoldingPair& fp);
inline bool is_admissible(const MuChain& chain, const FoldingPair& fp) {
  return is_admissible_by_path(chain, fp);
}

// Streams the admissible pairs by a depth-first search from the identity over
// positions m, m−1, ..., 1. The callback runs on the calling thread.
void for_each_admissible(const MuChain& chain, const std::function<void(const FoldingPair&)>& visit);

// Same set, collected. With jobs > 1 the search tree is split at the top and
// the pieces are explored in parallel; the result order does not depend on jobs.
std::vector<FoldingPair> enumerate_admissible(const MuChain& chain, int jobs = 1);

}  // namespace chargelab
