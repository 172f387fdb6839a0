#pragma once

// Quantum Bruhat graph on the Weyl group. Edges w -> w s_α are computed on
// demand, either from lengths (the definition) or from the circular-order and
// sign criteria, which avoid computing lengths.

#include <optional>
#include <string>
#include <vector>

#include "chargelab/weyl.hpp"

namespace chargelab {

enum class EdgeKind { Up, Quantum };

std::string to_string(EdgeKind kind);

// Up iff ℓ(w s_α) = ℓ(w) + 1; Quantum iff ℓ(w s_α) = ℓ(w) − 2⟨ρ,α∨⟩ + 1.
std::optional<EdgeKind> edge_by_length(const WeylElement& w, RootLabel r);

// Same contract as edge_by_length, decided by positions and values only.
std::optional<EdgeKind> edge_by_criterion(const WeylElement& w, RootLabel r);

struct QbgEdge {
  RootLabel root;
  EdgeKind kind;
};

// Every outgoing edge of w, in positive_roots order.
std::vector<QbgEdge> qbg_edges(const WeylElement& w);

// Whole-graph export. Materializes |W| nodes, so only meant for small rank.
std::string qbg_to_dot(const LieType& type);

}  // namespace chargelab
