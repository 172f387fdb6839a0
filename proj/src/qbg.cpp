#include "chargelab/qbg.hpp"

#include <sstream>

namespace chargelab {

std::string to_string(EdgeKind kind) { return kind == EdgeKind::Up ? "up" : "quantum"; }

std::optional<EdgeKind> edge_by_length(const WeylElement& w, RootLabel r) {
  const int before = length(w);
  const int after = length(w.times(r));
  if (after == before + 1) return EdgeKind::Up;
  if (after == before - 2 * rho_pairing(w.type(), r) + 1) return EdgeKind::Quantum;
  return std::nullopt;
}

namespace {

std::optional<EdgeKind> diff_edge(const WeylElement& w, int i, int j) {
  const LieType& type = w.type();
  const Letter a = w.at(i);
  const Letter b = w.at(j);
  for (int k = i + 1; k < j; ++k)
    if (circ_between(type, a, w.at(k), b)) return std::nullopt;
  return a < b ? EdgeKind::Up : EdgeKind::Quantum;
}

// (i,j̄) never carries a quantum edge.
std::optional<EdgeKind> sum_edge(const WeylElement& w, int i, int j) {
  const Letter a = w.at(i);
  const Letter b = w.at(j).bar();
  if (!(a < b) || a.sign() != b.sign()) return std::nullopt;
  auto blocks = [&](Letter x) { return a < x && x < b; };
  for (int k = i + 1; k <= w.n(); ++k)
    if (blocks(w.at(k))) return std::nullopt;
  for (int k = w.n(); k > j; --k)
    if (blocks(w(Letter(-k)))) return std::nullopt;
  return EdgeKind::Up;
}

std::optional<EdgeKind> long_edge(const WeylElement& w, int i) {
  const Letter a = w.at(i);
  for (int k = i + 1; k <= w.n(); ++k)
    if (circ_between(w.type(), a, w.at(k), a.bar())) return std::nullopt;
  return a.barred() ? EdgeKind::Quantum : EdgeKind::Up;
}

}  // namespace

std::optional<EdgeKind> edge_by_criterion(const WeylElement& w, RootLabel r) {
  switch (r.kind) {
    case RootKind::Diff:
      return diff_edge(w, r.i, r.j);
    case RootKind::Sum:
      return sum_edge(w, r.i, r.j);
    case RootKind::Long:
      return long_edge(w, r.i);
  }
  return std::nullopt;
}

std::vector<QbgEdge> qbg_edges(const WeylElement& w) {
  std::vector<QbgEdge> edges;
  for (const RootLabel& r : positive_roots(w.type()))
    if (auto kind = edge_by_criterion(w, r)) edges.push_back({r, *kind});
  return edges;
}

std::string qbg_to_dot(const LieType& type) {
  std::ostringstream out;
  out << "digraph qbg_" << type.name() << " {\n";
  const auto elements = all_elements(type);
  for (const auto& w : elements) out << "  \"" << to_string(w) << "\";\n";
  for (const auto& w : elements) {
    for (const auto& e : qbg_edges(w)) {
      out << "  \"" << to_string(w) << "\" -> \"" << to_string(w.times(e.root)) << "\" [label=\""
          << to_string(e.root) << "; " << to_string(e.kind) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace chargelab
