#include "chargelab/folding.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "chargelab/errors.hpp"

namespace chargelab {

void validate_folding_pair(const MuChain& chain, const FoldingPair& fp) {
  if (!(fp.w.type() == chain.type()))
    throw ValidationError("type", "Weyl element and chain have different types");
  for (std::size_t k = 0; k < fp.J.size(); ++k) {
    const int j = fp.J[k];
    if (j < 1 || j > chain.size())
      throw ValidationError("positions", "position " + std::to_string(j) + " outside the chain");
    if (k > 0 && fp.J[k - 1] >= j)
      throw ValidationError("positions", "J must be strictly increasing");
  }
}

FoldedChain fold_chain(const MuChain& chain, const FoldingPair& fp) {
  validate_folding_pair(chain, fp);
  FoldedChain out;
  out.elements.push_back(fp.w);
  int prev_len = length(fp.w);
  for (int j : fp.J) {
    WeylElement next = out.elements.back().times(chain.root(j));
    const int len = length(next);
    const FoldSign sign = len < prev_len ? FoldSign::Positive : FoldSign::Negative;
    out.signs.push_back(sign);
    (sign == FoldSign::Positive ? out.positive : out.negative).push_back(j);
    out.elements.push_back(std::move(next));
    prev_len = len;
  }
  return out;
}

Weight weight_of(const MuChain& chain, const FoldingPair& fp) {
  validate_folding_pair(chain, fp);
  const LieType& type = chain.type();
  Weight lambda = chain.mu();
  for (auto it = fp.J.rbegin(); it != fp.J.rend(); ++it) {
    const RootLabel beta = chain.root(*it);
    const int c = coroot_pairing(type, lambda, beta) - chain.level(*it);
    const Weight b = root_vector(type, beta);
    for (std::size_t k = 0; k < lambda.size(); ++k) lambda[k] -= c * b[k];
  }
  return fp.w.act(lambda);
}

int level_of(const MuChain& chain, const FoldingPair& fp) {
  int level = 0;
  for (int j : fold_chain(chain, fp).negative) level += chain.level(j);
  return level;
}

bool is_admissible_by_identity(const MuChain& chain, const FoldingPair& fp) {
  const FoldedChain folded = fold_chain(chain, fp);
  int total = length(fp.w) + length(folded.end()) - static_cast<int>(fp.J.size());
  for (int j : folded.negative) total += 2 * rho_pairing(chain.type(), chain.root(j));
  return total == 0;
}

bool is_admissible_by_path(const MuChain& chain, const FoldingPair& fp) {
  validate_folding_pair(chain, fp);
  // Walk backwards from the end, which must be the identity.
  WeylElement v = WeylElement::identity(chain.type());
  for (auto it = fp.J.rbegin(); it != fp.J.rend(); ++it) {
    const RootLabel r = chain.root(*it);
    if (!edge_by_criterion(v, r)) return false;
    v = v.times(r);
  }
  return v == fp.w;
}

namespace {

struct Node {
  int position;  // next position to decide; 0 means done
  WeylElement v;
  std::vector<int> taken;  // decreasing
};

FoldingPair emit(const Node& node) {
  return {node.v, std::vector<int>(node.taken.rbegin(), node.taken.rend())};
}

// Children in a fixed order: skip first, then take.
template <class F>
void expand(const MuChain& chain, const Node& node, F&& push) {
  const int j = node.position;
  push(Node{j - 1, node.v, node.taken});
  const RootLabel r = chain.root(j);
  if (edge_by_criterion(node.v, r)) {
    Node taken{j - 1, node.v.times(r), node.taken};
    taken.taken.push_back(j);
    push(std::move(taken));
  }
}

void dfs(const MuChain& chain, Node& node, const std::function<void(const FoldingPair&)>& visit) {
  if (node.position == 0) {
    visit(emit(node));
    return;
  }
  const int j = node.position;
  node.position = j - 1;
  dfs(chain, node, visit);
  const RootLabel r = chain.root(j);
  if (edge_by_criterion(node.v, r)) {
    WeylElement saved = node.v;
    node.v = node.v.times(r);
    node.taken.push_back(j);
    dfs(chain, node, visit);
    node.taken.pop_back();
    node.v = std::move(saved);
  }
  node.position = j;
}

}  // namespace

void for_each_admissible(const MuChain& chain, const std::function<void(const FoldingPair&)>& visit) {
  Node root{chain.size(), WeylElement::identity(chain.type()), {}};
  dfs(chain, root, visit);
}

std::vector<FoldingPair> enumerate_admissible(const MuChain& chain, int jobs) {
  std::vector<FoldingPair> out;
  if (jobs <= 1) {
    for_each_admissible(chain, [&](const FoldingPair& fp) { out.push_back(fp); });
    return out;
  }
  // Breadth-first split of the top of the tree, preserving DFS order.
  std::vector<Node> frontier{Node{chain.size(), WeylElement::identity(chain.type()), {}}};
  const std::size_t target = static_cast<std::size_t>(jobs) * 8;
  while (frontier.size() < target) {
    if (std::none_of(frontier.begin(), frontier.end(), [](const Node& n) { return n.position > 0; }))
      break;
    std::vector<Node> next;
    for (const Node& node : frontier) {
      if (node.position == 0) next.push_back(node);
      else expand(chain, node, [&](Node child) { next.push_back(std::move(child)); });
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<FoldingPair>> pieces(frontier.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t k; (k = cursor.fetch_add(1)) < frontier.size();)
      dfs(chain, frontier[k], [&](const FoldingPair& fp) { pieces[k].push_back(fp); });
  };
  std::vector<std::jthread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
  threads.clear();
  for (auto& piece : pieces) out.insert(out.end(), piece.begin(), piece.end());
  return out;
}

}  // namespace chargelab
