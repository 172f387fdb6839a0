#include "chargelab/chain.hpp"

#include <algorithm>

#include "chargelab/errors.hpp"

namespace chargelab {

Partition conjugate(const Partition& lambda) {
  Partition out;
  const int first = lambda.empty() ? 0 : lambda.front();
  for (int c = 1; c <= first; ++c) {
    int h = 0;
    for (int part : lambda)
      if (part >= c) ++h;
    out.push_back(h);
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ValidationError("syntax", "not an integer: '" + token + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') flush();
    else token += ch;
  }
  flush();
  return out;
}

Weight dominant_weight(const LieType& type, const std::vector<int>& parts) {
  std::vector<int> mu = parts;
  while (!mu.empty() && mu.back() == 0) mu.pop_back();
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] < 0) throw ValidationError("dominance", "negative part in mu");
    if (k > 0 && mu[k] > mu[k - 1])
      throw ValidationError("dominance", "mu is not a partition (parts must be weakly decreasing)");
  }
  const int max_parts = type.is_a() ? type.n() - 1 : type.n();
  if (static_cast<int>(mu.size()) > max_parts)
    throw ValidationError("dominance", "mu has more than " + std::to_string(max_parts) +
                                           " nonzero parts for type " + type.name());
  mu.resize(static_cast<std::size_t>(type.n()), 0);
  return mu;
}

std::vector<RootLabel> omega_chain_block(const LieType& type, int k, int i) {
  const int n = type.n();
  std::vector<RootLabel> out;
  for (int a = 1; a < i; ++a) out.push_back(RootLabel::sum(a, i));
  for (int m = k + 1; m <= n; ++m) out.push_back(RootLabel::sum(i, m));
  out.push_back(RootLabel::twice(i));
  for (int m = n; m > k; --m) out.push_back(RootLabel::diff(i, m));
  return out;
}

std::vector<RootLabel> omega_chain_right(const LieType& type, int k) {
  if (!type.is_c()) throw ValidationError("type", "Γ_r(k) exists only in type C");
  if (k < 1 || k > type.n()) throw ValidationError("range", "k out of range");
  std::vector<RootLabel> out;
  for (int i = 2; i <= k; ++i)
    for (int a = 1; a < i; ++a) out.push_back(RootLabel::sum(a, i));
  return out;
}

std::vector<RootLabel> omega_chain_left(const LieType& type, int k) {
  if (!type.is_c()) throw ValidationError("type", "Γ_l(k) exists only in type C");
  if (k < 1 || k > type.n()) throw ValidationError("range", "k out of range");
  std::vector<RootLabel> out;
  for (int i = 1; i <= k; ++i) {
    auto block = omega_chain_block(type, k, i);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<RootLabel> omega_chain(const LieType& type, int k) {
  const int n = type.n();
  if (type.is_a()) {
    if (k < 1 || k > n - 1)
      throw ValidationError("range", "type A needs 1 <= k <= n-1, got k=" + std::to_string(k));
    std::vector<RootLabel> out;
    for (int i = 1; i <= k; ++i)
      for (int m = n; m > k; --m) out.push_back(RootLabel::diff(i, m));
    return out;
  }
  if (k < 1 || k > n)
    throw ValidationError("range", "type C needs 1 <= k <= n, got k=" + std::to_string(k));
  auto out = omega_chain_right(type, k);
  auto left = omega_chain_left(type, k);
  out.insert(out.end(), left.begin(), left.end());
  return out;
}

MuChain MuChain::build(const LieType& type, const Weight& mu) {
  Weight padded = dominant_weight(type, mu);
  MuChain chain(type, padded);
  chain.heights_ = conjugate(padded);
  const int mu1 = chain.columns();
  for (int j = mu1; j >= 1; --j) {
    const int k = chain.heights_[static_cast<std::size_t>(j - 1)];
    auto append = [&](PartKind kind, const std::vector<RootLabel>& roots) {
      const int first = chain.size() + 1;
      chain.roots_.insert(chain.roots_.end(), roots.begin(), roots.end());
      chain.parts_.push_back({j, kind, k, first, chain.size()});
    };
    if (type.is_a()) {
      append(PartKind::Whole, omega_chain(type, k));
    } else {
      append(PartKind::Right, omega_chain_right(type, k));
      append(PartKind::Left, omega_chain_left(type, k));
    }
  }
  chain.compute_levels();
  return chain;
}

MuChain MuChain::from_roots(const LieType& type, Weight mu, std::vector<RootLabel> roots) {
  if (mu.size() != static_cast<std::size_t>(type.n()))
    throw ValidationError("weight", "weight must have n coordinates");
  for (const auto& r : roots)
    if (!root_valid(type, r)) throw ValidationError("root", "invalid root " + to_string(r));
  MuChain chain(type, std::move(mu));
  chain.roots_ = std::move(roots);
  chain.compute_levels();
  return chain;
}

void MuChain::compute_levels() {
  levels_.assign(roots_.size(), 0);
  for (std::size_t p = 0; p < roots_.size(); ++p)
    levels_[p] = static_cast<int>(
        std::count(roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(p) + 1, roots_[p]));
}

const ChainPart& MuChain::part(int column, PartKind kind) const {
  for (const auto& p : parts_)
    if (p.column == column && p.kind == kind) return p;
  throw ValidationError("chain", "no chain factor for column " + std::to_string(column));
}

int MuChain::find(const ChainPart& part, RootLabel r) const {
  for (int pos = part.first; pos <= part.last; ++pos)
    if (root(pos) == r) return pos;
  return 0;
}

std::string to_string(const MuChain& chain) {
  auto join = [&](int first, int last) {
    std::string s;
    for (int pos = first; pos <= last; ++pos) {
      if (pos > first) s += ',';
      s += to_string(chain.root(pos));
    }
    return s;
  };
  if (chain.parts().empty()) return "(" + join(1, chain.size()) + ")";
  std::string out = "(";
  const auto& parts = chain.parts();
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (p > 0) {
      const bool inner = parts[p].kind == PartKind::Left;
      out += inner || chain.type().is_a() ? " | " : " || ";
    }
    out += join(parts[p].first, parts[p].last);
  }
  out += ")";
  return out;
}

}  // namespace chargelab
