#include "chargelab/filling.hpp"

#include <algorithm>
#include <set>

#include "chargelab/errors.hpp"

namespace chargelab {

namespace {
int height(const Filling& f, int c) { return static_cast<int>(f.columns[static_cast<std::size_t>(c)].size()); }
int count(const Filling& f) { return static_cast<int>(f.columns.size()); }
}  // namespace

void validate_filling(const Filling& f) {
  for (int c = 0; c < count(f); ++c) {
    const Column& col = f.columns[static_cast<std::size_t>(c)];
    if (col.empty()) throw ValidationError("shape", "empty column in filling");
    if (!is_type_column(f.type, col))
      throw ValidationError("column", "column " + std::to_string(c + 1) + " (" + to_string(col) +
                                          ") has letters outside the alphabet or repeated absolute values");
    if (c > 0 && height(f, c) < height(f, c - 1))
      throw ValidationError("shape", "column heights must weakly increase from left to right");
  }
  if (f.type.is_c()) {
    if (count(f) % 2 != 0) throw ValidationError("shape", "type C fillings have an even number of columns");
    for (int c = 0; c < count(f); c += 2)
      if (height(f, c) != height(f, c + 1))
        throw ValidationError("shape", "columns " + std::to_string(c + 1) + " and " + std::to_string(c + 2) +
                                           " form an r/l pair and must have equal heights");
  }
  const int max_height = f.type.is_a() ? f.type.n() - 1 : f.type.n();
  if (!f.columns.empty() && height(f, count(f) - 1) > max_height)
    throw ValidationError("shape", "column taller than " + std::to_string(max_height));
}

Partition column_heights(const Filling& f) {
  Partition out;
  const int step = f.type.is_c() ? 2 : 1;
  for (int c = count(f) - 1; c >= 0; c -= step) out.push_back(height(f, c));
  return out;
}

Partition shape(const Filling& f) {
  Partition mu = conjugate(column_heights(f));
  mu.resize(static_cast<std::size_t>(f.type.n()), 0);
  return mu;
}

Filling filling_map(const MuChain& chain, const FoldingPair& fp) {
  validate_folding_pair(chain, fp);
  if (chain.parts().empty() && chain.size() > 0)
    throw ValidationError("chain", "the filling map needs a chain built from ω_k-chains");
  Filling out{chain.type(), {}};
  WeylElement current = fp.w;
  auto next_fold = fp.J.begin();
  for (const ChainPart& part : chain.parts()) {
    const auto& window = current.window();
    out.columns.emplace_back(window.begin(), window.begin() + part.height);
    for (; next_fold != fp.J.end() && *next_fold <= part.last; ++next_fold)
      current = current.times(chain.root(*next_fold));
  }
  return out;
}

Weight content(const Filling& f) {
  Weight c(static_cast<std::size_t>(f.type.n()), 0);
  for (const auto& col : f.columns)
    for (Letter x : col) c[static_cast<std::size_t>(x.abs() - 1)] += x.sign();
  if (f.type.is_c()) {
    for (int& v : c) {
      if (v % 2 != 0)
        throw ValidationError("content-parity", "type C content needs an even difference #i − #ī");
      v /= 2;
    }
  }
  return c;
}

Filling ord(const Filling& f) {
  Filling out = f;
  for (auto& col : out.columns) std::sort(col.begin(), col.end());
  return out;
}

std::vector<Cell> descents(const Filling& f) {
  std::vector<Cell> out;
  for (int c = 1; c < count(f); ++c) {
    if (f.type.is_c() && c % 2 != 0) continue;  // l-columns are never compared
    const Column& left = f.columns[static_cast<std::size_t>(c - 1)];
    const Column& col = f.columns[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < left.size(); ++i)
      if (col[i] > left[i]) out.push_back({c, static_cast<int>(i) + 1});
  }
  return out;
}

int arm(const Filling& f, Cell cell) {
  int a = 0;
  for (int c = 0; c < cell.column; ++c)
    if (height(f, c) >= cell.row) ++a;
  return a;
}

int arm_statistic(const Filling& f) {
  int total = 0;
  for (const Cell& c : descents(f)) total += arm(f, c);
  if (f.type.is_c()) {
    if (total % 2 != 0) throw InternalError("odd arm sum for a type C filling");
    total /= 2;
  }
  return total;
}

Filling reconstruct_sigma(const Filling& tau) {
  validate_filling(tau);
  if (!in_b_mu(tau)) throw ValidationError("b-mu", "input is not an element of B_mu");
  Filling sigma = tau;
  for (int c = count(tau) - 2; c >= 0; --c) {
    const Column& right = sigma.columns[static_cast<std::size_t>(c + 1)];
    Column pool = tau.columns[static_cast<std::size_t>(c)];
    Column built;
    for (std::size_t i = 0; i < tau.columns[static_cast<std::size_t>(c)].size(); ++i) {
      auto best = std::min_element(pool.begin(), pool.end(), [&](Letter x, Letter y) {
        return circ_less(tau.type, right[i], x, y);
      });
      built.push_back(*best);
      pool.erase(best);
    }
    sigma.columns[static_cast<std::size_t>(c)] = std::move(built);
  }
  return sigma;
}

bool in_b_mu(const Filling& tau) {
  try {
    validate_filling(tau);
  } catch (const ValidationError&) {
    return false;
  }
  if (tau.type.is_a())
    return std::all_of(tau.columns.begin(), tau.columns.end(), is_increasing);
  for (int c = 0; c < count(tau); c += 2)
    if (!is_split_column(tau.columns[static_cast<std::size_t>(c)], tau.columns[static_cast<std::size_t>(c + 1)]))
      return false;
  return true;
}

std::string image_violation(const Filling& sigma) {
  try {
    validate_filling(sigma);
  } catch (const ValidationError& e) {
    return e.condition();
  }
  if (!sigma.columns.empty() && !is_increasing(sigma.columns.back())) return "first-column-increasing";
  if (sigma.type.is_c()) {
    for (int c = 0; c < count(sigma); c += 2) {
      Column r = sigma.columns[static_cast<std::size_t>(c)];
      Column l = sigma.columns[static_cast<std::size_t>(c + 1)];
      std::sort(r.begin(), r.end());
      std::sort(l.begin(), l.end());
      if (!is_split_column(r, l)) return "kn-split";
    }
  }
  for (int c = 0; c + 1 < count(sigma); ++c)
    if (!condition1(sigma.type, sigma.columns[static_cast<std::size_t>(c)],
                    sigma.columns[static_cast<std::size_t>(c + 1)]))
      return "condition-1";
  return "";
}

std::vector<Filling> enumerate_b_mu(const LieType& type, const Weight& mu) {
  const Partition heights = conjugate(dominant_weight(type, mu));
  // Factors left to right: shortest column first.
  std::vector<std::vector<std::vector<Column>>> factors;
  for (auto it = heights.rbegin(); it != heights.rend(); ++it) {
    std::vector<std::vector<Column>> choices;
    if (type.is_a()) {
      for (auto& col : enumerate_columns(type, *it)) choices.push_back({col});
    } else {
      for (const auto& kn : enumerate_kn_columns(type.n(), *it)) {
        SplitColumn s = split_column(kn);
        choices.push_back({s.right, s.left});
      }
    }
    factors.push_back(std::move(choices));
  }
  std::vector<Filling> out;
  std::vector<std::size_t> index(factors.size(), 0);
  while (true) {
    Filling f{type, {}};
    for (std::size_t k = 0; k < factors.size(); ++k)
      for (const auto& col : factors[k][index[k]]) f.columns.push_back(col);
    out.push_back(std::move(f));
    std::size_t k = factors.size();
    while (k > 0 && ++index[k - 1] == factors[k - 1].size()) index[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::string pretty(const Filling& f) {
  std::size_t width = 1;
  for (const auto& col : f.columns)
    for (Letter x : col) width = std::max(width, std::to_string(x.abs()).size());
  int rows = 0;
  for (const auto& col : f.columns) rows = std::max(rows, static_cast<int>(col.size()));
  std::string out;
  for (int i = 0; i < rows; ++i) {
    std::string line;
    for (int c = 0; c < count(f); ++c) {
      if (c > 0) line += ' ';
      std::string cell;
      std::size_t visible = 0;
      if (i < height(f, c)) {
        const Letter x = f.columns[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
        cell = to_string(x);
        visible = std::to_string(x.abs()).size();
      }
      line += std::string(width - visible, ' ') + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace chargelab
