#include "chargelab/kn.hpp"

#include <algorithm>
#include <set>

#include "chargelab/errors.hpp"

namespace chargelab {

std::string to_string(const Column& column) {
  std::string s;
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (i > 0) s += ',';
    s += to_string(column[i]);
  }
  return s;
}

Column parse_column(std::string_view text) {
  Column out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_letter(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ') flush();
    else token += ch;
  }
  flush();
  return out;
}

bool is_increasing(const Column& column) {
  return std::adjacent_find(column.begin(), column.end(),
                            [](Letter a, Letter b) { return !(a < b); }) == column.end();
}

bool is_type_column(const LieType& type, const Column& column) {
  std::set<int> seen;
  for (Letter x : column)
    if (!letter_in_alphabet(type, x) || !seen.insert(x.abs()).second) return false;
  return true;
}

bool condition1(const LieType& type, const Column& left, const Column& right) {
  const std::size_t h = left.size();
  if (right.size() < h) return false;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t l = i + 1; l < h; ++l) {
      if (right[i] == left[l]) return false;
      if (right[i] != left[i] && circ_between(type, right[i], left[l], left[i])) return false;
    }
  return true;
}

bool condition2(const LieType& type, const Column& left, const Column& right) {
  const std::size_t h = left.size();
  if (right.size() < h) return false;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t l = i + 1; l < h; ++l)
      if (circ_less(type, right[i], left[l], left[i])) return false;
  return true;
}

namespace {
std::vector<Letter> alphabet(const LieType& type) {
  std::vector<Letter> out;
  for (int v = 1; v <= type.n(); ++v) out.emplace_back(v);
  if (type.is_c())
    for (int v = type.n(); v >= 1; --v) out.emplace_back(-v);
  return out;
}
}  // namespace

Column interior(const LieType& type, const Column& left, const Column& right) {
  Column out;
  for (Letter x : alphabet(type)) {
    bool inside = false;
    for (std::size_t i = 0; i < std::min(left.size(), right.size()); ++i)
      if (right[i] < x && x < left[i]) inside = true;
    const bool excluded = std::any_of(right.begin(), right.end(),
                                      [&](Letter c) { return c.abs() == x.abs(); });
    if (inside && !excluded) out.push_back(x);
  }
  return out;
}

PairReport check_pair_conditions(const LieType& type, const Column& left, const Column& right) {
  if (left.size() != right.size())
    throw ValidationError("height", "column pair must have equal heights");
  PairReport report;
  report.condition1 = condition1(type, left, right);
  report.condition2 = condition2(type, left, right);
  std::vector<int> a, b;
  for (Letter x : right) a.push_back(x.abs());
  for (Letter x : left) b.push_back(x.abs());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  report.r1 = a == b;
  report.r2 = true;
  for (std::size_t i = 0; i < left.size(); ++i) {
    const Letter c = right[i], cp = left[i];
    const bool positive = c <= cp && !cp.barred();
    const bool negative = c.barred() && c <= cp;
    if (!positive && !negative) report.r2 = false;
  }
  report.interior = interior(type, left, right);
  report.r3 = report.interior.empty();
  return report;
}

bool is_kn_column(const Column& column) {
  if (!is_increasing(column)) throw ValidationError("column", "KN test needs an increasing column");
  const int k = static_cast<int>(column.size());
  for (int p = 0; p < k; ++p) {
    if (column[p].barred()) continue;
    const int z = column[p].value();
    for (int q = p + 1; q < k; ++q)
      if (column[q] == Letter(-z) && q - p <= k - z) return false;
  }
  return true;
}

SplitColumn split_column(const Column& column) {
  if (!is_increasing(column)) throw ValidationError("column", "split needs an increasing column");
  auto contains = [&](int v) { return std::find(column.begin(), column.end(), Letter(v)) != column.end(); };
  std::vector<int> pairs;  // I, decreasing
  for (auto it = column.rbegin(); it != column.rend(); ++it)
    if (!it->barred() && contains(-it->value())) pairs.push_back(it->value());
  std::vector<int> ts;
  int bound = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int limit = i == 0 ? pairs[i] : std::min(bound, pairs[i]);
    int t = limit - 1;
    while (t >= 1 && (contains(t) || contains(-t))) --t;
    if (t < 1)
      throw ValidationError("kn", "column " + to_string(column) + " cannot be split");
    ts.push_back(t);
    bound = t;
  }
  SplitColumn out{column, column};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::replace(out.right.begin(), out.right.end(), Letter(-pairs[i]), Letter(-ts[i]));
    std::replace(out.left.begin(), out.left.end(), Letter(pairs[i]), Letter(ts[i]));
  }
  std::sort(out.right.begin(), out.right.end());
  std::sort(out.left.begin(), out.left.end());
  return out;
}

Column unsplit(const SplitColumn& split) {
  Column out;
  for (Letter x : split.right)
    if (!x.barred()) out.push_back(x);
  for (Letter x : split.left)
    if (x.barred()) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_split_column(const Column& right, const Column& left) {
  if (right.size() != left.size() || !is_increasing(right) || !is_increasing(left)) return false;
  const Column d = unsplit({right, left});
  if (d.size() != right.size() || !is_increasing(d)) return false;
  try {
    return split_column(d) == SplitColumn{right, left};
  } catch (const ValidationError&) {
    return false;
  }
}

std::vector<int> maxcol(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  const std::set<int> avoid(b.begin(), b.end());
  for (std::size_t idx = a.size(); idx-- > 0;) {
    int x = a[idx];
    if (idx + 1 < a.size()) x = std::min(x, c[idx + 1] - 1);
    while (avoid.count(x)) --x;
    c[idx] = x;
  }
  return c;
}

std::vector<int> maxcol_bounded(const std::vector<int>& a, const std::vector<int>& b, int lowest) {
  auto c = maxcol(a, b);
  if (!c.empty() && c.front() < lowest)
    throw ValidationError("range", "maxcol leaves the alphabet (entry " + std::to_string(c.front()) + ")");
  return c;
}

bool maxcol_formulas_hold(const Column& right, const Column& left) {
  std::vector<int> rp, rm, lp, lm;  // D'_+, |D'_-|, D_+, |D_-|
  for (Letter x : right) (x.barred() ? rm : rp).push_back(x.abs());
  for (Letter x : left) (x.barred() ? lm : lp).push_back(x.abs());
  for (auto* v : {&rp, &rm, &lp, &lm}) std::sort(v->begin(), v->end());
  if (maxcol(lm, rp) != rm) return false;
  std::set<int> plus(rp.begin(), rp.end());
  plus.insert(rm.begin(), rm.end());
  for (int x : lm) plus.erase(x);
  return std::vector<int>(plus.begin(), plus.end()) == lp;
}

namespace {
void choose(const std::vector<Letter>& letters, std::size_t start, int k, Column& current,
            std::vector<Column>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i + static_cast<std::size_t>(k) <= letters.size(); ++i) {
    current.push_back(letters[i]);
    choose(letters, i + 1, k - 1, current, out);
    current.pop_back();
  }
}
}  // namespace

std::vector<Column> enumerate_kn_columns(int n, int k) {
  const LieType type(Family::C, n);
  if (k < 1 || k > n) throw ValidationError("range", "KN column height must be in [1, n]");
  std::vector<Column> all, out;
  Column current;
  choose(alphabet(type), 0, k, current, all);
  for (auto& c : all)
    if (is_kn_column(c)) out.push_back(std::move(c));
  return out;
}

std::vector<Column> enumerate_columns(const LieType& type, int k) {
  std::vector<Column> all, out;
  Column current;
  choose(alphabet(type), 0, k, current, all);
  for (auto& c : all)
    if (is_type_column(type, c)) out.push_back(std::move(c));
  return out;
}

}  // namespace chargelab
