#pragma once

// Independent reference computations used by the unit tests. Nothing here
// calls the library routine it is meant to check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <vector>

#include "chargelab/poly.hpp"
#include "chargelab/weyl.hpp"

namespace chargelab {
inline void PrintTo(Family f, std::ostream* os) { *os << (f == Family::A ? "A" : "C"); }
}  // namespace chargelab

namespace oracle {

using namespace chargelab;

// Word length by breadth-first search over the simple reflections.
inline std::map<std::vector<Letter>, int> bfs_lengths(const LieType& type) {
  std::vector<RootLabel> simple;
  for (int i = 1; i < type.n(); ++i) simple.push_back(RootLabel::diff(i, i + 1));
  if (type.is_c()) simple.push_back(RootLabel::twice(type.n()));
  std::map<std::vector<Letter>, int> dist;
  std::deque<WeylElement> queue{WeylElement::identity(type)};
  dist[queue.front().window()] = 0;
  while (!queue.empty()) {
    const WeylElement w = queue.front();
    queue.pop_front();
    for (RootLabel s : simple) {
      const WeylElement v = w.times(s);
      if (dist.emplace(v.window(), dist[w.window()] + 1).second) queue.push_back(v);
    }
  }
  return dist;
}

// One-line notation on the full circle of positions 1..n, n̄..1̄, as ranks.
inline std::vector<int> full_ranks(const WeylElement& w) {
  const int n = w.n();
  std::vector<Letter> positions;
  for (int i = 1; i <= n; ++i) positions.emplace_back(i);
  if (w.type().is_c())
    for (int i = n; i >= 1; --i) positions.emplace_back(-i);
  std::vector<int> out;
  for (Letter p : positions) {
    const Letter v = w(p);
    out.push_back(v.barred() ? 2 * n + 1 - v.abs() : v.value());
  }
  return out;
}

// Ehresmann tableau criterion; type C uses the embedding into S_2n.
inline bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
  const auto a = full_ranks(u), b = full_ranks(v);
  for (std::size_t k = 1; k <= a.size(); ++k) {
    std::vector<int> x(a.begin(), a.begin() + static_cast<long>(k)), y(b.begin(), b.begin() + static_cast<long>(k));
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (std::size_t i = 0; i < k; ++i)
      if (x[i] > y[i]) return false;
  }
  return true;
}

inline std::int64_t binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::int64_t r = 1;
  for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
  return r;
}

inline std::vector<int> conjugate(const std::vector<int>& lambda) {
  std::vector<int> out;
  for (int row = 1; !lambda.empty() && row <= lambda.front(); ++row)
    out.push_back(static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [&](int p) { return p >= row; })));
  return out;
}

// |B_μ|: a product over the columns of μ.
inline std::int64_t b_mu_size(const LieType& type, const std::vector<int>& mu) {
  std::int64_t total = 1;
  const int n = type.n();
  for (int k : conjugate(mu))
    total *= type.is_a() ? binomial(n, k) : binomial(2 * n, k) - binomial(2 * n, k - 2);
  return total;
}

// q-polynomials as coefficient vectors.
using QPoly = std::vector<std::int64_t>;

inline QPoly qmul(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// [a choose b]_q via the q-Pascal rule.
inline QPoly qbinomial(int a, int b) {
  if (b < 0 || b > a) return {0};
  if (b == 0 || b == a) return {1};
  QPoly left = qbinomial(a - 1, b - 1), right = qbinomial(a - 1, b);
  QPoly out(std::max(left.size(), right.size() + static_cast<std::size_t>(b)), 0);
  for (std::size_t i = 0; i < left.size(); ++i) out[i] += left[i];
  for (std::size_t i = 0; i < right.size(); ++i) out[i + static_cast<std::size_t>(b)] += right[i];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

inline QPoly qmultinomial(const std::vector<int>& parts) {
  QPoly out{1};
  int total = 0;
  for (int p : parts) {
    total += p;
    out = qmul(out, qbinomial(total, p));
  }
  return out;
}

// Schur polynomial in n variables by enumerating semistandard tableaux.
inline void fill_ssyt(const std::vector<int>& lambda, int n, std::size_t cell, std::vector<std::vector<int>>& t,
                      LaurentPoly& out) {
  std::size_t row = 0, col = 0, seen = 0;
  for (; row < lambda.size(); ++row) {
    if (cell < seen + static_cast<std::size_t>(lambda[row])) {
      col = cell - seen;
      break;
    }
    seen += static_cast<std::size_t>(lambda[row]);
  }
  if (row == lambda.size()) {
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (const auto& r : t)
      for (int v : r) ++x[static_cast<std::size_t>(v - 1)];
    out.add_term(0, x, 1);
    return;
  }
  int low = 1;
  if (col > 0) low = std::max(low, t[row][col - 1]);
  if (row > 0) low = std::max(low, t[row - 1][col] + 1);
  for (int v = low; v <= n; ++v) {
    t[row][col] = v;
    fill_ssyt(lambda, n, cell + 1, t, out);
  }
}

inline LaurentPoly schur(const std::vector<int>& lambda, int n) {
  LaurentPoly out(n);
  std::vector<std::vector<int>> t;
  for (int p : lambda) t.emplace_back(static_cast<std::size_t>(p), 0);
  fill_ssyt(lambda, n, 0, t, out);
  return out;
}

// Weyl dimension formula Π ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩, with the coroots written out.
inline std::int64_t weyl_dimension(const LieType& type, const std::vector<int>& lambda) {
  const int n = type.n();
  std::vector<double> l(static_cast<std::size_t>(n), 0), r(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < lambda.size(); ++i) l[i] = lambda[i];
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n - i;
  double num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= (l[i] + r[i]) - (l[j] + r[j]);
      den *= r[i] - r[j];
      if (type.is_c()) {
        num *= (l[i] + r[i]) + (l[j] + r[j]);
        den *= r[i] + r[j];
      }
    }
  if (type.is_c())
    for (int i = 0; i < n; ++i) {
      num *= l[i] + r[i];
      den *= r[i];
    }
  return static_cast<std::int64_t>(num / den + 0.5);
}

// All partitions with |λ| in [1, max_size] and at most max_parts parts.
inline void partitions(int remaining, int largest, int max_parts, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int p = std::min(remaining, largest); p >= 1; --p) {
    cur.push_back(p);
    partitions(remaining - p, p, max_parts, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions_up_to(int max_size, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int s = 1; s <= max_size; ++s) partitions(s, s, max_parts, cur, out);
  return out;
}

}  // namespace oracle
