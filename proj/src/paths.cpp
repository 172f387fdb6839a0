#include "chargelab/paths.hpp"

#include <algorithm>

#include "chargelab/errors.hpp"

namespace chargelab {

PathA path_a(const WeylElement& u, int i, Letter c, const std::vector<Letter>& positions) {
  const LieType& type = u.type();
  PathA out{{}, u};
  if (u.at(i) == c) return out;
  WeylElement& v = out.end;
  for (Letter m : positions) {
    const RootLabel r = root_exchanging(i, m);
    if (v(m) == c) {
      out.roots.push_back(r);
      v = v.times(r);
      return out;
    }
    if (circ_between(type, v.at(i), v(m), c)) {
      out.roots.push_back(r);
      v = v.times(r);
    }
  }
  throw ValidationError("unreachable", "entry " + to_string(c) + " cannot be moved into position " +
                                           std::to_string(i));
}

Letter path_c_pivot(const WeylElement& u, int i, const Column& target) {
  const LieType& type = u.type();
  const Letter origin = u.at(i);
  const Letter goal = target[static_cast<std::size_t>(i - 1)];
  Letter best = origin;
  for (int l = static_cast<int>(target.size()) + 1; l <= u.n(); ++l) {
    const Letter x = u.at(l);
    const bool below_goal = x == goal || circ_less(type, origin, x, goal);
    if (circ_less(type, origin, origin, x) && below_goal && circ_less(type, origin, best, x)) best = x;
  }
  return best;
}

PathC path_c(const WeylElement& u, int i, const Column& target) {
  const int k = static_cast<int>(target.size());
  if (i < 1 || i > k) throw ValidationError("range", "row index outside the column");
  for (int l = i + 1; l <= k; ++l)
    if (u.at(l) != target[static_cast<std::size_t>(l - 1)])
      throw ValidationError("path-c", "rows below i must already agree with the target column");
  const int n = u.n();
  const Letter goal = target[static_cast<std::size_t>(i - 1)];

  std::vector<Letter> stage1;
  for (int m = k + 1; m <= n; ++m) stage1.emplace_back(m);
  PathA a = path_a(u, i, path_c_pivot(u, i, target), stage1);

  PathC out{std::move(a.roots), {}, std::move(a.end)};
  if (out.end.at(i).sign() != goal.sign()) {
    out.tail.push_back(RootLabel::twice(i));
    out.end = out.end.times(RootLabel::twice(i));
  }
  std::vector<Letter> stage3;
  for (int m = n; m > k; --m) stage3.emplace_back(-m);
  for (int m = i - 1; m >= 1; --m) stage3.emplace_back(-m);
  PathA b = path_a(out.end, i, goal, stage3);
  out.tail.insert(out.tail.end(), b.roots.begin(), b.roots.end());
  out.end = std::move(b.end);
  return out;
}

namespace {

void collect(const MuChain& chain, const ChainPart& part, const std::vector<RootLabel>& roots,
             const std::string& condition, std::vector<int>& reversed) {
  for (const RootLabel& r : roots) {
    const int pos = chain.find(part, r);
    if (pos == 0)
      throw ValidationError(condition, "reflection " + to_string(r) + " is not available in column " +
                                           std::to_string(part.column));
    reversed.push_back(pos);
  }
}

}  // namespace

FoldingPair inverse_filling_map(const MuChain& chain, const Filling& sigma) {
  if (!(sigma.type == chain.type())) throw ValidationError("type", "filling and chain have different types");
  if (const std::string bad = image_violation(sigma); !bad.empty())
    throw ValidationError(bad, "filling is outside the image of the filling map (" + bad + ")");
  const int mu1 = chain.columns();
  const int per = chain.type().is_a() ? 1 : 2;
  if (static_cast<int>(sigma.columns.size()) != per * mu1)
    throw ValidationError("shape", "filling shape does not match the chain");

  WeylElement u = WeylElement::identity(chain.type());
  std::vector<int> reversed;
  auto column = [&](int j, int offset) -> const Column& {
    const Column& c = sigma.columns[static_cast<std::size_t>(per * (mu1 - j) + offset)];
    if (static_cast<int>(c.size()) != chain.column_heights()[static_cast<std::size_t>(j - 1)])
      throw ValidationError("shape", "filling shape does not match the chain");
    return c;
  };

  for (int j = 1; j <= mu1; ++j) {
    if (chain.type().is_a()) {
      const Column& c = column(j, 0);
      const int k = static_cast<int>(c.size());
      std::vector<Letter> positions;
      for (int m = k + 1; m <= chain.type().n(); ++m) positions.emplace_back(m);
      const ChainPart& part = chain.part(j, PartKind::Whole);
      for (int i = k; i >= 1; --i) {
        PathA step = path_a(u, i, c[static_cast<std::size_t>(i - 1)], positions);
        collect(chain, part, step.roots, "condition-1", reversed);
        u = std::move(step.end);
      }
      continue;
    }
    for (PartKind kind : {PartKind::Left, PartKind::Right}) {
      const Column& c = column(j, kind == PartKind::Left ? 1 : 0);
      const ChainPart& part = chain.part(j, kind);
      const std::string condition = kind == PartKind::Left ? "condition-1" : "kn-split";
      for (int i = static_cast<int>(c.size()); i >= 1; --i) {
        PathC step = path_c(u, i, c);
        collect(chain, part, step.head, condition, reversed);
        collect(chain, part, step.tail, condition, reversed);
        u = std::move(step.end);
      }
    }
  }
  FoldingPair fp{u, std::vector<int>(reversed.rbegin(), reversed.rend())};
  for (std::size_t k = 1; k < fp.J.size(); ++k)
    if (fp.J[k - 1] >= fp.J[k]) throw InternalError("reconstructed fold positions are not increasing");
  if (!(filling_map(chain, fp) == sigma)) throw InternalError("inverse filling map does not round-trip");
  return fp;
}

}  // namespace chargelab
