#include "chargelab/macdonald.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "chargelab/charge.hpp"
#include "chargelab/errors.hpp"
#include "chargelab/filling.hpp"
#include "chargelab/folding.hpp"

namespace chargelab {

LaurentPoly ram_yip_t0(const LieType& type, const Weight& mu, int jobs) {
  const MuChain chain = MuChain::build(type, mu);
  LaurentPoly p(type.n());
  for (const FoldingPair& fp : enumerate_admissible(chain, jobs))
    p.add_term(level_of(chain, fp), weight_of(chain, fp), 1);
  return p;
}

LaurentPoly charge_formula_t0(const LieType& type, const Weight& mu, int jobs) {
  const std::vector<Filling> b_mu = enumerate_b_mu(type, mu);
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  const std::size_t chunk = (b_mu.size() + workers - 1) / workers;
  std::vector<LaurentPoly> partial(workers, LaurentPoly(type.n()));
  auto work = [&](std::size_t w) {
    const std::size_t end = std::min(b_mu.size(), (w + 1) * chunk);
    for (std::size_t k = w * chunk; k < end; ++k)
      partial[w].add_term(charge(b_mu[k]), content(b_mu[k]), 1);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  LaurentPoly p(type.n());
  for (const auto& part : partial) p += part;
  return p;
}

namespace {
LaurentPoly alternant(const LieType& type, const Weight& lambda) {
  LaurentPoly a(type.n());
  for (const WeylElement& w : all_elements(type)) a.add_term(0, w.act(lambda), w.det());
  return a;
}
}  // namespace

LaurentPoly weyl_character(const LieType& type, const Weight& lambda) {
  Weight l = lambda;
  if (static_cast<int>(l.size()) > type.n()) throw ValidationError("dominance", "too many coordinates");
  l.resize(static_cast<std::size_t>(type.n()), 0);
  for (std::size_t k = 1; k < l.size(); ++k)
    if (l[k] > l[k - 1]) throw ValidationError("dominance", "weight is not dominant");
  if (type.is_c() && !l.empty() && l.back() < 0) throw ValidationError("dominance", "weight is not dominant");
  Weight shifted = l;
  const Weight r = rho(type);
  for (std::size_t k = 0; k < l.size(); ++k) shifted[k] += r[k];
  return exact_divide(alternant(type, shifted), alternant(type, r));
}

bool is_weyl_invariant(const LieType& type, const LaurentPoly& p) {
  const WeylElement id = WeylElement::identity(type);
  std::vector<RootLabel> simple;
  for (int i = 1; i < type.n(); ++i) simple.push_back(RootLabel::diff(i, i + 1));
  if (type.is_c()) simple.push_back(RootLabel::twice(type.n()));
  return std::all_of(simple.begin(), simple.end(), [&](RootLabel r) { return p.act(id.times(r)) == p; });
}

std::vector<CharacterTerm> character_decomposition(const LieType& type, const LaurentPoly& p) {
  if (!is_weyl_invariant(type, p)) throw InternalError("decomposition of a non-invariant polynomial");
  std::vector<CharacterTerm> out;
  for (int d = 0; d <= p.max_q_degree(); ++d) {
    LaurentPoly rest = p.q_part(d);
    while (!rest.is_zero()) {
      const auto& [key, c] = *rest.terms().rbegin();
      const Weight lambda = key.second;
      const std::int64_t coeff = c;
      rest -= weyl_character(type, lambda).scaled(coeff);
      auto it = std::find_if(out.begin(), out.end(), [&](const CharacterTerm& t) { return t.lambda == lambda; });
      if (it == out.end()) {
        out.push_back({lambda, LaurentPoly(type.n())});
        it = std::prev(out.end());
      }
      it->multiplicity.add_term(d, Weight(static_cast<std::size_t>(type.n()), 0), coeff);
    }
  }
  std::sort(out.begin(), out.end(), [](const CharacterTerm& a, const CharacterTerm& b) { return a.lambda > b.lambda; });
  return out;
}

}  // namespace chargelab
