#include "chargelab/poly.hpp"

#include <algorithm>

#include "chargelab/errors.hpp"

namespace chargelab {

LaurentPoly LaurentPoly::monomial(int nvars, int qdeg, Exponent x, std::int64_t coeff) {
  LaurentPoly p(nvars);
  p.add_term(qdeg, x, coeff);
  return p;
}

void LaurentPoly::check(const Exponent& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw InternalError("exponent vector length " + std::to_string(x.size()) + " in a polynomial with " +
                        std::to_string(nvars_) + " variables");
}

std::int64_t LaurentPoly::coefficient(int qdeg, const Exponent& x) const {
  const auto it = terms_.find({qdeg, x});
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int qdeg, const Exponent& x, std::int64_t coeff) {
  check(x);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{qdeg, x}, coeff);
  if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.nvars_ != nvars_) throw InternalError("adding polynomials in different variable counts");
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += other.scaled(-1); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw InternalError("multiplying polynomials in different variable counts");
  LaurentPoly out(a.nvars_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      LaurentPoly::Exponent x = ka.second;
      for (std::size_t v = 0; v < x.size(); ++v) x[v] += kb.second[v];
      out.add_term(ka.first + kb.first, x, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::scaled(std::int64_t c) const {
  LaurentPoly out(nvars_);
  for (const auto& [key, v] : terms_) out.add_term(key.first, key.second, v * c);
  return out;
}

bool LaurentPoly::q_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.first == 0; });
}

int LaurentPoly::max_q_degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first);
  return d;
}

LaurentPoly LaurentPoly::q_part(int d) const {
  LaurentPoly out(nvars_);
  for (const auto& [key, c] : terms_)
    if (key.first == d) out.add_term(0, key.second, c);
  return out;
}

LaurentPoly LaurentPoly::act(const WeylElement& w) const {
  if (w.n() != nvars_) throw InternalError("Weyl element rank differs from the variable count");
  LaurentPoly out(nvars_);
  for (const auto& [key, c] : terms_) out.add_term(key.first, w.act(key.second), c);
  return out;
}

LaurentPoly specialize_q(const LaurentPoly& p, std::int64_t q0) {
  LaurentPoly out(p.nvars());
  for (const auto& [key, c] : p.terms()) {
    std::int64_t power = 1;
    for (int k = 0; k < key.first; ++k) power *= q0;
    out.add_term(0, key.second, c * power);
  }
  return out;
}

std::int64_t evaluate_at_ones(const LaurentPoly& p) {
  if (!p.q_free()) throw InternalError("evaluate_at_ones needs a q-free polynomial");
  std::int64_t total = 0;
  for (const auto& [key, c] : p.terms()) total += c;
  return total;
}

LaurentPoly exact_divide(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  if (!numerator.q_free() || !denominator.q_free())
    throw InternalError("exact_divide works on q-free polynomials");
  if (denominator.is_zero()) throw InternalError("division by the zero polynomial");
  const int n = numerator.nvars();
  LaurentPoly quotient(n);
  if (numerator.is_zero()) return quotient;

  // Every quotient exponent lies in the box lo <= t <= hi (Newton polytope bound).
  LaurentPoly::Exponent lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  auto extremes = [&](const LaurentPoly& p, bool want_min, std::size_t v) {
    int best = want_min ? INT32_MAX : INT32_MIN;
    for (const auto& [key, c] : p.terms())
      best = want_min ? std::min(best, key.second[v]) : std::max(best, key.second[v]);
    return best;
  };
  for (std::size_t v = 0; v < lo.size(); ++v) {
    lo[v] = extremes(numerator, true, v) - extremes(denominator, true, v);
    hi[v] = extremes(numerator, false, v) - extremes(denominator, false, v);
  }

  const auto& [lead_key, lead_coeff] = *denominator.terms().rbegin();
  LaurentPoly remainder = numerator;
  while (!remainder.is_zero()) {
    const auto& [key, c] = *remainder.terms().rbegin();
    if (c % lead_coeff != 0) throw InternalError("inexact division: coefficient not divisible");
    LaurentPoly::Exponent t = key.second;
    for (std::size_t v = 0; v < t.size(); ++v) {
      t[v] -= lead_key.second[v];
      if (t[v] < lo[v] || t[v] > hi[v]) throw InternalError("inexact division: nonzero remainder");
    }
    const LaurentPoly term = LaurentPoly::monomial(n, 0, t, c / lead_coeff);
    quotient += term;
    remainder -= term * denominator;
  }
  return quotient;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<LaurentPoly::Key, std::int64_t>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first < b.first.first;
    return a.first.second > b.first.second;
  });
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& [key, coeff] = terms[t];
    std::vector<std::string> factors;
    if (key.first == 1) factors.push_back("q");
    else if (key.first > 1) factors.push_back("q^" + std::to_string(key.first));
    for (std::size_t v = 0; v < key.second.size(); ++v) {
      const int e = key.second[v];
      if (e == 0) continue;
      std::string f = "x" + std::to_string(v + 1);
      if (e != 1) f += "^" + std::to_string(e);
      factors.push_back(f);
    }
    const std::int64_t mag = coeff < 0 ? -coeff : coeff;
    std::string body;
    if (mag != 1 || factors.empty()) body = std::to_string(mag);
    for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
    if (t == 0) out += (coeff < 0 ? "-" : "") + body;
    else out += (coeff < 0 ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace chargelab
