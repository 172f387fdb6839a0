#pragma once

// Sparse Laurent polynomials in x_1..x_n with coefficients in Z[q].
// A term is keyed by (q-degree, exponent vector); zero coefficients are never
// stored.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chargelab/weyl.hpp"

namespace chargelab {

class LaurentPoly {
 public:
  using Exponent = std::vector<int>;
  using Key = std::pair<int, Exponent>;  // (q-degree, x-exponent)

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}
  static LaurentPoly monomial(int nvars, int qdeg, Exponent x, std::int64_t coeff = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int qdeg, const Exponent& x) const;

  void add_term(int qdeg, const Exponent& x, std::int64_t coeff);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(std::int64_t c) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  bool q_free() const;
  int max_q_degree() const;
  // Coefficient of q^d as a q-free polynomial.
  LaurentPoly q_part(int d) const;

  // Substitutes x^λ -> x^{w(λ)}.
  LaurentPoly act(const WeylElement& w) const;

 private:
  void check(const Exponent& x) const;

  int nvars_;
  std::map<Key, std::int64_t> terms_;
};

// Substitutes q = q0; the result is q-free.
LaurentPoly specialize_q(const LaurentPoly& p, std::int64_t q0);
// Value at x_1 = ... = x_n = 1 of a q-free polynomial.
std::int64_t evaluate_at_ones(const LaurentPoly& p);

// Exact division of q-free polynomials in lex order. Throws InternalError if
// the division leaves a remainder.
LaurentPoly exact_divide(const LaurentPoly& numerator, const LaurentPoly& denominator);

// Canonical text: q-degree ascending, then exponent vectors in decreasing lex
// order, e.g. "x1^2 + 1 + x1^-2 + q". Exponent 1 is omitted.
std::string to_string(const LaurentPoly& p);

}  // namespace chargelab
