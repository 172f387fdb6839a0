#pragma once

// Root data and Weyl group arithmetic for types A_{n-1} (symmetric group S_n)
// and C_n (signed permutations B_n).
//
// Letters of the alphabet [n̄] = {1 < 2 < ... < n < n̄ < ... < 1̄} are stored as
// signed integers: i for i, -i for ī. The same order, read clockwise, is the
// circle used by the circular orders ≺_a. Type A only uses the unbarred half.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chargelab {

enum class Family { A, C };

class LieType {
 public:
  // Throws ValidationError unless n >= 2 (type A) or n >= 1 (type C).
  LieType(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  bool is_a() const { return family_ == Family::A; }
  bool is_c() const { return family_ == Family::C; }

  // Number of points on the clockwise circle: n in type A, 2n in type C.
  int circle_size() const { return is_a() ? n_ : 2 * n_; }

  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  Family family_;
  int n_;
};

LieType parse_lie_type(std::string_view family, int n);

class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(int value) : value_(value) {}

  constexpr int value() const { return value_; }
  constexpr bool barred() const { return value_ < 0; }
  constexpr int abs() const { return value_ < 0 ? -value_ : value_; }
  constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  constexpr Letter bar() const { return Letter(-value_); }

  friend constexpr bool operator==(Letter a, Letter b) { return a.value_ == b.value_; }

  // Alphabet order 1 < ... < n < n̄ < ... < 1̄; independent of n.
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    if (a.barred() != b.barred()) return a.barred() ? std::strong_ordering::greater
                                                    : std::strong_ordering::less;
    if (a.barred()) return a.value_ <=> b.value_;
    return a.value_ <=> b.value_;
  }

 private:
  int value_ = 0;
};

std::string to_string(Letter x);
// Accepts "3", "-3", "3b", and "3" followed by a combining macron/overline.
Letter parse_letter(std::string_view text);
bool letter_in_alphabet(const LieType& type, Letter x);

// Index of x on the clockwise circle 1, ..., n, n̄, ..., 1̄ (0-based).
int circle_index(const LieType& type, Letter x);
// x ≺ y in the circular order starting at `origin` (origin itself is minimal).
bool circ_less(const LieType& type, Letter origin, Letter x, Letter y);
// a ≺ b ≺ c in the circular order ≺_a, strict on both sides. Requires a != c.
bool circ_between(const LieType& type, Letter a, Letter b, Letter c);

enum class RootKind : std::uint8_t {
  Diff,  // (i,j):  ε_i − ε_j
  Sum,   // (i,j̄):  ε_i + ε_j
  Long,  // (i,ī):  2ε_i
};

struct RootLabel {
  RootKind kind = RootKind::Diff;
  int i = 1;
  int j = 2;  // equals i for Long

  static RootLabel diff(int i, int j) { return {RootKind::Diff, i, j}; }
  static RootLabel sum(int i, int j) { return {RootKind::Sum, i, j}; }
  static RootLabel twice(int i) { return {RootKind::Long, i, i}; }

  friend bool operator==(const RootLabel&, const RootLabel&) = default;
  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

std::string to_string(RootLabel r);
bool root_valid(const LieType& type, RootLabel r);
std::vector<RootLabel> positive_roots(const LieType& type);

// The root that exchanges position i (unbarred) with position m of the full
// one-line notation; m may be barred, and m = ī gives the long root (i,ī).
RootLabel root_exchanging(int i, Letter m);

// Coordinates are ε-coefficients. In type A a weight is a class in
// Z^n / Z(1,...,1); the vector is kept as computed and compared modulo
// (1,...,1) by weights_equal.
using Weight = std::vector<int>;

bool weights_equal(const LieType& type, const Weight& a, const Weight& b);
Weight root_vector(const LieType& type, RootLabel r);
// ⟨λ, α∨⟩
int coroot_pairing(const LieType& type, const Weight& lambda, RootLabel r);
// ⟨ρ, α∨⟩ with ρ = (n-1,...,0) in type A and (n,...,1) in type C.
int rho_pairing(const LieType& type, RootLabel r);
Weight rho(const LieType& type);

class WeylElement {
 public:
  // Validates that `window` is a (signed) permutation for `type`.
  WeylElement(LieType type, std::vector<Letter> window);
  static WeylElement identity(const LieType& type);
  static WeylElement from_values(const LieType& type, const std::vector<int>& window);

  const LieType& type() const { return type_; }
  int n() const { return type_.n(); }
  const std::vector<Letter>& window() const { return window_; }

  // w(i) for 1 <= i <= n.
  Letter at(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
  // w(p) for any position p of the full one-line notation; w(ī) = bar(w(i)).
  Letter operator()(Letter position) const {
    const Letter v = at(position.abs());
    return position.barred() ? v.bar() : v;
  }

  bool is_identity() const;

  // Right multiplication by the reflection s_r.
  WeylElement times(RootLabel r) const;

  // The weight w(λ).
  Weight act(const Weight& lambda) const;

  // Sign of w as a Coxeter element, (-1)^length.
  int det() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.window_ == b.window_;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.window_ < b.window_;
  }

 private:
  WeylElement(LieType type, std::vector<Letter> window, bool /*trusted*/)
      : type_(type), window_(std::move(window)) {}

  LieType type_;
  std::vector<Letter> window_;
};

int length(const WeylElement& w);
WeylElement apply_root(const WeylElement& w, RootLabel r);
std::string to_string(const WeylElement& w);
WeylElement parse_weyl_element(const LieType& type, std::string_view text);

// All elements, in lexicographic order of windows under the alphabet order.
std::vector<WeylElement> all_elements(const LieType& type);

}  // namespace chargelab
