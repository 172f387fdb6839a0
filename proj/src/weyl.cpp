#include "chargelab/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "chargelab/errors.hpp"

namespace chargelab {

LieType::LieType(Family family, int n) : family_(family), n_(n) {
  if (family == Family::A && n < 2)
    throw ValidationError("rank", "type A needs n >= 2, got " + std::to_string(n));
  if (family == Family::C && n < 1)
    throw ValidationError("rank", "type C needs n >= 1, got " + std::to_string(n));
}

std::string LieType::name() const {
  return is_a() ? "A" + std::to_string(n_ - 1) : "C" + std::to_string(n_);
}

LieType parse_lie_type(std::string_view family, int n) {
  if (family == "A" || family == "a") return {Family::A, n};
  if (family == "C" || family == "c") return {Family::C, n};
  throw ValidationError("type", "unknown type '" + std::string(family) + "' (expected A or C)");
}

std::string to_string(Letter x) {
  std::string s = std::to_string(x.abs());
  if (x.barred()) s += "̄";
  return s;
}

Letter parse_letter(std::string_view text) {
  bool barred = false;
  if (!text.empty() && text.front() == '-') {
    barred = true;
    text.remove_prefix(1);
  }
  std::size_t digits = 0;
  while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;
  if (digits == 0) throw ValidationError("letter", "malformed letter '" + std::string(text) + "'");
  const int value = std::stoi(std::string(text.substr(0, digits)));
  std::string_view rest = text.substr(digits);
  if (rest == "b" || rest == "̄" || rest == "̅") {
    if (barred) throw ValidationError("letter", "doubly barred letter");
    barred = true;
  } else if (!rest.empty()) {
    throw ValidationError("letter", "malformed letter '" + std::string(text) + "'");
  }
  if (value == 0) throw ValidationError("letter", "letters start at 1");
  return Letter(barred ? -value : value);
}

bool letter_in_alphabet(const LieType& type, Letter x) {
  if (x.value() == 0 || x.abs() > type.n()) return false;
  return type.is_c() || !x.barred();
}

int circle_index(const LieType& type, Letter x) {
  return x.barred() ? 2 * type.n() - x.abs() : x.value() - 1;
}

namespace {
int circle_offset(const LieType& type, Letter origin, Letter x) {
  const int size = type.circle_size();
  return ((circle_index(type, x) - circle_index(type, origin)) % size + size) % size;
}
}  // namespace

bool circ_less(const LieType& type, Letter origin, Letter x, Letter y) {
  return circle_offset(type, origin, x) < circle_offset(type, origin, y);
}

bool circ_between(const LieType& type, Letter a, Letter b, Letter c) {
  const int ob = circle_offset(type, a, b);
  return ob > 0 && ob < circle_offset(type, a, c);
}

std::string to_string(RootLabel r) {
  switch (r.kind) {
    case RootKind::Diff:
      return "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
    case RootKind::Sum:
      return "(" + std::to_string(r.i) + "," + to_string(Letter(-r.j)) + ")";
    case RootKind::Long:
      return "(" + std::to_string(r.i) + "," + to_string(Letter(-r.i)) + ")";
  }
  return "?";
}

bool root_valid(const LieType& type, RootLabel r) {
  const int n = type.n();
  switch (r.kind) {
    case RootKind::Diff:
      return 1 <= r.i && r.i < r.j && r.j <= n;
    case RootKind::Sum:
      return type.is_c() && 1 <= r.i && r.i < r.j && r.j <= n;
    case RootKind::Long:
      return type.is_c() && 1 <= r.i && r.i <= n && r.j == r.i;
  }
  return false;
}

std::vector<RootLabel> positive_roots(const LieType& type) {
  std::vector<RootLabel> roots;
  const int n = type.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back(RootLabel::diff(i, j));
  if (type.is_c()) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) roots.push_back(RootLabel::sum(i, j));
    for (int i = 1; i <= n; ++i) roots.push_back(RootLabel::twice(i));
  }
  return roots;
}

RootLabel root_exchanging(int i, Letter m) {
  const int p = m.abs();
  if (!m.barred()) return RootLabel::diff(std::min(i, p), std::max(i, p));
  if (p == i) return RootLabel::twice(i);
  return RootLabel::sum(std::min(i, p), std::max(i, p));
}

bool weights_equal(const LieType& type, const Weight& a, const Weight& b) {
  if (a.size() != b.size()) return false;
  if (type.is_c() || a.empty()) return a == b;
  const int shift = b.back() - a.back();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] + shift != b[k]) return false;
  return true;
}

Weight root_vector(const LieType& type, RootLabel r) {
  Weight v(static_cast<std::size_t>(type.n()), 0);
  const auto i = static_cast<std::size_t>(r.i - 1);
  const auto j = static_cast<std::size_t>(r.j - 1);
  switch (r.kind) {
    case RootKind::Diff:
      v[i] = 1;
      v[j] = -1;
      break;
    case RootKind::Sum:
      v[i] = 1;
      v[j] = 1;
      break;
    case RootKind::Long:
      v[i] = 2;
      break;
  }
  return v;
}

int coroot_pairing(const LieType&, const Weight& lambda, RootLabel r) {
  const int li = lambda[static_cast<std::size_t>(r.i - 1)];
  const int lj = lambda[static_cast<std::size_t>(r.j - 1)];
  switch (r.kind) {
    case RootKind::Diff:
      return li - lj;
    case RootKind::Sum:
      return li + lj;
    case RootKind::Long:
      return li;
  }
  return 0;
}

Weight rho(const LieType& type) {
  Weight v(static_cast<std::size_t>(type.n()));
  const int top = type.is_a() ? type.n() - 1 : type.n();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = top - static_cast<int>(k);
  return v;
}

int rho_pairing(const LieType& type, RootLabel r) { return coroot_pairing(type, rho(type), r); }

WeylElement::WeylElement(LieType type, std::vector<Letter> window)
    : type_(type), window_(std::move(window)) {
  const int n = type_.n();
  if (static_cast<int>(window_.size()) != n)
    throw ValidationError("weyl-element", "window must have length " + std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (Letter x : window_) {
    if (!letter_in_alphabet(type_, x))
      throw ValidationError("weyl-element", "letter " + to_string(x) + " outside the alphabet");
    if (seen[static_cast<std::size_t>(x.abs())])
      throw ValidationError("weyl-element", "repeated absolute value " + std::to_string(x.abs()));
    seen[static_cast<std::size_t>(x.abs())] = true;
  }
}

WeylElement WeylElement::identity(const LieType& type) {
  std::vector<Letter> w;
  for (int i = 1; i <= type.n(); ++i) w.emplace_back(i);
  return WeylElement(type, std::move(w), true);
}

WeylElement WeylElement::from_values(const LieType& type, const std::vector<int>& window) {
  std::vector<Letter> w;
  for (int v : window) w.emplace_back(v);
  return WeylElement(type, std::move(w));
}

bool WeylElement::is_identity() const {
  for (std::size_t k = 0; k < window_.size(); ++k)
    if (window_[k].value() != static_cast<int>(k) + 1) return false;
  return true;
}

WeylElement WeylElement::times(RootLabel r) const {
  std::vector<Letter> w = window_;
  const auto i = static_cast<std::size_t>(r.i - 1);
  const auto j = static_cast<std::size_t>(r.j - 1);
  switch (r.kind) {
    case RootKind::Diff:
      std::swap(w[i], w[j]);
      break;
    case RootKind::Sum:
      w[i] = window_[j].bar();
      w[j] = window_[i].bar();
      break;
    case RootKind::Long:
      w[i] = window_[i].bar();
      break;
  }
  return WeylElement(type_, std::move(w), true);
}

Weight WeylElement::act(const Weight& lambda) const {
  Weight out(lambda.size(), 0);
  for (std::size_t k = 0; k < window_.size(); ++k)
    out[static_cast<std::size_t>(window_[k].abs() - 1)] = window_[k].sign() * lambda[k];
  return out;
}

int WeylElement::det() const { return length(*this) % 2 == 0 ? 1 : -1; }

int length(const WeylElement& w) {
  const int n = w.n();
  int count = 0;
  if (w.type().is_a()) {
    for (int k = 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l)
        if (w.at(k) > w.at(l)) ++count;
    return count;
  }
  // #{(k,l) in [n] x [n̄] : k <= |l|, w(k) > w(l)}
  for (int k = 1; k <= n; ++k) {
    for (int a = k; a <= n; ++a) {
      if (w.at(k) > w.at(a)) ++count;
      if (w.at(k) > w(Letter(-a))) ++count;
    }
  }
  return count;
}

WeylElement apply_root(const WeylElement& w, RootLabel r) { return w.times(r); }

std::string to_string(const WeylElement& w) {
  std::string s;
  const bool separate = w.n() >= 10;
  for (Letter x : w.window()) {
    if (separate && !s.empty()) s += ' ';
    s += to_string(x);
  }
  return s;
}

WeylElement parse_weyl_element(const LieType& type, std::string_view text) {
  std::vector<Letter> window;
  if (text.find_first_of(", ") != std::string_view::npos) {
    std::string token;
    auto flush = [&] {
      if (!token.empty()) window.push_back(parse_letter(token));
      token.clear();
    };
    for (char ch : text) {
      if (ch == ',' || ch == ' ') flush();
      else token += ch;
    }
    flush();
  } else {
    // Compact one-line form such as "2134" or "1̄23": single-digit letters.
    while (!text.empty()) {
      std::size_t len = text.front() == '-' ? 2 : 1;
      if (len > text.size()) throw ValidationError("weyl-element", "truncated window");
      std::string_view tail = text.substr(len);
      if (tail.starts_with("b")) len += 1;
      else if (tail.starts_with("̄") || tail.starts_with("̅")) len += 2;
      window.push_back(parse_letter(text.substr(0, len)));
      text.remove_prefix(len);
    }
  }
  return WeylElement(type, std::move(window));
}

std::vector<WeylElement> all_elements(const LieType& type) {
  const int n = type.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<Letter>> windows;
  do {
    const int sign_patterns = type.is_c() ? (1 << n) : 1;
    for (int mask = 0; mask < sign_patterns; ++mask) {
      std::vector<Letter> w;
      for (int k = 0; k < n; ++k)
        w.emplace_back((mask >> k) & 1 ? -perm[static_cast<std::size_t>(k)]
                                        : perm[static_cast<std::size_t>(k)]);
      windows.push_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(windows.begin(), windows.end());
  std::vector<WeylElement> out;
  out.reserve(windows.size());
  for (auto& w : windows) out.emplace_back(type, std::move(w));
  return out;
}

}  // namespace chargelab
