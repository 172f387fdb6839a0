#include "chargelab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "chargelab/charge.hpp"
#include "chargelab/errors.hpp"
#include "chargelab/macdonald.hpp"
#include "chargelab/paths.hpp"
#include "chargelab/qbg.hpp"

namespace chargelab {

namespace {

using Clock = std::chrono::steady_clock;

class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)), start_(Clock::now()) {}

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++checked_;
    if (ok) return;
    if (failures_++ == 0) first_ = describe();
  }

  CheckResult finish() const {
    CheckResult r;
    r.name = name_;
    r.passed = failures_ == 0;
    r.checked = checked_;
    r.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (failures_ > 0) r.detail = std::to_string(failures_) + " failure(s); first: " + first_;
    return r;
  }

 private:
  std::string name_;
  Clock::time_point start_;
  long checked_ = 0;
  long failures_ = 0;
  std::string first_;
};

void partitions(int remaining, int largest, int max_parts, Weight& current, std::vector<Weight>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (static_cast<int>(current.size()) == max_parts) return;
  for (int p = std::min(remaining, largest); p >= 1; --p) {
    current.push_back(p);
    partitions(remaining - p, p, max_parts, current, out);
    current.pop_back();
  }
}

struct Case {
  LieType type;
  Weight mu;  // padded
};

std::vector<Case> cases(Family family, int max_n, int max_size) {
  std::vector<Case> out;
  const int first = family == Family::A ? 2 : 1;
  for (int n = first; n <= max_n; ++n) {
    const LieType type(family, n);
    const int max_parts = family == Family::A ? n - 1 : n;
    for (int size = 1; size <= max_size; ++size) {
      std::vector<Weight> parts;
      Weight current;
      partitions(size, size, max_parts, current, parts);
      for (const auto& p : parts) out.push_back({type, dominant_weight(type, p)});
    }
  }
  return out;
}

std::string describe(const Case& c) {
  std::string s = c.type.name() + " mu=(";
  for (std::size_t k = 0; k < c.mu.size(); ++k) s += (k ? "," : "") + std::to_string(c.mu[k]);
  return s + ")";
}

std::string describe(const FoldingPair& fp) {
  std::string s = "w=" + to_string(fp.w) + " J={";
  for (std::size_t k = 0; k < fp.J.size(); ++k) s += (k ? "," : "") + std::to_string(fp.J[k]);
  return s + "}";
}

std::vector<Letter> alphabet(const LieType& type) {
  std::vector<Letter> out;
  for (int v = 1; v <= type.n(); ++v) out.emplace_back(v);
  if (type.is_c())
    for (int v = type.n(); v >= 1; --v) out.emplace_back(-v);
  return out;
}

// Columns of height k with distinct absolute values, in any order.
void injective_columns(const LieType& type, int k, Column& current, std::vector<Column>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (Letter x : alphabet(type)) {
    if (std::any_of(current.begin(), current.end(), [&](Letter y) { return y.abs() == x.abs(); })) continue;
    current.push_back(x);
    injective_columns(type, k, current, out);
    current.pop_back();
  }
}

std::vector<Column> injective_columns(const LieType& type, int k) {
  std::vector<Column> out;
  Column current;
  injective_columns(type, k, current, out);
  return out;
}

// All strictly increasing columns of height k over the alphabet, pairs z, z̄ allowed.
void increasing_columns(const std::vector<Letter>& letters, std::size_t start, int k, Column& current,
                        std::vector<Column>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < letters.size(); ++i) {
    current.push_back(letters[i]);
    increasing_columns(letters, i + 1, k, current, out);
    current.pop_back();
  }
}

std::vector<Column> increasing_columns(const LieType& type, int k) {
  std::vector<Column> out;
  Column current;
  increasing_columns(alphabet(type), 0, k, current, out);
  return out;
}

Column sorted(Column c) {
  std::sort(c.begin(), c.end());
  return c;
}

Column prefix(const WeylElement& w, int k) {
  return Column(w.window().begin(), w.window().begin() + k);
}

std::string roots_text(const std::vector<RootLabel>& roots) {
  std::string s;
  for (const auto& r : roots) s += to_string(r);
  return s.empty() ? "()" : s;
}

struct SubPath {
  std::vector<RootLabel> roots;
  std::vector<WeylElement> steps;  // u_0, ..., u_p
};

// Every subsequence of `roots` that is a path in the quantum Bruhat graph
// from u, using the length-based edge test.
void qbg_subsequences(const std::vector<RootLabel>& roots, std::size_t next, SubPath& current,
                      std::vector<SubPath>& out) {
  if (next == roots.size()) {
    out.push_back(current);
    return;
  }
  qbg_subsequences(roots, next + 1, current, out);
  const WeylElement& u = current.steps.back();
  if (edge_by_length(u, roots[next])) {
    current.roots.push_back(roots[next]);
    current.steps.push_back(u.times(roots[next]));
    qbg_subsequences(roots, next + 1, current, out);
    current.steps.pop_back();
    current.roots.pop_back();
  }
}

std::vector<SubPath> qbg_subsequences(const WeylElement& u, const std::vector<RootLabel>& roots) {
  std::vector<SubPath> out;
  SubPath current{{}, {u}};
  qbg_subsequences(roots, 0, current, out);
  return out;
}

// ----------------------------------------------------------------- examples

std::vector<CheckResult> examples_scope() {
  std::vector<CheckResult> results;
  const LieType a4(Family::A, 4), a3(Family::A, 3), c3(Family::C, 3), c5(Family::C, 5);
  const MuChain chain_a = MuChain::build(a4, dominant_weight(a4, {3, 2, 1}));
  const MuChain chain_c = MuChain::build(c3, dominant_weight(c3, {2, 1}));

  {
    Check check("examples/chains");
    const std::string want_a = "((1,4),(1,3),(1,2) | (1,4),(1,3),(2,4),(2,3) | (1,4),(2,4),(3,4))";
    const std::string want_c =
        "( | (1,2̄),(1,3̄),(1,1̄),(1,3),(1,2) || (1,2̄) | (1,3̄),(1,1̄),(1,3),(1,2̄),(2,3̄),(2,2̄),(2,3))";
    check.expect(to_string(chain_a) == want_a, [&] { return "type A chain " + to_string(chain_a); });
    check.expect(to_string(chain_c) == want_c, [&] { return "type C chain " + to_string(chain_c); });
    check.expect(chain_a.size() == 10 && chain_c.size() == 13, [] { return "chain lengths"; });
    results.push_back(check.finish());
  }

  {
    Check check("examples/folds");
    const MuChain walk = MuChain::from_roots(
        a3, dominant_weight(a3, {3, 1}),
        {RootLabel::diff(1, 3), RootLabel::diff(1, 2), RootLabel::diff(1, 3), RootLabel::diff(2, 3),
         RootLabel::diff(1, 3), RootLabel::diff(1, 2)});
    const FoldingPair w0{WeylElement::identity(a3), {1, 2}};
    const FoldedChain f0 = fold_chain(walk, w0);
    std::vector<std::string> elements;
    for (const auto& e : f0.elements) elements.push_back(to_string(e));
    check.expect(elements == std::vector<std::string>{"123", "321", "231"}, [] { return "alcove walk chain"; });
    check.expect(f0.positive == std::vector<int>{2} && f0.negative == std::vector<int>{1},
                 [] { return "alcove walk fold signs"; });
    check.expect(weights_equal(a3, weight_of(walk, w0), {0, 1, 0}), [] { return "alcove walk weight"; });

    const FoldingPair pa{WeylElement::from_values(a4, {2, 1, 3, 4}), {3, 6, 7, 9, 10}};
    const FoldedChain fa = fold_chain(chain_a, pa);
    check.expect(fa.positive == std::vector<int>{3, 7, 9, 10} && fa.negative == std::vector<int>{6},
                 [] { return "type A fold signs"; });
    check.expect(is_admissible(chain_a, pa) && level_of(chain_a, pa) == 1, [] { return "type A level"; });

    const FoldingPair pc{WeylElement::identity(c3), {3, 5, 6, 11, 12, 13}};
    const FoldedChain fc = fold_chain(chain_c, pc);
    check.expect(fc.positive == std::vector<int>{5, 6, 11, 12, 13} && fc.negative == std::vector<int>{3},
                 [] { return "type C fold signs"; });
    check.expect(is_admissible(chain_c, pc) && level_of(chain_c, pc) == 1, [] { return "type C level"; });
    results.push_back(check.finish());
  }

  {
    Check check("examples/fillings");
    const FoldingPair pa{WeylElement::from_values(a4, {2, 1, 3, 4}), {3, 6, 7, 9, 10}};
    const Filling fa = filling_map(chain_a, pa);
    const Filling want_a{a4, {parse_column("2"), parse_column("1,2"), parse_column("1,3,4")}};
    check.expect(fa == want_a, [&] { return "type A filling\n" + pretty(fa); });
    const FoldingPair pc{WeylElement::identity(c3), {3, 5, 6, 11, 12, 13}};
    const Filling fc = filling_map(chain_c, pc);
    const Filling want_c{c3, {parse_column("1"), parse_column("1"), parse_column("2,-1"), parse_column("1,-2")}};
    check.expect(fc == want_c, [&] { return "type C filling\n" + pretty(fc); });
    check.expect(inverse_filling_map(chain_a, fa) == pa && inverse_filling_map(chain_c, fc) == pc,
                 [] { return "inverse of the example fillings"; });
    results.push_back(check.finish());
  }

  {
    Check check("examples/charge");
    check.expect(ls_charge(parse_word("1132214323")) == 6, [] { return "ls_charge(1132214323)"; });

    auto biword = [](const Filling& tau) {
      const auto word = charge_word(tau);
      const ChargeTrace trace = charge_traced(tau);
      std::string tops, bottoms;
      for (std::size_t k = 0; k < word.size(); ++k) {
        tops += (k ? " " : "") + to_string(word[k].top);
        bottoms += (k ? " " : "") + label_to_string(tau.type, word[k].label) + "_" +
                   std::to_string(trace.iteration[k]);
      }
      return std::make_pair(tops, bottoms);
    };

    const LieType a6(Family::A, 6);
    const Filling tau_a{a6, {parse_column("2"), parse_column("1,2,4"), parse_column("2,3,4"), parse_column("3,5,6")}};
    const Filling sigma_a{a6, {parse_column("2"), parse_column("4,2,1"), parse_column("3,2,4"), parse_column("3,5,6")}};
    check.expect(charge(tau_a) == 6, [] { return "type A charge"; });
    check.expect(reconstruct_sigma(tau_a) == sigma_a, [] { return "type A sigma"; });
    check.expect(biword(tau_a) == std::make_pair(std::string("6 5 4 4 3 3 2 2 2 1"),
                                                 std::string("1_3 1_2 3_1 2_3 2_1 1_1 4_1 3_2 2_2 3_3")),
                 [&] { return "type A biword " + biword(tau_a).second; });
    check.expect(arm_statistic(sigma_a) == 6, [] { return "type A arm sum"; });

    const Filling tau_c{c5,
                        {parse_column("1,3,-2"), parse_column("1,2,-3"), parse_column("3,-4,-2"),
                         parse_column("2,-4,-3"), parse_column("-5,-3,-2,-1"), parse_column("-5,-3,-2,-1")}};
    const Filling sigma_c{c5,
                          {parse_column("-2,1,3"), parse_column("-3,1,2"), parse_column("-4,-2,3"),
                           parse_column("-4,-3,2"), parse_column("-5,-3,-2,-1"), parse_column("-5,-3,-2,-1")}};
    check.expect(in_b_mu(tau_c), [] { return "type C tau not in B_mu"; });
    check.expect(charge(tau_c) == 4, [] { return "type C charge"; });
    check.expect(reconstruct_sigma(tau_c) == sigma_c, [&] { return "type C sigma\n" + pretty(reconstruct_sigma(tau_c)); });
    check.expect(
        biword(tau_c) ==
            std::make_pair(std::string("1̄ 1̄ 2̄ 2̄ 2̄ 2̄ 3̄ 3̄ 3̄ 3̄ 4̄ 4̄ 5̄ 5̄ 3 3 2 2 1 1"),
                           std::string("1'_4 1_4 3'_1 2'_2 1'_3 1_3 3_1 2_2 1'_2 1_2 2'_1 2_1 1'_1 1_1 "
                                       "3'_3 2'_3 3_3 2_3 3'_2 3_2")),
        [&] { return "type C biword " + biword(tau_c).second; });
    check.expect(arm_statistic(sigma_c) == 4, [] { return "type C arm sum"; });
    results.push_back(check.finish());
  }

  {
    Check check("examples/kn");
    const SplitColumn s = split_column(parse_column("4,5,-5,-4,-3"));
    check.expect(s.right == parse_column("4,5,-3,-2,-1") && s.left == parse_column("1,2,-5,-4,-3"),
                 [&] { return "split " + to_string(s.right) + " | " + to_string(s.left); });
    check.expect(maxcol({3, 4, 5}, {4, 5}) == std::vector<int>{1, 2, 3}, [] { return "maxcol({3,4,5},{4,5})"; });
    check.expect(maxcol_formulas_hold(s.right, s.left), [] { return "maxcol formulas on the split example"; });
    results.push_back(check.finish());
  }
  return results;
}

// ---------------------------------------------------------------------- qbg

std::vector<CheckResult> qbg_scope(Family family, int max_n, bool inject_fault) {
  const std::string label = family == Family::A ? "A" : "C";
  Check check(label + "-qbg/criterion-vs-length");
  bool fault_pending = inject_fault;
  const int first = family == Family::A ? 2 : 1;
  for (int n = first; n <= max_n; ++n) {
    const LieType type(family, n);
    const auto roots = positive_roots(type);
    for (const WeylElement& w : all_elements(type)) {
      for (RootLabel r : roots) {
        const auto by_length = edge_by_length(w, r);
        auto by_criterion = edge_by_criterion(w, r);
        if (fault_pending) {
          by_criterion = by_criterion ? std::nullopt : std::optional<EdgeKind>(EdgeKind::Up);
          fault_pending = false;
        }
        check.expect(by_length == by_criterion,
                     [&] { return type.name() + " w=" + to_string(w) + " root " + to_string(r); });
        if (family == Family::C && r.kind == RootKind::Sum)
          check.expect(by_criterion != EdgeKind::Quantum,
                       [&] { return "quantum (i,j̄) edge at w=" + to_string(w) + " root " + to_string(r); });
      }
    }
  }
  return {check.finish()};
}

// ------------------------------------------------------------------- chains

// Shi's alcove criterion on the coroot system: k_{α+β} − k_α − k_β ∈ {0, 1}.
bool is_alcove(const LieType& type, const std::vector<RootLabel>& roots, const std::map<RootLabel, int>& k) {
  std::vector<Weight> coroots;
  for (RootLabel r : roots) {
    Weight v = root_vector(type, r);
    if (r.kind == RootKind::Long) v[static_cast<std::size_t>(r.i - 1)] = 1;
    coroots.push_back(v);
  }
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      Weight sum = coroots[a];
      for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += coroots[b][t];
      for (std::size_t c = 0; c < roots.size(); ++c) {
        if (coroots[c] != sum) continue;
        const int gap = k.at(roots[c]) - k.at(roots[a]) - k.at(roots[b]);
        if (gap != 0 && gap != 1) return false;
      }
    }
  return true;
}

std::vector<CheckResult> chains_scope(const VerifyOptions& o) {
  Check crossings("chains/crossings");
  Check levels("chains/levels");
  Check walk("chains/alcove-path");
  std::vector<Case> all = cases(Family::A, o.a_max_n + 1, o.a_max_size + 2);
  for (const auto& c : cases(Family::C, o.c_max_n + 1, o.c_max_size + 2)) all.push_back(c);
  for (const Case& c : all) {
    const MuChain chain = MuChain::build(c.type, c.mu);
    const auto roots = positive_roots(c.type);
    std::map<RootLabel, int> seen;
    for (RootLabel r : roots) seen[r] = 0;
    bool path_ok = is_alcove(c.type, roots, seen);
    for (int pos = 1; pos <= chain.size(); ++pos) {
      const RootLabel r = chain.root(pos);
      const int count = ++seen[r];
      levels.expect(chain.level(pos) == count,
                    [&] { return describe(c) + " position " + std::to_string(pos); });
      path_ok = path_ok && is_alcove(c.type, roots, seen);
    }
    for (RootLabel r : roots)
      crossings.expect(seen[r] == coroot_pairing(c.type, c.mu, r),
                       [&] { return describe(c) + " root " + to_string(r); });
    walk.expect(path_ok, [&] { return describe(c); });
  }
  return {crossings.finish(), levels.finish(), walk.finish()};
}

// --------------------------------------------------------------- admissible

std::vector<CheckResult> admissible_scope(const VerifyOptions& o) {
  Check agree("admissible/identity-vs-path");
  Check listing("admissible/enumeration");
  Check parallel("admissible/parallel-order");
  std::vector<Case> all = cases(Family::A, o.a_max_n, std::min(o.a_max_size, 3));
  for (const auto& c : cases(Family::C, o.c_max_n, std::min(o.c_max_size, 3))) all.push_back(c);
  for (const Case& c : all) {
    const MuChain chain = MuChain::build(c.type, c.mu);
    const int m = chain.size();
    if (m > 14) continue;
    std::set<std::pair<std::vector<Letter>, std::vector<int>>> brute;
    for (const WeylElement& w : all_elements(c.type)) {
      for (int mask = 0; mask < (1 << m); ++mask) {
        FoldingPair fp{w, {}};
        for (int j = 1; j <= m; ++j)
          if (mask >> (j - 1) & 1) fp.J.push_back(j);
        const bool by_path = is_admissible_by_path(chain, fp);
        agree.expect(by_path == is_admissible_by_identity(chain, fp),
                     [&] { return describe(c) + " " + describe(fp); });
        if (by_path) brute.insert({w.window(), fp.J});
      }
    }
    const auto listed = enumerate_admissible(chain, 1);
    std::set<std::pair<std::vector<Letter>, std::vector<int>>> got;
    for (const auto& fp : listed) got.insert({fp.w.window(), fp.J});
    listing.expect(got == brute && got.size() == listed.size(), [&] { return describe(c); });
    parallel.expect(enumerate_admissible(chain, std::max(o.jobs, 3)) == listed, [&] { return describe(c); });
  }
  return {agree.finish(), listing.finish(), parallel.finish()};
}

// ---------------------------------------------------------------- bijection

bool rows_weakly_increase_leftward(const Filling& f) {
  for (std::size_t j = 0; j + 1 < f.columns.size(); ++j) {
    const Column& left = f.columns[j];
    const Column& right = f.columns[j + 1];
    for (std::size_t i = 0; i < left.size(); ++i)
      if (!(right[i] <= left[i])) return false;
  }
  return true;
}

bool is_bruhat_path(const MuChain& chain, const FoldingPair& fp) {
  const FoldedChain folded = fold_chain(chain, fp);
  for (std::size_t s = fp.J.size(); s >= 1; --s)
    if (edge_by_criterion(folded.elements[s], chain.root(fp.J[s - 1])) != EdgeKind::Up) return false;
  return true;
}

std::vector<CheckResult> bijection_scope(Family family, const VerifyOptions& o) {
  const std::string p = family == Family::A ? "A-bijection/" : "C-bijection/";
  Check cardinality(p + "cardinality");
  Check onto(p + "injective-onto");
  Check image(p + "image-conditions");
  Check round_trip(p + "round-trip");
  Check inverse(p + "inverse-on-b-mu");
  Check content_weight(p + "content-weight");
  Check statistics(p + "level-charge-arm");
  Check reconstruct(p + "reconstruct-sigma");
  Check bruhat(p + "bruhat-restriction");
  const auto all = family == Family::A ? cases(family, o.a_max_n, o.a_max_size)
                                       : cases(family, o.c_max_n, o.c_max_size);
  for (const Case& c : all) {
    const MuChain chain = MuChain::build(c.type, c.mu);
    const auto admissible = enumerate_admissible(chain, o.jobs);
    const auto b_mu = enumerate_b_mu(c.type, c.mu);
    cardinality.expect(admissible.size() == b_mu.size(), [&] {
      return describe(c) + ": " + std::to_string(admissible.size()) + " pairs vs " + std::to_string(b_mu.size());
    });

    std::set<std::vector<Column>> images, tableaux_images;
    for (const FoldingPair& fp : admissible) {
      const Filling sigma = filling_map(chain, fp);
      const Filling tau = ord(sigma);
      images.insert(tau.columns);
      const std::string violated = image_violation(sigma);
      image.expect(violated.empty() && in_b_mu(tau),
                   [&] { return describe(c) + " " + describe(fp) + " violates " + violated; });
      if (!violated.empty() || !in_b_mu(tau)) continue;
      round_trip.expect(inverse_filling_map(chain, sigma) == fp, [&] { return describe(c) + " " + describe(fp); });
      content_weight.expect(weights_equal(c.type, content(sigma), weight_of(chain, fp)),
                            [&] { return describe(c) + " " + describe(fp); });
      const int level = level_of(chain, fp), ch = charge(tau), arms = arm_statistic(sigma);
      statistics.expect(level == ch && ch == arms, [&] {
        return describe(c) + " " + describe(fp) + ": level " + std::to_string(level) + ", charge " +
               std::to_string(ch) + ", arms " + std::to_string(arms);
      });
      reconstruct.expect(reconstruct_sigma(tau) == sigma, [&] { return describe(c) + " " + describe(fp); });
      if (is_bruhat_path(chain, fp)) tableaux_images.insert(sigma.columns);
    }
    std::set<std::vector<Column>> b_mu_set, tableaux;
    for (const Filling& tau : b_mu) {
      b_mu_set.insert(tau.columns);
      if (rows_weakly_increase_leftward(tau)) tableaux.insert(tau.columns);
      const Filling sigma = reconstruct_sigma(tau);
      bool ok = false;
      try {
        const FoldingPair fp = inverse_filling_map(chain, sigma);
        ok = is_admissible(chain, fp) && ord(filling_map(chain, fp)) == tau;
      } catch (const ValidationError&) {
      }
      inverse.expect(ok, [&] { return describe(c) + "\n" + pretty(tau); });
    }
    onto.expect(images.size() == admissible.size() && images == b_mu_set, [&] { return describe(c); });
    const auto dimension = evaluate_at_ones(weyl_character(c.type, c.mu));
    bruhat.expect(tableaux_images == tableaux && static_cast<long long>(tableaux.size()) == dimension, [&] {
      return describe(c) + ": " + std::to_string(tableaux_images.size()) + " Bruhat images, " +
             std::to_string(tableaux.size()) + " tableaux, dimension " + std::to_string(dimension);
    });
  }
  return {cardinality.finish(), onto.finish(),    image.finish(),       round_trip.finish(), inverse.finish(),
          content_weight.finish(), statistics.finish(), reconstruct.finish(), bruhat.finish()};
}

// --------------------------------------------------------------------- poly

std::vector<CheckResult> poly_scope(const VerifyOptions& o) {
  Check termwise("poly/ramyip-equals-charge");
  Check character("poly/q0-character");
  Check invariant("poly/weyl-invariance");
  Check nonnegative("poly/nonnegative");
  Check decomposition("poly/character-decomposition");
  std::vector<Case> all = cases(Family::A, o.a_max_n, o.a_max_size);
  for (const auto& c : cases(Family::C, o.c_max_n, o.c_max_size)) all.push_back(c);
  for (const Case& c : all) {
    const LaurentPoly ram_yip = ram_yip_t0(c.type, c.mu, o.jobs);
    const LaurentPoly by_charge = charge_formula_t0(c.type, c.mu, o.jobs);
    termwise.expect(ram_yip == by_charge, [&] { return describe(c); });
    character.expect(specialize_q(ram_yip, 0) == weyl_character(c.type, c.mu), [&] { return describe(c); });
    invariant.expect(is_weyl_invariant(c.type, ram_yip), [&] { return describe(c); });
    bool positive = true;
    for (const auto& [key, coeff] : ram_yip.terms()) positive = positive && coeff > 0;
    nonnegative.expect(positive, [&] { return describe(c); });

    const auto terms = character_decomposition(c.type, ram_yip);
    LaurentPoly rebuilt(ram_yip.nvars());
    bool ok = true;
    for (const auto& t : terms) {
      rebuilt = rebuilt + t.multiplicity * weyl_character(c.type, t.lambda);
      for (const auto& [key, coeff] : t.multiplicity.terms()) ok = ok && coeff > 0;
      if (weights_equal(c.type, t.lambda, c.mu)) ok = ok && t.multiplicity == LaurentPoly::monomial(ram_yip.nvars(), 0, Weight(c.mu.size(), 0));
    }
    decomposition.expect(ok && rebuilt == ram_yip, [&] { return describe(c); });
  }
  return {termwise.finish(), character.finish(), invariant.finish(), nonnegative.finish(), decomposition.finish()};
}

// ----------------------------------------------------------------------- kn

std::vector<CheckResult> kn_scope() {
  std::vector<CheckResult> results;
  {
    Check check("kn/maxcol-lemma");
    for (int amask = 0; amask < 64; ++amask)
      for (int bmask = 0; bmask < 64; ++bmask) {
        std::vector<int> a, b, a_minus_b, a_and_b, a_or_b;
        for (int v = 1; v <= 6; ++v) {
          const bool in_a = amask >> (v - 1) & 1, in_b = bmask >> (v - 1) & 1;
          if (in_a) a.push_back(v);
          if (in_b) b.push_back(v);
          if (in_a && !in_b) a_minus_b.push_back(v);
          if (in_a && in_b) a_and_b.push_back(v);
          if (in_a || in_b) a_or_b.push_back(v);
        }
        const auto c = maxcol(a, b);
        bool ok = true;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (c[i] > a[i] || std::binary_search(b.begin(), b.end(), c[i])) ok = false;
          if (i > 0 && c[i - 1] >= c[i]) ok = false;
          for (int x = c[i]; x <= a[i]; ++x)
            if (!std::binary_search(b.begin(), b.end(), x) && std::find(c.begin() + static_cast<long>(i), c.end(), x) == c.end())
              ok = false;
        }
        for (int x : a_minus_b) ok = ok && std::find(c.begin(), c.end(), x) != c.end();
        auto rhs = maxcol(a_and_b, a_or_b);
        for (int x : rhs) ok = ok && !std::binary_search(a_minus_b.begin(), a_minus_b.end(), x);
        rhs.insert(rhs.end(), a_minus_b.begin(), a_minus_b.end());
        std::sort(rhs.begin(), rhs.end());
        check.expect(ok && rhs == c, [&] { return "A mask " + std::to_string(amask) + ", B mask " + std::to_string(bmask); });
      }
    results.push_back(check.finish());
  }
  {
    Check check("kn/three-way-equivalence");
    const LieType c3(Family::C, 3);
    for (int k = 1; k <= 3; ++k) {
      std::vector<Column> columns;
      for (const Column& c : increasing_columns(c3, k))
        if (is_type_column(c3, c)) columns.push_back(c);
      for (const Column& right : columns)
        for (const Column& left : columns) {
          const PairReport r = check_pair_conditions(c3, right, left);
          const bool one = r.r1 && r.r2 && r.r3;
          const bool two = maxcol_formulas_hold(right, left);
          const bool three = is_split_column(right, left);
          check.expect(one == two && two == three, [&] {
            return to_string(right) + " | " + to_string(left) + ": " + std::to_string(one) + std::to_string(two) +
                   std::to_string(three);
          });
        }
    }
    results.push_back(check.finish());
  }
  {
    Check check("kn/condition-1-vs-2");
    for (const LieType& type : {LieType(Family::A, 4), LieType(Family::C, 3)})
      for (int k = 1; k <= type.n(); ++k) {
        const auto rights = injective_columns(type, k);
        for (int h = 1; h <= k; ++h)
          for (const Column& left : injective_columns(type, h))
            for (const Column& right : rights)
              check.expect(condition1(type, left, right) == condition2(type, left, right),
                           [&] { return type.name() + " " + to_string(left) + " | " + to_string(right); });
      }
    results.push_back(check.finish());
  }
  {
    Check check("kn/split-vs-distance");
    for (int n = 1; n <= 4; ++n) {
      const LieType type(Family::C, n);
      for (int k = 1; k <= n; ++k)
        for (const Column& c : increasing_columns(type, k)) {
          bool splits = true;
          try {
            const SplitColumn s = split_column(c);
            check.expect(unsplit(s) == c && is_split_column(s.right, s.left),
                         [&] { return "unsplit " + to_string(c); });
          } catch (const ValidationError&) {
            splits = false;
          }
          check.expect(splits == is_kn_column(c), [&] { return "n=" + std::to_string(n) + " " + to_string(c); });
        }
      std::size_t count = 0;
      for (int k = 1; k <= n; ++k) count += enumerate_kn_columns(n, k).size();
      std::size_t binomials = 0;
      for (int k = 1; k <= n; ++k) {
        // dim V(ω_k) = C(2n,k) − C(2n,k−2)
        auto choose = [](int a, int b) -> std::size_t {
          if (b < 0 || b > a) return 0;
          std::size_t r = 1;
          for (int t = 1; t <= b; ++t) r = r * static_cast<std::size_t>(a - b + t) / static_cast<std::size_t>(t);
          return r;
        };
        binomials += choose(2 * n, k) - choose(2 * n, k - 2);
      }
      check.expect(count == binomials, [&] { return "KN column count for n=" + std::to_string(n); });
    }
    results.push_back(check.finish());
  }
  {
    Check symmetric("kn/interior-symmetry");
    Check reduction("kn/sorted-reduction");
    for (int n = 1; n <= 3; ++n) {
      const LieType type(Family::C, n);
      for (int k = 1; k <= n; ++k) {
        const auto columns = injective_columns(type, k);
        for (const Column& right : columns)
          for (const Column& left : columns) {
            const PairReport r = check_pair_conditions(type, left, right);
            if (!r.condition1 || !r.r1) continue;
            if (r.r2) {
              bool ok = true;
              for (Letter x : r.interior)
                ok = ok && std::find(r.interior.begin(), r.interior.end(), x.bar()) != r.interior.end();
              symmetric.expect(ok, [&] { return to_string(left) + " | " + to_string(right); });
            }
            const PairReport s = check_pair_conditions(type, sorted(left), sorted(right));
            reduction.expect((r.r2 && r.r3) == (s.r2 && s.r3),
                             [&] { return to_string(left) + " | " + to_string(right); });
          }
      }
    }
    results.push_back(symmetric.finish());
    results.push_back(reduction.finish());
  }
  return results;
}

// -------------------------------------------------------------------- paths

std::vector<CheckResult> paths_scope(const VerifyOptions& o) {
  std::vector<CheckResult> results;
  {
    Check check("paths/path-a-unique");
    for (int n = 2; n <= std::max(o.path_max_n, 2); ++n) {
      const LieType type(Family::A, n);
      for (const WeylElement& u : all_elements(type))
        for (int k = 1; k < n; ++k)
          for (int i = 1; i <= k; ++i) {
            std::vector<RootLabel> roots;
            std::vector<Letter> positions;
            for (int m = k + 1; m <= n; ++m) {
              roots.push_back(RootLabel::diff(i, m));
              positions.emplace_back(m);
            }
            const auto found = qbg_subsequences(u, roots);
            std::map<Letter, int> count;
            for (const auto& path : found) ++count[path.steps.back().at(i)];
            for (const auto& path : found) {
              const Letter c = path.steps.back().at(i);
              bool monotone = true;
              for (std::size_t s = 1; s + 1 < path.steps.size(); ++s)
                monotone = monotone && circ_less(type, u.at(i), path.steps[s].at(i), path.steps[s + 1].at(i));
              const PathA greedy = path_a(u, i, c, positions);
              check.expect(count[c] == 1 && monotone && greedy.roots == path.roots, [&] {
                return "u=" + to_string(u) + " k=" + std::to_string(k) + " i=" + std::to_string(i) + " target " +
                       to_string(c) + ": brute " + roots_text(path.roots) + ", greedy " + roots_text(greedy.roots);
              });
            }
          }
    }
    results.push_back(check.finish());
  }
  {
    Check check("paths/path-c-unique");
    for (int n = 1; n <= o.path_max_n; ++n) {
      const LieType type(Family::C, n);
      for (const WeylElement& u : all_elements(type))
        for (int k = 1; k <= n; ++k) {
          const Column c = prefix(u, k);
          const auto targets = injective_columns(type, k);
          for (int i = 1; i <= k; ++i) {
            const auto block = omega_chain_block(type, k, i);
            const auto found = qbg_subsequences(u, std::vector<RootLabel>(block.rbegin(), block.rend()));
            for (const Column& target : targets) {
              if (!std::equal(target.begin() + i, target.end(), c.begin() + i) || !condition1(type, target, c))
                continue;
              std::vector<const SubPath*> hits;
              for (const auto& path : found)
                if (path.steps.back().at(i) == target[static_cast<std::size_t>(i - 1)]) hits.push_back(&path);
              const PathC greedy = path_c(u, i, target);
              std::vector<RootLabel> roots = greedy.head;
              roots.insert(roots.end(), greedy.tail.begin(), greedy.tail.end());
              check.expect(hits.size() == 1 && hits.front()->roots == roots, [&] {
                return "u=" + to_string(u) + " i=" + std::to_string(i) + " target " + to_string(target) + ": " +
                       std::to_string(hits.size()) + " paths, greedy " + roots_text(roots);
              });
            }
          }
        }
    }
    results.push_back(check.finish());
  }
  {
    Check whole_a("paths/segment-a");
    Check left_c("paths/segment-c-left");
    Check right_c("paths/segment-c-right");
    auto sweep = [&](const LieType& type) {
      const int heights = type.is_a() ? type.n() - 1 : type.n();
      for (const WeylElement& u : all_elements(type))
        for (int k = 1; k <= heights; ++k) {
          const Column c = prefix(u, k);
          const auto targets = injective_columns(type, k);
          std::vector<PartKind> kinds = type.is_a() ? std::vector<PartKind>{PartKind::Whole}
                                                    : std::vector<PartKind>{PartKind::Left, PartKind::Right};
          for (PartKind kind : kinds) {
            const auto segment = kind == PartKind::Whole  ? omega_chain(type, k)
                                 : kind == PartKind::Left ? omega_chain_left(type, k)
                                                          : omega_chain_right(type, k);
            Check& check = kind == PartKind::Whole ? whole_a : kind == PartKind::Left ? left_c : right_c;
            const auto found = qbg_subsequences(u, std::vector<RootLabel>(segment.rbegin(), segment.rend()));
            std::map<Column, std::vector<const SubPath*>> by_target;
            for (const auto& path : found) by_target[prefix(path.steps.back(), k)].push_back(&path);
            for (const Column& target : targets) {
              bool expected = condition1(type, target, c);
              if (kind == PartKind::Right) expected = expected && is_split_column(sorted(target), sorted(c));
              const auto it = by_target.find(target);
              const std::size_t hits = it == by_target.end() ? 0 : it->second.size();
              bool ok = hits == (expected ? 1u : 0u);
              if (ok && hits == 1) {
                const SubPath& path = *it->second.front();
                // values at each position move monotonically toward the target
                for (int i = 1; i <= k; ++i)
                  for (std::size_t s = 0; s + 1 < path.steps.size(); ++s) {
                    const Letter a = path.steps[s].at(i), b = path.steps[s + 1].at(i);
                    if (kind == PartKind::Right) ok = ok && a <= b && a.barred() == b.barred();
                    else ok = ok && (a == b || circ_less(type, c[static_cast<std::size_t>(i - 1)], a, b));
                  }
                WeylElement v = u;
                std::vector<RootLabel> greedy;
                for (int i = k; i >= 1; --i) {
                  if (type.is_a()) {
                    std::vector<Letter> positions;
                    for (int m = k + 1; m <= type.n(); ++m) positions.emplace_back(m);
                    PathA step = path_a(v, i, target[static_cast<std::size_t>(i - 1)], positions);
                    greedy.insert(greedy.end(), step.roots.begin(), step.roots.end());
                    v = std::move(step.end);
                  } else {
                    PathC step = path_c(v, i, target);
                    greedy.insert(greedy.end(), step.head.begin(), step.head.end());
                    greedy.insert(greedy.end(), step.tail.begin(), step.tail.end());
                    v = std::move(step.end);
                  }
                }
                ok = ok && greedy == path.roots;
              }
              check.expect(ok, [&] {
                return type.name() + " u=" + to_string(u) + " k=" + std::to_string(k) + " target " +
                       to_string(target) + ": expected " + (expected ? "1" : "0") + " path(s), found " +
                       std::to_string(hits);
              });
            }
          }
        }
    };
    for (int n = 2; n <= std::max(o.path_max_n, 2); ++n) sweep(LieType(Family::A, n));
    for (int n = 1; n <= o.path_max_n; ++n) sweep(LieType(Family::C, n));
    results.push_back(whole_a.finish());
    results.push_back(left_c.finish());
    results.push_back(right_c.finish());
  }
  return results;
}

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

}  // namespace

std::vector<std::string> verification_scopes() {
  return {"examples", "A-qbg", "C-qbg", "chains", "admissible", "A-bijection", "C-bijection", "poly", "kn", "paths", "all"};
}

std::vector<CheckResult> run_verification(const VerifyOptions& o) {
  const auto scopes = verification_scopes();
  if (std::find(scopes.begin(), scopes.end(), o.scope) == scopes.end()) {
    std::string known;
    for (const auto& s : scopes) known += (known.empty() ? "" : ", ") + s;
    throw ValidationError("scope", "unknown scope '" + o.scope + "' (known: " + known + ")");
  }
  const bool all = o.scope == "all";
  std::vector<CheckResult> out;
  if (all || o.scope == "examples") append(out, examples_scope());
  if (all || o.scope == "A-qbg") append(out, qbg_scope(Family::A, o.qbg_a_max_n, o.inject_qbg_fault));
  if (all || o.scope == "C-qbg") append(out, qbg_scope(Family::C, o.qbg_c_max_n, o.inject_qbg_fault && !all));
  if (all || o.scope == "chains") append(out, chains_scope(o));
  if (all || o.scope == "admissible") append(out, admissible_scope(o));
  if (all || o.scope == "A-bijection") append(out, bijection_scope(Family::A, o));
  if (all || o.scope == "C-bijection") append(out, bijection_scope(Family::C, o));
  if (all || o.scope == "poly") append(out, poly_scope(o));
  if (all || o.scope == "kn") append(out, kn_scope());
  if (all || o.scope == "paths") append(out, paths_scope(o));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace chargelab
