#include "chargelab/charge.hpp"

#include <algorithm>
#include <map>

#include "chargelab/errors.hpp"

namespace chargelab {

std::string label_to_string(const LieType& type, int label) {
  if (type.is_a()) return std::to_string(label);
  return std::to_string((label + 1) / 2) + (label % 2 == 0 ? "'" : "");
}

std::vector<Biletter> charge_word(const Filling& tau) {
  std::vector<Biletter> word;
  const int count = static_cast<int>(tau.columns.size());
  for (int c = 0; c < count; ++c) {
    const int from_right = count - c;  // 1 for the rightmost column
    // Type C: from_right = 1 is the l-column 1, 2 is the r-column 1', ...
    const int label = from_right;
    for (Letter x : tau.columns[static_cast<std::size_t>(c)]) word.push_back({x, label});
  }
  std::stable_sort(word.begin(), word.end(), [](const Biletter& a, const Biletter& b) {
    if (a.top != b.top) return a.top > b.top;
    return a.label > b.label;
  });
  return word;
}

std::vector<int> bottom_word(const std::vector<Biletter>& word) {
  std::vector<int> out;
  for (const auto& b : word) out.push_back(b.label);
  return out;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  const bool separated = text.find_first_of(", ") != std::string::npos;
  if (!separated) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ValidationError("syntax", "word letters must be positive digits");
      out.push_back(ch - '0');
    }
    return out;
  }
  out = parse_int_list(text);
  for (int x : out)
    if (x < 1) throw ValidationError("syntax", "word letters must be positive");
  return out;
}

namespace {

// The shared selection loop. `wrap_cost(target, top)` returns the charge
// added when selecting `target` requires restarting from the right end.
template <class WrapCost>
ChargeTrace select_cycles(const std::vector<int>& word, WrapCost&& wrap_cost) {
  ChargeTrace trace;
  trace.iteration.assign(word.size(), 0);
  std::vector<bool> used(word.size(), false);
  std::size_t remaining = word.size();
  int round = 0;
  while (remaining > 0) {
    ++round;
    int top = 0;
    for (std::size_t p = 0; p < word.size(); ++p)
      if (!used[p]) top = std::max(top, word[p]);
    int contribution = 0;
    std::ptrdiff_t prev = static_cast<std::ptrdiff_t>(word.size());
    for (int target = 1; target <= top; ++target) {
      std::ptrdiff_t found = -1;
      for (std::ptrdiff_t p = prev - 1; p >= 0; --p)
        if (!used[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == target) {
          found = p;
          break;
        }
      if (found < 0) {
        for (std::ptrdiff_t p = static_cast<std::ptrdiff_t>(word.size()) - 1; p >= 0; --p)
          if (!used[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == target) {
            found = p;
            break;
          }
        if (found < 0) throw InternalError("charge selection ran out of letters");
        if (target > 1) contribution += wrap_cost(target, top);
      }
      used[static_cast<std::size_t>(found)] = true;
      trace.iteration[static_cast<std::size_t>(found)] = round;
      --remaining;
      prev = found;
    }
    trace.per_iteration.push_back(contribution);
    trace.charge += contribution;
  }
  return trace;
}

std::map<int, int> letter_counts(const std::vector<int>& word) {
  std::map<int, int> counts;
  for (int x : word) ++counts[x];
  return counts;
}

}  // namespace

ChargeTrace ls_charge_traced(const std::vector<int>& word) {
  const auto counts = letter_counts(word);
  int top = 0;
  for (const auto& [letter, c] : counts) {
    if (letter < 1) throw ValidationError("partition-content", "letters must be positive");
    top = std::max(top, letter);
  }
  for (int j = 1; j < top; ++j) {
    const int here = counts.count(j) ? counts.at(j) : 0;
    const int next = counts.count(j + 1) ? counts.at(j + 1) : 0;
    if (here < next)
      throw ValidationError("partition-content", "word has fewer " + std::to_string(j) + "'s than " +
                                                     std::to_string(j + 1) + "'s");
  }
  // Restarting to reach j+1 adds k − j, k the largest letter of the round.
  return select_cycles(word, [](int target, int k) { return k - (target - 1); });
}

int ls_charge(const std::vector<int>& word) { return ls_charge_traced(word).charge; }

ChargeTrace charge_c_traced(const std::vector<int>& word) {
  const auto counts = letter_counts(word);
  int top = 0;
  for (const auto& [letter, c] : counts) {
    if (letter < 1) throw ValidationError("partition-content", "labels must be positive");
    top = std::max(top, letter);
  }
  if (top % 2 != 0) ++top;
  auto count_of = [&](int x) { return counts.count(x) ? counts.at(x) : 0; };
  for (int j = 1; 2 * j <= top; ++j) {
    if (count_of(2 * j - 1) != count_of(2 * j))
      throw ValidationError("partition-content", "labels j and j' must occur equally often");
    if (2 * j + 1 <= top && count_of(2 * j - 1) < count_of(2 * j + 1))
      throw ValidationError("partition-content", "fewer j's than (j+1)'s");
  }
  return select_cycles(word, [](int target, int top_code) {
    if (target % 2 == 0)
      throw ValidationError("charge-order", "a selected j' lies to the right of the previously selected j");
    const int j = (target - 1) / 2;  // moving from j' to j+1
    const int k = top_code / 2;
    return k - j;
  });
}

ChargeTrace charge_traced(const Filling& tau) {
  validate_filling(tau);
  if (!in_b_mu(tau))
    throw ValidationError("b-mu", tau.type.is_a() ? "columns of a type A element of B_mu must increase"
                                                  : "columns must form split KN columns");
  const auto word = bottom_word(charge_word(tau));
  return tau.type.is_a() ? ls_charge_traced(word) : charge_c_traced(word);
}

int charge_A(const Filling& tau) {
  if (!tau.type.is_a()) throw ValidationError("type", "charge_A needs a type A filling");
  return charge_traced(tau).charge;
}

int charge_C(const Filling& tau) {
  if (!tau.type.is_c()) throw ValidationError("type", "charge_C needs a type C filling");
  return charge_traced(tau).charge;
}

int charge(const Filling& tau) { return charge_traced(tau).charge; }

std::string render_biword(const LieType& type, const std::vector<Biletter>& word, const ChargeTrace& trace) {
  std::vector<std::string> tops, bottoms;
  for (std::size_t p = 0; p < word.size(); ++p) {
    tops.push_back(to_string(word[p].top));
    bottoms.push_back(label_to_string(type, word[p].label) + "_" + std::to_string(trace.iteration[p]));
  }
  std::string top_line, bottom_line;
  for (std::size_t p = 0; p < word.size(); ++p) {
    const std::size_t visible_top = std::to_string(word[p].top.abs()).size();
    const std::size_t width = std::max(visible_top, bottoms[p].size());
    if (p > 0) {
      top_line += ' ';
      bottom_line += ' ';
    }
    top_line += tops[p] + std::string(width - visible_top, ' ');
    bottom_line += bottoms[p] + std::string(width - bottoms[p].size(), ' ');
  }
  while (!top_line.empty() && top_line.back() == ' ') top_line.pop_back();
  while (!bottom_line.empty() && bottom_line.back() == ' ') bottom_line.pop_back();
  return top_line + "\n" + bottom_line + "\n";
}

}  // namespace chargelab
