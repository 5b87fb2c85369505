#include "hookbound/decompositions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hookbound {

ThickHook thick_hook(const Partition& lambda, int lo, int hi) {
  const int delta = diagonal_length(lambda);
  if (lo < 1 || lo > hi || hi > delta) {
    throw std::out_of_range("thick hook range " + std::to_string(lo) + ".." +
                            std::to_string(hi) + " outside diagonal 1.." +
                            std::to_string(delta));
  }
  ThickHook hook{lambda, lo, hi, {}};
  for (const Box& u : lambda.boxes()) {
    const int idx = diagonal_hook_index(u);
    if (idx >= lo && idx <= hi) hook.boxes.push_back(u);
  }
  return hook;
}

int ThickHookDecomposition::hook_of(const Box& u) const {
  if (!source.contains(u)) return 0;
  const int idx = diagonal_hook_index(u);
  for (std::size_t j = 1; j < cuts.size(); ++j)
    if (idx > cuts[j - 1] && idx <= cuts[j]) return static_cast<int>(j);
  return 0;
}

ThickHookDecomposition make_decomposition(const Partition& lambda,
                                          const std::vector<int>& cuts, int a, int b) {
  ThickHookDecomposition d{lambda, {0}, {}, a, b};
  for (int cut : cuts) d.cuts.push_back(cut);
  const int delta = diagonal_length(lambda);
  for (std::size_t j = 1; j < d.cuts.size(); ++j) {
    const int lo = d.cuts[j - 1] + 1;
    const int hi = d.cuts[j];
    if (lo <= hi && lo >= 1 && hi <= delta) d.hooks.push_back(thick_hook(lambda, lo, hi));
    else d.hooks.push_back(ThickHook{lambda, lo, hi, {}});
  }
  return d;
}

ThickHookDecomposition build_thick_hook_decomposition(const Partition& lambda, int a) {
  if (lambda.empty()) throw std::domain_error("cannot decompose the empty partition");
  const int s = max_hook(lambda);
  if (a < s) {
    throw std::domain_error("a = " + std::to_string(a) + " is below the maximal hook " +
                            std::to_string(s));
  }
  if (a > lambda.size()) {
    throw std::domain_error("a = " + std::to_string(a) + " exceeds |lambda| = " +
                            std::to_string(lambda.size()) +
                            "; no thick hook reaches a boxes");
  }

  const int delta = diagonal_length(lambda);
  std::vector<int> diag_hooks(static_cast<std::size_t>(delta + 1), 0);
  for (int i = 1; i <= delta; ++i) diag_hooks[static_cast<std::size_t>(i)] = hook_length(lambda, {i, i});

  const int cap = 4 * a;
  std::vector<int> cuts;     // interior cuts i_1 < ... < i_p = delta
  std::vector<int> sizes;
  int i = 0;
  while (i < delta) {
    int size = 0;
    int next = i;
    while (next < delta && size + diag_hooks[static_cast<std::size_t>(next + 1)] <= cap) {
      ++next;
      size += diag_hooks[static_cast<std::size_t>(next)];
    }
    cuts.push_back(next);
    sizes.push_back(size);
    i = next;
  }

  // Repair: move whole diagonal hooks from T_{p-1} into T_p until |T_p| >= a.
  const std::size_t p = cuts.size();
  if (p >= 2 && sizes[p - 1] < a) {
    int& boundary = cuts[p - 2];
    while (sizes[p - 1] < a) {
      const int moved = diag_hooks[static_cast<std::size_t>(boundary)];
      sizes[p - 1] += moved;
      sizes[p - 2] -= moved;
      --boundary;
    }
  }
  return make_decomposition(lambda, cuts, a, 4 * a);
}

std::string to_string(DecompositionDefect defect) {
  switch (defect) {
    case DecompositionDefect::none: return "ok";
    case DecompositionDefect::bad_cuts: return "cuts are not 0 < i_1 < ... < i_p = delta";
    case DecompositionDefect::not_partition: return "thick hooks do not partition the diagram";
    case DecompositionDefect::too_small: return "thick hook smaller than a";
    case DecompositionDefect::too_large: return "thick hook larger than b";
  }
  return "unknown";
}

DecompositionCheck validate_decomposition(const ThickHookDecomposition& d) {
  const int delta = diagonal_length(d.source);
  const auto& cuts = d.cuts;
  bool cuts_ok = cuts.size() >= 2 && cuts.front() == 0 && cuts.back() == delta &&
                 d.hooks.size() + 1 == cuts.size();
  for (std::size_t j = 1; cuts_ok && j < cuts.size(); ++j) cuts_ok = cuts[j] > cuts[j - 1];
  if (!cuts_ok) return {false, DecompositionDefect::bad_cuts, 0};

  std::vector<Box> all;
  for (std::size_t j = 0; j < d.hooks.size(); ++j) {
    const ThickHook& t = d.hooks[j];
    if (t.lo != cuts[j] + 1 || t.hi != cuts[j + 1]) {
      return {false, DecompositionDefect::bad_cuts, static_cast<int>(j + 1)};
    }
    all.insert(all.end(), t.boxes.begin(), t.boxes.end());
  }
  std::sort(all.begin(), all.end());
  if (all != d.source.boxes()) return {false, DecompositionDefect::not_partition, 0};

  for (std::size_t j = 0; j < d.hooks.size(); ++j) {
    const int size = d.hooks[j].size();
    if (size < d.a) return {false, DecompositionDefect::too_small, static_cast<int>(j + 1)};
    if (size > d.b) return {false, DecompositionDefect::too_large, static_cast<int>(j + 1)};
  }
  return {true, DecompositionDefect::none, 0};
}

std::vector<int> hook_counts(const ThickHookDecomposition& d, const std::vector<Box>& boxes) {
  std::vector<int> counts(static_cast<std::size_t>(d.parts()), 0);
  for (const Box& u : boxes) {
    const int j = d.hook_of(u);
    if (j > 0) ++counts[static_cast<std::size_t>(j - 1)];
  }
  return counts;
}

namespace {

std::vector<Box> row_boxes(int length) {
  std::vector<Box> out;
  for (int c = 1; c <= length; ++c) out.push_back({1, c});
  return out;
}

void check_row_length(const Partition& lambda, int row_length) {
  if (row_length < 1 || row_length > lambda.row(1)) {
    throw std::out_of_range("row length " + std::to_string(row_length) +
                            " outside 1.." + std::to_string(lambda.row(1)));
  }
}

}  // namespace

std::optional<ExcitedDiagram> minimally_excited_row(const Partition& lambda,
                                                    const ThickHookDecomposition& d,
                                                    const std::vector<int>& counts) {
  if (static_cast<int>(counts.size()) != d.parts()) {
    throw std::invalid_argument("expected " + std::to_string(d.parts()) +
                                " per-hook counts, got " + std::to_string(counts.size()));
  }
  int total = 0;
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("negative per-hook count");
    total += c;
  }
  if (total < 1 || total > lambda.row(1)) {
    throw std::invalid_argument("row length " + std::to_string(total) + " outside 1.." +
                                std::to_string(lambda.row(1)));
  }

  const std::vector<Box>* best = nullptr;
  long best_weight = 0;
  bool tie = false;
  const auto closure = excitation_closure(lambda, row_boxes(total));
  for (const auto& boxes : closure) {
    if (hook_counts(d, boxes) != counts) continue;
    long weight = 0;  // each excitation raises the row sum by one
    for (const Box& u : boxes) weight += u.row;
    if (!best || weight < best_weight) {
      best = &boxes;
      best_weight = weight;
      tie = false;
    } else if (weight == best_weight) {
      tie = true;
    }
  }
  if (!best) return std::nullopt;
  if (tie) {
    throw std::logic_error("excited diagrams with counts have no unique minimum in " +
                           lambda.to_string());
  }
  return ExcitedDiagram{*best, Partition{total}};
}

long count_feasible_sequences(const Partition& lambda, const ThickHookDecomposition& d,
                              int row_length) {
  check_row_length(lambda, row_length);
  std::set<std::vector<int>> seen;
  for (const auto& boxes : excitation_closure(lambda, row_boxes(row_length)))
    seen.insert(hook_counts(d, boxes));
  return static_cast<long>(seen.size());
}

std::vector<Box> StairsLine::boxes() const {
  std::vector<Box> out;
  for (int t = 0; t < length; ++t) {
    if (orientation == LineOrientation::row) out.push_back({anchor.row, anchor.col + t});
    else out.push_back({anchor.row + t, anchor.col});
  }
  return out;
}

StairsDecomposition stairs_decomposition(const Partition& mu) {
  StairsDecomposition out{mu, {}};
  const int delta = diagonal_length(mu);
  for (int i = 1; i <= delta; ++i) {
    out.lines.push_back({LineOrientation::row, mu.row(i) - i + 1, {i, i}});
    const int leg = mu.column(i) - i;
    if (leg >= 1) out.lines.push_back({LineOrientation::column, leg, {i + 1, i}});
  }
  return out;
}

RowBoundCase row_bound_case(const Partition& lambda, int row_length) {
  return static_cast<long>(row_length) * max_hook(lambda) <= lambda.size()
             ? RowBoundCase::small_row
             : RowBoundCase::long_row;
}

Rational bound_S_row(const Partition& lambda, int row_length) {
  check_row_length(lambda, row_length);
  const auto l = static_cast<std::uint32_t>(row_length);
  if (row_bound_case(lambda, row_length) == RowBoundCase::small_row) {
    return pow(Rational(8 * lambda.size(), row_length), l);
  }
  return pow(constants::four_e_squared_upper() * max_hook(lambda), l);
}

BigInt bound_S_general(const Partition& lambda, int a, int row_length) {
  const int n = lambda.size();
  if (a < max_hook(lambda) || a > n) {
    throw std::out_of_range("a = " + std::to_string(a) + " outside [" +
                            std::to_string(max_hook(lambda)) + ", " + std::to_string(n) + "]");
  }
  check_row_length(lambda, row_length);
  const auto l = static_cast<std::uint32_t>(row_length);
  return binomial(l + static_cast<std::uint32_t>(n / a), l) * pow(BigInt(4 * a), l);
}

Rational bound_skew_general(int n, int k, int s, const Rational& c) {
  if (k < 1 || k > n || s < 1 || c <= 0) {
    throw std::out_of_range("bound_skew_general needs 1 <= k <= n, s >= 1, C > 0");
  }
  Rational m;
  const long n2 = static_cast<long>(n) * n;
  const long s2k = static_cast<long>(s) * s * k;
  if (s2k >= n2) {
    m = s;
  } else {
    int r = 1;
    while (static_cast<long>(r + 1) * (r + 1) <= k) ++r;
    m = Rational(n, r);
  }
  return pow(c * m, static_cast<std::uint32_t>(k));
}

}  // namespace hookbound
