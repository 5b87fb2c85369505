#pragma once

// Slow reference computations used only by the tests. They avoid the code
// paths of the library on purpose.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <map>
#include <set>
#include <vector>

#include "hookbound/partition.hpp"

namespace hookbound::testing {

// Standard tableaux of outer\inner counted by removing the largest entry:
// it sits in a removable corner of the outer shape that is not in inner.
inline std::uint64_t count_skew_tableaux(std::vector<int> outer, const std::vector<int>& inner,
                                         std::map<std::vector<int>, std::uint64_t>& memo) {
  if (outer == inner) return 1;
  if (auto it = memo.find(outer); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const int below = i < inner.size() ? inner[i] : 0;
    const int next = i + 1 < outer.size() ? outer[i + 1] : 0;
    if (outer[i] > below && outer[i] > next) {
      --outer[i];
      total += count_skew_tableaux(outer, inner, memo);
      ++outer[i];
    }
  }
  memo.emplace(outer, total);
  return total;
}

inline std::uint64_t count_skew_tableaux(const Partition& outer, const Partition& inner) {
  std::vector<int> in(inner.part_vector());
  in.resize(static_cast<std::size_t>(outer.length()), 0);
  std::map<std::vector<int>, std::uint64_t> memo;
  return count_skew_tableaux(outer.part_vector(), in, memo);
}

// Excited diagrams from the definition: breadth-first over sets, moving a
// box u to u+(1,1) when u+(1,0), u+(0,1), u+(1,1) are all in lambda and free.
inline std::set<std::set<Box>> excited_sets(const Partition& lambda, const Partition& mu) {
  std::set<Box> start;
  for (const Box& u : mu.boxes()) start.insert(u);
  std::set<std::set<Box>> seen{start};
  std::vector<std::set<Box>> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::set<Box>> next;
    for (const auto& e : frontier) {
      for (const Box& u : e) {
        const Box up{u.row + 1, u.col}, right{u.row, u.col + 1}, diag{u.row + 1, u.col + 1};
        if (!lambda.contains(diag)) continue;
        if (e.count(up) || e.count(right) || e.count(diag)) continue;
        auto moved = e;
        moved.erase(u);
        moved.insert(diag);
        if (seen.insert(moved).second) next.push_back(std::move(moved));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Frobenius formula: ch^lambda(alpha) is the coefficient of x^{lambda+delta}
// in Vandermonde(x) * prod_i p_{alpha_i}(x), with l(lambda) variables.
inline long frobenius_character(const Partition& lambda, const std::vector<int>& alpha) {
  const int vars = std::max(1, lambda.length());
  std::map<std::vector<int>, long> poly{{std::vector<int>(static_cast<std::size_t>(vars), 0), 1}};
  for (int a : alpha) {
    std::map<std::vector<int>, long> next;
    for (const auto& [exps, coeff] : poly) {
      for (int v = 0; v < vars; ++v) {
        auto e = exps;
        e[static_cast<std::size_t>(v)] += a;
        next[e] += coeff;
      }
    }
    poly = std::move(next);
  }
  std::vector<int> sigma(static_cast<std::size_t>(vars));
  std::iota(sigma.begin(), sigma.end(), 1);
  long total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < vars; ++i)
      for (int j = i + 1; j < vars; ++j)
        if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)]) ++inversions;
    std::vector<int> want(static_cast<std::size_t>(vars));
    bool ok = true;
    for (int i = 1; i <= vars; ++i) {
      want[static_cast<std::size_t>(i - 1)] = lambda.row(i) - i + sigma[static_cast<std::size_t>(i - 1)];
      if (want[static_cast<std::size_t>(i - 1)] < 0) ok = false;
    }
    if (!ok) continue;
    if (auto it = poly.find(want); it != poly.end())
      total += (inversions % 2 == 0 ? 1 : -1) * it->second;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

}  // namespace hookbound::testing
