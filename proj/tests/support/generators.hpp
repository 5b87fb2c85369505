#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "hookbound/partition.hpp"

namespace hookbound::testing {

// Uniform-ish random partition of n: random composition, sorted.
inline Partition random_partition(std::mt19937& rng, int n) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    std::uniform_int_distribution<int> pick(1, left);
    const int part = pick(rng);
    parts.push_back(part);
    left -= part;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

inline CycleType shuffled(std::mt19937& rng, const CycleType& alpha) {
  auto lengths = alpha.lengths();
  std::shuffle(lengths.begin(), lengths.end(), rng);
  return CycleType(std::move(lengths));
}

// Independent count of the conjugate: column j has one box per row of
// length >= j.
inline std::vector<int> column_counts(const Partition& p) {
  std::vector<int> cols;
  for (const Box& u : p.boxes()) {
    if (static_cast<int>(cols.size()) < u.col) cols.resize(static_cast<std::size_t>(u.col), 0);
    ++cols[static_cast<std::size_t>(u.col - 1)];
  }
  return cols;
}

}  // namespace hookbound::testing
