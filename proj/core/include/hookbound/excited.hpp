#pragma once

#include <unordered_map>
#include <vector>

#include "hookbound/numeric.hpp"
#include "hookbound/partition.hpp"

namespace hookbound {

/// A set of boxes inside the outer shape obtained from `origin` by simple
/// excitations. Boxes are kept sorted (row, then column).
struct ExcitedDiagram {
  std::vector<Box> boxes;
  Partition origin;

  friend bool operator==(const ExcitedDiagram& a, const ExcitedDiagram& b) {
    return a.boxes == b.boxes;
  }
};

/// u ∈ E is excitable when its upper-right square {u, u+(1,0), u+(0,1),
/// u+(1,1)} lies inside lambda and meets E only in u. Throws
/// std::invalid_argument when E has a box outside lambda.
std::vector<Box> excitable_boxes(const Partition& lambda, const ExcitedDiagram& e);

/// E with box u moved to u + (1,1). u must be excitable.
ExcitedDiagram excite(const ExcitedDiagram& e, const Box& u);

/// Closure of an arbitrary sorted box set under simple excitations inside
/// lambda, sorted lexicographically by box list.
std::vector<std::vector<Box>> excitation_closure(const Partition& lambda,
                                                 std::vector<Box> start);

/// All excited diagrams of mu in lambda, lexicographically ordered by box
/// list. Throws std::invalid_argument when mu ⊄ lambda.
std::vector<ExcitedDiagram> enumerate_excited(const Partition& lambda,
                                              const Partition& mu);

/// Product of hook lengths in lambda over the boxes.
BigInt hook_product(const Partition& lambda, const std::vector<Box>& boxes);

/// S(lambda, mu): sum over excited diagrams of the product of their hooks.
BigInt excited_sum(const Partition& lambda, const Partition& mu);

/// S(lambda, mu) / |lambda|^{falling |mu|}, which equals
/// d_{lambda\mu} / d_lambda.
Rational naruse_ratio(const Partition& lambda, const Partition& mu);

/// d_{lambda\mu} via naruse_ratio * d_lambda.
BigInt skew_dim_naruse(const Partition& lambda, const Partition& mu);

/// Memo for S(lambda, mu) across a sweep. Not synchronised: use one cache
/// per worker.
class ExcitedSumCache {
 public:
  const BigInt& excited_sum(const Partition& lambda, const Partition& mu);
  Rational naruse_ratio(const Partition& lambda, const Partition& mu);
  std::size_t size() const noexcept { return cache_.size(); }

 private:
  struct Key {
    Partition lambda;
    Partition mu;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      PartitionHash h;
      return h(k.lambda) * 31 + h(k.mu);
    }
  };
  std::unordered_map<Key, BigInt, KeyHash> cache_;
};

}  // namespace hookbound
