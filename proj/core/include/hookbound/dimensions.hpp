#pragma once

#include "hookbound/numeric.hpp"
#include "hookbound/partition.hpp"

namespace hookbound {

/// Skew diagram outer \ inner. Construction enforces inner ⊂ outer.
class SkewShape {
 public:
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }

  std::string to_string() const;

 private:
  Partition outer_;
  Partition inner_;
};

/// Number of standard tableaux of shape p via the hook length formula.
BigInt dim_hlf(const Partition& p);

inline constexpr int kDefaultOracleBound = 18;

/// Counts standard tableaux of s by depth-first placement of 1..|s|, one box
/// at a time along the addable frontier. Throws std::domain_error when the
/// skew shape has more than `bound` boxes.
BigInt skew_dim_oracle(const SkewShape& s, int bound = kDefaultOracleBound);

/// |s|! det[1/(outer_i - inner_j - i + j)!] over the rows of the outer
/// shape, with 1/m! = 0 for m < 0, by Gaussian elimination over exact
/// rationals.
BigInt skew_dim_det(const SkewShape& s);

}  // namespace hookbound
