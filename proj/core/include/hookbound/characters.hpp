#pragma once

#include <vector>

#include "hookbound/numeric.hpp"
#include "hookbound/partition.hpp"

namespace hookbound {

/// Border strip lambda \ remainder: connected, no 2x2 block.
struct Ribbon {
  std::vector<Box> boxes;  // sorted
  int height = 0;          // highest row minus lowest row
  Partition remainder;     // lambda with the ribbon peeled off

  int size() const noexcept { return static_cast<int>(boxes.size()); }
  bool contains(const Box& u) const;
};

/// Every ribbon of size j that can be peeled from lambda, ordered by lowest
/// box (row, then column). Each one is the rim of a box of hook length j:
/// it runs along the outer border from the end of that box's arm to the
/// top of its leg.
std::vector<Ribbon> removable_ribbons(const Partition& lambda, int j);

/// Reference enumerator: scans all sub-partitions nu with |lambda\nu| = j and
/// keeps the connected ones without a 2x2 block. Exponential; for tests.
std::vector<Ribbon> removable_ribbons_naive(const Partition& lambda, int j);

/// |RT(lambda, alpha)| for alpha in the order given: the last entry is the
/// first ribbon peeled. Throws std::invalid_argument when |alpha| != |lambda|.
BigInt count_ribbon_tableaux(const Partition& lambda, const CycleType& alpha);

struct CharacterValue {
  BigInt value;         // ch^lambda(alpha)
  Rational normalized;  // value / d_lambda
};

/// Murnaghan-Nakayama rule, peeling the largest cycles first. Memoised on
/// (remaining shape, cycles consumed) within the call. Throws
/// std::invalid_argument when |alpha| != |lambda|.
CharacterValue character_mn(const Partition& lambda, const CycleType& alpha);

/// Cycle type with the fixed points removed, weakly decreasing. Throws
/// std::invalid_argument for the identity type.
CycleType sigma_star(const CycleType& alpha);

/// Sum over mu ⊂ lambda with |mu| = supp(alpha) of ch^mu(sigma*) d_{lambda\mu},
/// the skew dimensions coming from the determinant formula. Throws
/// std::invalid_argument for the identity type or a size mismatch.
CharacterValue character_branching(const Partition& lambda, const CycleType& alpha);

/// 2^n delta(lambda)^{cyc(alpha)}.
BigInt diag_cycle_bound(const Partition& lambda, const CycleType& alpha);

/// Prod_i 2 delta(lambda) alpha_i, the per-ribbon count bound behind
/// diag_cycle_bound.
BigInt ribbon_tableaux_product_bound(const Partition& lambda, const CycleType& alpha);

}  // namespace hookbound
