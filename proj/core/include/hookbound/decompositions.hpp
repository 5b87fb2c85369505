#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hookbound/excited.hpp"
#include "hookbound/numeric.hpp"
#include "hookbound/partition.hpp"

namespace hookbound {

/// Union of the hooks of the diagonal boxes (lo,lo) .. (hi,hi) of `source`.
struct ThickHook {
  Partition source;
  int lo = 1;
  int hi = 1;
  std::vector<Box> boxes;

  int size() const noexcept { return static_cast<int>(boxes.size()); }
};

/// Index i of the diagonal hook containing u, i.e. min(row, col).
inline int diagonal_hook_index(const Box& u) { return u.row < u.col ? u.row : u.col; }

/// Throws std::out_of_range unless 1 <= lo <= hi <= diagonal_length(lambda).
ThickHook thick_hook(const Partition& lambda, int lo, int hi);

/// Thick hooks T_j = lambda^{(cuts[j-1]+1) -> cuts[j]} with sizes declared
/// to lie in [a, b]. `cuts` starts with 0 and ends with the diagonal length.
struct ThickHookDecomposition {
  Partition source;
  std::vector<int> cuts;
  std::vector<ThickHook> hooks;
  int a = 1;
  int b = 1;

  int parts() const noexcept { return static_cast<int>(hooks.size()); }
  /// Index j (1-based) of the thick hook holding u, or 0 when u ∉ source.
  int hook_of(const Box& u) const;
};

/// Builds the decomposition for explicit interior cut points, e.g. {1,2,4,7}
/// (the leading 0 is implied; the last cut must equal the diagonal length).
/// Sizes are not checked here; see validate_decomposition.
ThickHookDecomposition make_decomposition(const Partition& lambda,
                                          const std::vector<int>& cuts, int a, int b);

/// Greedy (a, 4a) decomposition: each T_j as large as possible without
/// exceeding 4a, then hooks are moved from T_{p-1} into an undersized T_p.
/// Throws std::domain_error when a < max_hook(lambda), when a > |lambda|
/// (no thick hook can reach a boxes) or when lambda is empty.
ThickHookDecomposition build_thick_hook_decomposition(const Partition& lambda, int a);

enum class DecompositionDefect {
  none,
  bad_cuts,      // not 0 = i_0 < ... < i_p = delta
  not_partition, // hooks overlap or miss boxes
  too_small,     // some |T_j| < a
  too_large,     // some |T_j| > b
};

struct DecompositionCheck {
  bool valid = false;
  DecompositionDefect defect = DecompositionDefect::none;
  int offending_hook = 0;  // 1-based, 0 when not applicable

  explicit operator bool() const noexcept { return valid; }
};

std::string to_string(DecompositionDefect defect);

DecompositionCheck validate_decomposition(const ThickHookDecomposition& d);

/// Number of boxes of `boxes` in each thick hook of d.
std::vector<int> hook_counts(const ThickHookDecomposition& d, const std::vector<Box>& boxes);

/// The minimal element E_{T,l} of the excited diagrams of the row [l],
/// l = sum(counts), having counts[j] boxes in T_j; std::nullopt when no
/// excited diagram has that distribution. Throws std::invalid_argument when
/// counts.size() != d.parts(), or the total is 0 or exceeds lambda_1.
std::optional<ExcitedDiagram> minimally_excited_row(const Partition& lambda,
                                                    const ThickHookDecomposition& d,
                                                    const std::vector<int>& counts);

/// Number of distinct per-hook count vectors realised by excited diagrams
/// of [row_length]. Throws std::out_of_range unless 1 <= row_length <= lambda_1.
long count_feasible_sequences(const Partition& lambda, const ThickHookDecomposition& d,
                              int row_length);

enum class LineOrientation { row, column };

struct StairsLine {
  LineOrientation orientation = LineOrientation::row;
  int length = 0;
  Box anchor;  // first box: (i,i) for rows, (i+1,i) for columns

  std::vector<Box> boxes() const;
};

/// Frobenius lines of mu: for each diagonal index i a row line of length
/// mu_i - i + 1 that includes (i,i), then a column line of length
/// mu'_i - i when that is positive.
struct StairsDecomposition {
  Partition source;
  std::vector<StairsLine> lines;

  int q() const noexcept { return static_cast<int>(lines.size()); }
};

StairsDecomposition stairs_decomposition(const Partition& mu);

enum class RowBoundCase { small_row, long_row };

/// Which branch of the row bound applies: small_row when l * s <= n.
RowBoundCase row_bound_case(const Partition& lambda, int row_length);

/// Upper bound on S(lambda, [l]): (8n/l)^l when l <= n/s, otherwise
/// (4e^2 s)^l with e^2 replaced by constants::e_squared_upper().
/// Throws std::out_of_range unless 1 <= l <= lambda_1.
Rational bound_S_row(const Partition& lambda, int row_length);

/// binom(l + floor(n/a), l) (4a)^l. Throws std::out_of_range unless
/// s(lambda) <= a <= n and 1 <= l <= lambda_1.
BigInt bound_S_general(const Partition& lambda, int a, int row_length);

/// (C max(n/sqrt(k), s))^k as an exact rational. The max is decided by
/// comparing n^2 with s^2 k. When n/sqrt(k) wins and k is not a perfect
/// square, n/floor(sqrt(k)) is used, which only enlarges the bound.
Rational bound_skew_general(int n, int k, int s, const Rational& c);

}  // namespace hookbound
