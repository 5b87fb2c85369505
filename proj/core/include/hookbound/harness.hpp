#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hookbound/numeric.hpp"
#include "hookbound/partition.hpp"

namespace hookbound {

/// Runs body(0) .. body(count-1), in any order and on any thread. The harness
/// never spawns threads itself; callers pass a pool-backed runner.
using ParallelFor =
    std::function<void(std::size_t count, const std::function<void(std::size_t)>& body)>;

/// Runs the items in order on the calling thread.
ParallelFor sequential_runner();

/// One instance of an inequality lhs <= C^power * rhs.
///
/// When `squared` is set, lhs and rhs hold the squares of the quantities
/// (the shapes involve square roots) and power is doubled accordingly.
/// `implied_c` is the smallest C on a 1e-6 grid satisfying the inequality
/// (exactly lhs/rhs when power is 1); `satisfied` means lhs <= rhs.
struct BoundRecord {
  int n = 0;
  std::string lambda;
  std::string alpha_or_mu;
  Rational lhs;
  Rational rhs;
  Rational implied_c;
  std::uint32_t power = 1;
  bool squared = false;
  bool satisfied = false;
  /// Non-empty for instances in a documented edge regime.
  std::string note;
};

struct SweepSummary {
  std::string name;
  int n = 0;
  std::size_t records = 0;
  std::size_t violations = 0;   // records with !satisfied
  std::size_t edge_cases = 0;   // records carrying a note
  std::size_t edge_violations = 0;
  Rational max_implied_c;
  std::string argmax;           // "lambda alpha_or_mu" of the max
  /// Whether a violation is a hard failure for this sweep.
  bool hard = false;

  bool passed() const noexcept { return !hard || violations == 0; }
};

struct BoundSweep {
  std::vector<BoundRecord> records;
  SweepSummary summary;
};

SweepSummary summarize(const std::string& name, int n, const std::vector<BoundRecord>& records,
                       bool hard);

/// |chi^lambda(alpha)| against (1/sqrt|sigma|)^{|sigma|} max(1, s sqrt|sigma|/n)^{supp},
/// over every lambda ⊢ n and every non-identity alpha. Squared records.
BoundSweep sweep_thm_main(int n, const ParallelFor& run = sequential_runner());

/// |chi^lambda(alpha)| against (1/sqrt|sigma|)^{|sigma|} for the lambda ⊢ n
/// with s(lambda) <= balance * sqrt(n). Squared records.
BoundSweep sweep_thm_balanced(int n, const Rational& balance,
                              const ParallelFor& run = sequential_runner());

/// |ch^lambda(alpha)| <= 2^n delta^{cyc}, every lambda ⊢ n and every alpha
/// (identity included). Hard.
BoundSweep sweep_thm_diag(int n, const ParallelFor& run = sequential_runner());

/// d_{lambda\mu}/d_lambda against max(1/sqrt k, s/n)^k for every nonempty
/// mu ⊂ lambda ⊢ n. Squared records.
BoundSweep sweep_skew_bound(int n, const ParallelFor& run = sequential_runner());

/// S(lambda,[l]) <= bound_S_row(lambda, l) for every lambda ⊢ n and every
/// 1 <= l <= lambda_1. Instances in the long-row branch with floor(n/s) < 2
/// carry a note and are reported separately. Hard outside that regime.
BoundSweep sweep_row_bound(int n, const ParallelFor& run = sequential_runner());

/// S(lambda,[l]) <= bound_S_general(lambda, a, l) for a in {s(lambda), n}.
/// Hard.
BoundSweep sweep_row_bound_general(int n, const ParallelFor& run = sequential_runner());

/// S(lambda,mu) <= bound_skew_general(n, k, s, 2e*4e^2) for every nonempty
/// mu ⊂ lambda ⊢ n. Hard.
BoundSweep sweep_excited_general(int n, const ParallelFor& run = sequential_runner());

struct OrthogonalityViolation {
  Partition lambda;
  Partition mu;
  BigInt inner_product;  // sum over classes, expected n! [lambda = mu]
};

struct OrthogonalityReport {
  int n = 0;
  std::size_t pairs_checked = 0;
  std::vector<OrthogonalityViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// sum_alpha (n!/z_alpha) ch^lambda(alpha) ch^mu(alpha) = n! [lambda = mu]
/// for every pair lambda, mu ⊢ n.
OrthogonalityReport verify_orthogonality(int n, const ParallelFor& run = sequential_runner());

enum class SharpnessCase { wide_rows = 1, square = 2 };

/// lambda = [s_tilde^h] and a rectangle mu of size k inside it.
struct SharpnessReport {
  int s_tilde = 0;
  int h = 0;
  int k = 0;
  SharpnessCase which = SharpnessCase::wide_rows;
  Partition lambda;
  Partition mu;
  Rational ratio;        // d_{lambda\mu} / d_lambda
  /// wide_rows: (2e)^{-k} (s/n)^k with e rounded down, so the check is
  /// at least as strong as the real inequality.
  Rational lower_bound;
  /// square: ratio * sqrt(k)^k (exact since k = m^2).
  Rational scaled_ratio;
  bool satisfied = true;  // ratio >= lower_bound (always true for square)
};

/// Case selection: wide_rows when h divides k and k >= h^2 (mu = [(k/h)^h]),
/// else square when k = m^2 with m <= h (mu = [m^m]). Throws
/// std::invalid_argument when neither applies, when s_tilde < h, or when mu
/// does not fit.
SharpnessReport sharpness_rectangles(int s_tilde, int h, int k);

/// Every admissible (s_tilde, h, k) with s_tilde * h <= max_n, both cases.
std::vector<SharpnessReport> sharpness_sweep(int max_n);

struct CompressionRecord {
  Partition lambda;
  Partition mu;
  int k = 0;
  bool contained = false;
  Rational p;   // d_mu d_{lambda\mu} / d_lambda  (0 when mu ⊄ lambda)
  Rational pl;  // d_mu^2 / k!
  Rational a;   // p / pl, only meaningful when contained
  Rational a_bound;  // (C^2 e)^k with C = s(mu)/sqrt(k), e rounded up
  bool a_bound_holds = true;
};

struct CompressionSummary {
  Partition lambda;
  int k = 0;
  Rational total_p;       // must be 1
  Rational total_pl;      // must be 1
  Rational tv_distance;   // (1/2) sum |p - pl| over mu ⊢ k
  Rational max_abs_a_minus_1;
  std::size_t bound_violations = 0;

  bool passed() const noexcept {
    return total_p == 1 && total_pl == 1 && bound_violations == 0;
  }
};

struct CompressionStats {
  std::vector<CompressionRecord> records;
  CompressionSummary summary;
};

/// Records for every mu ⊢ k. Throws std::out_of_range unless 1 <= k <= |lambda|.
CompressionStats compression_stats(const Partition& lambda, int k);

/// compression_stats for every lambda ⊢ n and every 1 <= k <= n.
std::vector<CompressionStats> compression_sweep(int n,
                                                const ParallelFor& run = sequential_runner());

}  // namespace hookbound
