#include "hookbound/dimensions.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hookbound {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_)) {
    throw std::invalid_argument(inner_.to_string() + " is not contained in " +
                                outer_.to_string());
  }
}

std::string SkewShape::to_string() const {
  return outer_.to_string() + "\\" + inner_.to_string();
}

BigInt dim_hlf(const Partition& p) {
  return factorial(static_cast<std::uint32_t>(p.size())) / hook_product(p);
}

namespace {

// Rows of the current shape; a box can be added in row i when the row above
// (row i-1, i.e. the longer one) is strictly longer, or i = 1.
std::uint64_t count_fillings(std::vector<int>& shape, const std::vector<int>& target,
                             int remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (shape[i] >= target[i]) continue;
    if (i > 0 && shape[i - 1] <= shape[i]) continue;
    ++shape[i];
    total += count_fillings(shape, target, remaining - 1);
    --shape[i];
  }
  return total;
}

}  // namespace

BigInt skew_dim_oracle(const SkewShape& s, int bound) {
  if (s.size() > bound) {
    throw std::domain_error("skew shape " + s.to_string() + " has " +
                            std::to_string(s.size()) + " boxes, above the oracle bound " +
                            std::to_string(bound));
  }
  const auto& outer = s.outer();
  std::vector<int> target(outer.part_vector());
  std::vector<int> shape(target.size(), 0);
  for (int i = 1; i <= s.inner().length(); ++i)
    shape[static_cast<std::size_t>(i - 1)] = s.inner().row(i);
  return BigInt(count_fillings(shape, target, s.size()));
}

BigInt skew_dim_det(const SkewShape& s) {
  const Partition& outer = s.outer();
  const Partition& inner = s.inner();
  const int rows = outer.length();
  if (rows == 0) return 1;

  std::vector<Rational> inv_factorials(static_cast<std::size_t>(outer.row(1) + rows + 1));
  for (std::size_t m = 0; m < inv_factorials.size(); ++m)
    inv_factorials[m] = Rational(1, factorial(static_cast<std::uint32_t>(m)));

  const auto dim = static_cast<std::size_t>(rows);
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= rows; ++j) {
      const int m = outer.row(i) - inner.row(j) - i + j;
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          m < 0 ? Rational(0) : inv_factorials[static_cast<std::size_t>(m)];
    }
  }

  Rational det = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a[pivot][col] == 0) ++pivot;
    if (pivot == dim) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < dim; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return to_integer(det * factorial(static_cast<std::uint32_t>(s.size())));
}

}  // namespace hookbound
