#include "hookbound/characters.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "hookbound/dimensions.hpp"

namespace hookbound {

bool Ribbon::contains(const Box& u) const {
  return std::binary_search(boxes.begin(), boxes.end(), u);
}

namespace {

// Calls visit(remainder_parts, height, r, c) for every rim hook of size j,
// where (r,c) is the box whose hook the rim hook corresponds to.
template <typename Visit>
void for_each_rim_hook(const Partition& lambda, int j, Visit&& visit) {
  if (j < 1) return;
  const auto& parts = lambda.part_vector();
  std::vector<int> rest;
  for (int r = 1; r <= lambda.length(); ++r) {
    for (int c = 1; c <= lambda.row(r); ++c) {
      const int top = lambda.column(c);
      if (lambda.row(r) - c + top - r + 1 != j) continue;
      rest.assign(parts.begin(), parts.end());
      for (int i = r; i <= top; ++i)
        rest[static_cast<std::size_t>(i - 1)] = std::max(c, lambda.row(i + 1)) - 1;
      while (!rest.empty() && rest.back() == 0) rest.pop_back();
      visit(rest, top - r, r, c);
    }
  }
}

void check_weight(const Partition& lambda, const CycleType& alpha) {
  if (alpha.n() != lambda.size()) {
    throw std::invalid_argument("cycle type " + alpha.to_string() + " has size " +
                                std::to_string(alpha.n()) + " but " + lambda.to_string() +
                                " has size " + std::to_string(lambda.size()));
  }
}

// Shared peeling recursion: `order` lists ribbon sizes in the order they are
// removed. With `signed_sum` the result is the MN character, otherwise the
// number of ribbon tableaux.
class Peeler {
 public:
  Peeler(std::vector<int> order, bool signed_sum)
      : order_(std::move(order)), signed_(signed_sum), memo_(order_.size() + 1) {}

  BigInt run(const Partition& shape, std::size_t consumed) {
    if (consumed == order_.size()) return shape.empty() ? 1 : 0;
    auto& level = memo_[consumed];
    if (auto it = level.find(shape); it != level.end()) return it->second;

    BigInt total = 0;
    std::vector<std::pair<Partition, int>> children;
    for_each_rim_hook(shape, order_[consumed],
                      [&](const std::vector<int>& rest, int height, int, int) {
                        children.emplace_back(Partition(rest), height);
                      });
    for (const auto& [child, height] : children) {
      BigInt sub = run(child, consumed + 1);
      if (signed_ && (height % 2 == 1)) total -= sub;
      else total += sub;
    }
    level.emplace(shape, total);
    return total;
  }

 private:
  std::vector<int> order_;
  bool signed_;
  std::vector<std::unordered_map<Partition, BigInt, PartitionHash>> memo_;
};

}  // namespace

std::vector<Ribbon> removable_ribbons(const Partition& lambda, int j) {
  std::vector<Ribbon> out;
  for_each_rim_hook(lambda, j, [&](const std::vector<int>& rest, int height, int r, int c) {
    Ribbon ribbon{{}, height, Partition(rest)};
    const int top = lambda.column(c);
    for (int i = r; i <= top; ++i) {
      const int from = std::max(c, lambda.row(i + 1));
      for (int col = from; col <= lambda.row(i); ++col) ribbon.boxes.push_back({i, col});
    }
    out.push_back(std::move(ribbon));
  });
  std::sort(out.begin(), out.end(),
            [](const Ribbon& a, const Ribbon& b) { return a.boxes < b.boxes; });
  return out;
}

std::vector<Ribbon> removable_ribbons_naive(const Partition& lambda, int j) {
  std::vector<Ribbon> out;
  if (j < 1 || j > lambda.size()) return out;
  for (const Partition& nu : sub_partitions(lambda, lambda.size() - j)) {
    std::vector<Box> strip;
    for (const Box& u : lambda.boxes())
      if (!nu.contains(u)) strip.push_back(u);
    auto in_strip = [&](const Box& u) {
      return std::binary_search(strip.begin(), strip.end(), u);
    };

    bool has_square = false;
    for (const Box& u : strip) {
      if (in_strip({u.row + 1, u.col}) && in_strip({u.row, u.col + 1}) &&
          in_strip({u.row + 1, u.col + 1})) {
        has_square = true;
        break;
      }
    }
    if (has_square) continue;

    std::set<Box> reached{strip.front()};
    std::vector<Box> stack{strip.front()};
    while (!stack.empty()) {
      const Box u = stack.back();
      stack.pop_back();
      for (const Box& v : {Box{u.row + 1, u.col}, Box{u.row - 1, u.col}, Box{u.row, u.col + 1},
                           Box{u.row, u.col - 1}}) {
        if (in_strip(v) && reached.insert(v).second) stack.push_back(v);
      }
    }
    if (reached.size() != strip.size()) continue;

    const int height = strip.back().row - strip.front().row;
    out.push_back({std::move(strip), height, nu});
  }
  std::sort(out.begin(), out.end(),
            [](const Ribbon& a, const Ribbon& b) { return a.boxes < b.boxes; });
  return out;
}

BigInt count_ribbon_tableaux(const Partition& lambda, const CycleType& alpha) {
  check_weight(lambda, alpha);
  std::vector<int> order(alpha.lengths().rbegin(), alpha.lengths().rend());
  return Peeler(std::move(order), false).run(lambda, 0);
}

CharacterValue character_mn(const Partition& lambda, const CycleType& alpha) {
  check_weight(lambda, alpha);
  // character is independent of the order; big ribbons first prune hardest
  const BigInt value = Peeler(alpha.sorted().lengths(), true).run(lambda, 0);
  return {value, Rational(value, dim_hlf(lambda))};
}

CycleType sigma_star(const CycleType& alpha) {
  if (alpha.is_identity()) {
    throw std::invalid_argument("sigma* is undefined for the identity type " +
                                alpha.to_string());
  }
  const CycleType sorted = alpha.sorted();
  std::vector<int> lengths;
  for (int len : sorted.lengths())
    if (len >= 2) lengths.push_back(len);
  return CycleType(std::move(lengths));
}

CharacterValue character_branching(const Partition& lambda, const CycleType& alpha) {
  check_weight(lambda, alpha);
  const CycleType star = sigma_star(alpha);
  BigInt value = 0;
  for (const Partition& mu : sub_partitions(lambda, star.n())) {
    const BigInt ch = character_mn(mu, star).value;
    if (ch == 0) continue;
    value += ch * skew_dim_det(SkewShape(lambda, mu));
  }
  return {value, Rational(value, dim_hlf(lambda))};
}

BigInt diag_cycle_bound(const Partition& lambda, const CycleType& alpha) {
  check_weight(lambda, alpha);
  return pow(BigInt(2), static_cast<std::uint32_t>(lambda.size())) *
         pow(BigInt(diagonal_length(lambda)), static_cast<std::uint32_t>(alpha.cyc()));
}

BigInt ribbon_tableaux_product_bound(const Partition& lambda, const CycleType& alpha) {
  check_weight(lambda, alpha);
  const int delta = diagonal_length(lambda);
  BigInt product = 1;
  for (int len : alpha.lengths()) product *= 2 * delta * len;
  return product;
}

}  // namespace hookbound
