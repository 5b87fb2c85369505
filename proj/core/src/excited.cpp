#include "hookbound/excited.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace hookbound {

namespace {

struct BoxListHash {
  std::size_t operator()(const std::vector<Box>& boxes) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const Box& b : boxes) {
      h ^= static_cast<std::size_t>(b.row) * 0x100000001b3ull + static_cast<std::size_t>(b.col);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

bool has_box(const std::vector<Box>& sorted, const Box& u) {
  return std::binary_search(sorted.begin(), sorted.end(), u);
}

bool is_excitable(const Partition& lambda, const std::vector<Box>& sorted, const Box& u) {
  const Box up{u.row + 1, u.col};
  const Box right{u.row, u.col + 1};
  const Box diag{u.row + 1, u.col + 1};
  // (i+1,j+1) ∈ lambda implies the other two are as well
  if (!lambda.contains(diag)) return false;
  return !has_box(sorted, up) && !has_box(sorted, right) && !has_box(sorted, diag);
}

std::vector<Box> moved(const std::vector<Box>& sorted, const Box& u) {
  std::vector<Box> next;
  next.reserve(sorted.size());
  for (const Box& b : sorted)
    if (b != u) next.push_back(b);
  const Box target{u.row + 1, u.col + 1};
  next.insert(std::upper_bound(next.begin(), next.end(), target), target);
  return next;
}

void check_inside(const Partition& lambda, const std::vector<Box>& boxes) {
  for (const Box& b : boxes) {
    if (!lambda.contains(b)) {
      throw std::invalid_argument("box " + to_string(b) + " lies outside " +
                                  lambda.to_string());
    }
  }
}

std::vector<Box> boxes_of(const Partition& mu) { return mu.boxes(); }

}  // namespace

std::vector<Box> excitable_boxes(const Partition& lambda, const ExcitedDiagram& e) {
  check_inside(lambda, e.boxes);
  std::vector<Box> out;
  for (const Box& u : e.boxes)
    if (is_excitable(lambda, e.boxes, u)) out.push_back(u);
  return out;
}

ExcitedDiagram excite(const ExcitedDiagram& e, const Box& u) {
  return {moved(e.boxes, u), e.origin};
}

std::vector<std::vector<Box>> excitation_closure(const Partition& lambda,
                                                 std::vector<Box> start) {
  std::sort(start.begin(), start.end());
  check_inside(lambda, start);

  std::unordered_set<std::vector<Box>, BoxListHash> seen;
  std::deque<std::vector<Box>> frontier;
  seen.insert(start);
  frontier.push_back(std::move(start));
  std::vector<std::vector<Box>> out;
  while (!frontier.empty()) {
    std::vector<Box> current = std::move(frontier.front());
    frontier.pop_front();
    for (const Box& u : current) {
      if (!is_excitable(lambda, current, u)) continue;
      auto next = moved(current, u);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
    out.push_back(std::move(current));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExcitedDiagram> enumerate_excited(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) {
    throw std::invalid_argument(mu.to_string() + " is not contained in " + lambda.to_string());
  }
  auto closure = excitation_closure(lambda, boxes_of(mu));
  std::vector<ExcitedDiagram> out;
  out.reserve(closure.size());
  for (auto& boxes : closure) out.push_back({std::move(boxes), mu});
  return out;
}

BigInt hook_product(const Partition& lambda, const std::vector<Box>& boxes) {
  BigInt product = 1;
  for (const Box& b : boxes) product *= hook_length(lambda, b);
  return product;
}

BigInt excited_sum(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) {
    throw std::invalid_argument(mu.to_string() + " is not contained in " + lambda.to_string());
  }
  BigInt total = 0;
  for (const auto& boxes : excitation_closure(lambda, boxes_of(mu)))
    total += hook_product(lambda, boxes);
  return total;
}

namespace {

Rational ratio_from_sum(const BigInt& sum, const Partition& lambda, const Partition& mu) {
  return Rational(sum, falling_factorial(static_cast<std::uint32_t>(lambda.size()),
                                         static_cast<std::uint32_t>(mu.size())));
}

}  // namespace

Rational naruse_ratio(const Partition& lambda, const Partition& mu) {
  return ratio_from_sum(excited_sum(lambda, mu), lambda, mu);
}

BigInt skew_dim_naruse(const Partition& lambda, const Partition& mu) {
  const BigInt d = factorial(static_cast<std::uint32_t>(lambda.size())) / hook_product(lambda);
  return to_integer(naruse_ratio(lambda, mu) * d);
}

const BigInt& ExcitedSumCache::excited_sum(const Partition& lambda, const Partition& mu) {
  Key key{lambda, mu};
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    it = cache_.emplace(std::move(key), hookbound::excited_sum(lambda, mu)).first;
  }
  return it->second;
}

Rational ExcitedSumCache::naruse_ratio(const Partition& lambda, const Partition& mu) {
  return ratio_from_sum(excited_sum(lambda, mu), lambda, mu);
}

}  // namespace hookbound
