#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hookbound/numeric.hpp"

namespace hookbound {

/// Box of a Young diagram in French convention: row 1 is the longest
/// (bottom) row, columns run left to right, both 1-based.
struct Box {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Box&, const Box&) = default;
};

std::string to_string(const Box& box);

/// Thrown by the text parsers; `position` is the 0-based character offset
/// of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Integer partition: weakly decreasing positive parts. Immutable value.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless the parts are positive and
  /// weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& part_vector() const noexcept { return parts_; }
  /// Sum of parts.
  int size() const noexcept { return size_; }
  /// Number of non-zero rows.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Length of row i (1-based); 0 past the last row.
  int row(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)]
                                   : 0;
  }
  /// Length of column j (1-based), i.e. the j-th part of the conjugate.
  int column(int j) const noexcept;

  bool contains(const Box& u) const noexcept {
    return u.row >= 1 && u.col >= 1 && u.col <= row(u.row);
  }

  /// Boxes in row-major order (row 1 first).
  std::vector<Box> boxes() const;

  /// Canonical text form "[a1,a2,...]".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Multiset of cycle lengths, kept in the order supplied. The order matters
/// for ribbon tableau counts but not for characters.
class CycleType {
 public:
  CycleType() = default;
  /// Throws std::invalid_argument on a non-positive entry.
  explicit CycleType(std::vector<int> lengths);
  CycleType(std::initializer_list<int> lengths);

  const std::vector<int>& lengths() const noexcept { return lengths_; }
  int n() const noexcept { return n_; }
  /// Number of cycles of length j.
  int cyc(int j) const noexcept;
  /// Total number of cycles.
  int cyc() const noexcept { return static_cast<int>(lengths_.size()); }
  /// Sum of the cycle lengths >= 2.
  int supp() const noexcept;
  /// Minimal number of transpositions, sum over cycles of (length - 1).
  int word_length() const noexcept;
  bool is_identity() const noexcept { return supp() == 0; }

  /// Prod_j j^{cyc_j} cyc_j!.
  BigInt centralizer() const;
  /// n! / centralizer.
  BigInt class_size() const;

  /// Same multiset in weakly decreasing order.
  CycleType sorted() const;
  /// Lengths as a partition of n.
  Partition as_partition() const;

  /// "(c1,c2,...)".
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> lengths_;
  int n_ = 0;
};

// Parsing. Both accept an optional surrounding [..] or (..) pair, blanks
// around tokens, and an empty list.
Partition parse_partition(std::string_view text);
CycleType parse_cycle_type(std::string_view text);

Partition conjugate(const Partition& p);

/// Throws std::out_of_range when u is not a box of p.
int hook_length(const Partition& p, const Box& u);

/// lambda_1 + lambda'_1 - 1, the hook of (1,1); 0 for the empty partition.
int max_hook(const Partition& p);

/// Largest i with min(lambda_i, lambda'_i) >= i.
int diagonal_length(const Partition& p);

/// Boxes (i, lambda_i) with lambda_i > lambda_{i+1}, ordered by row.
std::vector<Box> corners(const Partition& p);

/// inner_i <= outer_i for every row.
bool contains(const Partition& outer, const Partition& inner);

/// Product of hook lengths over all boxes of p.
BigInt hook_product(const Partition& p);

inline constexpr int kDefaultEnumerationBound = 40;

/// Every partition of n exactly once, in reverse-lexicographic order
/// ([n] first, [1^n] last). Throws std::domain_error when n is negative or
/// exceeds `bound`.
std::vector<Partition> enumerate_partitions(int n,
                                            int bound = kDefaultEnumerationBound);

/// Visits the same sequence without materialising it.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit,
                        int bound = kDefaultEnumerationBound);

/// All mu contained in lambda (including the empty partition and lambda).
std::vector<Partition> sub_partitions(const Partition& lambda);

/// All mu contained in lambda with |mu| = k.
std::vector<Partition> sub_partitions(const Partition& lambda, int k);

/// All cycle types of n, each in weakly decreasing order.
std::vector<CycleType> enumerate_cycle_types(int n,
                                             int bound = kDefaultEnumerationBound);

}  // namespace hookbound
