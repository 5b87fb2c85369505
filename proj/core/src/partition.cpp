#include "hookbound/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace hookbound {

std::string to_string(const Box& box) {
  return "(" + std::to_string(box.row) + "," + std::to_string(box.col) + ")";
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("partition part " + std::to_string(i + 1) +
                                  " is not positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts increase at part " +
                                  std::to_string(i + 1));
    }
    size_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::column(int j) const noexcept {
  if (j < 1) return 0;
  // parts are decreasing, so count the prefix with parts >= j
  auto it = std::partition_point(parts_.begin(), parts_.end(),
                                 [j](int part) { return part >= j; });
  return static_cast<int>(it - parts_.begin());
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row(i); ++j) out.push_back({i, j});
  return out;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// CycleType

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (lengths_[i] <= 0) {
      throw std::invalid_argument("cycle length " + std::to_string(i + 1) +
                                  " is not positive");
    }
    n_ += lengths_[i];
  }
}

CycleType::CycleType(std::initializer_list<int> lengths)
    : CycleType(std::vector<int>(lengths)) {}

int CycleType::cyc(int j) const noexcept {
  return static_cast<int>(std::count(lengths_.begin(), lengths_.end(), j));
}

int CycleType::supp() const noexcept {
  int total = 0;
  for (int len : lengths_)
    if (len >= 2) total += len;
  return total;
}

int CycleType::word_length() const noexcept { return n_ - cyc(); }

BigInt CycleType::centralizer() const {
  std::map<int, int> mult;
  for (int len : lengths_) ++mult[len];
  BigInt z = 1;
  for (auto [len, count] : mult) {
    z *= pow(BigInt(len), static_cast<std::uint32_t>(count));
    z *= factorial(static_cast<std::uint32_t>(count));
  }
  return z;
}

BigInt CycleType::class_size() const {
  return factorial(static_cast<std::uint32_t>(n_)) / centralizer();
}

CycleType CycleType::sorted() const {
  auto copy = lengths_;
  std::sort(copy.begin(), copy.end(), std::greater<>());
  return CycleType(std::move(copy));
}

Partition CycleType::as_partition() const { return Partition(sorted().lengths_); }

std::string CycleType::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lengths_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct IntList {
  std::vector<int> values;
  std::vector<std::size_t> offsets;
};

IntList parse_int_list(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  auto is_blank = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  while (begin < end && is_blank(text[begin])) ++begin;
  while (end > begin && is_blank(text[end - 1])) --end;

  if (begin < end && (text[begin] == '[' || text[begin] == '(')) {
    const char close = text[begin] == '[' ? ']' : ')';
    if (end - begin < 2 || text[end - 1] != close) {
      throw ParseError(std::string("missing closing '") + close + "'", end);
    }
    ++begin;
    --end;
  }

  IntList list;
  std::size_t pos = begin;
  bool expect_value = false;
  while (true) {
    while (pos < end && is_blank(text[pos])) ++pos;
    if (pos == end) {
      if (expect_value) throw ParseError("expected a number after ','", pos);
      break;
    }
    const std::size_t token_start = pos;
    while (pos < end && text[pos] != ',') ++pos;
    std::size_t token_end = pos;
    while (token_end > token_start && is_blank(text[token_end - 1])) --token_end;

    const std::string_view token = text.substr(token_start, token_end - token_start);
    if (token.empty()) throw ParseError("empty entry", token_start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("malformed token '" + std::string(token) + "'", token_start);
    }
    if (value <= 0) {
      throw ParseError("non-positive entry " + std::string(token), token_start);
    }
    list.values.push_back(value);
    list.offsets.push_back(token_start);

    if (pos < end) {
      ++pos;  // skip ','
      expect_value = true;
    } else {
      expect_value = false;
    }
  }
  return list;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  auto [values, offsets] = parse_int_list(text);
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) {
      throw ParseError("parts increase (" + std::to_string(values[i - 1]) + " < " +
                           std::to_string(values[i]) + ")",
                       offsets[i]);
    }
  }
  return Partition(std::move(values));
}

CycleType parse_cycle_type(std::string_view text) {
  return CycleType(parse_int_list(text).values);
}

// ---------------------------------------------------------------------------
// Statistics

Partition conjugate(const Partition& p) {
  std::vector<int> parts;
  const int width = p.row(1);
  parts.reserve(static_cast<std::size_t>(width));
  for (int j = 1; j <= width; ++j) parts.push_back(p.column(j));
  return Partition(std::move(parts));
}

int hook_length(const Partition& p, const Box& u) {
  if (!p.contains(u)) {
    throw std::out_of_range("box " + to_string(u) + " is outside " + p.to_string());
  }
  return p.row(u.row) - u.col + p.column(u.col) - u.row + 1;
}

int max_hook(const Partition& p) {
  return p.empty() ? 0 : p.row(1) + p.length() - 1;
}

int diagonal_length(const Partition& p) {
  int d = 0;
  while (p.row(d + 1) >= d + 1) ++d;
  return d;
}

std::vector<Box> corners(const Partition& p) {
  std::vector<Box> out;
  for (int i = 1; i <= p.length(); ++i)
    if (p.row(i) > p.row(i + 1)) out.push_back({i, p.row(i)});
  return out;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.row(i) > outer.row(i)) return false;
  return true;
}

BigInt hook_product(const Partition& p) {
  BigInt product = 1;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j)
      product *= p.row(i) - j + p.column(j) - i + 1;
  return product;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void check_bound(int n, int bound) {
  if (n < 0) throw std::domain_error("cannot enumerate partitions of a negative integer");
  if (n > bound) {
    throw std::domain_error("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                            std::to_string(bound));
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, visit);
    prefix.pop_back();
  }
}

// remaining < 0 collects every sub-partition; otherwise only those whose
// remaining rows sum to exactly `remaining`.
void sub_rec(const Partition& lambda, int row, int cap, int remaining,
             std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (remaining < 0) out.emplace_back(prefix);
  if (row > lambda.length()) return;
  const int hi = std::min(cap, lambda.row(row));
  for (int part = hi; part >= 1; --part) {
    if (remaining > 0 && part > remaining) continue;
    prefix.push_back(part);
    sub_rec(lambda, row + 1, part, remaining < 0 ? -1 : remaining - part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit,
                        int bound) {
  check_bound(n, bound);
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, visit);
}

std::vector<Partition> enumerate_partitions(int n, int bound) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, bound);
  return out;
}

std::vector<Partition> sub_partitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  sub_rec(lambda, 1, lambda.row(1), -1, prefix, out);
  return out;
}

std::vector<Partition> sub_partitions(const Partition& lambda, int k) {
  std::vector<Partition> out;
  if (k < 0 || k > lambda.size()) return out;
  if (k == 0) return {Partition()};
  std::vector<int> prefix;
  sub_rec(lambda, 1, lambda.row(1), k, prefix, out);
  return out;
}

std::vector<CycleType> enumerate_cycle_types(int n, int bound) {
  std::vector<CycleType> out;
  for_each_partition(
      n, [&](const Partition& p) { out.emplace_back(p.part_vector()); }, bound);
  return out;
}

}  // namespace hookbound
