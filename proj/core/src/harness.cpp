#include "hookbound/harness.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hookbound/characters.hpp"
#include "hookbound/decompositions.hpp"
#include "hookbound/dimensions.hpp"
#include "hookbound/excited.hpp"

namespace hookbound {

ParallelFor sequential_runner() {
  return [](std::size_t count, const std::function<void(std::size_t)>& body) {
    for (std::size_t i = 0; i < count; ++i) body(i);
  };
}

SweepSummary summarize(const std::string& name, int n, const std::vector<BoundRecord>& records,
                       bool hard) {
  SweepSummary s;
  s.name = name;
  s.n = n;
  s.hard = hard;
  s.records = records.size();
  for (const BoundRecord& r : records) {
    const bool edge = !r.note.empty();
    if (edge) ++s.edge_cases;
    if (!r.satisfied) {
      if (edge) ++s.edge_violations;
      else ++s.violations;
    }
    if (s.argmax.empty() || r.implied_c > s.max_implied_c) {
      s.max_implied_c = r.implied_c;
      s.argmax = r.lambda + " " + r.alpha_or_mu;
    }
  }
  return s;
}

namespace {

std::uint32_t u32(int x) { return static_cast<std::uint32_t>(x); }

BoundRecord make_record(int n, const std::string& lambda, const std::string& other,
                        Rational lhs, Rational rhs, std::uint32_t power, bool squared) {
  BoundRecord r;
  r.n = n;
  r.lambda = lambda;
  r.alpha_or_mu = other;
  r.power = power;
  r.squared = squared;
  r.satisfied = lhs <= rhs;
  r.implied_c = power == 1 ? (lhs > 0 ? Rational(lhs / rhs) : Rational(1, 1000000))
                           : implied_constant(lhs, rhs, power);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

struct CharItem {
  Partition lambda;
  CycleType alpha;
};

std::vector<CharItem> char_items(int n, bool include_identity) {
  std::vector<CharItem> items;
  const auto types = enumerate_cycle_types(n);
  for_each_partition(n, [&](const Partition& lambda) {
    for (const CycleType& alpha : types)
      if (include_identity || !alpha.is_identity()) items.push_back({lambda, alpha});
  });
  return items;
}

struct PairItem {
  Partition lambda;
  Partition mu;
};

std::vector<PairItem> nonempty_pairs(int n) {
  std::vector<PairItem> items;
  for_each_partition(n, [&](const Partition& lambda) {
    for (const Partition& mu : sub_partitions(lambda))
      if (!mu.empty()) items.push_back({lambda, mu});
  });
  return items;
}

template <typename Item, typename Eval>
std::vector<BoundRecord> evaluate(const std::vector<Item>& items, const ParallelFor& run,
                                  Eval eval) {
  std::vector<BoundRecord> records(items.size());
  run(items.size(), [&](std::size_t i) { records[i] = eval(items[i]); });
  return records;
}

Rational chi_squared(const Partition& lambda, const CycleType& alpha) {
  const CharacterValue ch = character_mn(lambda, alpha);
  return ch.normalized * ch.normalized;
}

}  // namespace

BoundSweep sweep_thm_main(int n, const ParallelFor& run) {
  auto items = char_items(n, false);
  auto records = evaluate(items, run, [n](const CharItem& it) {
    const int w = it.alpha.word_length();
    const int supp = it.alpha.supp();
    const int s = max_hook(it.lambda);
    const Rational lhs = chi_squared(it.lambda, it.alpha);
    // shape^2 = w^{-w} * max(1, s^2 w / n^2)^supp
    const Rational growth = std::max(Rational(1), Rational(s * s * w, n * n));
    const Rational rhs = Rational(1, pow(BigInt(w), u32(w))) * pow(growth, u32(supp));
    return make_record(n, it.lambda.to_string(), it.alpha.to_string(), lhs, rhs, u32(2 * w),
                       true);
  });
  BoundSweep out{std::move(records), {}};
  out.summary = summarize("thm-main", n, out.records, false);
  return out;
}

BoundSweep sweep_thm_balanced(int n, const Rational& balance, const ParallelFor& run) {
  std::vector<CharItem> items;
  for (auto& item : char_items(n, false)) {
    const int s = max_hook(item.lambda);
    if (Rational(s * s) <= balance * balance * n) items.push_back(std::move(item));
  }
  auto records = evaluate(items, run, [n](const CharItem& it) {
    const int w = it.alpha.word_length();
    const Rational lhs = chi_squared(it.lambda, it.alpha);
    const Rational rhs(1, pow(BigInt(w), u32(w)));
    return make_record(n, it.lambda.to_string(), it.alpha.to_string(), lhs, rhs, u32(2 * w),
                       true);
  });
  BoundSweep out{std::move(records), {}};
  out.summary = summarize("thm-balanced", n, out.records, false);
  return out;
}

BoundSweep sweep_thm_diag(int n, const ParallelFor& run) {
  auto items = char_items(n, true);
  auto records = evaluate(items, run, [n](const CharItem& it) {
    const BigInt ch = abs(character_mn(it.lambda, it.alpha).value);
    const BigInt bound = diag_cycle_bound(it.lambda, it.alpha);
    return make_record(n, it.lambda.to_string(), it.alpha.to_string(), Rational(ch),
                       Rational(bound), 1, false);
  });
  BoundSweep out{std::move(records), {}};
  out.summary = summarize("thm-diag", n, out.records, true);
  return out;
}

BoundSweep sweep_skew_bound(int n, const ParallelFor& run) {
  auto items = nonempty_pairs(n);
  auto records = evaluate(items, run, [n](const PairItem& it) {
    const int k = it.mu.size();
    const int s = max_hook(it.lambda);
    const Rational ratio = naruse_ratio(it.lambda, it.mu);
    const Rational shape = std::max(Rational(1, k), Rational(s * s, n * n));
    return make_record(n, it.lambda.to_string(), it.mu.to_string(), ratio * ratio,
                       pow(shape, u32(k)), u32(2 * k), true);
  });
  BoundSweep out{std::move(records), {}};
  out.summary = summarize("skew-bound", n, out.records, false);
  return out;
}

BoundSweep sweep_row_bound(int n, const ParallelFor& run) {
  std::vector<PairItem> items;
  for_each_partition(n, [&](const Partition& lambda) {
    for (int l = 1; l <= lambda.row(1); ++l) items.push_back({lambda, Partition{l}});
  });
  auto records = evaluate(items, run, [n](const PairItem& it) {
    const int l = it.mu.size();
    const Rational lhs(excited_sum(it.lambda, it.mu));
    auto r = make_record(n, it.lambda.to_string(), it.mu.to_string(), lhs,
                         bound_S_row(it.lambda, l), u32(l), false);
    if (row_bound_case(it.lambda, l) == RowBoundCase::long_row && n / max_hook(it.lambda) < 2)
      r.note = "long-row branch with floor(n/s) < 2";
    return r;
  });
  BoundSweep out{std::move(records), {}};
  out.summary = summarize("row-bound", n, out.records, true);
  return out;
}

BoundSweep sweep_row_bound_general(int n, const ParallelFor& run) {
  struct Item {
    Partition lambda;
    int a;
    int l;
  };
  std::vector<Item> items;
  for_each_partition(n, [&](const Partition& lambda) {
    const int s = max_hook(lambda);
    for (int a : {s, n}) {
      for (int l = 1; l <= lambda.row(1); ++l) items.push_back({lambda, a, l});
      if (s == n) break;
    }
  });
  auto records = evaluate(items, run, [n](const Item& it) {
    const Rational lhs(excited_sum(it.lambda, Partition{it.l}));
    const Rational rhs(bound_S_general(it.lambda, it.a, it.l));
    return make_record(n, it.lambda.to_string(),
                       "[" + std::to_string(it.l) + "] a=" + std::to_string(it.a), lhs, rhs,
                       u32(it.l), false);
  });
  BoundSweep out{std::move(records), {}};
  out.summary = summarize("row-bound-general", n, out.records, true);
  return out;
}

BoundSweep sweep_excited_general(int n, const ParallelFor& run) {
  auto items = nonempty_pairs(n);
  const Rational c = constants::excited_general_upper();
  auto records = evaluate(items, run, [n, &c](const PairItem& it) {
    const int k = it.mu.size();
    const Rational lhs(excited_sum(it.lambda, it.mu));
    const Rational rhs = bound_skew_general(n, k, max_hook(it.lambda), c);
    return make_record(n, it.lambda.to_string(), it.mu.to_string(), lhs, rhs, u32(k), false);
  });
  BoundSweep out{std::move(records), {}};
  out.summary = summarize("excited-general", n, out.records, true);
  return out;
}

OrthogonalityReport verify_orthogonality(int n, const ParallelFor& run) {
  const auto shapes = enumerate_partitions(n);
  const auto types = enumerate_cycle_types(n);
  const std::size_t rows = shapes.size();
  const std::size_t cols = types.size();

  std::vector<BigInt> table(rows * cols);
  run(rows, [&](std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j)
      table[i * cols + j] = character_mn(shapes[i], types[j]).value;
  });
  std::vector<BigInt> class_sizes;
  for (const CycleType& alpha : types) class_sizes.push_back(alpha.class_size());
  const BigInt group_order = factorial(u32(n));

  OrthogonalityReport report;
  report.n = n;
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < rows; ++b) {
      BigInt sum = 0;
      for (std::size_t j = 0; j < cols; ++j)
        sum += class_sizes[j] * table[a * cols + j] * table[b * cols + j];
      ++report.pairs_checked;
      const BigInt expected = a == b ? group_order : BigInt(0);
      if (sum != expected) report.violations.push_back({shapes[a], shapes[b], sum});
    }
  }
  return report;
}

SharpnessReport sharpness_rectangles(int s_tilde, int h, int k) {
  if (s_tilde < 1 || h < 1 || k < 1) {
    throw std::invalid_argument("sharpness parameters must be positive");
  }
  if (s_tilde < h) {
    throw std::invalid_argument("sharpness needs s_tilde >= h (s_tilde >= sqrt(n))");
  }
  const int n = s_tilde * h;
  if (k > n) throw std::invalid_argument("k exceeds n = s_tilde * h");

  SharpnessReport report;
  report.s_tilde = s_tilde;
  report.h = h;
  report.k = k;
  report.lambda = Partition(std::vector<int>(static_cast<std::size_t>(h), s_tilde));

  int m = 0;
  while ((m + 1) * (m + 1) <= k) ++m;
  const bool perfect_square = m * m == k;

  if (k % h == 0 && k >= h * h) {
    const int width = k / h;
    if (width > s_tilde) throw std::invalid_argument("mu = [(k/h)^h] does not fit");
    report.which = SharpnessCase::wide_rows;
    report.mu = Partition(std::vector<int>(static_cast<std::size_t>(h), width));
  } else if (perfect_square && m <= h) {
    if (m > s_tilde) throw std::invalid_argument("mu = [m^m] does not fit");
    report.which = SharpnessCase::square;
    report.mu = Partition(std::vector<int>(static_cast<std::size_t>(m), m));
  } else {
    throw std::invalid_argument("need h | k with k >= h^2, or k = m^2 with m <= h");
  }

  report.ratio = naruse_ratio(report.lambda, report.mu);
  const int s = max_hook(report.lambda);
  if (report.which == SharpnessCase::wide_rows) {
    const Rational base = Rational(s, n) / (2 * constants::e_lower());
    report.lower_bound = pow(base, u32(k));
    report.satisfied = report.ratio >= report.lower_bound;
  } else {
    report.scaled_ratio = report.ratio * pow(BigInt(m), u32(k));
    report.satisfied = true;
  }
  return report;
}

std::vector<SharpnessReport> sharpness_sweep(int max_n) {
  std::vector<SharpnessReport> out;
  for (int h = 1; h * h <= max_n; ++h) {
    for (int s_tilde = h; s_tilde * h <= max_n; ++s_tilde) {
      for (int k = 1; k <= s_tilde * h; ++k) {
        int m = 0;
        while ((m + 1) * (m + 1) <= k) ++m;
        const bool wide = k % h == 0 && k >= h * h && k / h <= s_tilde;
        const bool square = !wide && m * m == k && m <= h;
        if (wide || square) out.push_back(sharpness_rectangles(s_tilde, h, k));
      }
    }
  }
  return out;
}

CompressionStats compression_stats(const Partition& lambda, int k) {
  if (k < 1 || k > lambda.size()) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside 1.." +
                            std::to_string(lambda.size()));
  }
  CompressionStats stats;
  CompressionSummary& sum = stats.summary;
  sum.lambda = lambda;
  sum.k = k;
  const BigInt k_factorial = factorial(u32(k));

  for (const Partition& mu : enumerate_partitions(k)) {
    CompressionRecord r;
    r.lambda = lambda;
    r.mu = mu;
    r.k = k;
    r.contained = contains(lambda, mu);
    const BigInt d_mu = dim_hlf(mu);
    r.pl = Rational(d_mu * d_mu, k_factorial);
    if (r.contained) {
      r.p = naruse_ratio(lambda, mu) * d_mu;
      r.a = r.p / r.pl;
      const int s_mu = max_hook(mu);
      r.a_bound = pow(Rational(s_mu * s_mu, k) * constants::e_upper(), u32(k));
      r.a_bound_holds = r.a <= r.a_bound;
      if (!r.a_bound_holds) ++sum.bound_violations;
      const Rational dev = abs(r.a - 1);
      if (dev > sum.max_abs_a_minus_1) sum.max_abs_a_minus_1 = dev;
    }
    sum.total_p += r.p;
    sum.total_pl += r.pl;
    sum.tv_distance += abs(r.p - r.pl);
    stats.records.push_back(std::move(r));
  }
  sum.tv_distance /= 2;
  return stats;
}

std::vector<CompressionStats> compression_sweep(int n, const ParallelFor& run) {
  std::vector<std::pair<Partition, int>> items;
  for_each_partition(n, [&](const Partition& lambda) {
    for (int k = 1; k <= n; ++k) items.emplace_back(lambda, k);
  });
  std::vector<CompressionStats> out(items.size());
  run(items.size(), [&](std::size_t i) {
    out[i] = compression_stats(items[i].first, items[i].second);
  });
  return out;
}

}  // namespace hookbound
