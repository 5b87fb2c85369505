// Acceptance gate: one PASS/FAIL line per criterion. Tables for the
// constant-bearing sweeps are written under the output directory (first
// argument, default "acceptance_out").

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hookbound/characters.hpp"
#include "hookbound/decompositions.hpp"
#include "hookbound/dimensions.hpp"
#include "hookbound/excited.hpp"
#include "hookbound/harness.hpp"
#include "hookbound/report_io.hpp"

namespace fs = std::filesystem;
using namespace hookbound;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int run_criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = out.failures.empty();
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << secs << " s)\n";
  for (const auto& n : out.notes) std::cout << "       " << n << '\n';
  std::size_t shown = 0;
  for (const auto& f : out.failures) {
    if (++shown > 10) {
      std::cout << "       ... " << out.failures.size() - 10 << " more\n";
      break;
    }
    std::cout << "       - " << f << '\n';
  }
  std::cout.flush();
  return ok ? 0 : 1;
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

void worked_examples(Outcome& o) {
  o.expect(character_mn(Partition{3, 2}, CycleType{3, 1, 1}).value == -1, "ch^[3,2](3,1,1) = -1");
  o.expect(count_ribbon_tableaux(Partition{3, 2}, CycleType{3, 1, 1}) == 3, "|RT([3,2],(3,1,1))| = 3");
  o.expect(character_mn(Partition{4, 3, 3}, CycleType{3, 3, 2, 1, 1}).value == 2,
           "ch^[4,3,3](3,3,2,1,1) = 2");
  o.expect(count_ribbon_tableaux(Partition{4, 3, 3}, CycleType{3, 3, 2, 1, 1}) == 12,
           "|RT| = 12 for (3,3,2,1,1)");
  o.expect(count_ribbon_tableaux(Partition{4, 3, 3}, CycleType{1, 3, 3, 2, 1}) == 2,
           "|RT| = 2 for (1,3,3,2,1)");
  o.expect(enumerate_excited(Partition{5, 5, 5, 2}, Partition{3, 2, 1, 1}).size() == 8,
           "|E([5,5,5,2],[3,2,1,1])| = 8");
  o.expect(corners(Partition{9, 5, 5, 4, 2, 1, 1}).size() == 5, "corners([9,5,5,4,2,1,1]) = 5");

  const Partition big{24, 19, 14, 12, 11, 10, 9, 7, 6, 3, 1};
  const auto d = make_decomposition(big, {1, 2, 4, 7}, 18, 36);
  std::vector<int> sizes;
  for (const auto& t : d.hooks) sizes.push_back(t.size());
  o.expect(sizes == std::vector<int>{34, 26, 33, 23}, "thick hook sizes (34,26,33,23)");
  o.expect(static_cast<bool>(validate_decomposition(d)), "cuts (1,2,4,7) form an (18,36) decomposition");
}

void oracle_equivalence(Outcome& o) {
  std::size_t pairs = 0;
  for (int n = 0; n <= 9; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      for (const Partition& mu : sub_partitions(lambda)) {
        const SkewShape s(lambda, mu);
        const BigInt det = skew_dim_det(s);
        const BigInt oracle = skew_dim_oracle(s);
        const Rational naruse = naruse_ratio(lambda, mu) * dim_hlf(lambda);
        ++pairs;
        if (det != oracle || naruse != Rational(oracle))
          o.failures.push_back(s.to_string() + ": det " + det.str() + ", oracle " + oracle.str() +
                               ", naruse " + to_string(naruse));
      }
    });
  }
  o.notes.push_back(str(pairs) + " pairs mu ⊂ lambda, n <= 9");
}

void character_correctness(Outcome& o) {
  for (int n = 1; n <= 8; ++n) {
    const auto report = verify_orthogonality(n);
    o.expect(report.passed(), "orthogonality n = " + str(n));
  }
  std::size_t branching = 0;
  for (int n = 1; n <= 8; ++n) {
    const auto types = enumerate_cycle_types(n);
    for_each_partition(n, [&](const Partition& lambda) {
      for (const CycleType& alpha : types) {
        if (alpha.is_identity()) continue;
        ++branching;
        o.expect(character_branching(lambda, alpha).value == character_mn(lambda, alpha).value,
                 "branching != MN at " + lambda.to_string() + " " + alpha.to_string());
      }
    });
  }
  std::mt19937 rng(20240601);
  std::size_t reorders = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto types = enumerate_cycle_types(n);
    for_each_partition(n, [&](const Partition& lambda) {
      for (const CycleType& alpha : types) {
        const BigInt base = character_mn(lambda, alpha).value;
        for (int t = 0; t < 3; ++t) {
          auto lengths = alpha.lengths();
          std::shuffle(lengths.begin(), lengths.end(), rng);
          const CycleType order(lengths);
          ++reorders;
          o.expect(character_mn(lambda, order).value == base,
                   "order dependence at " + lambda.to_string() + " " + order.to_string());
        }
      }
    });
  }
  o.notes.push_back(str(branching) + " branching checks, " + str(reorders) + " reorderings");
}

void constant_free(Outcome& o) {
  std::size_t diag = 0;
  for (int n = 1; n <= 9; ++n) {
    const auto sweep = sweep_thm_diag(n);
    diag += sweep.records.size();
    o.expect(sweep.summary.violations == 0,
             "2^n delta^cyc bound fails " + str(sweep.summary.violations) + " times at n = " + str(n));
  }
  std::size_t compress = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const auto& stats : compression_sweep(n)) {
      for (const auto& r : stats.records) {
        if (!r.contained) continue;
        ++compress;
        o.expect(r.a_bound_holds, "A bound fails at " + r.lambda.to_string() + " " + r.mu.to_string());
      }
      o.expect(stats.summary.total_p == 1 && stats.summary.total_pl == 1,
               "compression masses at " + stats.summary.lambda.to_string());
    }
  }
  for (int n = 1; n <= 20; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      o.expect(excited_sum(lambda, Partition{1}) == n, "S(lambda,[1]) != n at " + lambda.to_string());
    });
  }
  o.notes.push_back(str(diag) + " character instances, " + str(compress) + " compression ratios");
}

void write_table(const fs::path& dir, const std::string& name, const BoundSweep& sweep) {
  std::ofstream csv(dir / (name + ".csv"));
  write_csv(csv, sweep.records);
}

void constant_bearing(Outcome& o, const fs::path& dir) {
  fs::create_directories(dir);
  // Tables with finite per-instance implied constants.
  const auto finite = [&](const BoundSweep& s) {
    for (const auto& r : s.records) {
      if (r.implied_c <= 0) o.failures.push_back(s.summary.name + " non-finite C at " + r.lambda);
    }
  };
  Rational main_c = 0, balanced_c = 0, skew_c = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto main = sweep_thm_main(n);
    const auto balanced = sweep_thm_balanced(n, Rational(2));
    finite(main);
    finite(balanced);
    main_c = std::max(main_c, main.summary.max_implied_c);
    balanced_c = std::max(balanced_c, balanced.summary.max_implied_c);
    write_table(dir, "thm-main-n" + str(n), main);
    write_table(dir, "thm-balanced-n" + str(n), balanced);
  }
  for (int n = 1; n <= 9; ++n) {
    const auto skew = sweep_skew_bound(n);
    finite(skew);
    skew_c = std::max(skew_c, skew.summary.max_implied_c);
    write_table(dir, "skew-bound-n" + str(n), skew);
  }
  o.notes.push_back("max implied C: thm-main " + to_string(main_c) + ", thm-balanced (s <= 2 sqrt n) " +
                    to_string(balanced_c) + ", skew-bound " + to_string(skew_c));

  // Explicit-constant inequalities, exact.
  std::size_t row = 0, edge = 0, edge_bad = 0, general = 0, skew_general = 0;
  for (int n = 1; n <= 12; ++n) {
    const auto r = sweep_row_bound(n);
    row += r.records.size();
    edge += r.summary.edge_cases;
    edge_bad += r.summary.edge_violations;
    o.expect(r.summary.violations == 0, "row bound fails " + str(r.summary.violations) +
                                            " times at n = " + str(r.summary.n));
    write_table(dir, "row-bound-n" + str(n), r);

    const auto g = sweep_row_bound_general(n);
    general += g.records.size();
    o.expect(g.summary.violations == 0, "general row bound fails at n = " + str(n));
    write_table(dir, "row-bound-general-n" + str(n), g);

    const auto e = sweep_excited_general(n);
    skew_general += e.records.size();
    o.expect(e.summary.violations == 0, "general excited bound fails at n = " + str(n));
    write_table(dir, "excited-general-n" + str(n), e);
  }
  o.notes.push_back("row bound " + str(row) + " instances; edge regime (long row, floor(n/s) < 2): " +
                    str(edge) + " instances, " + str(edge_bad) + " violations");
  o.notes.push_back("general row bound " + str(general) + ", general excited bound " +
                    str(skew_general) + " instances; tables in " + dir.string());
}

void decomposition_properties(Outcome& o) {
  std::size_t built = 0, skipped = 0;
  for (int n = 1; n <= 20; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      const int s = max_hook(lambda);
      std::vector<int> as{s};
      if (2 * s <= n) as.push_back(2 * s);
      else ++skipped;
      if (n != s && n != 2 * s) as.push_back(n);
      for (int a : as) {
        const auto d = build_thick_hook_decomposition(lambda, a);
        ++built;
        for (const auto& t : d.hooks) {
          if (t.size() < a || t.size() > 4 * a)
            o.failures.push_back(lambda.to_string() + " a=" + str(a) + " |T|=" + str(t.size()));
        }
        o.expect(static_cast<bool>(validate_decomposition(d)),
                 "invalid decomposition " + lambda.to_string() + " a=" + str(a));
      }
    });
  }
  o.notes.push_back(str(built) + " decompositions; a = 2s skipped " + str(skipped) +
                    " times because 2s > n leaves no thick hook of size >= a");

  std::size_t stairs = 0;
  for (int n = 1; n <= 20; ++n) {
    for_each_partition(n, [&](const Partition& mu) {
      const auto sd = stairs_decomposition(mu);
      ++stairs;
      std::vector<Box> all;
      for (const auto& line : sd.lines)
        for (const Box& u : line.boxes()) all.push_back(u);
      std::sort(all.begin(), all.end());
      o.expect(all == mu.boxes(), "stairs lines do not partition " + mu.to_string());
      o.expect(sd.q() <= 2 * diagonal_length(mu), "q > 2 delta at " + mu.to_string());
    });
  }

  std::size_t feasible = 0;
  for (int n = 1; n <= 10; ++n) {
    for_each_partition(n, [&](const Partition& lambda) {
      for (int a = max_hook(lambda); a <= n; ++a) {
        const auto d = build_thick_hook_decomposition(lambda, a);
        for (int l = 1; l <= lambda.row(1); ++l) {
          ++feasible;
          const long count = count_feasible_sequences(lambda, d, l);
          const BigInt bound = binomial(static_cast<std::uint32_t>(l + n / a), static_cast<std::uint32_t>(l));
          o.expect(BigInt(count) <= bound, "feasible count above binomial at " + lambda.to_string());
        }
      }
    });
  }
  o.notes.push_back(str(stairs) + " stairs decompositions, " + str(feasible) + " feasible-sequence counts");
}

void sharpness(Outcome& o, const fs::path& dir) {
  fs::create_directories(dir);
  const auto reports = sharpness_sweep(30);
  std::size_t wide = 0, square = 0;
  for (const auto& r : reports) {
    if (r.which == SharpnessCase::wide_rows) {
      ++wide;
      o.expect(r.satisfied, "ratio below lower bound at " + r.lambda.to_string() + " " + r.mu.to_string());
    } else {
      ++square;
    }
  }
  o.expect(wide >= 10, "only " + str(wide) + " case-1 triples");
  std::ofstream csv(dir / "sharpness-n30.csv");
  write_csv(csv, reports);
  o.notes.push_back(str(wide) + " case-1 triples, " + str(square) + " case-2 rows in sharpness-n30.csv");
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_out");
  int failed = 0;
  failed += run_criterion(1, "worked examples", worked_examples);
  failed += run_criterion(2, "oracle equivalence, n <= 9", oracle_equivalence);
  failed += run_criterion(3, "character correctness", character_correctness);
  failed += run_criterion(4, "constant-free bounds", constant_free);
  failed += run_criterion(5, "constant-bearing sweeps", [&](Outcome& o) { constant_bearing(o, dir); });
  failed += run_criterion(6, "decomposition properties", decomposition_properties);
  failed += run_criterion(7, "sharpness", [&](Outcome& o) { sharpness(o, dir); });
  std::cout << (failed == 0 ? "acceptance: all criteria passed\n"
                            : "acceptance: " + str(failed) + " criteria failed\n");
  return failed == 0 ? 0 : 1;
}
