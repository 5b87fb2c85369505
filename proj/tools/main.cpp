#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "config.hpp"
#include "hookbound/characters.hpp"
#include "hookbound/decompositions.hpp"
#include "hookbound/dimensions.hpp"
#include "hookbound/excited.hpp"
#include "hookbound/harness.hpp"
#include "hookbound/report_io.hpp"
#include "render.hpp"
#include "thread_pool.hpp"

namespace fs = std::filesystem;
using namespace hookbound;
using namespace hookbound::cli;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Globals {
  unsigned jobs = 1;
  std::string out;
  std::string format = "csv";
  std::string config_path;
  Config config;
};

std::string box_list(const std::vector<Box>& boxes) {
  std::string out;
  for (const Box& u : boxes) {
    if (!out.empty()) out += ' ';
    out += to_string(u);
  }
  return out;
}

// Writes through `emit` to --out (file or directory), the configured output
// directory, or stdout, in that order of preference.
void with_output(const Globals& g, const std::string& stem,
                 const std::function<void(std::ostream&)>& emit) {
  const std::string ext = g.format == "json" ? ".json" : ".csv";
  fs::path target;
  if (!g.out.empty()) {
    target = fs::is_directory(g.out) ? fs::path(g.out) / (stem + ext) : fs::path(g.out);
  } else if (!g.config.output_dir.empty()) {
    fs::create_directories(g.config.output_dir);
    target = fs::path(g.config.output_dir) / (stem + ext);
  } else {
    emit(std::cout);
    return;
  }
  std::ofstream file(target);
  if (!file) throw std::runtime_error("cannot write " + target.string());
  emit(file);
  std::cerr << "wrote " << target.string() << '\n';
}

// ---- subcommands -----------------------------------------------------------

int cmd_dim(const std::string& text) {
  std::cout << dim_hlf(parse_partition(text)) << '\n';
  return 0;
}

int cmd_skew_dim(const Globals& g, const std::string& outer, const std::string& inner,
                 const std::string& method) {
  const Partition lambda = parse_partition(outer);
  const Partition mu = parse_partition(inner);
  const SkewShape s(lambda, mu);
  BigInt value;
  if (method == "oracle") value = skew_dim_oracle(s, g.config.oracle_cap);
  else if (method == "det") value = skew_dim_det(s);
  else if (method == "naruse") value = skew_dim_naruse(lambda, mu);
  else if (mu.empty()) value = dim_hlf(lambda);
  else throw std::invalid_argument("--method hlf needs an empty inner shape; use det, oracle or naruse");
  std::cout << value << '\n';
  return 0;
}

int cmd_excited(const Globals& g, const std::string& outer, const std::string& inner, bool list,
                bool count, bool sum) {
  const Partition lambda = parse_partition(outer);
  const Partition mu = parse_partition(inner);
  if (count) {
    std::cout << enumerate_excited(lambda, mu).size() << '\n';
    return 0;
  }
  if (sum) {
    std::cout << excited_sum(lambda, mu) << '\n';
    return 0;
  }
  const auto all = enumerate_excited(lambda, mu);
  if (list) {
    const Glyphs gl = glyphs(g.config.render);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& e = all[i];
      const auto movable = excitable_boxes(lambda, e);
      const std::set<Box> in(e.boxes.begin(), e.boxes.end());
      const std::set<Box> mv(movable.begin(), movable.end());
      std::cout << "diagram " << i + 1 << ": " << box_list(e.boxes)
                << "  H = " << hook_product(lambda, e.boxes) << '\n';
      std::cout << render(lambda, [&](const Box& u) {
        if (mv.count(u)) return gl.movable;
        return in.count(u) ? gl.filled : gl.empty;
      });
      std::cout << '\n';
    }
    return 0;
  }
  std::cout << "count " << all.size() << '\n'
            << "sum " << excited_sum(lambda, mu) << '\n'
            << "ratio " << to_string(naruse_ratio(lambda, mu)) << '\n';
  return 0;
}

// Without --thick-hooks the stairs decomposition is drawn.
int cmd_decompose(const Globals& g, const std::string& text, std::optional<int> thick) {
  const Partition shape = parse_partition(text);
  const Glyphs gl = glyphs(g.config.render);
  if (thick) {
    const auto d = build_thick_hook_decomposition(shape, *thick);
    std::cout << "thick hooks of " << shape.to_string() << " with a = " << d.a
              << ", b = " << d.b << '\n';
    for (int j = 1; j <= d.parts(); ++j) {
      const ThickHook& t = d.hooks[static_cast<std::size_t>(j - 1)];
      std::cout << "  " << region_label(j) << ": diagonal " << t.lo << ".." << t.hi
                << ", size " << t.size() << '\n';
    }
    const auto check = validate_decomposition(d);
    std::cout << "valid " << (check ? "yes" : "no (" + to_string(check.defect) + ")") << '\n';
    std::cout << render(shape, [&](const Box& u) {
      const int j = d.hook_of(u);
      return j ? region_label(j) : gl.empty;
    });
    return check ? 0 : kExitViolation;
  }
  const auto sd = stairs_decomposition(shape);
  std::cout << "stairs lines of " << shape.to_string() << ", q = " << sd.q() << '\n';
  std::map<Box, int> label;
  for (int j = 1; j <= sd.q(); ++j) {
    const StairsLine& line = sd.lines[static_cast<std::size_t>(j - 1)];
    std::cout << "  " << region_label(j) << ": "
              << (line.orientation == LineOrientation::row ? "row" : "column") << " from "
              << to_string(line.anchor) << ", length " << line.length << '\n';
    for (const Box& u : line.boxes()) label[u] = j;
  }
  std::cout << render(shape, [&](const Box& u) {
    const auto it = label.find(u);
    return it == label.end() ? gl.empty : region_label(it->second);
  });
  return 0;
}

int cmd_char(const std::string& shape, const std::string& type, const std::string& method,
             bool normalized) {
  const Partition lambda = parse_partition(shape);
  const CycleType alpha = parse_cycle_type(type);
  const CharacterValue v =
      method == "branching" ? character_branching(lambda, alpha) : character_mn(lambda, alpha);
  if (normalized) std::cout << to_string(v.normalized) << '\n';
  else std::cout << v.value << '\n';
  return 0;
}

int cmd_ribbons(const Globals& g, const std::string& shape, int size, bool list) {
  const Partition lambda = parse_partition(shape);
  const auto ribbons = removable_ribbons(lambda, size);
  if (!list) {
    std::cout << ribbons.size() << '\n';
    return 0;
  }
  const Glyphs gl = glyphs(g.config.render);
  for (std::size_t i = 0; i < ribbons.size(); ++i) {
    const Ribbon& r = ribbons[i];
    std::cout << "ribbon " << i + 1 << ": " << box_list(r.boxes) << "  height " << r.height
              << "  remainder " << r.remainder.to_string() << '\n';
    std::cout << render(lambda, [&](const Box& u) { return r.contains(u) ? gl.filled : gl.empty; });
    std::cout << '\n';
  }
  return 0;
}

void report_sweep(const SweepSummary& s) {
  std::cerr << s.name << " n=" << s.n << ": " << s.records << " records, max implied C "
            << to_string(s.max_implied_c);
  if (!s.argmax.empty()) std::cerr << " at " << s.argmax;
  std::cerr << ", violations " << s.violations;
  if (s.edge_cases) std::cerr << " (edge regime: " << s.edge_cases << " instances, "
                              << s.edge_violations << " violations)";
  std::cerr << (s.hard ? (s.passed() ? " PASS" : " FAIL") : "") << '\n';
}

int cmd_verify(const Globals& g, const std::string& target, std::optional<int> n_opt,
               const std::string& balance_text) {
  const int cap = g.config.budget(target);
  const int n = n_opt.value_or(cap);
  if (n < 1) throw std::invalid_argument("--n must be positive");
  if (n > cap) {
    throw std::invalid_argument("--n " + std::to_string(n) + " exceeds the " + target +
                                " budget " + std::to_string(cap) +
                                " (raise budget." + target + " in the config file)");
  }
  const ParallelFor run = make_parallel_runner(g.jobs);
  const std::string stem = target + "-n" + std::to_string(n);
  const bool json = g.format == "json";

  if (target == "orthogonality") {
    const auto report = verify_orthogonality(n, run);
    with_output(g, stem, [&](std::ostream& o) { json ? write_json(o, report) : write_csv(o, report); });
    std::cerr << "orthogonality n=" << n << ": " << report.pairs_checked << " pairs, "
              << report.violations.size() << " violations " << (report.passed() ? "PASS" : "FAIL")
              << '\n';
    return report.passed() ? 0 : kExitViolation;
  }
  if (target == "sharpness") {
    const auto reports = sharpness_sweep(n);
    std::size_t bad = 0;
    for (const auto& r : reports) bad += r.satisfied ? 0 : 1;
    with_output(g, stem, [&](std::ostream& o) { json ? write_json(o, n, reports) : write_csv(o, reports); });
    std::cerr << "sharpness n<=" << n << ": " << reports.size() << " instances, " << bad
              << " violations " << (bad == 0 ? "PASS" : "FAIL") << '\n';
    return bad == 0 ? 0 : kExitViolation;
  }
  if (target == "compression") {
    const auto stats = compression_sweep(n, run);
    std::size_t bad = 0;
    for (const auto& s : stats) bad += s.summary.passed() ? 0 : 1;
    with_output(g, stem, [&](std::ostream& o) { json ? write_json(o, n, stats) : write_csv(o, stats); });
    std::cerr << "compression n=" << n << ": " << stats.size() << " (lambda, k) pairs, " << bad
              << " failing " << (bad == 0 ? "PASS" : "FAIL") << '\n';
    return bad == 0 ? 0 : kExitViolation;
  }

  BoundSweep sweep;
  if (target == "thm-main") sweep = sweep_thm_main(n, run);
  else if (target == "thm-balanced") {
    Rational balance;
    try {
      balance = Rational(balance_text);
    } catch (const std::exception&) {
      throw std::invalid_argument("--balance expects a rational such as 2 or 3/2");
    }
    if (balance <= 0) throw std::invalid_argument("--balance must be positive");
    sweep = sweep_thm_balanced(n, balance, run);
  } else if (target == "thm-diag") sweep = sweep_thm_diag(n, run);
  else if (target == "skew-bound") sweep = sweep_skew_bound(n, run);
  else if (target == "row-bound") sweep = sweep_row_bound(n, run);
  else if (target == "row-bound-general") sweep = sweep_row_bound_general(n, run);
  else sweep = sweep_excited_general(n, run);

  with_output(g, stem, [&](std::ostream& o) {
    if (json) write_json(o, sweep);
    else write_csv(o, sweep.records);
  });
  report_sweep(sweep.summary);
  return sweep.summary.passed() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hook-length, excited-diagram and character computations", "hookbound"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* jobs_opt = app.add_option("--jobs", g.jobs, "Worker threads for verify sweeps")
                       ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output file, or directory for verify reports");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", g.config_path, "key=value configuration file");

  std::string shape, other, method = "mn";
  int size = 0;

  auto* dim = app.add_subcommand("dim", "Number of standard tableaux of a shape");
  dim->add_option("lambda", shape, "Partition, e.g. [3,2]")->required();

  std::string skew_method = "det";
  auto* skew = app.add_subcommand("skew-dim", "Number of standard tableaux of lambda\\mu");
  skew->add_option("lambda", shape)->required();
  skew->add_option("mu", other)->required();
  skew->add_option("--method", skew_method)
      ->check(CLI::IsMember({"hlf", "oracle", "det", "naruse"}));

  bool list = false, count = false, sum = false;
  auto* excited = app.add_subcommand("excited", "Excited diagrams of mu inside lambda");
  excited->add_option("lambda", shape)->required();
  excited->add_option("mu", other)->required();
  auto* list_flag = excited->add_flag("--list", list, "Draw every diagram");
  auto* count_flag = excited->add_flag("--count", count, "Print the number of diagrams");
  auto* sum_flag = excited->add_flag("--sum", sum, "Print the excited sum S(lambda, mu)");
  list_flag->excludes(count_flag)->excludes(sum_flag);
  count_flag->excludes(sum_flag);

  std::optional<int> thick;
  bool stairs = false;
  auto* decompose = app.add_subcommand("decompose", "Thick-hook or stairs decomposition");
  decompose->add_option("shape", shape)->required();
  auto* thick_opt = decompose->add_option("--thick-hooks", thick, "Build an (a, 4a) decomposition");
  auto* stairs_flag = decompose->add_flag("--stairs", stairs, "Split into Frobenius lines");
  thick_opt->excludes(stairs_flag);

  bool normalized = false;
  auto* chr = app.add_subcommand("char", "Character value ch^lambda(alpha)");
  chr->add_option("lambda", shape)->required();
  chr->add_option("alpha", other, "Cycle type, e.g. (3,1,1)")->required();
  chr->add_option("--method", method)->check(CLI::IsMember({"mn", "branching"}));
  chr->add_flag("--normalized", normalized, "Divide by the dimension");

  bool ribbon_list = false;
  auto* ribbons = app.add_subcommand("ribbons", "Removable ribbons of a given size");
  ribbons->add_option("lambda", shape)->required();
  ribbons->add_option("size", size)->required()->check(CLI::PositiveNumber);
  ribbons->add_flag("--list", ribbon_list, "Draw every ribbon");

  std::string target;
  std::optional<int> n_opt;
  std::string balance = "2";
  auto* verify = app.add_subcommand("verify", "Exhaustive checks over all shapes of size n");
  verify->add_option("target", target)
      ->required()
      ->check(CLI::IsMember({"orthogonality", "thm-main", "thm-balanced", "thm-diag",
                             "skew-bound", "sharpness", "compression", "row-bound",
                             "row-bound-general", "excited-general"}));
  verify->add_option("--n", n_opt, "Size (sharpness: largest n); defaults to the budget");
  verify->add_option("--balance", balance, "thm-balanced: keep s <= balance * sqrt(n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!g.config_path.empty()) g.config = load_config(g.config_path);
    g.jobs = jobs_opt->count() ? g.jobs : g.config.jobs;

    if (dim->parsed()) return cmd_dim(shape);
    if (skew->parsed()) return cmd_skew_dim(g, shape, other, skew_method);
    if (excited->parsed()) return cmd_excited(g, shape, other, list, count, sum);
    if (decompose->parsed()) {
      if (!thick && !stairs) throw std::invalid_argument("decompose needs --thick-hooks <a> or --stairs");
      return cmd_decompose(g, shape, thick);
    }
    if (chr->parsed()) return cmd_char(shape, other, method, normalized);
    if (ribbons->parsed()) return cmd_ribbons(g, shape, size, ribbon_list);
    if (verify->parsed()) return cmd_verify(g, target, n_opt, balance);
  } catch (const hookbound::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
