#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace hookbound::cli {

enum class RenderStyle { ascii, unicode };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Settings from a key=value file; `#` starts a comment.
//
//   jobs = 4
//   output_dir = reports
//   oracle_cap = 18
//   render = unicode
//   budget.thm-main = 8
struct Config {
  unsigned jobs = 1;
  std::string output_dir;
  int oracle_cap = 18;
  RenderStyle render = RenderStyle::ascii;
  // Largest n accepted by each verify target.
  std::map<std::string, int> budgets = {
      {"orthogonality", 8}, {"thm-main", 8},       {"thm-balanced", 8},
      {"thm-diag", 9},      {"skew-bound", 9},     {"sharpness", 30},
      {"compression", 10},  {"row-bound", 12},     {"row-bound-general", 12},
      {"excited-general", 10},
  };

  int budget(const std::string& target) const;
};

/// Applies the file on top of the defaults. Throws ConfigError on an
/// unreadable file, unknown key or bad value.
Config load_config(const std::string& path, Config base = {});

}  // namespace hookbound::cli
