#include "config.hpp"

#include <charconv>
#include <fstream>

namespace hookbound::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int positive(const std::string& key, const std::string& value, int line) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || out < 1) {
    throw ConfigError("line " + std::to_string(line) + ": " + key +
                      " needs a positive integer, got '" + value + "'");
  }
  return out;
}

}  // namespace

int Config::budget(const std::string& target) const {
  const auto it = budgets.find(target);
  if (it == budgets.end()) throw ConfigError("no budget for '" + target + "'");
  return it->second;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line) + ": expected key = value");
    }
    const std::string key = trim(raw.substr(0, eq));
    const std::string value = trim(raw.substr(eq + 1));

    if (key == "jobs") {
      base.jobs = static_cast<unsigned>(positive(key, value, line));
    } else if (key == "output_dir") {
      base.output_dir = value;
    } else if (key == "oracle_cap") {
      base.oracle_cap = positive(key, value, line);
    } else if (key == "render") {
      if (value == "ascii") base.render = RenderStyle::ascii;
      else if (value == "unicode") base.render = RenderStyle::unicode;
      else throw ConfigError("line " + std::to_string(line) + ": render is ascii or unicode");
    } else if (key.rfind("budget.", 0) == 0) {
      const std::string target = key.substr(7);
      if (!base.budgets.count(target)) {
        throw ConfigError("line " + std::to_string(line) + ": unknown verify target '" +
                          target + "'");
      }
      base.budgets[target] = positive(key, value, line);
    } else {
      throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

}  // namespace hookbound::cli
