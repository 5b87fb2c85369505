#pragma once

#include <functional>
#include <string>

#include "config.hpp"
#include "hookbound/partition.hpp"

namespace hookbound::cli {

/// Draws lambda French style: the longest row is printed last, at the
/// bottom. `cell` returns the glyph for a box.
std::string render(const Partition& lambda, const std::function<std::string(const Box&)>& cell);

/// Glyph for the j-th labelled region: 1..9, then a..z, then A..Z.
std::string region_label(int j);

struct Glyphs {
  std::string empty;     // box of lambda with no mark
  std::string filled;    // box of the diagram
  std::string movable;   // box of the diagram that can still be excited
};

Glyphs glyphs(RenderStyle style);

}  // namespace hookbound::cli
