#include "render.hpp"

namespace hookbound::cli {

std::string render(const Partition& lambda, const std::function<std::string(const Box&)>& cell) {
  std::string out;
  for (int r = lambda.length(); r >= 1; --r) {
    for (int c = 1; c <= lambda.row(r); ++c) {
      if (c > 1) out += ' ';
      out += cell({r, c});
    }
    out += '\n';
  }
  return out;
}

std::string region_label(int j) {
  if (j >= 1 && j <= 9) return std::string(1, static_cast<char>('0' + j));
  if (j >= 10 && j < 36) return std::string(1, static_cast<char>('a' + j - 10));
  if (j >= 36 && j < 62) return std::string(1, static_cast<char>('A' + j - 36));
  return "?";
}

Glyphs glyphs(RenderStyle style) {
  if (style == RenderStyle::unicode) return {"·", "■", "◆"};
  return {".", "#", "*"};
}

}  // namespace hookbound::cli
