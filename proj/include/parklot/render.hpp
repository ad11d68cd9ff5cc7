#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "parklot/lattice_paths.hpp"

namespace parklot {

enum class RenderFormat { ascii, svg };

struct RenderOptions {
  RenderFormat format = RenderFormat::ascii;
  int scale = 20;              // svg pixels per lattice unit
  bool annotate_spots = false; // label each unit column with the step crossing it
};

namespace detail {

// Step index (1-based) crossing each unit column x in [i-1, i].
inline std::vector<int> column_owners(const LukasiewiczWord& w) {
  std::vector<int> owners;
  for (std::size_t j = 0; j < w.size(); ++j) {
    owners.insert(owners.end(), static_cast<std::size_t>(w.vector()[j] + 1), static_cast<int>(j + 1));
  }
  return owners;
}

// ASCII: a step of size k >= 0 is k '/' cells then one '_' cell (k+1 wide,
// k up); a down step is a single '\' cell. One row per unit of height.
inline std::string render_ascii(const LukasiewiczWord& w, bool annotate) {
  struct Cell {
    int row;
    char glyph;
    int owner; // step index, 0 for down steps
  };
  std::vector<Cell> cells;
  int y = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const int k = w.vector()[j];
    const int owner = static_cast<int>(j + 1);
    if (k < 0) {
      cells.push_back({y - 1, '\\', 0});
      --y;
      continue;
    }
    for (int t = 0; t < k; ++t) cells.push_back({y++, '/', owner});
    cells.push_back({y, '_', owner});
  }
  const int top = height(w);
  std::vector<std::string> rows(static_cast<std::size_t>(top + 1), std::string(cells.size(), ' '));
  for (std::size_t c = 0; c < cells.size(); ++c) rows[static_cast<std::size_t>(cells[c].row)][c] = cells[c].glyph;

  std::ostringstream os;
  for (int r = top; r >= 0; --r) {
    std::string line = rows[static_cast<std::size_t>(r)];
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << '\n';
  }
  if (annotate) {
    std::string digits(cells.size(), ' ');
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].owner != 0) digits[c] = static_cast<char>('0' + cells[c].owner % 10);
    }
    digits.erase(digits.find_last_not_of(' ') + 1);
    os << digits << '\n' << "spots: " << join(column_owners(w)) << '\n';
  }
  return os.str();
}

inline std::string render_svg(const LukasiewiczWord& w, int scale, bool annotate) {
  const int margin = scale;
  const int n = static_cast<int>(w.size());
  const int top = height(w);
  const int label_band = annotate ? scale : 0;
  const int width = n * scale + 2 * margin;
  const int height_px = top * scale + 2 * margin + label_band;
  auto px = [&](int x) { return margin + x * scale; };
  auto py = [&](int yy) { return margin + (top - yy) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height_px
     << "\" viewBox=\"0 0 " << width << ' ' << height_px << "\">\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"" << px(0) << ',' << py(0);
  int x = 0;
  int y = 0;
  for (int k : w.vector()) {
    if (k < 0) {
      --y;
    } else {
      x += k + 1;
      y += k;
    }
    os << ' ' << px(x) << ',' << py(y);
  }
  os << "\"/>\n";
  if (annotate) {
    const auto owners = column_owners(w);
    for (std::size_t i = 0; i < owners.size(); ++i) {
      os << "<text x=\"" << px(static_cast<int>(i)) + scale / 2 << "\" y=\"" << py(0) + scale
         << "\" text-anchor=\"middle\" font-size=\"" << scale / 2 << "\" fill=\"blue\">" << owners[i]
         << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

} // namespace detail

inline std::string render(const LukasiewiczWord& w, const RenderOptions& options = {}) {
  if (options.format == RenderFormat::svg) {
    if (options.scale < 1) throw input_error("render scale must be positive");
    return detail::render_svg(w, options.scale, options.annotate_spots);
  }
  return detail::render_ascii(w, options.annotate_spots);
}

} // namespace parklot
