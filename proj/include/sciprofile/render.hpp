#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"
#include "mds.hpp"

namespace sciprofile {

struct MapStyle {
  int width = 800;
  int height = 800;
  /// region label -> #rrggbb
  std::map<std::string, std::string> region_colors;
  std::string default_color = "#999999";
  double font_size = 11.0;
  double marker_radius = 4.0;
  double pole_size = 12.0;
  std::string pole_color = "#222222";
  /// pole label -> caption drawn next to the vertex
  std::map<std::string, std::string> pole_tags;
};

inline bool valid_hex_color(std::string_view c) {
  if (c.size() != 7 || c[0] != '#') return false;
  return std::all_of(c.begin() + 1, c.end(), [](unsigned char ch) { return std::isxdigit(ch) != 0; });
}

inline void check_style(const MapStyle& s) {
  if (s.width <= 0 || s.height <= 0) throw Error("map style: width and height must be positive");
  if (!valid_hex_color(s.default_color)) throw Error("map style: bad default color " + s.default_color);
  if (!valid_hex_color(s.pole_color)) throw Error("map style: bad pole color " + s.pole_color);
  for (const auto& [region, color] : s.region_colors)
    if (!valid_hex_color(color)) throw Error("map style: bad color " + color + " for region " + region);
}

/// Eight SJR regions on the Okabe-Ito palette; factor captions for three poles.
inline MapStyle default_map_style() {
  MapStyle s;
  s.region_colors = {{"Africa", "#E69F00"},        {"Asiatic Region", "#56B4E9"}, {"Eastern Europe", "#009E73"},
                     {"Latin America", "#F0E442"}, {"Middle East", "#0072B2"},    {"Northern America", "#D55E00"},
                     {"Pacific Region", "#CC79A7"}, {"Western Europe", "#000000"}};
  s.pole_tags = {{"F1", "factor 1 – biomedicine"},
                 {"F2", "factor 2 – basic science & engineering"},
                 {"F3", "factor 3 – agriculture"}};
  return s;
}

/// Uniform scale of embedding coordinates onto a canvas with a 5% margin;
/// y grows downward.
struct CanvasTransform {
  double scale = 1.0;
  double cx = 0.0, cy = 0.0;  // data center
  double px = 0.0, py = 0.0;  // canvas center

  static CanvasTransform fit(const Matrix& x, double width, double height) {
    CanvasTransform t;
    t.px = width / 2.0;
    t.py = height / 2.0;
    if (x.rows() == 0) return t;
    double lo[2] = {x(0, 0), x(0, 1)}, hi[2] = {x(0, 0), x(0, 1)};
    for (std::size_t r = 1; r < x.rows(); ++r)
      for (int c = 0; c < 2; ++c) {
        lo[c] = std::min(lo[c], x(r, c));
        hi[c] = std::max(hi[c], x(r, c));
      }
    t.cx = 0.5 * (lo[0] + hi[0]);
    t.cy = 0.5 * (lo[1] + hi[1]);
    const double usable_w = 0.9 * width, usable_h = 0.9 * height;
    const double sx = hi[0] > lo[0] ? usable_w / (hi[0] - lo[0]) : INFINITY;
    const double sy = hi[1] > lo[1] ? usable_h / (hi[1] - lo[1]) : INFINITY;
    t.scale = std::min(sx, sy);
    if (!std::isfinite(t.scale)) t.scale = 1.0;
    return t;
  }

  double x(double v) const { return px + scale * (v - cx); }
  double y(double v) const { return py - scale * (v - cy); }
};

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace detail

struct RenderedSvg {
  std::string text;
  std::vector<std::string> warnings;
};

/// SVG 1.1 map: one element with class "marker" per item, ISO-2 text labels,
/// full names as <title> tooltips, poles drawn as labeled squares joined by
/// the factor triangle.
inline RenderedSvg render_svg(const Embedding& e, const std::map<std::string, std::string>& regions,
                              const MapStyle& style, const std::map<std::string, std::string>& names = {}) {
  if (e.size() == 0) throw Error("render_svg: empty embedding");
  if (e.x.cols() != 2) throw Error("render_svg: embedding must be 2-D");
  check_style(style);

  RenderedSvg out;
  const auto tf = CanvasTransform::fit(e.x, style.width, style.height);
  std::string& s = out.text;
  const std::string w = std::to_string(style.width), h = std::to_string(style.height);
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
       "\" viewBox=\"0 0 " + w + " " + h + "\" font-family=\"sans-serif\" font-size=\"" +
       detail::px(style.font_size) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"#ffffff\"/>\n";

  std::vector<std::size_t> poles;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (is_pole_label(e.labels[i])) poles.push_back(i);
  if (poles.size() >= 2) {
    s += "<polygon class=\"pole-frame\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\" points=\"";
    for (std::size_t k = 0; k < poles.size(); ++k) {
      if (k) s += " ";
      s += detail::px(tf.x(e.x(poles[k], 0))) + "," + detail::px(tf.y(e.x(poles[k], 1)));
    }
    s += "\"/>\n";
  }

  std::set<std::string> used_regions;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::string& label = e.labels[i];
    const double x = tf.x(e.x(i, 0)), y = tf.y(e.x(i, 1));
    const std::string sx = detail::px(x), sy = detail::px(y);
    s += "<g>";
    if (is_pole_label(label)) {
      const double half = style.pole_size / 2.0;
      auto tag = style.pole_tags.find(label);
      const std::string caption = tag != style.pole_tags.end() ? tag->second : label;
      s += "<title>" + detail::xml_escape(caption) + "</title>";
      s += "<rect class=\"marker pole\" x=\"" + detail::px(x - half) + "\" y=\"" + detail::px(y - half) +
           "\" width=\"" + detail::px(style.pole_size) + "\" height=\"" + detail::px(style.pole_size) + "\" fill=\"" +
           style.pole_color + "\"/>";
      s += "<text x=\"" + detail::px(x + half + 3.0) + "\" y=\"" + detail::px(y - half - 2.0) +
           "\" font-weight=\"bold\">" + detail::xml_escape(label + "  " + caption) + "</text>";
    } else {
      std::string color = style.default_color;
      auto reg = regions.find(label);
      if (reg == regions.end()) {
        out.warnings.push_back("no region for " + label + ", drawn in default color");
      } else {
        used_regions.insert(reg->second);
        auto col = style.region_colors.find(reg->second);
        if (col != style.region_colors.end()) color = col->second;
        else out.warnings.push_back("no color for region " + reg->second + ", drawn in default color");
      }
      auto nm = names.find(label);
      s += "<title>" + detail::xml_escape(nm != names.end() ? nm->second : label) + "</title>";
      s += "<circle class=\"marker\" cx=\"" + sx + "\" cy=\"" + sy + "\" r=\"" + detail::px(style.marker_radius) +
           "\" fill=\"" + color + "\"/>";
      s += "<text x=\"" + detail::px(x + style.marker_radius + 1.0) + "\" y=\"" + detail::px(y - 2.0) + "\">" +
           detail::xml_escape(label) + "</text>";
    }
    s += "</g>\n";
  }

  double ly = 16.0;
  for (const auto& region : used_regions) {
    auto col = style.region_colors.find(region);
    const std::string color = col != style.region_colors.end() ? col->second : style.default_color;
    s += "<rect class=\"legend-swatch\" x=\"8\" y=\"" + detail::px(ly - 8.0) + "\" width=\"8\" height=\"8\" fill=\"" +
         color + "\"/><text x=\"20\" y=\"" + detail::px(ly) + "\">" + detail::xml_escape(region) + "</text>\n";
    ly += style.font_size + 4.0;
  }
  s += "</svg>\n";
  return out;
}

/// Labels grouped by the grid cell their coordinates bin into, in row-major
/// cell order; labels inside a cell are sorted.
struct AsciiCell {
  int col = 0;
  int row = 0;
  std::vector<std::string> labels;
};

inline std::vector<AsciiCell> ascii_cells(const Embedding& e, int cols, int rows) {
  if (cols < 10 || rows < 10) throw Error("render_ascii: grid must be at least 10 x 10");
  std::map<std::pair<int, int>, std::vector<std::string>> bins;
  if (e.size() > 0) {
    double lo[2] = {e.x(0, 0), e.x(0, 1)}, hi[2] = {e.x(0, 0), e.x(0, 1)};
    for (std::size_t r = 1; r < e.size(); ++r)
      for (int c = 0; c < 2; ++c) {
        lo[c] = std::min(lo[c], e.x(r, c));
        hi[c] = std::max(hi[c], e.x(r, c));
      }
    const double span_x = hi[0] - lo[0], span_y = hi[1] - lo[1];
    // Terminal cells are about twice as tall as wide: one row spans two columns' worth of data.
    double unit = 0.0;
    if (span_x > 0.0) unit = std::max(unit, span_x / (cols - 1));
    if (span_y > 0.0) unit = std::max(unit, 2.0 * span_y / (rows - 1));
    const double mid_x = 0.5 * (lo[0] + hi[0]), mid_y = 0.5 * (lo[1] + hi[1]);
    for (std::size_t i = 0; i < e.size(); ++i) {
      int c = (cols - 1) / 2, r = (rows - 1) / 2;
      if (unit > 0.0) {
        c = static_cast<int>(std::lround((cols - 1) / 2.0 + (e.x(i, 0) - mid_x) / unit));
        r = static_cast<int>(std::lround((rows - 1) / 2.0 - 2.0 * (e.x(i, 1) - mid_y) / unit));
      }
      c = std::clamp(c, 0, cols - 1);
      r = std::clamp(r, 0, rows - 1);
      bins[{r, c}].push_back(e.labels[i]);
    }
  }
  std::vector<AsciiCell> out;
  for (auto& [key, labels] : bins) {
    std::sort(labels.begin(), labels.end());
    out.push_back({key.second, key.first, std::move(labels)});
  }
  return out;
}

/// Text grid with each item's label at its binned cell. Several items in one
/// cell show the smallest label plus "+n".
inline std::string render_ascii(const Embedding& e, int cols, int rows) {
  const auto cells = ascii_cells(e, cols, rows);
  std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(cols), ' '));
  for (const auto& cell : cells) {
    std::string text = cell.labels.front();
    if (cell.labels.size() > 1) text += "+" + std::to_string(cell.labels.size() - 1);
    int start = std::min(cell.col, cols - static_cast<int>(text.size()));
    start = std::max(start, 0);
    auto& line = grid[static_cast<std::size_t>(cell.row)];
    for (std::size_t k = 0; k < text.size() && start + static_cast<int>(k) < cols; ++k)
      line[static_cast<std::size_t>(start) + k] = text[k];
  }
  std::string out;
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace sciprofile
