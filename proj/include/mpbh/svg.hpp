#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "mpbh/tree.hpp"

namespace mpbh {

namespace detail {

inline std::string svg_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

// Tree drawing on a fixed canvas: edges stroked by a 16-color palette cycled
// on the hop distance of the edge from the center, centers as filled squares,
// other points as dots.
inline std::string render_svg(const BoundedTree& tree, const Instance& inst) {
  static const char* kPalette[16] = {
      "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
      "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324",
      "#800000", "#aaffc3", "#808000", "#000075"};
  const double pad = 20.0, span = 800.0, size = span + 2 * pad;
  auto px = [&](double x) { return pad + x * span; };
  auto py = [&](double y) { return pad + (1.0 - y) * span; };

  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::svg_coord(size) +
       "\" height=\"" + detail::svg_coord(size) + "\" viewBox=\"0 0 " +
       detail::svg_coord(size) + " " + detail::svg_coord(size) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (int v = 0; v < tree.size(); ++v) {
    if (v == tree.root) continue;
    const Point& a = inst.point(v);
    const Point& b = inst.point(tree.parent[v]);
    const int hop = std::max(tree.level[v], 1);  // the root-second_center edge draws as hop 1
    s += "<line x1=\"" + detail::svg_coord(px(a.x)) + "\" y1=\"" + detail::svg_coord(py(a.y)) +
         "\" x2=\"" + detail::svg_coord(px(b.x)) + "\" y2=\"" + detail::svg_coord(py(b.y)) +
         "\" stroke=\"" + kPalette[(hop - 1) % 16] + "\" stroke-width=\"1.5\"/>\n";
  }
  for (int v = 0; v < tree.size(); ++v) {
    const Point& p = inst.point(v);
    if (tree.is_center(v)) {
      s += "<rect x=\"" + detail::svg_coord(px(p.x) - 5) + "\" y=\"" +
           detail::svg_coord(py(p.y) - 5) + "\" width=\"10\" height=\"10\" fill=\"#000000\"/>\n";
    } else {
      s += "<circle cx=\"" + detail::svg_coord(px(p.x)) + "\" cy=\"" +
           detail::svg_coord(py(p.y)) + "\" r=\"3\" fill=\"#333333\"/>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

inline void render_svg(const BoundedTree& tree, const Instance& inst,
                       const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << render_svg(tree, inst);
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace mpbh
