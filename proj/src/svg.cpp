#include "steinergeo/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace steinergeo {

namespace {

std::string num(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::string emit_svg(const TreeDocument& doc, const RenderStyle& style) {
  if (!(style.stroke_width > 0) || !(style.terminal_radius > 0) || !(style.steiner_radius > 0) ||
      !(style.margin > 0)) {
    throw std::invalid_argument("emit_svg: style values must be positive");
  }
  // SVG's y axis points down; flip so the plane renders upright.
  auto X = [](const std::array<double, 2>& p) { return p[0]; };
  auto Y = [](const std::array<double, 2>& p) { return -p[1]; };

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  auto grow = [&](double x, double y) {
    if (first) {
      minx = maxx = x;
      miny = maxy = y;
      first = false;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  };
  for (const auto& p : doc.terminals) grow(X(p), Y(p));
  for (const auto& p : doc.steiner_points) grow(X(p), Y(p));
  const double pad = style.margin * std::max(maxx - minx, maxy - miny) + style.terminal_radius;
  minx -= pad;
  miny -= pad;
  const double width = (maxx - minx) + pad;
  const double height = (maxy - miny) + pad;

  auto position = [&](int i) {
    return i < static_cast<int>(doc.terminals.size()) ? doc.terminals[i]
                                                      : doc.steiner_points[i - doc.terminals.size()];
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(minx) + " " + num(miny) +
         " " + num(width) + " " + num(height) + "\">\n";

  std::vector<std::pair<int, int>> edges = doc.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) {
    const auto a = position(u), b = position(v);
    out += "<line x1=\"" + num(X(a)) + "\" y1=\"" + num(Y(a)) + "\" x2=\"" + num(X(b)) +
           "\" y2=\"" + num(Y(b)) + "\" stroke=\"black\" stroke-width=\"" +
           num(style.stroke_width) + "\" stroke-linecap=\"round\"/>\n";
  }
  for (const auto& p : doc.terminals) {
    out += "<circle cx=\"" + num(X(p)) + "\" cy=\"" + num(Y(p)) + "\" r=\"" +
           num(style.terminal_radius) + "\" fill=\"black\"/>\n";
  }
  for (const auto& p : doc.steiner_points) {
    out += "<circle cx=\"" + num(X(p)) + "\" cy=\"" + num(Y(p)) + "\" r=\"" +
           num(style.steiner_radius) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
           num(0.5 * style.stroke_width) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace steinergeo
