#include <cstdio>
#include <string>
#include <vector>

#include "hilcov/io.hpp"

namespace hilcov {

namespace {

// Fixed canvas: a 512x512 view box with a 16px margin around the unit square.
constexpr double kScale = 480.0;
constexpr double kMargin = 16.0;
constexpr double kCanvas = kScale + 2 * kMargin;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Unit-square point to canvas coordinates (SVG's y axis points down).
double sx(double x) { return kMargin + x * kScale; }
double sy(double y) { return kMargin + (1.0 - y) * kScale; }

std::string svg_open() {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  out += fmt(kCanvas);
  out += "\" height=\"";
  out += fmt(kCanvas);
  out += "\" viewBox=\"0 0 ";
  out += fmt(kCanvas);
  out += ' ';
  out += fmt(kCanvas);
  out += "\">\n<rect x=\"0\" y=\"0\" width=\"";
  out += fmt(kCanvas);
  out += "\" height=\"";
  out += fmt(kCanvas);
  out += "\" fill=\"#ffffff\"/>\n";
  return out;
}

void append_line(std::string& out, double x1, double y1, double x2, double y2,
                 const std::string& stroke, double width) {
  out += "<line x1=\"" + fmt(sx(x1)) + "\" y1=\"" + fmt(sy(y1)) + "\" x2=\"" +
         fmt(sx(x2)) + "\" y2=\"" + fmt(sy(y2)) + "\" stroke=\"" + stroke +
         "\" stroke-width=\"" + fmt(width) + "\" stroke-linecap=\"round\"/>\n";
}

void append_grid(std::string& out, int order) {
  int side = 1 << order;
  for (int k = 0; k <= side; ++k) {
    double c = static_cast<double>(k) / side;
    append_line(out, c, 0.0, c, 1.0, "#d0d0d0", 1.0);
    append_line(out, 0.0, c, 1.0, c, "#d0d0d0", 1.0);
  }
}

void append_cell_rect(std::string& out, const GridCell& cell,
                      const std::string& fill, const std::string& stroke,
                      double stroke_width) {
  double w = 1.0 / (1 << cell.order);
  double x0 = cell.i * w;
  double y0 = cell.j * w;
  out += "<rect x=\"" + fmt(sx(x0)) + "\" y=\"" + fmt(sy(y0 + w)) +
         "\" width=\"" + fmt(w * kScale) + "\" height=\"" + fmt(w * kScale) +
         "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
         fmt(stroke_width) + "\"/>\n";
}

void append_marker(std::string& out, double x, double y, double radius,
                   const std::string& fill) {
  out += "<circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) + "\" r=\"" +
         fmt(radius) + "\" fill=\"" + fill + "\"/>\n";
}

const char* event_color(StepEvent event) {
  switch (event) {
    case StepEvent::normal:
      return "#1f77b4";
    case StepEvent::skip:
      return "#2ca02c";
    case StepEvent::detour:
      return "#ff7f0e";
    case StepEvent::revisit:
      return "#d62728";
    case StepEvent::ascend:
    case StepEvent::descend:
      return "#9467bd";
  }
  return "#000000";
}

}  // namespace

std::string curve_svg(int order, MapVariant variant) {
  std::uint64_t count = std::uint64_t{1} << (2 * order);
  std::vector<std::pair<double, double>> points;
  points.reserve(count);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    NodeIndex node = NodeIndex::from_rank(rank, order);
    ExactPoint p = variant == MapVariant::standard
                       ? map_standard(node)
                   : variant == MapVariant::simplified
                       ? map_simplified(node)
                       : map_center(node).center();
    points.emplace_back(p.x().value(), p.y().value());
  }

  std::string out = svg_open();
  append_grid(out, order);
  out += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2.000000\""
         " stroke-linejoin=\"round\" points=\"";
  for (size_t k = 0; k < points.size(); ++k) {
    if (k) out += ' ';
    out += fmt(sx(points[k].first)) + "," + fmt(sy(points[k].second));
  }
  out += "\"/>\n";
  for (const auto& [x, y] : points) {
    append_marker(out, x, y, 3.0, "#1f3557");
  }
  out += "</svg>\n";
  return out;
}

std::string trace_svg(const World& world, const Trace& trace) {
  std::string out = svg_open();
  // Leaf cells of the planned schedule, then blocked regions on top.
  for (const NodeIndex& leaf : trace.leaves) {
    append_cell_rect(out, cell_of(leaf), "none", "#c8c8c8", 1.0);
  }
  for (const NodeIndex& obstacle : world.blocked) {
    append_cell_rect(out, cell_of(obstacle), "#5a5a5a", "#3c3c3c", 1.0);
  }
  append_line(out, 0.0, 0.0, 1.0, 0.0, "#808080", 1.5);
  append_line(out, 1.0, 0.0, 1.0, 1.0, "#808080", 1.5);
  append_line(out, 1.0, 1.0, 0.0, 1.0, "#808080", 1.5);
  append_line(out, 0.0, 1.0, 0.0, 0.0, "#808080", 1.5);
  std::vector<std::pair<double, double>> centers;
  centers.reserve(trace.steps.size());
  for (const auto& step : trace.steps) {
    ExactPoint c = cell_of(step.node).center();
    centers.emplace_back(c.x().value(), c.y().value());
  }
  for (size_t k = 1; k < trace.steps.size(); ++k) {
    append_line(out, centers[k - 1].first, centers[k - 1].second,
                centers[k].first, centers[k].second,
                event_color(trace.steps[k].event), 2.5);
  }
  if (!trace.steps.empty()) {
    append_marker(out, centers.front().first, centers.front().second, 5.0,
                  "#111111");
    for (size_t k = 0; k < trace.steps.size(); ++k) {
      append_marker(out, centers[k].first, centers[k].second, 2.5,
                    event_color(trace.steps[k].event));
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hilcov
