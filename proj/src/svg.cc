#include "polycover/svg.h"

#include <algorithm>
#include <cstdio>
#include <string>

namespace polycover {

namespace {

constexpr double kCanvas = 1000.0;
constexpr double kMargin = 20.0;

class Frame {
 public:
  explicit Frame(const Ring& outer) {
    x_lo_ = x_hi_ = outer[0].x;
    y_lo_ = y_hi_ = outer[0].y;
    for (const Point& p : outer.vertices()) {
      x_lo_ = std::min(x_lo_, p.x);
      x_hi_ = std::max(x_hi_, p.x);
      y_lo_ = std::min(y_lo_, p.y);
      y_hi_ = std::max(y_hi_, p.y);
    }
    scale_ = (kCanvas - 2.0 * kMargin) / std::max(x_hi_ - x_lo_, y_hi_ - y_lo_);
  }

  // SVG y grows downwards.
  std::string point(const Point& p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", kMargin + (p.x - x_lo_) * scale_,
                  kCanvas - kMargin - (p.y - y_lo_) * scale_);
    return buf;
  }

  std::string points(const std::vector<Point>& pts) const {
    std::string s;
    for (const Point& p : pts) {
      if (!s.empty()) s += ' ';
      s += point(p);
    }
    return s;
  }

 private:
  double x_lo_, x_hi_, y_lo_, y_hi_, scale_;
};

std::string polygon(const Frame& f, const Ring& r, const char* style) {
  return std::string("  <polygon points=\"") + f.points(r.vertices()) + "\" " + style + "/>\n";
}

std::string circle(const Frame& f, const Point& p, const char* style) {
  const std::string xy = f.point(p);
  const auto comma = xy.find(',');
  return "  <circle cx=\"" + xy.substr(0, comma) + "\" cy=\"" + xy.substr(comma + 1) +
         "\" r=\"6\" " + style + "/>\n";
}

}  // namespace

std::string renderSvg(const PolygonWithHoles& map, const SvgOverlay& overlay) {
  const Frame f(map.outer());
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
      "viewBox=\"0 0 1000 1000\">\n"
      "  <rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#d0d0d0\"/>\n";

  out += "  <g id=\"map\">\n";
  out += polygon(f, map.outer(), "fill=\"white\" stroke=\"black\" stroke-width=\"2\"");
  for (const Ring& h : map.holes()) {
    out += polygon(f, h, "fill=\"red\" stroke=\"darkred\" stroke-width=\"1\"");
  }
  out += "  </g>\n";

  if (!overlay.cells.empty()) {
    out += "  <g id=\"cells\">\n";
    for (const Ring& c : overlay.cells) {
      out += polygon(f, c,
                     "fill=\"none\" stroke=\"gray\" stroke-width=\"1\" "
                     "stroke-dasharray=\"6,4\"");
    }
    out += "  </g>\n";
  }

  const auto& wp = overlay.path.waypoints;
  if (!wp.empty()) {
    out += "  <g id=\"path\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
    // Consecutive segments with the same tag share one polyline.
    std::size_t i = 0;
    while (i + 1 < wp.size()) {
      const SegmentTag tag = i < overlay.tags.size() ? overlay.tags[i] : SegmentTag::kSweep;
      std::size_t j = i + 1;
      while (j + 1 < wp.size() && j < overlay.tags.size() && overlay.tags[j] == tag) ++j;
      std::vector<Point> run(wp.begin() + i, wp.begin() + j + 1);
      out += std::string("    <polyline points=\"") + f.points(run) + "\" fill=\"none\" stroke=\"" +
             (tag == SegmentTag::kSweep ? "blue" : "orange") + "\"/>\n";
      i = j;
    }
    out += "  </g>\n";
    out += circle(f, wp.front(), "fill=\"green\" id=\"start\"");
    out += circle(f, wp.back(), "fill=\"none\" stroke=\"black\" stroke-width=\"2\" id=\"goal\"");
  }
  out += "</svg>\n";
  return out;
}

}  // namespace polycover
