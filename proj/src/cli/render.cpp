#include "fhl/cli/render.hpp"

#include <cmath>
#include <cstdio>

#include "fhl/error.hpp"

namespace fhl::cli {

namespace {

inline constexpr int kMaxRenderStrands = 12;

struct Geometry {
  int k, n;
  DiagramLayout layout;

  double ellipse_width() const { return k * layout.slot_spacing; }
  double ellipse_center(int block) const {
    return layout.margin + block * (ellipse_width() + layout.ellipse_gap) + ellipse_width() / 2;
  }
  // x of slot s (1-based) in either row.
  double slot_x(int s) const {
    int block = (s - 1) / k, within = (s - 1) % k;
    return ellipse_center(block) + (within - (k - 1) / 2.0) * layout.slot_spacing;
  }
  double top() const { return layout.margin + 14.0; }
  double bottom() const { return top() + layout.strip_height; }
  double width() const { return 2 * layout.margin + n * ellipse_width() + (n - 1) * layout.ellipse_gap; }
  double height() const { return bottom() + 14.0 + layout.margin; }
};

// The strand from x0 (top) to x1 (bottom) is the cubic Bezier with control
// points (x0, top + H/3) and (x1, top + 2H/3): y is linear in t and
// x(t) = x0 + (x1 - x0) s(t) with s(t) = 3t^2 - 2t^3.
double smoothstep(double t) { return t * t * (3 - 2 * t); }

double invert_smoothstep(double s) {
  double lo = 0, hi = 1;
  for (int i = 0; i < 60; ++i) {
    double mid = (lo + hi) / 2;
    (smoothstep(mid) < s ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

void check_size(const FusedPermutation& d) {
  if (d.k() * d.n() > kMaxRenderStrands) throw ResourceGuard("rendering is limited to kn <= 12 strands");
}

}  // namespace

std::vector<Crossing> diagram_crossings(const FusedPermutation& d, const DiagramLayout& layout) {
  check_size(d);
  const Geometry g{d.k(), d.n(), layout};
  const Permutation f = canonical_strand_map(d);
  std::vector<Crossing> out;
  const int m = f.size();
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      if (f(a) < f(b)) continue;
      double xa0 = g.slot_x(a), xa1 = g.slot_x(f(a)), xb0 = g.slot_x(b), xb1 = g.slot_x(f(b));
      double s = (xb0 - xa0) / ((xa1 - xa0) - (xb1 - xb0));
      double t = invert_smoothstep(s);
      out.push_back({a, b, xa0 + (xa1 - xa0) * s, g.top() + layout.strip_height * t});
    }
  }
  return out;
}

std::string render_svg(const FusedPermutation& d, const DiagramLayout& layout) {
  check_size(d);
  const Geometry g{d.k(), d.n(), layout};
  const Permutation f = canonical_strand_map(d);
  const double H = layout.strip_height;
  auto strand_path = [&](int a) {
    double x0 = g.slot_x(a), x1 = g.slot_x(f(a));
    return "M " + fmt(x0) + " " + fmt(g.top()) + " C " + fmt(x0) + " " + fmt(g.top() + H / 3) + " " + fmt(x1) +
           " " + fmt(g.top() + 2 * H / 3) + " " + fmt(x1) + " " + fmt(g.bottom());
  };
  const auto crossings = diagram_crossings(d, layout);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(g.width()) + "\" height=\"" + fmt(g.height()) +
         "\" viewBox=\"0 0 " + fmt(g.width()) + " " + fmt(g.height()) + "\">\n";
  svg += "  <title>fused permutation " + d.to_string() + " (k=" + std::to_string(d.k()) +
         ", crossings=" + std::to_string(crossings.size()) + ")</title>\n";
  svg += "  <defs>\n";
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    svg += "    <clipPath id=\"x" + std::to_string(i) + "\"><circle cx=\"" + fmt(crossings[i].x) + "\" cy=\"" +
           fmt(crossings[i].y) + "\" r=\"" + fmt(layout.gap_radius + 1) + "\"/></clipPath>\n";
  }
  svg += "  </defs>\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <g fill=\"none\" stroke=\"black\" stroke-width=\"" + fmt(layout.stroke_width) + "\">\n";
  for (int a = 1; a <= f.size(); ++a) {
    svg += "    <path class=\"strand\" d=\"" + strand_path(a) + "\"/>\n";
  }
  svg += "  </g>\n";
  svg += "  <g class=\"crossings\">\n";
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const auto& c = crossings[i];
    svg += "    <circle cx=\"" + fmt(c.x) + "\" cy=\"" + fmt(c.y) + "\" r=\"" + fmt(layout.gap_radius) +
           "\" fill=\"white\"/>\n";
    svg += "    <path d=\"" + strand_path(c.over) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
           fmt(layout.stroke_width) + "\" clip-path=\"url(#x" + std::to_string(i) + ")\"/>\n";
  }
  svg += "  </g>\n";
  svg += "  <g fill=\"white\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (int block = 0; block < d.n(); ++block) {
    for (double y : {g.top(), g.bottom()}) {
      svg += "    <ellipse cx=\"" + fmt(g.ellipse_center(block)) + "\" cy=\"" + fmt(y) + "\" rx=\"" +
             fmt(g.ellipse_width() / 2) + "\" ry=\"8.00\" fill-opacity=\"0.0\"/>\n";
    }
  }
  svg += "  </g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace fhl::cli
