#include "asymlab/plot.hpp"

#include "asymlab/error.hpp"
#include "asymlab/kernel.hpp"
#include "asymlab/wulff.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>

namespace asymlab {

namespace {

constexpr double kSize = 480.0, kMargin = 24.0;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

// Vertices in counterclockwise order.
PointList ccw(const Polytope& p) {
  PointList v = p.vertices();
  const Vec c = p.centroid();
  std::sort(v.begin(), v.end(), [&](const Vec& a, const Vec& b) {
    return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
  });
  return v;
}

}  // namespace

std::string polygons_svg(const std::vector<PlotLayer>& layers) {
  double lo_x = INFINITY, lo_y = INFINITY, hi_x = -INFINITY, hi_y = -INFINITY;
  for (const auto& l : layers) {
    if (l.body.dim() != 2) throw Error(ErrorKind::UnsupportedDim, "only planar bodies can be plotted");
    for (const auto& v : l.body.vertices()) {
      lo_x = std::min(lo_x, v[0]);
      hi_x = std::max(hi_x, v[0]);
      lo_y = std::min(lo_y, v[1]);
      hi_y = std::max(hi_y, v[1]);
    }
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double s = (kSize - 2 * kMargin) / span;
  const double cx = 0.5 * (lo_x + hi_x), cy = 0.5 * (lo_y + hi_y);
  auto px = [&](double x) { return fmt(kSize / 2 + s * (x - cx)); };
  auto py = [&](double y) { return fmt(kSize / 2 - s * (y - cy)); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kSize) + "\" height=\"" +
                    fmt(kSize + 20.0 * layers.size()) + "\">\n";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& l = layers[i];
    std::string d;
    const PointList v = ccw(l.body);
    for (std::size_t k = 0; k < v.size(); ++k) d += (k ? " L " : "M ") + px(v[k][0]) + " " + py(v[k][1]);
    d += " Z";
    out += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"" + l.color + "\" stroke-width=\"2\"/>\n";
    out += "  <text x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kSize + 14.0 + 20.0 * i) + "\" fill=\"" + l.color +
           "\" font-family=\"monospace\" font-size=\"13\">" + escape(l.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string body_overlay_svg(const Polytope& k) {
  if (k.dim() != 2) throw Error(ErrorKind::UnsupportedDim, "only planar bodies can be plotted");
  const KernelResult r = symmetric_kernel(k);
  // (K + x) ∩ -K moved back by x/2 sits inside K; the Blaschke body is centred at K's centroid
  const Vec half = 0.5 * r.center;
  std::vector<PlotLayer> layers{
      {k, "K", "#1f4e9c"},
      {negate(k), "-K", "#9a9a9a"},
      {translate(r.recentred_kernel(), -half), "kernel, m = " + fmt(r.m_value), "#c0392b"},
      {translate(blaschke_body(k), k.centroid()), "Blaschke body", "#27823b"},
  };
  return polygons_svg(layers);
}

std::string report_svg(const Report& r) {
  const double bar = 18.0, width = 640.0;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
                    fmt(40.0 + bar * r.checks.size()) + "\">\n";
  out += "  <text x=\"8\" y=\"20\" font-family=\"monospace\" font-size=\"14\">suite " + escape(r.suite) + "</text>\n";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const auto& c = r.checks[i];
    const double y = 30.0 + bar * i;
    out += "  <rect x=\"8\" y=\"" + fmt(y) + "\" width=\"" + fmt(c.pass ? 200.0 : 60.0) + "\" height=\"" +
           fmt(bar - 4) + "\" fill=\"" + (c.pass ? "#27823b" : "#c0392b") + "\"/>\n";
    out += "  <text x=\"216\" y=\"" + fmt(y + bar - 7) + "\" font-family=\"monospace\" font-size=\"12\">" +
           escape(c.id) + (c.pass ? "" : " FAIL") + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace asymlab
