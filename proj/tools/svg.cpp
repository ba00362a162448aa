#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "emit.hpp"

namespace elep::cli {

namespace {

constexpr double kSqrt3_2 = 0.8660254037844386;

struct XY {
  double x;
  double y;
};

XY cartesian(const EPoint& p) {
  const double x = p.x.get_d();
  const double y = p.y.get_d();
  return {x - y / 2.0, y * kSqrt3_2};
}

}  // namespace

std::string render_svg(const search::Realization& r, double scale, bool labels) {
  const EPoint origin{0, 0};
  const std::array<EPoint, 4> verts{origin, r.v1, r.v1 + r.v2, r.v2};

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const EPoint& v : verts) {
    const XY c = cartesian(v);
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  const double pad = 1.2;
  minx -= pad; maxx += pad; miny -= pad; maxy += pad;

  const double w = (maxx - minx) * scale;
  const double h = (maxy - miny) * scale;
  // Screen y grows downward.
  auto to_screen = [&](const XY& c) -> XY {
    return {(c.x - minx) * scale, (maxy - c.y) * scale};
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "  <polygon points=\"";
  for (const EPoint& v : verts) {
    const XY s = to_screen(cartesian(v));
    out << s.x << "," << s.y << " ";
  }
  out << "\" fill=\"#9db8e8\" fill-opacity=\"0.55\" stroke=\"#1f4db0\" stroke-width=\"2\"/>\n";

  // Lattice dots i + j*w with cartesian coordinates inside the padded box.
  const long j_lo = static_cast<long>(std::ceil(miny / kSqrt3_2));
  const long j_hi = static_cast<long>(std::floor(maxy / kSqrt3_2));
  long dots = 0;
  const long dot_budget = 100000;  // keeps pathological boxes bounded
  for (long j = j_lo; j <= j_hi && dots <= dot_budget; ++j) {
    const long i_lo = static_cast<long>(std::ceil(minx + j / 2.0));
    const long i_hi = static_cast<long>(std::floor(maxx + j / 2.0));
    for (long i = i_lo; i <= i_hi && dots <= dot_budget; ++i, ++dots) {
      const XY s = to_screen({i - j / 2.0, j * kSqrt3_2});
      out << "  <circle cx=\"" << s.x << "\" cy=\"" << s.y
          << "\" r=\"2.5\" fill=\"#444444\"/>\n";
    }
  }

  if (labels) {
    for (const EPoint& v : verts) {
      const XY s = to_screen(cartesian(v));
      out << "  <text x=\"" << s.x + 5 << "\" y=\"" << s.y - 5
          << "\" font-family=\"sans-serif\" font-size=\"" << std::max(10.0, scale / 3)
          << "\">" << format_epoint_omega(v) << "</text>\n";
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace elep::cli
