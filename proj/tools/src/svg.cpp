#include "fano_cli/svg.hpp"

#include "fano/broken_line.hpp"

#include <sstream>

namespace fano::cli {

namespace {

struct Viewport {
  BigInt xmin, xmax, ymin, ymax;
  int scale;

  BigInt px(const BigInt& x) const { return (x - xmin) * scale; }
  BigInt py(const BigInt& y) const { return (ymax - y) * scale; }
  std::string point(const LatticePoint& p) const { return px(p.x).str() + "," + py(p.y).str(); }
};

}  // namespace

std::string render_svg(const FanoPolygon& polygon, const SvgOptions& options) {
  Viewport vp{polygon.vertex(0).x, polygon.vertex(0).x, polygon.vertex(0).y, polygon.vertex(0).y, options.scale};
  for (const auto& v : polygon.vertices()) {
    if (v.x < vp.xmin) vp.xmin = v.x;
    if (v.x > vp.xmax) vp.xmax = v.x;
    if (v.y < vp.ymin) vp.ymin = v.y;
    if (v.y > vp.ymax) vp.ymax = v.y;
  }
  vp.xmin -= 1;
  vp.ymin -= 1;
  vp.xmax += 1;
  vp.ymax += 1;
  const BigInt width = (vp.xmax - vp.xmin) * options.scale;
  const BigInt height = (vp.ymax - vp.ymin) * options.scale;
  const LatticePoint origin{0, 0};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << " " << height << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  out << "  <polygon points=\"";
  for (std::size_t i = 0; i < polygon.size(); ++i) out << (i ? " " : "") << vp.point(polygon.vertex(i));
  out << "\" fill=\"#cfe2f3\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

  out << "  <g stroke=\"#e6b800\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\">\n";
  for (const auto& v : polygon.vertices())
    out << "    <line x1=\"" << vp.px(0) << "\" y1=\"" << vp.py(0) << "\" x2=\"" << vp.px(v.x) << "\" y2=\"" << vp.py(v.y)
        << "\"/>\n";
  out << "  </g>\n";

  if (options.broken_line) {
    BrokenLine line = polygon_broken_line(polygon);
    out << "  <polygon points=\"";
    // The stored chain repeats its start point at the end.
    for (std::size_t i = 0; i + 1 < line.points.size(); ++i) out << (i ? " " : "") << vp.point(line.points[i]);
    out << "\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"2.5\"/>\n";
  }

  out << "  <g fill=\"#555555\">\n";
  for (BigInt y = vp.ymax; y >= vp.ymin; --y)
    for (BigInt x = vp.xmin; x <= vp.xmax; ++x)
      out << "    <circle cx=\"" << vp.px(x) << "\" cy=\"" << vp.py(y) << "\" r=\"2.5\"/>\n";
  out << "  </g>\n";

  out << "  <circle cx=\"" << vp.px(origin.x) << "\" cy=\"" << vp.py(origin.y)
      << "\" r=\"5\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace fano::cli
