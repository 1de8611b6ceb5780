#include "stdpairs/render.hpp"
#include "stdpairs/errors.hpp"

#include <algorithm>
#include <sstream>

namespace stdpairs {

namespace {

constexpr int kCell = 30;
constexpr int kMargin = 30;

bool in_cone_lattice(const Configuration &config, const IntVec &p) {
  auto c = config.chart().coordinates(p);
  if (!c)
    return false;
  return std::all_of(config.facets().begin(), config.facets().end(),
                     [&](const SupportFunction &f) {
                       return dot(f.lattice_form, *c) >= 0;
                     });
}

} // namespace

std::string render_2d(const MonomialIdeal &ideal, const StandardPairSet &s,
                      Int bound) {
  const Configuration &config = ideal.config();
  if (config.dim() != 2)
    throw Error(ErrorKind::UnsupportedDimension,
                "render-2d needs a configuration with 2 rows, got " +
                    std::to_string(config.dim()));
  auto points = points_up_to(config, bound);
  Int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto &p : points) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  const Int width = (xmax - xmin) * kCell + 2 * kMargin;
  const Int height = (ymax - ymin) * kCell + 2 * kMargin;
  auto sx = [&](Int x) { return (x - xmin) * kCell + kMargin; };
  auto sy = [&](Int y) { return height - ((y - ymin) * kCell + kMargin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << sx(xmin) << "\" y1=\"" << sy(0) << "\" x2=\""
      << sx(xmax) << "\" y2=\"" << sy(0) << "\" stroke=\"#bbb\"/>\n";
  out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(ymin) << "\" x2=\""
      << sx(0) << "\" y2=\"" << sy(ymax) << "\" stroke=\"#bbb\"/>\n";

  // Segments first so the points sit on top.
  for (const auto &p : s.pairs) {
    for (auto j : config.face(p.face).indices) {
      IntVec end = p.root;
      const IntVec &c = config.column(j);
      while (end[0] + c[0] >= xmin && end[0] + c[0] <= xmax &&
             end[1] + c[1] >= ymin && end[1] + c[1] <= ymax)
        end = add(end, c);
      out << "<line x1=\"" << sx(p.root[0]) << "\" y1=\"" << sy(p.root[1])
          << "\" x2=\"" << sx(end[0]) << "\" y2=\"" << sy(end[1])
          << "\" stroke=\"#d33\" stroke-width=\"2\"/>\n";
    }
    out << "<rect x=\"" << sx(p.root[0]) - 7 << "\" y=\"" << sy(p.root[1]) - 7
        << "\" width=\"14\" height=\"14\" fill=\"none\" stroke=\"#d33\"/>\n";
  }

  for (Int x = xmin; x <= xmax; ++x)
    for (Int y = ymin; y <= ymax; ++y) {
      IntVec p{x, y};
      if (std::binary_search(points.begin(), points.end(), p)) {
        bool member = ideal_member(ideal, p);
        out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y)
            << "\" r=\"5\" fill=\"" << (member ? "#333" : "white")
            << "\" stroke=\"#333\"/>\n";
      } else if (in_cone_lattice(config, p) && !is_member(config, p)) {
        out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y)
            << "\" r=\"3\" fill=\"none\" stroke=\"#888\" "
               "stroke-dasharray=\"2,2\"/>\n";
      }
    }
  out << "</svg>\n";
  return out.str();
}

} // namespace stdpairs
