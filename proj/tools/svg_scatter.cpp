#include "svg_scatter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "eigenport/errors.hpp"

namespace eigenport {
namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 48.0;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// Planar coordinates for drawing: identity for 2D, a zero row for 1D, and a
// fixed azimuth/elevation view for 3D.
Eigen::MatrixXd project(const Eigen::MatrixXd& points) {
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, 2);
  switch (points.cols()) {
    case 1:
      out.col(0) = points.col(0);
      break;
    case 2:
      out = points;
      break;
    case 3: {
      const double az = 35.0 * std::numbers::pi / 180.0;
      const double el = 25.0 * std::numbers::pi / 180.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double x = points(i, 0), y = points(i, 1), z = points(i, 2);
        out(i, 0) = std::cos(az) * x - std::sin(az) * y;
        out(i, 1) = std::sin(el) * (std::sin(az) * x + std::cos(az) * y) + std::cos(el) * z;
      }
      break;
    }
    default:
      throw DimensionError("unsupported embedding dimension " + std::to_string(points.cols()) +
                           " for SVG output (1-3 supported)");
  }
  return out;
}

}  // namespace

std::string render_svg_scatter(const Embedding& embedding, const Eigen::VectorXd& eigenvalues) {
  const Eigen::Index n = embedding.points.rows();
  if (n == 0 || embedding.points.cols() == 0) {
    throw std::invalid_argument("cannot draw an empty embedding");
  }
  if (eigenvalues.size() != n) {
    throw std::invalid_argument("eigenvalue count does not match embedding");
  }
  const Eigen::MatrixXd xy = project(embedding.points);

  const Eigen::Vector2d lo = xy.colwise().minCoeff();
  const Eigen::Vector2d hi = xy.colwise().maxCoeff();
  const double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1e-12});
  const double scale = (kCanvas - 2.0 * kMargin) / span;
  const Eigen::Vector2d mid = 0.5 * (lo + hi);
  auto sx = [&](double x) { return kCanvas / 2.0 + (x - mid[0]) * scale; };
  auto sy = [&](double y) { return kCanvas / 2.0 - (y - mid[1]) * scale; };

  const double lmin = eigenvalues.minCoeff();
  const double lrange = std::max(eigenvalues.maxCoeff() - lmin, 1e-12);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kCanvas) +
         "\" height=\"" + fixed(kCanvas) + "\" viewBox=\"0 0 " + fixed(kCanvas) + " " +
         fixed(kCanvas) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (embedding.points.cols() == 1) {
    svg += "<line x1=\"" + fixed(kMargin) + "\" y1=\"" + fixed(kCanvas / 2) + "\" x2=\"" +
           fixed(kCanvas - kMargin) + "\" y2=\"" + fixed(kCanvas / 2) +
           "\" stroke=\"#bbbbbb\"/>\n";
  }

  // Plain points first so the highlighted markers sit on top.
  std::vector<Eigen::Index> draw_order;
  for (Eigen::Index i = 2; i < n; ++i) draw_order.push_back(i);
  if (n > 1) draw_order.push_back(1);
  draw_order.push_back(0);

  for (Eigen::Index i : draw_order) {
    const double cx = sx(xy(i, 0));
    const double cy = sy(xy(i, 1));
    std::string fill;
    std::string cls = "point";
    double radius = 6.0;
    if (i == 0) {
      fill = "#ff00ff";
      cls = "point dc";
      radius = 9.0;
    } else if (i == 1) {
      fill = "#00c8ff";
      cls = "point fiedler";
      radius = 9.0;
    } else {
      const double t = (eigenvalues[i] - lmin) / lrange;
      const int level = static_cast<int>(std::lround(215.0 * (1.0 - t)));
      char buf[8];
      std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", level, level, level);
      fill = buf;
    }
    svg += "<circle class=\"" + cls + "\" data-k=\"" + std::to_string(i) + "\" cx=\"" +
           fixed(cx) + "\" cy=\"" + fixed(cy) + "\" r=\"" + fixed(radius) + "\" fill=\"" + fill +
           "\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
    svg += "<text x=\"" + fixed(cx + radius + 2.0) + "\" y=\"" + fixed(cy - radius) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + std::to_string(i) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void emit_svg_scatter(const Embedding& embedding, const Eigen::VectorXd& eigenvalues,
                      const std::filesystem::path& path) {
  const std::string svg = render_svg_scatter(embedding, eigenvalues);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << svg;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace eigenport
