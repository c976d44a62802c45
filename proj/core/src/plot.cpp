#include "curvedim/plot.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace curvedim {

namespace {

double to_double(const Rational& r) {
  return static_cast<double>(numerator(r)) /
         static_cast<double>(denominator(r));
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(8) << v;
  return os.str();
}

struct Box {
  double x0, y0, x1, y1;  // world coordinates
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

// Evaluates an implicit polynomial in doubles.
struct DoublePoly {
  std::vector<std::pair<std::pair<int, int>, double>> terms;

  explicit DoublePoly(const Poly2& p) {
    for (std::size_t idx = 0; idx < p.coeffs().size(); ++idx) {
      if (p.coeffs()[idx] == 0) continue;
      terms.push_back({monomial_exponents(static_cast<int>(idx)),
                       to_double(p.coeffs()[idx])});
    }
  }

  double operator()(double x, double y) const {
    double sum = 0;
    for (const auto& [ij, c] : terms) {
      sum += c * std::pow(x, ij.first) * std::pow(y, ij.second);
    }
    return sum;
  }
};

// Clips the zero set of a degree-1 polynomial to the box (slab method).
bool clip_line(const Poly2& p, const Box& box, double out[4]) {
  const double a = to_double(p.coeff(1, 0));
  const double b = to_double(p.coeff(0, 1));
  const double c = to_double(p.coeff(0, 0));
  if (a == 0 && b == 0) return false;
  double px, py;
  if (std::abs(b) >= std::abs(a)) {
    px = 0;
    py = -c / b;
  } else {
    px = -c / a;
    py = 0;
  }
  const double dx = b, dy = -a;
  double tmin = -std::numeric_limits<double>::infinity();
  double tmax = std::numeric_limits<double>::infinity();
  const auto slab = [&](double d, double lo, double hi) {
    if (d == 0) return true;  // handled by the other axis
    double t0 = lo / d, t1 = hi / d;
    if (t0 > t1) std::swap(t0, t1);
    tmin = std::max(tmin, t0);
    tmax = std::min(tmax, t1);
    return tmin <= tmax;
  };
  if (!slab(dx, box.x0 - px, box.x1 - px)) return false;
  if (!slab(dy, box.y0 - py, box.y1 - py)) return false;
  if (dx == 0 && (px < box.x0 || px > box.x1)) return false;
  if (dy == 0 && (py < box.y0 || py > box.y1)) return false;
  if (tmin > tmax) return false;
  out[0] = px + tmin * dx;
  out[1] = py + tmin * dy;
  out[2] = px + tmax * dx;
  out[3] = py + tmax * dy;
  return true;
}

void emit_polylines(std::ostringstream& os,
                    const std::vector<std::pair<double, double>>& pts,
                    const Box& box, const std::string& style) {
  const double jump = 4.0 * std::hypot(box.width(), box.height());
  std::string current;
  std::size_t count = 0;
  double lastx = 0, lasty = 0;
  const auto flush = [&]() {
    if (count >= 2) {
      os << "  <polyline fill=\"none\" " << style << " points=\"" << current
         << "\"/>\n";
    }
    current.clear();
    count = 0;
  };
  for (const auto& [x, y] : pts) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      flush();
      continue;
    }
    if (count > 0 && std::hypot(x - lastx, y - lasty) > jump) flush();
    if (!current.empty()) current += ' ';
    current += fmt(x) + "," + fmt(-y);
    lastx = x;
    lasty = y;
    ++count;
  }
  flush();
}

// 256x256 sign-grid marching squares for implicit curves.
void emit_contour(std::ostringstream& os, const Poly2& poly, const Box& box,
                  const std::string& style) {
  constexpr int kCells = 256;
  const DoublePoly f(poly);
  std::vector<double> values(static_cast<std::size_t>(kCells + 1) *
                             (kCells + 1));
  const double sx = box.width() / kCells;
  const double sy = box.height() / kCells;
  for (int gy = 0; gy <= kCells; ++gy) {
    for (int gx = 0; gx <= kCells; ++gx) {
      values[static_cast<std::size_t>(gy) * (kCells + 1) + gx] =
          f(box.x0 + gx * sx, box.y0 + gy * sy);
    }
  }
  const auto value = [&](int gx, int gy) {
    return values[static_cast<std::size_t>(gy) * (kCells + 1) + gx];
  };
  std::ostringstream path;
  const auto interp = [](double xa, double ya, double va, double xb, double yb,
                         double vb) {
    const double t = va == vb ? 0.5 : va / (va - vb);
    return std::pair<double, double>{xa + t * (xb - xa), ya + t * (yb - ya)};
  };
  for (int gy = 0; gy < kCells; ++gy) {
    for (int gx = 0; gx < kCells; ++gx) {
      const double x0 = box.x0 + gx * sx, x1 = x0 + sx;
      const double y0 = box.y0 + gy * sy, y1 = y0 + sy;
      const double vbl = value(gx, gy), vbr = value(gx + 1, gy);
      const double vtr = value(gx + 1, gy + 1), vtl = value(gx, gy + 1);
      int c = (vbl > 0 ? 1 : 0) | (vbr > 0 ? 2 : 0) | (vtr > 0 ? 4 : 0) |
              (vtl > 0 ? 8 : 0);
      if (c == 0 || c == 15) continue;
      if (c > 7) c = 15 - c;  // complements share crossings
      const auto B = interp(x0, y0, vbl, x1, y0, vbr);
      const auto R = interp(x1, y0, vbr, x1, y1, vtr);
      const auto T = interp(x1, y1, vtr, x0, y1, vtl);
      const auto L = interp(x0, y1, vtl, x0, y0, vbl);
      std::vector<std::pair<std::pair<double, double>,
                            std::pair<double, double>>> segs;
      switch (c) {
        case 1: segs = {{L, B}}; break;
        case 2: segs = {{B, R}}; break;
        case 3: segs = {{L, R}}; break;
        case 4: segs = {{R, T}}; break;
        case 5: {
          const double center = f(x0 + sx / 2, y0 + sy / 2);
          if (center > 0) {
            segs = {{L, T}, {B, R}};
          } else {
            segs = {{L, B}, {R, T}};
          }
          break;
        }
        case 6: segs = {{B, T}}; break;
        default: segs = {{L, T}}; break;  // case 7
      }
      for (const auto& [p, q] : segs) {
        path << "M" << fmt(p.first) << " " << fmt(-p.second) << "L"
             << fmt(q.first) << " " << fmt(-q.second);
      }
    }
  }
  const std::string d = path.str();
  if (!d.empty()) {
    os << "  <path fill=\"none\" " << style << " d=\"" << d << "\"/>\n";
  }
}

// Rational point on a degree-2 curve, if one turns up on a small
// deterministic sweep of x-values.
std::optional<Point> conic_rational_point(const Poly2& p) {
  const Rational c20 = p.coeff(2, 0), c11 = p.coeff(1, 1), c02 = p.coeff(0, 2);
  const Rational c10 = p.coeff(1, 0), c01 = p.coeff(0, 1), c00 = p.coeff(0, 0);
  const auto exact_sqrt = [](const Rational& r) -> std::optional<Rational> {
    if (r < 0) return std::nullopt;
    const BigInt sn = boost::multiprecision::sqrt(numerator(r));
    const BigInt sd = boost::multiprecision::sqrt(denominator(r));
    if (sn * sn != numerator(r) || sd * sd != denominator(r)) {
      return std::nullopt;
    }
    return Rational(sn, sd);
  };
  for (int step = 0; step <= 160; ++step) {
    // 0, 1/2, -1/2, 1, -1, ...
    const Rational x0 = Rational((step + 1) / 2 * ((step % 2) ? 1 : -1), 2);
    const Rational qa = c02;
    const Rational qb = c11 * x0 + c01;
    const Rational qc = c20 * x0 * x0 + c10 * x0 + c00;
    if (qa == 0) {
      if (qb == 0) continue;
      return Point{x0, -qc / qb};
    }
    const auto root = exact_sqrt(qb * qb - Rational(4) * qa * qc);
    if (!root) continue;
    return Point{x0, (-qb + *root) / (Rational(2) * qa)};
  }
  return std::nullopt;
}

}  // namespace

PlotCurveItem plot_item_for_poly(const Poly2& poly) {
  PlotCurveItem item;
  item.poly = poly;
  const int deg = poly.effective_degree();
  if (deg == 1) {
    item.style = PlotCurveItem::Style::line_segment;
    return item;
  }
  if (deg == 2) {
    if (const auto pt = conic_rational_point(poly)) {
      // chord parametrization through the rational point
      const double px = to_double(pt->x), py = to_double(pt->y);
      const double a20 = to_double(poly.coeff(2, 0));
      const double a11 = to_double(poly.coeff(1, 1));
      const double a02 = to_double(poly.coeff(0, 2));
      const double a10 = to_double(poly.coeff(1, 0));
      const double a01 = to_double(poly.coeff(0, 1));
      item.style = PlotCurveItem::Style::param_polyline;
      item.param = [=](double u) -> std::pair<double, double> {
        constexpr double kPi = 3.14159265358979323846;
        const double theta = u * kPi;
        const double dx = std::cos(theta), dy = std::sin(theta);
        const double alpha =
            a20 * dx * dx + a11 * dx * dy + a02 * dy * dy;
        const double beta = 2 * a20 * px * dx + a11 * (px * dy + py * dx) +
                            2 * a02 * py * dy + a10 * dx + a01 * dy;
        if (std::abs(alpha) < 1e-12) {
          return {std::numeric_limits<double>::quiet_NaN(),
                  std::numeric_limits<double>::quiet_NaN()};
        }
        const double s = -beta / alpha;
        return {px + s * dx, py + s * dy};
      };
      return item;
    }
  }
  item.style = PlotCurveItem::Style::contour;
  return item;
}

std::string render_svg(const PlotSpec& spec) {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const Point& p : spec.nodes) {
    const double x = to_double(p.x), y = to_double(p.y);
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
  }
  double w = maxx - minx, h = maxy - miny;
  if (w <= 0) w = 1;
  if (h <= 0) h = 1;
  const Box box{minx - 0.1 * w, miny - 0.1 * h, maxx + 0.1 * w,
                maxy + 0.1 * h};
  const double vw = box.width(), vh = box.height();
  const double radius = 0.008 * vw;
  const double stroke = 0.0025 * vw;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
     << "viewBox=\"" << fmt(box.x0) << " " << fmt(-box.y1) << " " << fmt(vw)
     << " " << fmt(vh) << "\" width=\"720\" height=\""
     << fmt(720.0 * vh / vw) << "\">\n";

  const std::string curve_style =
      "stroke=\"#444444\" stroke-width=\"" + fmt(stroke) + "\"";
  for (const PlotCurveItem& item : spec.curves) {
    switch (item.style) {
      case PlotCurveItem::Style::line_segment: {
        double seg[4];
        if (clip_line(item.poly, box, seg)) {
          os << "  <line " << curve_style << " x1=\"" << fmt(seg[0])
             << "\" y1=\"" << fmt(-seg[1]) << "\" x2=\"" << fmt(seg[2])
             << "\" y2=\"" << fmt(-seg[3]) << "\"/>\n";
        }
        break;
      }
      case PlotCurveItem::Style::param_polyline: {
        std::vector<std::pair<double, double>> pts;
        constexpr int kSegments = 256;
        for (int i = 0; i <= kSegments; ++i) {
          pts.push_back(item.param((i % kSegments) / double(kSegments)));
        }
        emit_polylines(os, pts, box, curve_style);
        break;
      }
      case PlotCurveItem::Style::contour:
        emit_contour(os, item.poly, box, curve_style);
        break;
    }
  }

  std::vector<bool> highlight(spec.nodes.size(), false);
  for (std::size_t i : spec.highlighted) {
    if (i < highlight.size()) highlight[i] = true;
  }
  for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
    const double x = to_double(spec.nodes[i].x);
    const double y = to_double(spec.nodes[i].y);
    os << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(-y) << "\" r=\""
       << fmt(highlight[i] ? radius * 1.3 : radius) << "\" fill=\""
       << (highlight[i] ? "#d62728" : "#1f6fb4") << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace curvedim
