#pragma once

#include "dngon/tracer.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace dngon {

/// Deterministic SVG rendering of a surface with an optional trace. Pixels are
/// 12-significant-digit floats from the interval midpoints; the exact
/// coefficient vectors ride along in data-exact attributes.
class SvgWriter {
public:
  static std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
  }

  static std::string exact_attr(const Vec2Q& v) {
    auto one = [](const QuadExtElement& q) {
      std::string s = "a=";
      for (const mpq_class& c : q.a().coeffs()) s += c.get_str() + ",";
      s += "b=";
      for (const mpq_class& c : q.b().coeffs()) s += c.get_str() + ",";
      return s;
    };
    return one(v.x) + "|" + one(v.y);
  }

  static std::string render(const FlatSurface& S, const TraceResult* trace_result = nullptr,
                            const Vec2Q* trace_start = nullptr) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const Polygon& p : S.polys)
      for (const Vec2Q& v : p.verts) {
        double x = approx(v.x), y = approx(v.y);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
    xmin -= pad;
    xmax += pad;
    ymin -= pad;
    ymax += pad;
    const double scale = 160;
    double w = (xmax - xmin) * scale, h = (ymax - ymin) * scale;
    auto X = [&](double x) { return (x - xmin) * scale; };
    auto Y = [&](double y) { return h - (y - ymin) * scale; };  // flip y for screen coords

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
       << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
    for (size_t pi = 0; pi < S.polys.size(); ++pi) {
      const Polygon& p = S.polys[pi];
      os << "  <polygon fill=\"#eef2f7\" stroke=\"#30425a\" stroke-width=\"1\" data-poly=\"" << pi
         << "\" points=\"";
      for (const Vec2Q& v : p.verts) os << fmt(X(approx(v.x))) << "," << fmt(Y(approx(v.y))) << " ";
      os << "\"/>\n";
    }
    for (const MarkedPoint& m : S.marked) {
      os << "  <circle r=\"3\" fill=\"#b3261e\" cx=\"" << fmt(X(approx(m.pos.x))) << "\" cy=\""
         << fmt(Y(approx(m.pos.y))) << "\" data-label=\"" << m.label << "\" data-exact=\""
         << exact_attr(m.pos) << "\"/>\n";
    }
    if (trace_result) {
      // the trace teleports at each crossing: one polyline segment per chart
      const std::vector<TraceEvent>& ev = trace_result->events;
      std::optional<Vec2Q> cur;
      if (trace_start) cur = *trace_start;
      for (size_t i = 0; i < ev.size(); ++i) {
        if (cur) {
          os << "  <line stroke=\"#1a7f37\" stroke-width=\"1.5\" x1=\""
             << fmt(X(approx(cur->x))) << "\" y1=\"" << fmt(Y(approx(cur->y))) << "\" x2=\""
             << fmt(X(approx(ev[i].pos.x))) << "\" y2=\"" << fmt(Y(approx(ev[i].pos.y)))
             << "\" data-exact-from=\"" << exact_attr(*cur) << "\" data-exact-to=\""
             << exact_attr(ev[i].pos) << "\"/>\n";
        }
        if (ev[i].kind == EventKind::Crossing) {
          FlatSurface::EdgeRef next = S.partner(ev[i].poly, ev[i].index);
          cur = ev[i].pos + next.vec;
        } else if (ev[i].kind == EventKind::MarkedHit) {
          os << "  <circle r=\"4\" fill=\"none\" stroke=\"#1a7f37\" stroke-width=\"1.5\" cx=\""
             << fmt(X(approx(ev[i].pos.x))) << "\" cy=\"" << fmt(Y(approx(ev[i].pos.y)))
             << "\" data-hit=\"" << S.marked[ev[i].index].label << "\"/>\n";
          cur = ev[i].pos;
        } else {
          cur = ev[i].pos;
        }
      }
    }
    os << "</svg>\n";
    return os.str();
  }
};

}  // namespace dngon
