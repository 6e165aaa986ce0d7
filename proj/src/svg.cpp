#include "billiards/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace billiards {

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

/// World-to-canvas mapping: fit the bounding box into the canvas width,
/// flip y, pad by the margin.
struct Mapper {
  double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;
  double scale = 1.0, margin = 0.0, width = 0.0, height = 0.0;

  void add(Point2 p) {
    xmin = std::min(xmin, p.x);
    ymin = std::min(ymin, p.y);
    xmax = std::max(xmax, p.x);
    ymax = std::max(ymax, p.y);
  }
  void finish(const SvgOptions& opt) {
    const double bw = std::max(xmax - xmin, 1e-9);
    const double bh = std::max(ymax - ymin, 1e-9);
    margin = opt.margin;
    scale = (opt.width - 2.0 * margin) / bw;
    width = opt.width;
    height = bh * scale + 2.0 * margin;
  }
  std::pair<double, double> map(Point2 p) const {
    return {(p.x - xmin) * scale + margin, (ymax - p.y) * scale + margin};
  }
};

std::string points_attr(const Mapper& m, const std::vector<Point2>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [x, y] = m.map(pts[i]);
    if (i) out += " ";
    out += fmt(x) + "," + fmt(y);
  }
  return out;
}

void emit_polygon(std::string& out, const Mapper& m, const std::vector<Point2>& pts,
                  const char* stroke, const char* swidth) {
  out += "<polygon points=\"" + points_attr(m, pts) + "\" fill=\"none\" stroke=\"" + stroke +
         "\" stroke-width=\"" + swidth + "\"/>\n";
}

void emit_line(std::string& out, const Mapper& m, Point2 a, Point2 b, const char* stroke,
               const char* swidth, bool dashed) {
  const auto [x1, y1] = m.map(a);
  const auto [x2, y2] = m.map(b);
  out += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
         fmt(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + swidth + "\"";
  if (dashed) out += " stroke-dasharray=\"6 4\"";
  out += "/>\n";
}

void emit_side_labels(std::string& out, const Mapper& m, const Polygon& p) {
  for (int i = 0; i < p.sides(); ++i) {
    const Point2 mid = p.point_on_side(i, 0.5);
    const Point2 pos = mid - p.side_normal(i) * (14.0 / m.scale);
    const auto [x, y] = m.map(pos);
    out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
           "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
           "dominant-baseline=\"middle\" fill=\"#444\">" +
           xml_escape(p.label(i)) + "</text>\n";
  }
}

std::string wrap(const Mapper& m, const std::string& body) {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(m.width) +
                    "\" height=\"" + fmt(m.height) + "\" viewBox=\"0 0 " + fmt(m.width) + " " +
                    fmt(m.height) + "\">\n<!-- billiards-svg 1 -->\n";
  out += body;
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string svg_table(const Polygon& p, const SvgOptions& opt) {
  Mapper m;
  for (const Point2& v : p.vertices()) m.add(v);
  m.finish(opt);
  std::string body;
  emit_polygon(body, m, p.vertices(), "#222222", "1.5");
  emit_side_labels(body, m, p);
  return wrap(m, body);
}

std::string svg_orbit(const Polygon& p, const std::vector<PhasePoint>& orbit,
                      const SvgOptions& opt) {
  Mapper m;
  for (const Point2& v : p.vertices()) m.add(v);
  m.finish(opt);
  std::string body;
  emit_polygon(body, m, p.vertices(), "#222222", "1.5");
  emit_side_labels(body, m, p);
  std::vector<Point2> feet;
  feet.reserve(orbit.size());
  for (const PhasePoint& u : orbit) feet.push_back(p.point_on_side(u.side, u.s));
  if (feet.size() >= 2)
    body += "<polyline points=\"" + points_attr(m, feet) +
            "\" fill=\"none\" stroke=\"#cc2222\" stroke-width=\"1\"/>\n";
  return wrap(m, body);
}

std::string svg_unfolding(const Polygon& p, const Corridor& corridor,
                          const std::vector<Chord>& chords, const SvgOptions& opt) {
  std::vector<std::vector<Point2>> copies;
  for (const Isometry2& f : corridor.frames) {
    std::vector<Point2> pts;
    pts.reserve(p.sides());
    for (const Point2& v : p.vertices()) pts.push_back(f.apply(v));
    copies.push_back(std::move(pts));
  }
  Mapper m;
  for (const auto& c : copies)
    for (const Point2& v : c) m.add(v);
  for (const Chord& c : chords) {
    m.add(c.a);
    m.add(c.b);
  }
  m.finish(opt);

  std::string body;
  for (std::size_t i = 0; i < copies.size(); ++i)
    emit_polygon(body, m, copies[i], i == 0 ? "#222222" : "#999999", i == 0 ? "1.5" : "1");
  for (const Gate& g : corridor.gates) emit_line(body, m, g.a, g.b, "#22aa66", "2", false);
  for (const Chord& c : chords) emit_line(body, m, c.a, c.b, "#cc2222", "1.2", c.dashed);
  return wrap(m, body);
}

}  // namespace billiards
