#include "billiards/document.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace billiards {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_real(const std::string& tok, int line) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || tok.empty())
    throw ParseError(line, "expected a number, got '" + tok + "'");
  return v;
}

long long parse_integer(const std::string& tok, int line) {
  char* end = nullptr;
  const long long v = std::strtoll(tok.c_str(), &end, 10);
  if (end != tok.c_str() + tok.size() || tok.empty())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

Fraction parse_fraction(const std::string& tok, int line) {
  const auto slash = tok.find('/');
  if (slash == std::string::npos) return Fraction::reduced(parse_integer(tok, line), 1);
  const long long num = parse_integer(tok.substr(0, slash), line);
  const long long den = parse_integer(tok.substr(slash + 1), line);
  if (den == 0) throw ParseError(line, "zero denominator in '" + tok + "'");
  return Fraction::reduced(num, den);
}

}  // namespace

PolygonDocument parse_polygon_document(const std::string& text) {
  PolygonDocument doc;
  bool saw_name = false, saw_verts = false, saw_angles = false;
  bool saw_lengths = false, saw_labels = false;
  std::string current;
  std::vector<double> coords;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon != std::string::npos &&
        trim(line.substr(0, colon)).find_first_of(" \t") == std::string::npos) {
      const std::string key = trim(line.substr(0, colon));
      const std::string rest = trim(line.substr(colon + 1));
      if (key == "name") {
        if (saw_name) throw ParseError(lineno, "duplicate name");
        saw_name = true;
        doc.name = rest;
        current.clear();
        continue;
      }
      bool* seen = key == "vertices"  ? &saw_verts
                   : key == "angles"  ? &saw_angles
                   : key == "lengths" ? &saw_lengths
                   : key == "labels"  ? &saw_labels
                                      : nullptr;
      if (!seen) throw ParseError(lineno, "unknown key '" + key + "'");
      if (*seen) throw ParseError(lineno, "duplicate " + key + " section");
      *seen = true;
      current = key;
      line = rest;
      if (line.empty()) continue;
    } else if (current.empty()) {
      throw ParseError(lineno, "data before any section");
    }

    for (const std::string& tok : split_tokens(line)) {
      if (current == "vertices")
        coords.push_back(parse_real(tok, lineno));
      else if (current == "angles")
        doc.angles.push_back(parse_fraction(tok, lineno));
      else if (current == "lengths")
        doc.lengths.push_back(parse_real(tok, lineno));
      else
        doc.labels.push_back(tok);
    }
  }

  if (coords.size() % 2 != 0) throw ParseError(lineno, "vertices need x y pairs");
  for (std::size_t i = 0; i + 1 < coords.size(); i += 2)
    doc.vertices.push_back({coords[i], coords[i + 1]});
  if (saw_verts == saw_angles)
    throw ParseError(lineno, saw_verts ? "vertices and angles are mutually exclusive"
                                       : "need a vertices or an angles section");
  if (saw_angles && !saw_lengths) throw ParseError(lineno, "angles require a lengths section");
  if (saw_verts && saw_lengths) throw ParseError(lineno, "lengths only accompany angles");
  return doc;
}

std::string format_polygon_document(const PolygonDocument& doc) {
  std::string out;
  char buf[96];
  if (!doc.name.empty()) out += "name: " + doc.name + "\n";
  if (!doc.vertices.empty()) {
    out += "vertices:\n";
    for (const Point2& v : doc.vertices) {
      std::snprintf(buf, sizeof buf, "  %.12g %.12g\n", v.x, v.y);
      out += buf;
    }
  } else {
    out += "angles:\n";
    for (const Fraction& f : doc.angles) {
      std::snprintf(buf, sizeof buf, "  %lld/%lld\n", f.num, f.den);
      out += buf;
    }
    out += "lengths:\n";
    for (double l : doc.lengths) {
      std::snprintf(buf, sizeof buf, "  %.12g\n", l);
      out += buf;
    }
  }
  if (!doc.labels.empty()) {
    out += "labels:";
    for (const std::string& l : doc.labels) out += " " + l;
    out += "\n";
  }
  return out;
}

Polygon document_to_polygon(const PolygonDocument& doc, const Tolerances& tol) {
  if (!doc.vertices.empty() && !doc.angles.empty())
    throw Error("document mixes vertices and angles");
  if (!doc.vertices.empty()) return Polygon::from_vertices(doc.vertices, doc.labels, tol);
  if (!doc.angles.empty()) return Polygon::from_exact_angles(doc.angles, doc.lengths, doc.labels, tol);
  throw Error("document has neither vertices nor angles");
}

PolygonDocument document_from_polygon(const Polygon& p, const std::string& name) {
  PolygonDocument doc;
  doc.name = name;
  doc.vertices = p.vertices();
  bool custom = false;
  for (int i = 0; i < p.sides(); ++i)
    if (p.label(i) != std::to_string(i + 1)) custom = true;
  if (custom) doc.labels = p.labels();
  return doc;
}

}  // namespace billiards
