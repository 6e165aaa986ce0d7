#pragma once

#include <string>
#include <vector>

#include "billiards/polygon.hpp"

namespace billiards {

struct ParseError : Error {
  int line = 0;
  ParseError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Text description of a table: a name, then either explicit vertices or
/// interior angles (as fractions of pi) plus side lengths, and optional side
/// labels. Line-oriented "key:" sections, "#" starts a comment.
struct PolygonDocument {
  std::string name;
  std::vector<Point2> vertices;
  std::vector<Fraction> angles;
  std::vector<double> lengths;
  std::vector<std::string> labels;
};

/// Throws ParseError (with the offending line number) on malformed input,
/// unknown keys, or when the vertices/angles sections are missing or mixed.
PolygonDocument parse_polygon_document(const std::string& text);

/// Inverse of the parser: parse(format(doc)) reproduces doc exactly up to
/// number formatting.
std::string format_polygon_document(const PolygonDocument& doc);

Polygon document_to_polygon(const PolygonDocument& doc, const Tolerances& tol = {});

PolygonDocument document_from_polygon(const Polygon& p, const std::string& name = {});

}  // namespace billiards
