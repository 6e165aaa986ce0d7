#include "billiards/report.hpp"

#include <cstdio>

#include "billiards/codes.hpp"

namespace billiards {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string pt(Vec2 v) { return "(" + num(v.x) + ", " + num(v.y) + ")"; }

std::string ang(double radians, bool degrees) {
  return degrees ? num(radians * 180.0 / kPi) : num(radians);
}

const char* verdict_name(ComparisonReport::Verdict v) {
  switch (v) {
    case ComparisonReport::Verdict::EqualToDepth: return "equal_to_depth";
    case ComparisonReport::Verdict::Differ: return "differ";
    default: return "inconclusive_partial";
  }
}

}  // namespace

std::string describe_isometry(const IsometryClass& c) {
  switch (c.kind) {
    case IsoKind::Identity:
      return "identity";
    case IsoKind::Translation:
      return "translation " + pt(c.translation);
    case IsoKind::Rotation:
      return "rotation " + num(c.angle) + " about " + pt(c.center);
    case IsoKind::Reflection:
      return "reflection axis through " + pt(c.axis_point) + " direction " + pt(c.axis_dir);
    case IsoKind::Glide:
      return "glide reflection axis through " + pt(c.axis_point) + " direction " +
             pt(c.axis_dir) + " translation " + pt(c.translation);
  }
  return "unknown";
}

std::string describe_polygon(const Polygon& p, const Tolerances& tol, bool degrees) {
  const RationalityInfo info = p.rationality(tol);
  std::string out = "k=" + std::to_string(p.sides());
  if (info.kind != RationalityKind::Undetermined)
    out += " rational N=" + std::to_string(info.N);
  else
    out += " rationality undetermined";
  out += "\nangles:";
  for (int i = 0; i < p.sides(); ++i) out += " " + ang(p.interior_angle(i), degrees);
  if (info.kind != RationalityKind::Undetermined) {
    out += "\nangles/pi:";
    for (const Fraction& f : info.fractions)
      out += " " + std::to_string(f.num) + "/" + std::to_string(f.den);
  }
  out += "\nlabels:";
  for (int i = 0; i < p.sides(); ++i) out += " " + p.label(i);
  out += "\nperimeter: " + num(p.perimeter());
  out += "\n";
  for (const std::string& w : p.warnings()) out += "warning: " + w + "\n";
  return out;
}

std::string report_realization(const Polygon& p, const std::vector<int>& code,
                               const Realization& r, const Tolerances& tol) {
  const Corridor cor = unfold_code(p, code);
  std::string out = "code: " + format_code(cor.word, p) + "\n";
  out += "terminal: " + describe_isometry(classify(cor.terminal(), tol.iso)) + "\n";
  if (r.ok()) {
    const CylinderFamily& f = *r.family;
    out += "family: base=" + p.label(f.base_side) + " s=[" + num(f.base_interval.lo) + ", " +
           num(f.base_interval.hi) + "] direction=" + pt(f.direction) +
           " length=" + num(f.length) + " width=" + num(f.width);
    if (f.marginal) out += " marginal";
    out += "\n";
  } else {
    out += std::string("no family: ") +
           (r.reason == RealizeFailure::NotTranslation ? "NotTranslation" : "EmptyCorridor") +
           "\n";
  }
  return out;
}

std::string report_comparison(const ComparisonReport& rep, const Polygon& p, const Polygon& q,
                              bool degrees) {
  std::string out = std::string("verdict: ") + verdict_name(rep.verdict) + "\n";
  out += "depth: " + std::to_string(rep.depth) + "\n";
  out += "offset: " + std::to_string(rep.offset) + "\n";
  out += "codes: P=" + std::to_string(rep.count_p) + " Q=" + std::to_string(rep.count_q) + "\n";
  out += "N: P=" + (rep.n_p ? std::to_string(*rep.n_p) : "undetermined") +
         " Q=" + (rep.n_q ? std::to_string(*rep.n_q) : "undetermined") + "\n";
  if (rep.partial_p || rep.partial_q)
    out += std::string("partial:") + (rep.partial_p ? " P" : "") + (rep.partial_q ? " Q" : "") +
           "\n";
  for (const auto& code : rep.only_p) out += "witness P: " + format_code(code, p) + "\n";
  for (const auto& code : rep.only_q) out += "witness Q: " + format_code(code, q) + "\n";
  const SimilarityFit& s = rep.similarity;
  if (s.kind != SimilarityFit::Kind::None) {
    out += std::string("similarity: ") +
           (s.kind == SimilarityFit::Kind::Similar ? "similar" : "affinely_similar") + "\n";
    out += "linear: [[" + num(s.a) + ", " + num(s.b) + "], [" + num(s.c) + ", " + num(s.d) +
           "]]\n";
    out += "translation: " + pt(s.t) + "\n";
    out += "scale: " + num(s.scale) + "\n";
    if (s.kind == SimilarityFit::Kind::Similar && !s.reflected)
      out += "rotation: " + ang(s.rotation, degrees) + "\n";
    out += std::string("reflected: ") + (s.reflected ? "yes" : "no") + "\n";
    out += "residual: " + num(s.residual) + "\n";
  }
  return out;
}

std::string report_saddle(const Polygon& p, const std::vector<SaddleConnection>& conns,
                          bool degrees) {
  std::string out;
  for (const SaddleConnection& c : conns) {
    out += "start=" + std::to_string(c.start) + " end=" + std::to_string(c.end) + " code=";
    out += c.word.empty() ? "-" : format_code(c.word, p);
    out += " dir=" + ang(c.direction, degrees) + " length=" + num(c.length) + "\n";
  }
  return out;
}

std::string report_doubling(const Polygon& p, const DoublingReport& rep) {
  std::string out = "word: " + format_code(rep.word, p) + "\n";
  out += "s_odd: " + num(rep.s_odd) + "\n";
  out += "odd period: " + std::to_string(rep.odd_period) + "\n";
  for (const auto& nb : rep.neighbors)
    out += "neighbor: s=" + num(nb.s) + " period=" + std::to_string(nb.period) + "\n";
  return out;
}

}  // namespace billiards
