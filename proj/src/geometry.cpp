#include "billiards/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace billiards {

namespace {
constexpr unsigned kReorthoPeriod = 16;
}  // namespace

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

Vec2 Vec2::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error("normalized: zero vector");
  return {x / n, y / n};
}

Interval Interval::intersect(Interval o) const {
  if (empty() || o.empty()) return empty_interval();
  Interval r{std::max(lo, o.lo), std::min(hi, o.hi)};
  return r.empty() ? empty_interval() : r;
}

Isometry2 Isometry2::translation(Vec2 t) {
  Isometry2 g;
  g.tx_ = t.x;
  g.ty_ = t.y;
  return g;
}

Isometry2 Isometry2::rotation(Point2 center, double angle) {
  const double co = std::cos(angle), si = std::sin(angle);
  Isometry2 g;
  g.a_ = co;
  g.b_ = -si;
  g.c_ = si;
  g.d_ = co;
  // center is fixed: t = c - L c
  g.tx_ = center.x - (co * center.x - si * center.y);
  g.ty_ = center.y - (si * center.x + co * center.y);
  return g;
}

Isometry2 Isometry2::reflection(Point2 a, Point2 b) {
  const Vec2 ab = b - a;
  const double n = ab.norm();
  if (n < 1e-15) throw Error("reflection: degenerate line");
  const double dx = ab.x / n, dy = ab.y / n;
  Isometry2 g;
  g.a_ = dx * dx - dy * dy;
  g.b_ = 2.0 * dx * dy;
  g.c_ = 2.0 * dx * dy;
  g.d_ = dy * dy - dx * dx;
  g.tx_ = a.x - (g.a_ * a.x + g.b_ * a.y);
  g.ty_ = a.y - (g.c_ * a.x + g.d_ * a.y);
  return g;
}

Point2 Isometry2::apply(Point2 p) const {
  return {a_ * p.x + b_ * p.y + tx_, c_ * p.x + d_ * p.y + ty_};
}

Vec2 Isometry2::apply_vector(Vec2 v) const {
  return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y};
}

Isometry2 Isometry2::inverse() const {
  // L orthogonal: inverse linear part is the transpose.
  Isometry2 g;
  g.a_ = a_;
  g.b_ = c_;
  g.c_ = b_;
  g.d_ = d_;
  g.tx_ = -(g.a_ * tx_ + g.b_ * ty_);
  g.ty_ = -(g.c_ * tx_ + g.d_ * ty_);
  g.chain_ = chain_;
  return g;
}

double Isometry2::orthogonality_defect() const {
  const double e00 = a_ * a_ + c_ * c_ - 1.0;
  const double e01 = a_ * b_ + c_ * d_;
  const double e11 = b_ * b_ + d_ * d_ - 1.0;
  return std::max({std::fabs(e00), std::fabs(e01), std::fabs(e11)});
}

void Isometry2::reorthonormalize() {
  // Gram-Schmidt on the columns; preserves the sign of the determinant.
  double c0x = a_, c0y = c_;
  const double n0 = std::hypot(c0x, c0y);
  c0x /= n0;
  c0y /= n0;
  double c1x = b_, c1y = d_;
  const double proj = c1x * c0x + c1y * c0y;
  c1x -= proj * c0x;
  c1y -= proj * c0y;
  const double n1 = std::hypot(c1x, c1y);
  c1x /= n1;
  c1y /= n1;
  a_ = c0x;
  c_ = c0y;
  b_ = c1x;
  d_ = c1y;
  chain_ = 0;
}

Isometry2 compose(const Isometry2& f, const Isometry2& g) {
  Isometry2 r;
  r.a_ = f.a_ * g.a_ + f.b_ * g.c_;
  r.b_ = f.a_ * g.b_ + f.b_ * g.d_;
  r.c_ = f.c_ * g.a_ + f.d_ * g.c_;
  r.d_ = f.c_ * g.b_ + f.d_ * g.d_;
  r.tx_ = f.a_ * g.tx_ + f.b_ * g.ty_ + f.tx_;
  r.ty_ = f.c_ * g.tx_ + f.d_ * g.ty_ + f.ty_;
  r.chain_ = f.chain_ + g.chain_ + 1;
  if (r.chain_ >= kReorthoPeriod) r.reorthonormalize();
  return r;
}

const char* iso_kind_name(IsoKind k) {
  switch (k) {
    case IsoKind::Identity: return "identity";
    case IsoKind::Translation: return "translation";
    case IsoKind::Rotation: return "rotation";
    case IsoKind::Reflection: return "reflection";
    case IsoKind::Glide: return "glide";
  }
  return "?";
}

IsometryClass classify(const Isometry2& g, double tol) {
  IsometryClass out;
  const Vec2 t = g.translation_part();
  if (!g.orientation_reversing()) {
    // Rotation angle of the linear part.
    const double ang = std::atan2(g.c(), g.a());
    if (std::fabs(ang) < tol) {
      if (t.norm() < tol) {
        out.kind = IsoKind::Identity;
      } else {
        out.kind = IsoKind::Translation;
        out.translation = t;
      }
      return out;
    }
    out.kind = IsoKind::Rotation;
    out.angle = ang;
    // Fixed point: (I - L) c = t. det(I - L) = 2(1 - cos ang) > 0 here.
    const double ia = 1.0 - g.a(), ib = -g.b(), ic = -g.c(), id = 1.0 - g.d();
    const double det = ia * id - ib * ic;
    out.center = {(id * t.x - ib * t.y) / det, (-ic * t.x + ia * t.y) / det};
    return out;
  }
  // Orientation-reversing: L is reflection across a line through the origin
  // at angle psi/2 where L = [[cos psi, sin psi], [sin psi, -cos psi]].
  const double psi = std::atan2(g.c(), g.a());
  const Vec2 d = unit_dir(0.5 * psi);
  const double par = t.dot(d);
  const Vec2 t_par = d * par;
  const Vec2 t_perp = t - t_par;
  out.axis_dir = d;
  out.axis_point = t_perp * 0.5;  // refl(t_perp/2 + s d) line is the axis
  if (t_par.norm() < tol) {
    out.kind = IsoKind::Reflection;
  } else {
    out.kind = IsoKind::Glide;
    out.translation = t_par;
  }
  return out;
}

Isometry2 from_class(const IsometryClass& c) {
  switch (c.kind) {
    case IsoKind::Identity: return Isometry2::identity();
    case IsoKind::Translation: return Isometry2::translation(c.translation);
    case IsoKind::Rotation: return Isometry2::rotation(c.center, c.angle);
    case IsoKind::Reflection:
      return Isometry2::reflection(c.axis_point, c.axis_point + c.axis_dir);
    case IsoKind::Glide:
      return compose(Isometry2::translation(c.translation),
                     Isometry2::reflection(c.axis_point, c.axis_point + c.axis_dir));
  }
  throw Error("from_class: bad kind");
}

Point2 reflect_across_line(Point2 p, Point2 a, Point2 b) {
  return Isometry2::reflection(a, b).apply(p);
}

Interval chord_param_interval(Point2 b0, Point2 b1, Vec2 v, Point2 t0, Point2 t1) {
  const Vec2 u = b1 - b0;
  const Vec2 e = t1 - t0;
  if (u.norm() < 1e-15 || e.norm() < 1e-15 || v.norm() < 1e-15)
    throw Error("chord_param_interval: degenerate input");
  // Solve b0 + s u + t v = t0 + w e for (t, w) as affine functions of s:
  // [v  -e] [t w]^T = (t0 - b0) - s u.
  const double det = v.cross(-e);  // = e.cross(v)
  if (std::fabs(det) < 1e-15 * v.norm() * e.norm())
    return Interval::empty_interval();  // ray parallel to target: tangent at best
  const Vec2 rhs0 = t0 - b0;
  // Cramer: t(s) = t0c + s t1c, w(s) = w0c + s w1c.
  auto solve = [&](Vec2 rhs, double& t, double& w) {
    t = (rhs.x * (-e.y) - rhs.y * (-e.x)) / det;
    w = (v.x * rhs.y - v.y * rhs.x) / det;
  };
  double tc0, wc0, tc1, wc1;
  solve(rhs0, tc0, wc0);
  solve(rhs0 - u, tc1, wc1);
  const double t_slope = tc1 - tc0;  // value at s=1 minus s=0
  const double w_slope = wc1 - wc0;

  Interval r{0.0, 1.0};
  // Each linear constraint c0 + s*slope > lo (or < hi) clips r.
  auto clip_gt = [&r](double c0, double slope, double bound) {
    // c0 + s*slope > bound
    if (std::fabs(slope) < 1e-15) {
      if (!(c0 > bound)) r = Interval::empty_interval();
      return;
    }
    const double s = (bound - c0) / slope;
    if (slope > 0.0)
      r = r.intersect({s, std::numeric_limits<double>::infinity()});
    else
      r = r.intersect({-std::numeric_limits<double>::infinity(), s});
  };
  clip_gt(tc0, t_slope, 0.0);   // positive ray parameter
  clip_gt(wc0, w_slope, 0.0);   // inside open target
  clip_gt(-wc0, -w_slope, -1.0);
  return r;
}

}  // namespace billiards
