#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace billiards {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  Vec2 operator-() const { return {-x, -y}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  Vec2 normalized() const;
  /// Counter-clockwise quarter turn.
  Vec2 perp() const { return {-y, x}; }
  /// Polar angle in (-pi, pi].
  double angle() const { return std::atan2(y, x); }
};

using Point2 = Vec2;

inline Vec2 unit_dir(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline double dist(Point2 a, Point2 b) { return (a - b).norm(); }

/// Wrap an angle into (-pi, pi].
double wrap_angle(double a);

/// Numeric interval [lo, hi]; empty when hi <= lo. Openness of endpoints is a
/// property of the use site, not of the representation.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval empty_interval() { return {0.0, 0.0}; }
  bool empty() const { return !(lo < hi); }
  double width() const { return empty() ? 0.0 : hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double s) const { return lo < s && s < hi; }
  Interval intersect(Interval o) const;
};

/// Planar isometry p -> L p + t with L orthogonal. The linear part is
/// re-orthonormalized after every 16 compositions to cap drift on long chains.
class Isometry2 {
 public:
  Isometry2() = default;  // identity

  static Isometry2 identity() { return {}; }
  static Isometry2 translation(Vec2 t);
  static Isometry2 rotation(Point2 center, double angle);
  /// Reflection across the line through a and b. Throws on |ab| degenerate.
  static Isometry2 reflection(Point2 a, Point2 b);

  Point2 apply(Point2 p) const;
  Vec2 apply_vector(Vec2 v) const;
  Isometry2 inverse() const;
  bool orientation_reversing() const { return det() < 0.0; }
  double det() const { return a_ * d_ - b_ * c_; }
  Vec2 translation_part() const { return {tx_, ty_}; }

  /// Linear part entries, row-major [[a b],[c d]].
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  /// Deviation of L^T L from the identity (max abs entry). Diagnostic.
  double orthogonality_defect() const;

  /// apply(compose(f, g), p) == apply(f, apply(g, p)): g first, then f.
  friend Isometry2 compose(const Isometry2& f, const Isometry2& g);

 private:
  double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
  double tx_ = 0.0, ty_ = 0.0;
  unsigned chain_ = 0;  // compositions since last re-orthonormalization

  void reorthonormalize();
};

Isometry2 compose(const Isometry2& f, const Isometry2& g);

enum class IsoKind { Identity, Translation, Rotation, Reflection, Glide };

const char* iso_kind_name(IsoKind k);

/// Classification of an isometry into its conjugacy type, with the defining
/// geometric data for the type. Fields not belonging to `kind` are zero.
struct IsometryClass {
  IsoKind kind = IsoKind::Identity;
  Vec2 translation{};   // Translation; glide vector for Glide
  Point2 center{};      // Rotation
  double angle = 0.0;   // Rotation, in (-pi, pi]
  Point2 axis_point{};  // Reflection / Glide: a point on the axis
  Vec2 axis_dir{};      // Reflection / Glide: unit axis direction
};

/// Classify with ties broken toward the more degenerate kind: a rotation by
/// less than `tol` radians is a translation, a translation shorter than `tol`
/// is the identity, a glide shorter than `tol` is a reflection.
IsometryClass classify(const Isometry2& g, double tol);

/// Rebuild an isometry from classification data. Inverse of classify up to
/// numerical noise; used as a round-trip check.
Isometry2 from_class(const IsometryClass& c);

/// Mirror image of p across the line through a and b.
Point2 reflect_across_line(Point2 p, Point2 a, Point2 b);

/// The set of s in (0,1) for which the ray from base(s) = b0 + s (b1 - b0)
/// in direction v crosses the open segment (t0, t1) at positive ray
/// parameter. Convex, hence a single (possibly empty) open interval, already
/// clipped to (0,1). Occlusion between base and target is the caller's
/// problem.
Interval chord_param_interval(Point2 b0, Point2 b1, Vec2 v, Point2 t0, Point2 t1);

}  // namespace billiards
