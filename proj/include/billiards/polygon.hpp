#pragma once

#include <optional>
#include <string>
#include <vector>

#include "billiards/geometry.hpp"
#include "billiards/tolerances.hpp"

namespace billiards {

/// Reduced fraction num/den, den > 0.
struct Fraction {
  long long num = 0;
  long long den = 1;

  static Fraction reduced(long long n, long long d);
  bool operator==(const Fraction&) const = default;
};

enum class RationalityKind { RationalExact, RationalRecognized, Undetermined };

/// Interior angles as multiples of pi. `fractions` is per-vertex; N is the
/// lcm of the denominators (the order parameter of the reflection group the
/// side directions generate). Only meaningful when kind != Undetermined.
struct RationalityInfo {
  RationalityKind kind = RationalityKind::Undetermined;
  std::vector<Fraction> fractions;
  long long N = 0;
};

/// A point on the boundary: side index (0-based) plus parameter in (0,1)
/// along the side's counter-clockwise orientation.
struct BoundaryPoint {
  int side = 0;
  double s = 0.0;
};

/// Simple polygon, vertices counter-clockwise. Sides are 0-based internally;
/// code symbols are 1-based (side i <-> symbol i+1). Side i runs from vertex
/// i to vertex i+1 (mod k); the interior lies to the left, so the inward
/// normal is the ccw perpendicular of the side direction. The interior angle
/// at vertex i sits between sides i-1 and i.
class Polygon {
 public:
  /// Validates and builds. Clockwise input is reversed with a warning.
  /// Throws Error on: fewer than 3 vertices, duplicate consecutive vertices,
  /// an interior angle within tol.geom of pi (straight vertex), angle within
  /// tol.geom of 0 or 2 pi (spike), or self-intersection.
  static Polygon from_vertices(std::vector<Point2> vertices,
                               std::vector<std::string> labels = {},
                               const Tolerances& tol = {});

  /// Build from interior angles pi*num/den plus side lengths by walking the
  /// boundary. The fractions must sum to k-2 exactly. If the walk misses
  /// closure but the last side points at the start, its length is adjusted
  /// with a warning; otherwise throws.
  static Polygon from_exact_angles(const std::vector<Fraction>& angles,
                                   const std::vector<double>& lengths,
                                   std::vector<std::string> labels = {},
                                   const Tolerances& tol = {});

  /// Issue strings for an arbitrary vertex list; empty means valid input for
  /// from_vertices (up to orientation).
  static std::vector<std::string> validate(const std::vector<Point2>& vertices,
                                           const Tolerances& tol = {});

  int sides() const { return static_cast<int>(verts_.size()); }
  Point2 vertex(int i) const { return verts_[mod(i)]; }
  Point2 side_a(int i) const { return verts_[mod(i)]; }
  Point2 side_b(int i) const { return verts_[mod(i + 1)]; }
  Vec2 side_dir(int i) const { return dirs_[mod(i)]; }       ///< unit, ccw
  Vec2 side_normal(int i) const { return dirs_[mod(i)].perp(); }  ///< inward
  double side_len(int i) const { return lens_[mod(i)]; }
  double perimeter() const { return perimeter_; }
  double diameter() const;
  double interior_angle(int i) const { return angles_[mod(i)]; }  ///< at vertex i

  Point2 point_on_side(int i, double s) const;
  /// Normalized arc-length coordinate in [0,1) of a boundary point.
  double boundary_coord(BoundaryPoint bp) const;

  const std::vector<Point2>& vertices() const { return verts_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[mod(i)]; }
  /// Side index for a label, or for a 1-based index written in digits.
  std::optional<int> side_by_label(const std::string& s) const;

  const std::vector<std::string>& warnings() const { return warnings_; }
  bool reversed_input() const { return reversed_input_; }
  const std::optional<std::vector<Fraction>>& exact_angles() const { return exact_angles_; }

  /// Interior membership (strict, up to tol.geom); boundary counts as out.
  bool contains(Point2 p, double eps = 1e-12) const;

  /// Angle fractions of the interior angles. Exact when the polygon was built
  /// from fractions; otherwise recognized per-angle by continued fractions
  /// with denominators capped at tol.cf_max_den and acceptance |angle/pi -
  /// num/den| < tol.rat. Undetermined if any angle resists recognition.
  RationalityInfo rationality(const Tolerances& tol = {}) const;

  /// New polygon whose side j is this polygon's side j+offset (vertex list
  /// rotated); labels follow their sides.
  Polygon relabeled(int offset) const;

 private:
  Polygon() = default;
  int mod(int i) const {
    const int k = sides();
    return ((i % k) + k) % k;
  }
  void finalize(const Tolerances& tol);

  std::vector<Point2> verts_;
  std::vector<std::string> labels_;
  std::vector<Vec2> dirs_;
  std::vector<double> lens_;
  std::vector<double> angles_;
  std::vector<double> arc_prefix_;
  double perimeter_ = 0.0;
  bool reversed_input_ = false;
  std::vector<std::string> warnings_;
  std::optional<std::vector<Fraction>> exact_angles_;
};

/// Orbit of the ambient direction `theta` under the dihedral group of order
/// 2N whose reflection axes sit at angles j*pi/N (the polygon's sides taken
/// in standard position). Sorted, in [0, 2 pi), duplicates within 1e-12
/// merged. Throws if info is Undetermined.
std::vector<double> dihedral_orbit(double theta, const RationalityInfo& info);

/// Best rational approximation of x with denominator <= max_den via continued
/// fractions; none if the best misses by more than eps.
std::optional<Fraction> recognize_fraction(double x, int max_den, double eps);

}  // namespace billiards
