#include "billiards/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace billiards {

namespace {

double signed_area(const std::vector<Point2>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    a += p.cross(q);
  }
  return 0.5 * a;
}

// Proper or improper intersection of closed segments, endpoints excluded via
// eps in the callers' parameter space.
bool segments_cross(Point2 a, Point2 b, Point2 c, Point2 d, double eps) {
  const Vec2 ab = b - a, cd = d - c;
  const double det = ab.cross(cd);
  const Vec2 ac = c - a;
  if (std::fabs(det) < 1e-15) {
    // Parallel: overlap iff collinear and parameter ranges meet.
    if (std::fabs(ab.cross(ac)) > eps) return false;
    const double la = ab.norm();
    const double t0 = ac.dot(ab) / (la * la);
    const double t1 = (d - a).dot(ab) / (la * la);
    const double lo = std::min(t0, t1), hi = std::max(t0, t1);
    return hi > eps / la && lo < 1.0 - eps / la;
  }
  const double t = ac.cross(cd) / det;
  const double u = ac.cross(ab) / det;
  return t > eps && t < 1.0 - eps && u > eps && u < 1.0 - eps;
}

long long checked_lcm(long long a, long long b) {
  const long long g = std::gcd(a, b);
  const long long q = a / g;
  if (b != 0 && q > (1LL << 50) / b) throw Error("rationality: lcm overflow");
  return q * b;
}
}  // namespace

Fraction Fraction::reduced(long long n, long long d) {
  if (d == 0) throw Error("fraction: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  return {n / (g ? g : 1), d / (g ? g : 1)};
}

std::vector<std::string> Polygon::validate(const std::vector<Point2>& v, const Tolerances& tol) {
  std::vector<std::string> issues;
  const int k = static_cast<int>(v.size());
  if (k < 3) {
    issues.push_back("need at least 3 vertices");
    return issues;
  }
  for (int i = 0; i < k; ++i) {
    if (dist(v[i], v[(i + 1) % k]) <= tol.geom)
      issues.push_back("degenerate vertex: " + std::to_string(i) + " and its successor coincide");
  }
  if (!issues.empty()) return issues;

  const double orient = signed_area(v) >= 0 ? 1.0 : -1.0;
  for (int i = 0; i < k; ++i) {
    const Vec2 din = (v[i] - v[(i + k - 1) % k]).normalized();
    const Vec2 dout = (v[(i + 1) % k] - v[i]).normalized();
    const double turn = orient * wrap_angle(dout.angle() - din.angle());
    const double interior = kPi - turn;
    if (std::fabs(interior - kPi) < tol.geom)
      issues.push_back("straight angle at vertex " + std::to_string(i));
    if (interior < tol.geom || interior > 2 * kPi - tol.geom)
      issues.push_back("degenerate corner angle at vertex " + std::to_string(i));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (j == i || (j + 1) % k == i || (i + 1) % k == j) continue;  // adjacent share a vertex
      if (segments_cross(v[i], v[(i + 1) % k], v[j], v[(j + 1) % k], tol.geom))
        issues.push_back("sides " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
    }
  }
  return issues;
}

Polygon Polygon::from_vertices(std::vector<Point2> vertices, std::vector<std::string> labels,
                               const Tolerances& tol) {
  auto issues = validate(vertices, tol);
  if (!issues.empty()) {
    std::string msg = "invalid polygon:";
    for (const auto& s : issues) msg += " " + s + ";";
    throw Error(msg);
  }
  Polygon p;
  p.verts_ = std::move(vertices);
  if (signed_area(p.verts_) < 0) {
    std::reverse(p.verts_.begin(), p.verts_.end());
    p.reversed_input_ = true;
    p.warnings_.push_back("vertex order was clockwise; reversed to counter-clockwise");
    if (!labels.empty()) {
      // Side i of the reversed polygon is old side k-1-i traversed backward.
      std::vector<std::string> relabeled(labels.size());
      const int k = static_cast<int>(labels.size());
      for (int i = 0; i < k; ++i) relabeled[i] = labels[(2 * k - 2 - i) % k];
      labels = std::move(relabeled);
    }
  }
  p.labels_ = std::move(labels);
  p.finalize(tol);
  return p;
}

void Polygon::finalize(const Tolerances& tol) {
  const int k = sides();
  if (labels_.empty()) {
    for (int i = 0; i < k; ++i) labels_.push_back(std::to_string(i + 1));
  }
  if (static_cast<int>(labels_.size()) != k) throw Error("labels: need one per side");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (labels_[i] == labels_[j]) throw Error("labels: duplicate '" + labels_[i] + "'");

  dirs_.resize(k);
  lens_.resize(k);
  angles_.resize(k);
  arc_prefix_.resize(k);
  perimeter_ = 0.0;
  for (int i = 0; i < k; ++i) {
    const Vec2 e = side_b(i) - side_a(i);
    lens_[i] = e.norm();
    dirs_[i] = e * (1.0 / lens_[i]);
  }
  for (int i = 0; i < k; ++i) {
    arc_prefix_[i] = perimeter_;
    perimeter_ += lens_[i];
  }
  for (int i = 0; i < k; ++i) {
    const double turn = wrap_angle(dirs_[i].angle() - dirs_[(i + k - 1) % k].angle());
    angles_[i] = kPi - turn;
  }
  (void)tol;
}

Polygon Polygon::from_exact_angles(const std::vector<Fraction>& angles,
                                   const std::vector<double>& lengths,
                                   std::vector<std::string> labels, const Tolerances& tol) {
  const int k = static_cast<int>(angles.size());
  if (k < 3 || lengths.size() != angles.size())
    throw Error("from_exact_angles: need k >= 3 angles and as many lengths");
  std::vector<Fraction> fr;
  for (const auto& a : angles) {
    const Fraction f = Fraction::reduced(a.num, a.den);
    if (f.num <= 0 || f.num >= 2 * f.den || f.num == f.den)
      throw Error("from_exact_angles: interior angle must be in (0,2)pi and not pi");
    fr.push_back(f);
  }
  // Sum must equal k-2 exactly: accumulate num/den over a common denominator.
  long long den = 1;
  for (const auto& f : fr) den = checked_lcm(den, f.den);
  long long num = 0;
  for (const auto& f : fr) num += f.num * (den / f.den);
  if (num != static_cast<long long>(k - 2) * den)
    throw Error("from_exact_angles: angle sum is not (k-2)pi; the walk cannot close");

  for (double L : lengths)
    if (L <= 0) throw Error("from_exact_angles: nonpositive side length");
  std::vector<Point2> verts(k);
  verts[0] = {0, 0};
  double heading = 0.0;
  double scale = *std::max_element(lengths.begin(), lengths.end());
  for (int i = 0; i + 1 < k; ++i) {
    verts[i + 1] = verts[i] + unit_dir(heading) * lengths[i];
    heading += kPi - kPi * double(fr[i + 1].num) / double(fr[i + 1].den);
  }
  std::vector<std::string> warn;
  const Vec2 gap = verts[0] - verts[k - 1];
  const Vec2 last_dir = unit_dir(heading);
  double last_len = lengths[k - 1];
  if (std::fabs(gap.norm() - last_len) > tol.geom * scale ||
      std::fabs(last_dir.cross(gap)) > tol.geom * scale) {
    if (std::fabs(last_dir.cross(gap)) <= tol.geom * scale && last_dir.dot(gap) > 0) {
      warn.push_back("last side length adjusted to close the walk");
      last_len = gap.norm();
    } else {
      throw Error("from_exact_angles: boundary walk does not close");
    }
  }
  (void)last_len;  // the closed walk determines the final side implicitly

  Polygon p = from_vertices(std::move(verts), std::move(labels), tol);
  if (p.reversed_input_)
    throw Error("from_exact_angles: walk produced clockwise polygon");  // cannot happen for valid sums
  for (const auto& w : warn) p.warnings_.push_back(w);
  p.exact_angles_ = std::move(fr);
  return p;
}

double Polygon::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i)
    for (std::size_t j = i + 1; j < verts_.size(); ++j)
      d = std::max(d, dist(verts_[i], verts_[j]));
  return d;
}

Point2 Polygon::point_on_side(int i, double s) const {
  return side_a(i) + (side_b(i) - side_a(i)) * s;
}

double Polygon::boundary_coord(BoundaryPoint bp) const {
  const int i = mod(bp.side);
  double c = (arc_prefix_[i] + bp.s * lens_[i]) / perimeter_;
  c -= std::floor(c);
  return c;
}

std::optional<int> Polygon::side_by_label(const std::string& s) const {
  for (int i = 0; i < sides(); ++i)
    if (labels_[i] == s) return i;
  // Fall back to a 1-based numeric index.
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
    const int idx = std::stoi(s);
    if (idx >= 1 && idx <= sides()) return idx - 1;
  }
  return std::nullopt;
}

bool Polygon::contains(Point2 p, double eps) const {
  // Crossing parity along +x; nudge off vertex heights.
  int crossings = 0;
  for (int i = 0; i < sides(); ++i) {
    Point2 a = side_a(i), b = side_b(i);
    if (std::fabs(p.y - a.y) < eps || std::fabs(p.y - b.y) < eps) {
      // Shift the test point rather than the polygon.
      p.y += 2 * eps;
      i = -1;
      crossings = 0;
      continue;
    }
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (x > p.x) ++crossings;
    }
  }
  return crossings % 2 == 1;
}

RationalityInfo Polygon::rationality(const Tolerances& tol) const {
  RationalityInfo info;
  if (exact_angles_) {
    info.kind = RationalityKind::RationalExact;
    info.fractions = *exact_angles_;
  } else {
    info.fractions.clear();
    for (int i = 0; i < sides(); ++i) {
      const auto f = recognize_fraction(angles_[i] / kPi, tol.cf_max_den, tol.rat);
      if (!f) return RationalityInfo{};  // Undetermined
      info.fractions.push_back(*f);
    }
    info.kind = RationalityKind::RationalRecognized;
  }
  long long n = 1;
  for (const auto& f : info.fractions) n = checked_lcm(n, f.den);
  info.N = n;
  return info;
}

Polygon Polygon::relabeled(int offset) const {
  const int k = sides();
  std::vector<Point2> v(k);
  std::vector<std::string> l(k);
  for (int i = 0; i < k; ++i) {
    v[i] = verts_[mod(i + offset)];
    l[i] = labels_[mod(i + offset)];
  }
  Polygon p;
  p.verts_ = std::move(v);
  p.labels_ = std::move(l);
  p.exact_angles_ = std::nullopt;
  if (exact_angles_) {
    std::vector<Fraction> fr(k);
    for (int i = 0; i < k; ++i) fr[i] = (*exact_angles_)[mod(i + offset)];
    p.exact_angles_ = std::move(fr);
  }
  p.finalize(Tolerances{});
  return p;
}

std::optional<Fraction> recognize_fraction(double x, int max_den, double eps) {
  // Continued fraction convergents of x until the denominator cap.
  long long p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // p0/q0 = 1/0, p1/q1 = 0/1
  double r = x;
  long long best_p = 0, best_q = 1;
  double best_err = std::fabs(x);
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(r);
    const long long a = static_cast<long long>(fl);
    const long long p2 = a * p0 + p1, q2 = a * q0 + q1;
    if (q2 > max_den) break;
    if (q2 > 0) {
      const double err = std::fabs(x - double(p2) / double(q2));
      if (err < best_err) {
        best_err = err;
        best_p = p2;
        best_q = q2;
      }
    }
    p1 = p0;
    q1 = q0;
    p0 = p2;
    q0 = q2;
    const double frac = r - fl;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (best_err < eps) return Fraction::reduced(best_p, best_q);
  return std::nullopt;
}

std::vector<double> dihedral_orbit(double theta, const RationalityInfo& info) {
  if (info.kind == RationalityKind::Undetermined || info.N <= 0)
    throw Error("dihedral_orbit: polygon not rational");
  const long long n = info.N;
  std::vector<double> out;
  auto push = [&out](double a) {
    a = std::fmod(a, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    out.push_back(a);
  };
  for (long long j = 0; j < n; ++j) {
    push(theta + 2.0 * kPi * double(j) / double(n));
    push(-theta + 2.0 * kPi * double(j) / double(n));
  }
  std::sort(out.begin(), out.end());
  std::vector<double> dedup;
  for (double a : out) {
    if (dedup.empty() || a - dedup.back() > 1e-12) dedup.push_back(a);
  }
  // Circular merge of the wrap-around pair.
  if (dedup.size() > 1 && (2 * kPi - dedup.back()) + dedup.front() < 1e-12) dedup.pop_back();
  return dedup;
}

}  // namespace billiards
