#include "billiards/unfolding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <tuple>

namespace billiards {
namespace {

constexpr double kAngMargin = 1e-9;

Isometry2 side_reflection(const Polygon& p, int side) {
  return Isometry2::reflection(p.side_a(side), p.side_b(side));
}

double wrap02pi(double a) {
  double w = std::fmod(a, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  return w;
}

double dist_point_segment(Point2 q, Point2 a, Point2 b) {
  const Vec2 e = b - a;
  const double l2 = e.dot(e);
  if (l2 <= 0.0) return dist(q, a);
  const double t = std::clamp((q - a).dot(e) / l2, 0.0, 1.0);
  return dist(q, a + e * t);
}

/// Direction set {lo + t : 0 <= t <= len} on the circle.
struct Arc {
  double lo = 0.0;
  double len = 0.0;
};

enum class Subtend { Constraint, NoConstraint, Empty };

/// Directions from v that meet the open segment (a, b). Degenerates to Empty
/// when v sits on the segment's line outside it, and to NoConstraint (a full
/// half-plane of directions) when v sits inside the segment.
Subtend subtend_arc(Point2 v, Point2 a, Point2 b, Arc& out) {
  const Vec2 da = a - v;
  const Vec2 db = b - v;
  if (da.norm() < 1e-12 || db.norm() < 1e-12) return Subtend::NoConstraint;
  const double d = wrap_angle(db.angle() - da.angle());
  if (std::abs(d) < 1e-12) return Subtend::Empty;
  if (std::abs(d) > kPi - 1e-9) return Subtend::NoConstraint;
  if (d > 0.0)
    out = {da.angle(), d};
  else
    out = {db.angle(), -d};
  return Subtend::Constraint;
}

/// Clip acc to b. If the intersection has two components (possible when acc
/// is reflex), keep their hull; pruning stays conservative either way.
bool arc_clip(Arc& acc, const Arc& b) {
  const double d = wrap02pi(b.lo - acc.lo);
  double best_lo = 1e300;
  double best_hi = -1e300;
  for (const double shift : {0.0, -2.0 * kPi}) {
    const double lo = std::max(d + shift, 0.0);
    const double hi = std::min(d + shift + b.len, acc.len);
    if (lo <= hi) {
      best_lo = std::min(best_lo, lo);
      best_hi = std::max(best_hi, hi);
    }
  }
  if (best_hi < best_lo) return false;
  acc.lo = wrap02pi(acc.lo + best_lo);
  acc.len = best_hi - best_lo;
  return true;
}

/// Interior wedge at vertex a: directions from side_dir(a) sweeping ccw by
/// the interior angle. Works for reflex corners too.
void vertex_wedge(const Polygon& p, int a, Vec2& u, double& alpha) {
  const int k = p.sides();
  const int prev = (a + k - 1) % k;
  u = p.side_dir(a);
  const Vec2 v = -p.side_dir(prev);
  alpha = wrap02pi(v.angle() - u.angle());
}

bool dir_in_wedge(Vec2 d, Vec2 base, double alpha) {
  const double phi = wrap02pi(d.angle() - base.angle());
  return phi > kAngMargin && phi < alpha - kAngMargin;
}

struct Crossing {
  double t = 0.0;
  double w = 0.0;
  bool transversal = false;
};

Crossing cross_segment(Point2 p0, Vec2 dir, Point2 a, Point2 b) {
  Crossing c;
  const Vec2 e = b - a;
  const Vec2 r = a - p0;
  const double det = dir.cross(-e);
  if (std::abs(det) < 1e-15) return c;
  c.t = r.cross(-e) / det;
  c.w = dir.cross(r) / det;
  c.transversal = true;
  return c;
}

struct SegmentCheck {
  const Polygon* p = nullptr;
  Tolerances tol;
};

/// Exact verification that the segment start -> end realizes a saddle
/// connection: leaves and arrives strictly inside the corner wedges, crosses
/// every gate interior in order, stays inside each copy between gates, and
/// clears every copy vertex except its own endpoints.
bool segment_realizes(const SegmentCheck& chk, int a, int b, const std::vector<int>& word0,
                      const std::vector<Isometry2>& frames, Point2 start, Point2 end) {
  const Polygon& p = *chk.p;
  const int k = p.sides();
  const std::size_t j = word0.size();
  const Vec2 seg = end - start;
  const double len = seg.norm();
  if (len < 1e-9) return false;
  const Vec2 d = seg * (1.0 / len);

  Vec2 u;
  double alpha = 0.0;
  vertex_wedge(p, a, u, alpha);
  if (!dir_in_wedge(d, u, alpha)) return false;

  vertex_wedge(p, b, u, alpha);
  const Isometry2& fj = frames[j];
  const Vec2 ub = fj.apply_vector(u);
  const Vec2 vb = fj.apply_vector(unit_dir(u.angle() + alpha));
  // A reversing frame flips the sweep, so the image wedge starts at the
  // other leg.
  const Vec2 base = fj.orientation_reversing() ? vb : ub;
  if (!dir_in_wedge(-d, base, alpha)) return false;

  std::vector<double> ts(j + 2);
  ts[0] = 0.0;
  ts[j + 1] = 1.0;
  for (std::size_t i = 0; i < j; ++i) {
    const Point2 ga = frames[i].apply(p.side_a(word0[i]));
    const Point2 gb = frames[i].apply(p.side_b(word0[i]));
    const Crossing c = cross_segment(start, seg, ga, gb);
    if (!c.transversal) return false;
    const double glen = p.side_len(word0[i]);
    if (c.w * glen <= chk.tol.gate || (1.0 - c.w) * glen <= chk.tol.gate) return false;
    if (c.t <= ts[i] + 1e-12 || c.t >= 1.0 - 1e-12) return false;
    ts[i + 1] = c.t;
  }

  for (std::size_t c = 0; c <= j; ++c) {
    for (int f = 0; f < k; ++f) {
      if (c > 0 && f == word0[c - 1]) continue;
      if (c < j && f == word0[c]) continue;
      const Point2 fa = frames[c].apply(p.side_a(f));
      const Point2 fb = frames[c].apply(p.side_b(f));
      const Crossing cr = cross_segment(start, seg, fa, fb);
      if (!cr.transversal) continue;
      if (cr.t <= ts[c] + 1e-12 || cr.t >= ts[c + 1] - 1e-12) continue;
      const double slack = chk.tol.corner / p.side_len(f);
      if (cr.w > -slack && cr.w < 1.0 + slack) return false;
    }
    for (int vtx = 0; vtx < k; ++vtx) {
      const Point2 q = frames[c].apply(p.vertex(vtx));
      if (dist(q, start) < 1e-9 || dist(q, end) < 1e-9) continue;
      if (dist_point_segment(q, start, end) < chk.tol.corner) return false;
    }
  }
  return true;
}

}  // namespace

Corridor unfold_code(const Polygon& p, const std::vector<int>& symbols) {
  if (symbols.empty()) throw Error("empty code");
  const int k = p.sides();
  Corridor c;
  c.word = symbols;
  c.frames.reserve(symbols.size() + 1);
  c.frames.push_back(Isometry2::identity());
  c.gates.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const int s = symbols[i];
    if (s < 1 || s > k)
      throw Error("bad symbol " + std::to_string(s) + " for a polygon with " + std::to_string(k) +
                  " sides");
    if (i > 0 && s == symbols[i - 1])
      throw Error("repeated symbol " + std::to_string(s) + " at position " + std::to_string(i));
    const Isometry2 f = c.frames.back();
    c.gates.push_back({f.apply(p.side_a(s - 1)), f.apply(p.side_b(s - 1)), s});
    c.frames.push_back(compose(f, side_reflection(p, s - 1)));
  }
  return c;
}

std::vector<Point2> unfold_orbit(const Polygon& p, const std::vector<PhasePoint>& orbit) {
  std::vector<Point2> out;
  out.reserve(orbit.size());
  Isometry2 f = Isometry2::identity();
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (i > 0) f = compose(f, side_reflection(p, orbit[i].side));
    out.push_back(f.apply(p.point_on_side(orbit[i].side, orbit[i].s)));
  }
  return out;
}

double straightness_check(const Polygon& p, const std::vector<PhasePoint>& orbit) {
  const std::vector<Point2> pts = unfold_orbit(p, orbit);
  if (pts.size() < 3) return 0.0;
  Vec2 c{0.0, 0.0};
  for (const Point2& q : pts) c = c + q;
  c = c * (1.0 / static_cast<double>(pts.size()));
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const Point2& q : pts) {
    const Vec2 r = q - c;
    sxx += r.x * r.x;
    sxy += r.x * r.y;
    syy += r.y * r.y;
  }
  const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  const Vec2 normal = unit_dir(theta).perp();
  double worst = 0.0;
  for (const Point2& q : pts) worst = std::max(worst, std::abs((q - c).dot(normal)));
  return worst;
}

std::vector<SaddleConnection> find_saddle_connections(const Polygon& p, int max_depth,
                                                      const Tolerances& tol) {
  if (max_depth < 1) throw Error("max_depth must be at least 1");
  const int k = p.sides();
  const SegmentCheck chk{&p, tol};
  std::set<std::tuple<int, int, std::vector<int>>> seen;
  std::vector<SaddleConnection> out;

  // DFS state shared across the recursion below.
  int start_vertex = 0;
  Point2 start{};
  std::vector<int> word0;
  std::vector<Isometry2> frames;

  auto emit = [&]() {
    const Isometry2& fj = frames.back();
    const std::vector<int> rev(word0.rbegin(), word0.rend());
    for (int b = 0; b < k; ++b) {
      const Point2 end = fj.apply(p.vertex(b));
      // Keep one orientation per segment; the reverse shows up in the DFS
      // from the other corner.
      const bool canonical =
          start_vertex < b || (start_vertex == b && !(rev < word0));
      if (!canonical) continue;
      if (!segment_realizes(chk, start_vertex, b, word0, frames, start, end)) continue;
      SaddleConnection sc;
      sc.start = start_vertex;
      sc.end = b;
      sc.word.reserve(word0.size());
      for (const int f : word0) sc.word.push_back(f + 1);
      const Vec2 seg = end - start;
      sc.direction = wrap02pi(seg.angle());
      sc.length = seg.norm();
      if (seen.insert({sc.start, sc.end, sc.word}).second) out.push_back(std::move(sc));
    }
  };

  std::function<void(Arc)> dfs = [&](Arc cone) {
    emit();
    if (static_cast<int>(word0.size()) + 1 >= max_depth) return;
    const Isometry2 f = frames.back();
    for (int side = 0; side < k; ++side) {
      if (!word0.empty() && side == word0.back()) continue;
      Arc gate_arc;
      const Subtend st =
          subtend_arc(start, f.apply(p.side_a(side)), f.apply(p.side_b(side)), gate_arc);
      if (st == Subtend::Empty) continue;
      Arc next = cone;
      if (st == Subtend::Constraint && !arc_clip(next, gate_arc)) continue;
      word0.push_back(side);
      frames.push_back(compose(f, side_reflection(p, side)));
      dfs(next);
      frames.pop_back();
      word0.pop_back();
    }
  };

  for (int a = 0; a < k; ++a) {
    start_vertex = a;
    start = p.vertex(a);
    word0.clear();
    frames.assign(1, Isometry2::identity());
    Vec2 u;
    double alpha = 0.0;
    vertex_wedge(p, a, u, alpha);
    if (alpha <= 2.0 * kAngMargin) continue;
    dfs({wrap02pi(u.angle() + kAngMargin), alpha - 2.0 * kAngMargin});
  }

  std::sort(out.begin(), out.end(), [](const SaddleConnection& x, const SaddleConnection& y) {
    return std::tie(x.length, x.start, x.end, x.word) < std::tie(y.length, y.start, y.end, y.word);
  });
  return out;
}

}  // namespace billiards
