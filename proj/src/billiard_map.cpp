#include "billiards/billiard_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace billiards {

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Next: return "next";
    case StepKind::CornerHit: return "corner_hit";
    case StepKind::Tangency: return "tangency";
    case StepKind::Stall: return "stall";
  }
  return "?";
}

Vec2 direction_vector(const Polygon& p, const PhasePoint& u) {
  const Vec2 n = p.side_normal(u.side);
  const Vec2 d = p.side_dir(u.side);
  return n * std::cos(u.theta) + d * std::sin(u.theta);
}

double ambient_angle(const Polygon& p, const PhasePoint& u) {
  const Vec2 v = direction_vector(p, u);
  double a = std::atan2(v.y, v.x);
  if (a < 0) a += 2 * kPi;
  if (a >= 2 * kPi) a -= 2 * kPi;
  return a;
}

std::optional<PhasePoint> phase_from_direction(const Polygon& p, int side, double s, Vec2 v) {
  const double vn = v.dot(p.side_normal(side));
  if (!(vn > 0)) return std::nullopt;
  const double vd = v.dot(p.side_dir(side));
  return PhasePoint{side, s, std::atan2(vd, vn)};
}

StepOutcome billiard_step(const Polygon& p, const PhasePoint& u, const Tolerances& tol) {
  const int k = p.sides();
  const Point2 x0 = p.point_on_side(u.side, u.s);
  const Vec2 v = direction_vector(p, u);

  StepOutcome out;
  double best_t = std::numeric_limits<double>::infinity();
  int best_side = -1;
  double best_w = 0.0;

  for (int f = 0; f < k; ++f) {
    const Point2 a = p.side_a(f);
    const Vec2 e = p.side_b(f) - a;
    const double det = v.cross(Vec2{-e.x, -e.y});
    if (std::abs(det) < 1e-15) continue;  // ray parallel to the side
    const Vec2 r = a - x0;
    const double t = r.cross(Vec2{-e.x, -e.y}) / det;
    const double w = v.cross(r) / det;
    const double len = p.side_len(f);
    const double wslack = tol.corner / len;
    if (t <= tol.geom / std::max(1.0, v.norm())) continue;
    if (w < -wslack || w > 1 + wslack) continue;
    // skip re-crossing the departure point itself
    if (f == u.side && std::abs(w - u.s) * len < tol.geom) continue;
    if (t < best_t) {
      best_t = t;
      best_side = f;
      best_w = w;
    }
  }

  if (best_side < 0) {
    out.kind = StepKind::Stall;
    return out;
  }

  const double len = p.side_len(best_side);
  const Point2 hit = p.point_on_side(best_side, best_w);
  out.hit = hit;
  out.flight = best_t;

  // corner check by arc distance to the nearest endpoint
  if (best_w * len < tol.corner) {
    out.kind = StepKind::CornerHit;
    out.corner = best_side;
    return out;
  }
  if ((1 - best_w) * len < tol.corner) {
    out.kind = StepKind::CornerHit;
    out.corner = (best_side + 1) % k;
    return out;
  }

  const Vec2 n = p.side_normal(best_side);
  const Vec2 d = p.side_dir(best_side);
  // specular reflection; v points against the inward normal here, so the
  // reflected vector already points back inside
  const Vec2 vout = v - n * (2.0 * v.dot(n));
  const double theta = std::atan2(vout.dot(d), vout.dot(n));
  if (std::abs(theta) >= kPi / 2 - tol.geom) {
    out.kind = StepKind::Tangency;
    return out;
  }
  out.kind = StepKind::Next;
  out.next = PhasePoint{best_side, best_w, theta};
  return out;
}

OrbitResult iterate(const Polygon& p, const PhasePoint& u, int n, const Tolerances& tol) {
  OrbitResult r;
  r.points.push_back(u);
  r.itinerary.push_back(u.side + 1);
  PhasePoint cur = u;
  for (int i = 0; i < n; ++i) {
    const StepOutcome st = billiard_step(p, cur, tol);
    if (st.kind != StepKind::Next) {
      r.termination = st.kind;
      r.corner = st.corner;
      return r;
    }
    r.length += st.flight;
    cur = st.next;
    r.points.push_back(cur);
    r.itinerary.push_back(cur.side + 1);
  }
  r.termination = StepKind::Next;
  return r;
}

double rho_distance(const Polygon& p, const PhasePoint& a, const PhasePoint& b) {
  const double dfoot = dist(p.point_on_side(a.side, a.s), p.point_on_side(b.side, b.s));
  const double dang = std::abs(wrap_angle(ambient_angle(p, a) - ambient_angle(p, b)));
  return std::max(dfoot, dang);
}

PeriodResult is_periodic(const Polygon& p, const PhasePoint& u, int max_n, double tol_close,
                         const Tolerances& tol) {
  PeriodResult res;
  const OrbitResult orb = iterate(p, u, 2 * max_n, tol);
  if (orb.termination != StepKind::Next) {
    res.status = PeriodResult::Status::Terminated;
    res.termination = orb.termination;
    return res;
  }
  for (int n = 1; n <= max_n; ++n) {
    const PhasePoint& w = orb.points[static_cast<std::size_t>(n)];
    if (w.side == u.side && rho_distance(p, w, u) < tol_close) {
      res.status = PeriodResult::Status::Periodic;
      res.period = n;
      return res;
    }
  }
  // metric return failed; look for a shift period of the symbol sequence
  const auto& it = orb.itinerary;
  for (int n = 1; n <= max_n; ++n) {
    bool ok = true;
    for (std::size_t j = 0; j + static_cast<std::size_t>(n) < it.size(); ++j) {
      if (it[j] != it[j + static_cast<std::size_t>(n)]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      res.status = PeriodResult::Status::CombinatorialOnly;
      res.period = n;
      return res;
    }
  }
  res.status = PeriodResult::Status::NoReturn;
  return res;
}

std::optional<std::size_t> symbolic_separation_index(const std::vector<int>& a,
                                                     const std::vector<int>& b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i)
    if (a[i] != b[i]) return i;
  return std::nullopt;
}

}  // namespace billiards
