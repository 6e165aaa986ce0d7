#pragma once

#include <optional>
#include <vector>

#include "billiards/polygon.hpp"

namespace billiards {

/// Phase point of the boundary map: a foot point on side `side` (0-based) at
/// parameter s in (0,1), moving at angle theta in (-pi/2, pi/2) measured from
/// the inward normal toward the side's ccw direction.
struct PhasePoint {
  int side = 0;
  double s = 0.5;
  double theta = 0.0;
};

enum class StepKind { Next, CornerHit, Tangency, Stall };

const char* step_kind_name(StepKind k);

struct StepOutcome {
  StepKind kind = StepKind::Stall;
  PhasePoint next{};        ///< valid when kind == Next
  Point2 hit{};             ///< impact point (valid unless Stall)
  double flight = 0.0;      ///< flight length to the impact
  int corner = -1;          ///< vertex index when kind == CornerHit
};

/// Ambient unit direction of the outgoing ray at u.
Vec2 direction_vector(const Polygon& p, const PhasePoint& u);
/// Its polar angle in [0, 2 pi).
double ambient_angle(const Polygon& p, const PhasePoint& u);
/// Inverse of direction_vector on side `side`; none if v does not point
/// strictly inward from that side.
std::optional<PhasePoint> phase_from_direction(const Polygon& p, int side, double s, Vec2 v);

/// One bounce. The next impact is the nearest transversal crossing of the
/// outgoing ray with a side, ignoring crossings within tol.geom of the
/// departure point (not the whole departure side: a non-convex table can
/// legitimately return to it). Impacts within tol.corner arc length of a
/// vertex are corner hits; reflected rays within tol.geom of tangency
/// terminate as Tangency.
StepOutcome billiard_step(const Polygon& p, const PhasePoint& u, const Tolerances& tol = {});

struct OrbitResult {
  std::vector<PhasePoint> points;  ///< u_0 .. u_m (m = completed steps)
  std::vector<int> itinerary;      ///< 1-based side symbols, size m + 1
  StepKind termination = StepKind::Next;  ///< Next means all steps completed
  int corner = -1;
  double length = 0.0;
};

/// Up to n bounces; stops early on corner hit / tangency / stall.
OrbitResult iterate(const Polygon& p, const PhasePoint& u, int n, const Tolerances& tol = {});

/// max(foot point distance, circle distance of the ambient directions).
/// Comparable across sides, unlike the chart angle theta.
double rho_distance(const Polygon& p, const PhasePoint& a, const PhasePoint& b);

struct PeriodResult {
  enum class Status { Periodic, CombinatorialOnly, NoReturn, Terminated };
  Status status = Status::NoReturn;
  int period = 0;
  StepKind termination = StepKind::Next;  ///< set when Terminated
};

/// Least n <= max_n with T^n u on u's side and rho(T^n u, u) < tol_close.
/// Failing that, a combinatorial candidate: least n whose shift leaves the
/// itinerary over 2 max_n steps invariant.
PeriodResult is_periodic(const Polygon& p, const PhasePoint& u, int max_n, double tol_close,
                         const Tolerances& tol = {});

/// First index where two itineraries differ; none if they agree over the
/// common prefix of both.
std::optional<std::size_t> symbolic_separation_index(const std::vector<int>& a,
                                                     const std::vector<int>& b);

}  // namespace billiards
