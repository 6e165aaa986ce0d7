#pragma once

#include <cstddef>

namespace billiards {

/// Numeric tolerances shared across the library. All geometric quantities are
/// absolute (the tables this library targets have O(1)..O(10) coordinates).
struct Tolerances {
  double geom = 1e-9;    ///< point coincidence / segment crossing exclusion radius
  double iso = 1e-7;     ///< isometry classification (angle in rad, length)
  double corner = 1e-9;  ///< arc-length distance to a vertex that counts as a corner hit
  double gate = 1e-9;    ///< minimum start-parameter width of a non-marginal cylinder
  double margin = 1e-9;  ///< dimensionless side-parameter margin kept from corners and
                         ///< gate ends; similar tables then serialize identically
  double rat = 1e-9;     ///< |angle/pi - m/n| acceptance for rationality recognition
  double sim = 1e-6;     ///< relative residual bound for similarity recovery
  int cf_max_den = 64;   ///< continued-fraction denominator cap for recognition
};

/// Search-node budget for code enumeration and saddle DFS.
inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

}  // namespace billiards
