#pragma once

#include <vector>

#include "billiards/billiard_map.hpp"
#include "billiards/geometry.hpp"
#include "billiards/polygon.hpp"
#include "billiards/tolerances.hpp"

namespace billiards {

/// One mirror wall of a corridor: the image of an original side under the
/// frame that places its copy.
struct Gate {
  Point2 a;
  Point2 b;
  int side = 0;  ///< original side as a 1-based symbol
};

/// Chain of reflected copies along a symbol sequence. frames[0] is the
/// identity and frames[i+1] = frames[i] composed with the reflection across
/// side word[i]; gates[i] is side word[i] pushed through frames[i] (the wall
/// shared by copies i and i+1).
struct Corridor {
  std::vector<int> word;
  std::vector<Isometry2> frames;  ///< word.size()+1 entries
  std::vector<Gate> gates;        ///< word.size() entries
  const Isometry2& terminal() const { return frames.back(); }
};

/// Builds the corridor for a symbol sequence. Symbols are 1-based sides;
/// adjacent symbols must differ (a repeat would mean a zero-length flight).
Corridor unfold_code(const Polygon& p, const std::vector<int>& symbols);

/// Impact points of an orbit pushed into the universal cover, where the
/// trajectory is a straight line.
std::vector<Point2> unfold_orbit(const Polygon& p, const std::vector<PhasePoint>& orbit);

/// Max perpendicular deviation of the unfolded impact points from their
/// least-squares line. Genuine orbits come out near machine epsilon.
double straightness_check(const Polygon& p, const std::vector<PhasePoint>& orbit);

/// Orbit segment joining two corners. word lists the sides crossed strictly
/// between them; direction is the ambient angle of the initial segment.
struct SaddleConnection {
  int start = 0;
  int end = 0;
  std::vector<int> word;
  double direction = 0.0;
  double length = 0.0;
};

/// All corner-to-corner segments whose unfolding spans at most max_depth
/// polygon copies (so words of length < max_depth). Reversed duplicates are
/// merged toward the lower start vertex; result sorted by length, then
/// start, end, word.
std::vector<SaddleConnection> find_saddle_connections(const Polygon& p, int max_depth,
                                                      const Tolerances& tol = {});

}  // namespace billiards
