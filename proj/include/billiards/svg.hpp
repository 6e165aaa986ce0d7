#pragma once

#include <string>
#include <vector>

#include "billiards/billiard_map.hpp"
#include "billiards/polygon.hpp"
#include "billiards/unfolding.hpp"

namespace billiards {

/// Output is deterministic: same inputs, same bytes. Coordinates are
/// formatted with six decimals and the y axis is flipped so the picture
/// matches math orientation.
struct SvgOptions {
  double width = 640.0;  ///< canvas width in px; height follows the aspect
  double margin = 24.0;  ///< border in px
};

/// Table outline with side labels placed just outside each midpoint.
std::string svg_table(const Polygon& p, const SvgOptions& opt = {});

/// Table plus the orbit polyline through the bounce feet.
std::string svg_orbit(const Polygon& p, const std::vector<PhasePoint>& orbit,
                      const SvgOptions& opt = {});

struct Chord {
  Point2 a{}, b{};
  bool dashed = false;
};

/// The corridor's chain of reflected copies, gates highlighted, plus any
/// chords (solid for a realized orbit, dashed for an alternate).
std::string svg_unfolding(const Polygon& p, const Corridor& corridor,
                          const std::vector<Chord>& chords, const SvgOptions& opt = {});

}  // namespace billiards
