#pragma once

#include <optional>
#include <string>
#include <vector>

#include "billiards/billiard_map.hpp"
#include "billiards/geometry.hpp"
#include "billiards/polygon.hpp"
#include "billiards/tolerances.hpp"

namespace billiards {

/// Maximal one-parameter family of periodic orbits sharing a code. Start
/// feet X(s) for s in base_interval on base_side all close up after one
/// code period; the unfolded chords are parallel translates of direction.
struct CylinderFamily {
  std::vector<int> code;   ///< canonical rotation, 1-based symbols
  Vec2 direction{};        ///< unit chord direction in the unfolded plane
  int base_side = 0;       ///< 0-based side index, code[0] - 1
  Interval base_interval;  ///< open, in the side parameter
  double length = 0.0;     ///< orbit length, |terminal translation|
  double width = 0.0;      ///< cylinder width across the chord direction
  bool marginal = false;   ///< width at or below tol.gate
};

enum class RealizeFailure {
  NotTranslation,  ///< terminal isometry is not a translation
  EmptyCorridor,   ///< no start parameter threads every gate unobstructed
};

struct Realization {
  std::optional<CylinderFamily> family;
  RealizeFailure reason = RealizeFailure::EmptyCorridor;  ///< set when family is empty
  bool ok() const { return family.has_value(); }
};

/// Decides whether a code is carried by a cylinder of periodic orbits and
/// returns the widest verified one. The code is canonicalized first, so the
/// family's base side is the canonical form's first symbol.
Realization realize_code(const Polygon& p, const std::vector<int>& code,
                         const Tolerances& tol = {});

/// All realizable canonical codes of even length <= depth.
struct Spectrum {
  Polygon polygon;
  int depth = 0;
  std::vector<CylinderFamily> families;  ///< sorted by code length, then code
  bool partial = false;                  ///< node budget ran out mid-search
  std::size_t nodes = 0;                 ///< search nodes spent
};

Spectrum enumerate_spectrum(const Polygon& p, int depth,
                            std::size_t budget = kDefaultNodeBudget,
                            const Tolerances& tol = {});

/// Text form used for file output and byte-exact diffs: a small header, then
/// one line per family ("length=.. dir=.. width=.." plus the labeled code).
/// dir is taken relative to side 1 and width is divided by the perimeter, so
/// similar tables serialize identically.
std::string serialize_spectrum(const Spectrum& s);

struct ScanHit {
  std::vector<int> word;  ///< least-period itinerary from the witness
  PhasePoint witness;
};

/// Brute-force sweep: launch orbits in ambient direction theta from `grid`
/// interior feet on every side and report each closed orbit found within
/// max_steps, one witness per distinct code. Independent of the corridor
/// machinery; used to cross-check enumerate_spectrum.
std::vector<ScanHit> direction_scan_oracle(const Polygon& p, double theta, int max_steps,
                                           int grid, const Tolerances& tol = {});

/// Period doubling around an odd word w: the doubled code ww is carried by a
/// cylinder whose central orbit closes after |w| bounces while every other
/// orbit in it needs 2|w|.
struct DoublingReport {
  std::vector<int> word;     ///< the odd word, as given
  CylinderFamily family;     ///< family of the doubled code
  double s_odd = 0.0;        ///< start parameter of the short orbit
  PhasePoint odd_point{};    ///< its phase point
  int odd_period = 0;        ///< verified least period (expect |w|)
  struct Neighbor {
    double s = 0.0;
    int period = 0;
  };
  std::vector<Neighbor> neighbors;  ///< sampled either side, expect 2|w|
};

/// Throws Error when the doubled code has no family or the odd terminal is
/// not a glide reflection.
DoublingReport verify_t1_doubling(const Polygon& p, const std::vector<int>& word,
                                  const Tolerances& tol = {});

}  // namespace billiards
