#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "billiards/billiard_map.hpp"
#include "billiards/periodic_search.hpp"
#include "billiards/polygon.hpp"
#include "billiards/tolerances.hpp"

namespace billiards {

struct SideCountMismatch : Error {
  SideCountMismatch(int kp, int kq)
      : Error("side count mismatch: " + std::to_string(kp) + " vs " + std::to_string(kq)) {}
};

struct InsufficientMatches : Error {
  explicit InsufficientMatches(const std::string& what) : Error(what) {}
};

/// Affine map x -> M x + t carrying one table onto another, with M stored
/// row-major [[a, b], [c, d]]. Similar means M is a scaled rotation
/// (optionally reflected); affinely similar allows distinct axis scales.
struct SimilarityFit {
  enum class Kind { None, Similar, AffinelySimilar };
  Kind kind = Kind::None;
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  Vec2 t{};
  double scale = 1.0;      ///< uniform scale when Similar
  double rotation = 0.0;   ///< rotation angle when Similar and not reflected
  bool reflected = false;  ///< det M < 0
  double residual = 0.0;   ///< worst data misfit under the map
};

/// Spectrum comparison at a fixed depth and side labeling.
struct ComparisonReport {
  enum class Verdict { EqualToDepth, Differ, InconclusivePartial };
  int depth = 0;
  int offset = 0;  ///< cyclic relabeling applied to the second table
  Verdict verdict = Verdict::InconclusivePartial;
  std::vector<std::vector<int>> only_p;  ///< canonical codes found only for P
  std::vector<std::vector<int>> only_q;  ///< canonical codes found only for Q
  SimilarityFit similarity;              ///< recovered only on equal verdicts
  std::optional<int> n_p;                ///< dihedral order when P is rational
  std::optional<int> n_q;
  bool partial_p = false;
  bool partial_q = false;
  std::size_t count_p = 0;
  std::size_t count_q = 0;
};

/// Enumerates both spectra to `depth` (Q relabeled by `offset` first) and
/// compares them as canonical code sets. Differ requires a certain witness:
/// a code found for one table whose absence from the other is backed by a
/// complete enumeration. Partial searches otherwise yield
/// InconclusivePartial. On equality, attempts similarity recovery from the
/// matched cylinders.
ComparisonReport compare_spectra(const Polygon& p, const Polygon& q, int depth, int offset,
                                 std::size_t budget = kDefaultNodeBudget,
                                 const Tolerances& tol = {});

struct LabelingChoice {
  int offset = 0;
  std::vector<int> equal_offsets;  ///< every offset whose code sets match fully
  ComparisonReport report;         ///< full comparison at the chosen offset
};

/// Tries all cyclic relabelings of Q and keeps the most favorable: an equal
/// verdict if any offset gives one, otherwise the fewest witnesses. Ties go
/// to the smallest offset.
LabelingChoice best_labeling(const Polygon& p, const Polygon& q, int depth,
                             std::size_t budget = kDefaultNodeBudget,
                             const Tolerances& tol = {});

/// Fits the affine map sending P's cylinder translation vectors to Q's over
/// code-matched family pairs: a scaled rotation when P's dihedral order is
/// at least 3, a general linear map otherwise. The translation comes from
/// the vertex correspondence. Returns none when the fitted map does not
/// reproduce the data within tol.sim times Q's diameter; throws
/// InsufficientMatches when fewer than two pairs or all directions parallel.
std::optional<SimilarityFit> similarity_recover(
    const Polygon& p, const Polygon& q,
    const std::vector<std::pair<CylinderFamily, CylinderFamily>>& matched,
    const Tolerances& tol = {});

/// Finite probe of code equivalence: do the two orbits emit the same symbol
/// sequence through `horizon` bounces, or die at the same step having agreed
/// so far?
bool code_equivalence_probe(const Polygon& p, const Polygon& q, const PhasePoint& u,
                            const PhasePoint& v, int horizon, const Tolerances& tol = {});

}  // namespace billiards
