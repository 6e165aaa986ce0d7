#pragma once

#include <string>
#include <vector>

#include "billiards/periodic_search.hpp"
#include "billiards/spectrum_compare.hpp"
#include "billiards/unfolding.hpp"

namespace billiards {

/// Plain-text renderings of results, 12 significant digits. Angles print in
/// degrees unless `degrees` is false.

std::string describe_isometry(const IsometryClass& c);

/// Side count, rationality verdict, angle list, labels, any build warnings.
std::string describe_polygon(const Polygon& p, const Tolerances& tol = {}, bool degrees = true);

std::string report_realization(const Polygon& p, const std::vector<int>& code,
                               const Realization& r, const Tolerances& tol = {});

std::string report_comparison(const ComparisonReport& rep, const Polygon& p, const Polygon& q,
                              bool degrees = true);

std::string report_saddle(const Polygon& p, const std::vector<SaddleConnection>& conns,
                          bool degrees = true);

std::string report_doubling(const Polygon& p, const DoublingReport& rep);

}  // namespace billiards
