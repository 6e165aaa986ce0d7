#pragma once

#include <optional>
#include <string>
#include <vector>

#include "billiards/polygon.hpp"

namespace billiards {

/// Cyclic words over side symbols 1..k. A valid code has even length and no
/// two cyclically adjacent equal symbols; equivalence is rotation only (a word
/// and its reversal are distinct codes). The canonical form is the
/// lexicographically least rotation, taken at the least starting index when
/// several rotations tie.

enum class CodeCheck { Ok, Empty, OddLength, RepeatedSymbol, BadSymbol };

const char* code_check_name(CodeCheck c);

/// Structural validity of `word` as a code over sides 1..k.
CodeCheck code_check(const std::vector<int>& word, int k);

/// Throwing wrapper around code_check.
void validate_code(const std::vector<int>& word, int k);

/// Index of the lexicographically least rotation (least index on ties).
/// Linear time over the doubled word.
std::size_t least_rotation_index(const std::vector<int>& word);

/// The canonical rotation itself.
std::vector<int> canonical_rotation(const std::vector<int>& word);

/// Same length and same canonical rotation.
bool codes_equivalent(const std::vector<int>& a, const std::vector<int>& b);

/// Canonical code of a periodic itinerary word: odd-period words are doubled
/// (a period-n orbit with n odd closes up as a boundary-crossing loop only
/// after 2n crossings), even words are taken as-is.
std::vector<int> itinerary_to_code(const std::vector<int>& period_word, int k);

/// Parse "l,r,t" or "1,6,3" against a polygon's labels; 1-based symbols out.
std::vector<int> parse_code(const std::string& text, const Polygon& poly);

/// Render symbols through the polygon's labels, comma separated.
std::string format_code(const std::vector<int>& symbols, const Polygon& poly);

/// Whether two boundary-point sequences induce the same cyclic betweenness
/// relation on their first `horizon` entries: for all index triples (i,j,l),
/// xs[i] lies on the counter-clockwise arc from xs[j] to xs[l] exactly when
/// ys[i] does on the arc from ys[j] to ys[l]. Arc positions closer than 1e-12
/// of the perimeter are treated as coincident.
bool combinatorial_order_equal(const Polygon& p, const std::vector<BoundaryPoint>& xs,
                               const Polygon& q, const std::vector<BoundaryPoint>& ys,
                               std::size_t horizon);

}  // namespace billiards
