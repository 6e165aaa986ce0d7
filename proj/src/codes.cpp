#include "billiards/codes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace billiards {

const char* code_check_name(CodeCheck c) {
  switch (c) {
    case CodeCheck::Ok: return "ok";
    case CodeCheck::Empty: return "empty";
    case CodeCheck::OddLength: return "odd length";
    case CodeCheck::RepeatedSymbol: return "cyclically adjacent repeat";
    case CodeCheck::BadSymbol: return "symbol out of range";
  }
  return "?";
}

CodeCheck code_check(const std::vector<int>& word, int k) {
  if (word.empty()) return CodeCheck::Empty;
  for (int s : word)
    if (s < 1 || s > k) return CodeCheck::BadSymbol;
  if (word.size() % 2 != 0) return CodeCheck::OddLength;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] == word[(i + 1) % word.size()]) return CodeCheck::RepeatedSymbol;
  return CodeCheck::Ok;
}

void validate_code(const std::vector<int>& word, int k) {
  const CodeCheck c = code_check(word, k);
  if (c != CodeCheck::Ok) throw Error(std::string("invalid code: ") + code_check_name(c));
}

std::size_t least_rotation_index(const std::vector<int>& w) {
  // Booth's algorithm over the doubled word; returns the least index
  // achieving the minimal rotation.
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = w[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != w[(k + i + 1) % n]) {
      if (sj < w[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (sj != w[(k + i + 1) % n]) {
      if (sj < w[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

std::vector<int> canonical_rotation(const std::vector<int>& word) {
  const std::size_t n = word.size();
  const std::size_t r = least_rotation_index(word);
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = word[(r + i) % n];
  return out;
}

bool codes_equivalent(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  return canonical_rotation(a) == canonical_rotation(b);
}

std::vector<int> itinerary_to_code(const std::vector<int>& period_word, int k) {
  if (period_word.empty()) throw Error("itinerary_to_code: empty word");
  std::vector<int> code = period_word;
  if (code.size() % 2 != 0) code.insert(code.end(), period_word.begin(), period_word.end());
  validate_code(code, k);
  return canonical_rotation(code);
}

std::vector<int> parse_code(const std::string& text, const Polygon& poly) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // Trim surrounding whitespace.
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("code: empty symbol");
    tok = tok.substr(b, e - b + 1);
    const auto side = poly.side_by_label(tok);
    if (!side) throw Error("code: unknown side '" + tok + "'");
    out.push_back(*side + 1);
  }
  if (out.empty()) throw Error("code: no symbols");
  return out;
}

std::string format_code(const std::vector<int>& symbols, const Polygon& poly) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ",";
    out += poly.label(symbols[i] - 1);
  }
  return out;
}

namespace {
// Signed arc test: negative when a lies on the ccw arc from b to c, positive
// when outside, magnitude = distance past the arc end.
double arc_excess(double a, double b, double c) {
  auto fwd = [](double from, double to) {
    double d = to - from;
    d -= std::floor(d);
    return d;
  };
  return fwd(b, a) - fwd(b, c);
}
}  // namespace

bool combinatorial_order_equal(const Polygon& p, const std::vector<BoundaryPoint>& xs,
                               const Polygon& q, const std::vector<BoundaryPoint>& ys,
                               std::size_t horizon) {
  if (xs.size() != ys.size()) throw Error("length mismatch: boundary sequences differ in size");
  const std::size_t n = std::min(horizon, xs.size());
  std::vector<double> cx(n), cy(n);
  for (std::size_t i = 0; i < n; ++i) {
    cx[i] = p.boundary_coord(xs[i]);
    cy[i] = q.boundary_coord(ys[i]);
  }
  const double eps = 1e-12;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const double dx = arc_excess(cx[i], cx[j], cx[l]);
        const double dy = arc_excess(cy[i], cy[j], cy[l]);
        // A point within snapping distance of an arc endpoint is neither
        // inside nor outside; skip rather than compare noise.
        if (std::fabs(dx) <= eps || std::fabs(dy) <= eps) continue;
        if ((dx < 0) != (dy < 0)) return false;
      }
  return true;
}

}  // namespace billiards
