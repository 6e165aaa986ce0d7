// Release gate: every criterion the library promises, run at full scale, one
// verdict line each. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "billiards/billiard_map.hpp"
#include "billiards/codes.hpp"
#include "billiards/geometry.hpp"
#include "billiards/periodic_search.hpp"
#include "billiards/polygon.hpp"
#include "billiards/spectrum_compare.hpp"
#include "billiards/unfolding.hpp"

using namespace billiards;

namespace {

#define NEED(cond)                                                             \
  do {                                                                         \
    if (!(cond)) throw std::runtime_error("requirement failed: " #cond);       \
  } while (0)

Polygon square() { return Polygon::from_vertices({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

Polygon rect21() { return Polygon::from_vertices({{0, 0}, {2, 0}, {2, 1}, {0, 1}}); }

Polygon ltable() {
  return Polygon::from_vertices({{0, 0}, {5, 0}, {5, 1}, {3, 1}, {3, 3}, {0, 3}},
                                {"b", "r", "t", "m", "u", "l"});
}

Polygon equilateral() {
  return Polygon::from_vertices({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
}

Polygon right_isoceles() { return Polygon::from_vertices({{0, 0}, {1, 0}, {0, 1}}); }

Polygon transformed(const Polygon& p, double scale, double angle, Vec2 shift) {
  const double c = std::cos(angle), s = std::sin(angle);
  std::vector<Point2> verts;
  for (const Point2 v : p.vertices())
    verts.push_back({scale * (c * v.x - s * v.y) + shift.x,
                     scale * (s * v.x + c * v.y) + shift.y});
  std::vector<std::string> labels;
  for (int i = 0; i < p.sides(); ++i) labels.push_back(p.label(i));
  return Polygon::from_vertices(verts, labels);
}

PhasePoint family_start(const Polygon& p, const CylinderFamily& f, double s) {
  const Vec2 t = p.side_dir(f.base_side);
  const Vec2 v0 = t * (2.0 * f.direction.dot(t)) - f.direction;
  const auto u = phase_from_direction(p, f.base_side, s, v0);
  NEED(u.has_value());
  return *u;
}

std::set<std::vector<int>> spectrum_codes(const Spectrum& s) {
  std::set<std::vector<int>> out;
  for (const auto& f : s.families) out.insert(f.code);
  return out;
}

double wrap_angle(double a) {
  a = std::fmod(a, 2 * kPi);
  return a < 0 ? a + 2 * kPi : a;
}

double circle_gap(double a, double b) {
  const double d = std::fabs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, 2 * kPi - d);
}

// ---- criteria ----

void c1_ltable_shuttle() {
  const auto lt = ltable();
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> code;  // (l r)^n t (l r)^n b
    for (int i = 0; i < n; ++i) { code.push_back(6); code.push_back(2); }
    code.push_back(3);
    for (int i = 0; i < n; ++i) { code.push_back(6); code.push_back(2); }
    code.push_back(1);

    const auto r = realize_code(lt, code);
    NEED(r.ok());
    const auto& f = *r.family;
    NEED(f.base_interval.width() > 0);
    for (double frac : {0.25, 0.5, 0.75}) {
      const double s = f.base_interval.lo + frac * f.base_interval.width();
      const PhasePoint u = family_start(lt, f, s);
      const int period = static_cast<int>(code.size());
      const auto per = is_periodic(lt, u, period, 1e-7);
      NEED(per.status == PeriodResult::Status::Periodic);
      NEED(per.period == period);
      const auto orb = iterate(lt, u, period);
      NEED(static_cast<int>(orb.points.size()) == period + 1);
      const std::vector<int> word(orb.itinerary.begin(), orb.itinerary.end() - 1);
      NEED(codes_equivalent(canonical_rotation(word), canonical_rotation(code)));
    }
  }
}

void c2_doubling() {
  const auto tri = equilateral();
  const auto rep = verify_t1_doubling(tri, {1, 2, 3});
  NEED(rep.odd_period == 3);
  const auto orbit = iterate(tri, rep.odd_point, 3);
  NEED(orbit.points.size() == 4);
  for (const auto& u : orbit.points) NEED(std::fabs(u.s - 0.5) < 1e-6);
  NEED(rep.neighbors.size() == 2);
  for (const auto& nb : rep.neighbors) NEED(nb.period == 6);
}

// 720 rational directions: coprime (a, b) ordered by max(|a|, |b|), then angle.
std::vector<double> scan_directions(int count) {
  std::vector<std::pair<int, double>> all;
  for (int a = -30; a <= 30; ++a)
    for (int b = -30; b <= 30; ++b) {
      if (a == 0 && b == 0) continue;
      if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
      all.push_back({std::max(std::abs(a), std::abs(b)), wrap_angle(std::atan2(b, a))});
    }
  std::sort(all.begin(), all.end());
  NEED(static_cast<int>(all.size()) >= count);
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(all[i].second);
  return out;
}

void c3_scan_oracle_equivalence() {
  const auto sq = square();
  const int depth = 6;
  std::set<std::vector<int>> aggregate;
  for (double theta : scan_directions(720)) {
    for (const auto& hit : direction_scan_oracle(sq, theta, 40, 200)) {
      std::vector<int> power;
      while (static_cast<int>(power.size()) + static_cast<int>(hit.word.size()) <= depth) {
        power.insert(power.end(), hit.word.begin(), hit.word.end());
        aggregate.insert(canonical_rotation(power));
      }
    }
  }
  NEED(aggregate == spectrum_codes(enumerate_spectrum(sq, depth)));
}

void c4_similarity_invariance() {
  for (const Polygon& table : {square(), ltable()}) {
    const auto moved = transformed(table, kPi, 17 * kPi / 180, {5, -3});
    const auto a = serialize_spectrum(enumerate_spectrum(table, 8));
    const auto b = serialize_spectrum(enumerate_spectrum(moved, 8));
    NEED(!a.empty());
    NEED(a == b);
  }
}

void c5_affine_case() {
  const auto q = rect21();
  const auto rep = compare_spectra(square(), q, 8, 0);
  NEED(rep.verdict == ComparisonReport::Verdict::EqualToDepth);
  NEED(rep.similarity.kind != SimilarityFit::Kind::None);
  NEED(rep.similarity.residual < 1e-6 * q.diameter());

  // Linear part diag(2, 1) up to the square's symmetries: singular values 2, 1.
  const double a = rep.similarity.a, b = rep.similarity.b;
  const double c = rep.similarity.c, d = rep.similarity.d;
  const double t = a * a + b * b + c * c + d * d;
  const double det = a * d - b * c;
  const double disc = std::sqrt(std::max(0.0, t * t - 4 * det * det));
  const double s1 = std::sqrt((t + disc) / 2), s2 = std::sqrt((t - disc) / 2);
  NEED(std::fabs(s1 - 2.0) < 1e-6);
  NEED(std::fabs(s2 - 1.0) < 1e-6);
}

void c6_rigidity_witness() {
  const double a = 0.15;
  const auto quad = Polygon::from_vertices({{0, 0},
                                            {std::cos(a), -std::sin(a)},
                                            {2.3, 0.25},
                                            {0.8 * std::cos(a), 0.8 * std::sin(a)}});
  const auto rep = compare_spectra(square(), quad, 6, 0);
  NEED(rep.verdict == ComparisonReport::Verdict::Differ);
  NEED(rep.only_p.size() + rep.only_q.size() >= 1);
}

void c7_direction_count() {
  const auto tri = right_isoceles();
  const auto info = tri.rationality();
  NEED(info.N == 4);

  for (int attempt = 0; attempt < 20; ++attempt) {
    const PhasePoint u{0, 0.31 + 0.017 * attempt, 0.37 + 0.013 * attempt};
    const auto orb = iterate(tri, u, 500);
    if (orb.points.size() != 501) continue;  // corner death, next start

    std::vector<double> seen;
    for (std::size_t i = 0; i + 1 < orb.points.size(); ++i) {
      const Point2 from = tri.point_on_side(orb.points[i].side, orb.points[i].s);
      const Point2 to = tri.point_on_side(orb.points[i + 1].side, orb.points[i + 1].s);
      const double ang = wrap_angle(std::atan2(to.y - from.y, to.x - from.x));
      bool found = false;
      for (double v : seen)
        if (circle_gap(v, ang) < 1e-9) { found = true; break; }
      if (!found) seen.push_back(ang);
    }
    NEED(seen.size() <= 8);

    const auto orbit_dirs = dihedral_orbit(seen.front(), info);
    NEED(orbit_dirs.size() == 8);
    for (double v : seen) {
      bool matched = false;
      for (double w : orbit_dirs)
        if (circle_gap(v, w) < 1e-9) { matched = true; break; }
      NEED(matched);
    }
    return;
  }
  throw std::runtime_error("no start survived 500 bounces");
}

void c8_separation() {
  const auto sq = square();
  std::mt19937_64 rng(20260822);
  std::uniform_real_distribution<double> us(0.02, 0.98);
  std::uniform_real_distribution<double> utheta(-1.5, 1.5);
  std::uniform_int_distribution<int> uside(0, 3);

  int confirmed = 0, attempts = 0;
  while (confirmed < 1000) {
    NEED(++attempts < 20000);
    const int side = uside(rng);
    const double s = us(rng);
    const double t1 = utheta(rng);
    const double t2 = utheta(rng);
    if (std::fabs(t1 - t2) <= 0.3) continue;

    const auto a = iterate(sq, {side, s, t1}, 200);
    const auto b = iterate(sq, {side, s, t2}, 200);
    const auto sep = symbolic_separation_index(a.itinerary, b.itinerary);
    if (sep) {
      ++confirmed;
      continue;
    }
    // No disagreement found: only acceptable when a corner cut one orbit
    // short while the symbols still agreed.
    NEED(a.points.size() < 201 || b.points.size() < 201);
  }
}

void c9_code_algebra() {
  std::mt19937_64 rng(424242);
  auto random_code = [&](int k, int len) {
    std::vector<int> w(len);
    std::uniform_int_distribution<int> sym(1, k);
    for (int i = 0; i < len; ++i) {
      do {
        w[i] = sym(rng);
      } while ((i > 0 && w[i] == w[i - 1]) || (i == len - 1 && w[i] == w[0]));
    }
    return w;
  };
  auto brute_canonical = [](const std::vector<int>& w) {
    std::vector<int> best = w, rot = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    return best;
  };

  std::uniform_int_distribution<int> uk(3, 9);
  std::uniform_int_distribution<int> ulen(1, 12);
  for (int trial = 0; trial < 10000; ++trial) {
    const int k = uk(rng);
    const int len = 2 * ulen(rng);
    const auto w = random_code(k, len);
    NEED(code_check(w, k) == CodeCheck::Ok);
    const auto c = canonical_rotation(w);
    NEED(c == brute_canonical(w));
    NEED(canonical_rotation(c) == c);
    NEED(code_check(c, k) == CodeCheck::Ok);
    auto rot = w;
    std::rotate(rot.begin(), rot.begin() + 1 + trial % (len - 1 + 1), rot.end());
    NEED(canonical_rotation(rot) == c);
  }

  for (int trial = 0; trial < 1000; ++trial) {
    const int k = uk(rng);
    const auto a = random_code(k, 2 * ulen(rng));
    NEED(codes_equivalent(a, a));
    auto r = a;
    std::rotate(r.begin(), r.begin() + trial % a.size(), r.end());
    NEED(codes_equivalent(a, r));
    NEED(codes_equivalent(r, a));
    auto r2 = r;
    std::rotate(r2.begin(), r2.begin() + (trial * 7) % r.size(), r2.end());
    NEED((codes_equivalent(a, r) && codes_equivalent(r, r2)) ? codes_equivalent(a, r2) : true);
    const auto b = random_code(k, a.size());
    NEED(codes_equivalent(a, b) == codes_equivalent(b, a));
  }
}

void c10_straightness() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uj(-0.25, 0.25);
  std::vector<double> angles;
  for (int i = 0; i < 6; ++i) angles.push_back(i * kPi / 3 + uj(rng));
  std::sort(angles.begin(), angles.end());
  std::vector<Point2> hex;
  for (double a : angles) hex.push_back({std::cos(a), std::sin(a)});

  const Polygon tables[] = {square(), ltable(), Polygon::from_vertices(hex)};
  std::uniform_real_distribution<double> us(0.03, 0.97);
  std::uniform_real_distribution<double> ut(-1.35, 1.35);

  int checked = 0, attempts = 0;
  while (checked < 1000) {
    NEED(++attempts < 20000);
    const Polygon& p = tables[checked % 3];
    std::uniform_int_distribution<int> uside(0, p.sides() - 1);
    const PhasePoint u{uside(rng), us(rng), ut(rng)};
    const auto orb = iterate(p, u, 100);
    if (orb.points.size() < 30) continue;  // corner death too early to judge
    NEED(straightness_check(p, orb.points) < 1e-8);
    ++checked;
  }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void()> body;
  double limit_seconds;  // 0 = untimed
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "L-table (lr)^n t (lr)^n b families realize and close, n=1..3", c1_ltable_shuttle, 5.0},
      {2, "equilateral period doubling around the Fagnano orbit", c2_doubling, 0},
      {3, "depth-6 square spectrum equals the 720-direction scan", c3_scan_oracle_equivalence,
       60.0},
      {4, "spectra are byte-identical under scale, rotation, translation",
       c4_similarity_invariance, 0},
      {5, "square vs 2x1 rectangle: equal codes, affine map diag(2,1)", c5_affine_case, 0},
      {6, "square vs irrational quadrilateral: certified difference", c6_rigidity_witness, 0},
      {7, "right isoceles orbit uses at most 2N=8 directions", c7_direction_count, 0},
      {8, "1000 direction-gap pairs separate symbolically by step 200", c8_separation, 0},
      {9, "canonical code algebra fuzz (10^4) and equivalence axioms (10^3)", c9_code_algebra, 0},
      {10, "1000 random orbits unfold to straight lines", c10_straightness, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && c.limit_seconds > 0 && secs > c.limit_seconds) {
      std::ostringstream ss;
      ss << "took " << secs << " s, limit " << c.limit_seconds << " s";
      error = ss.str();
    }
    if (error.empty()) {
      std::printf("PASS %2d  %s (%.2f s)\n", c.id, c.name, secs);
    } else {
      std::printf("FAIL %2d  %s (%.2f s): %s\n", c.id, c.name, secs, error.c_str());
      ++failures;
    }
  }
  if (failures == 0)
    std::printf("all %zu criteria pass\n", criteria.size());
  else
    std::printf("%d of %zu criteria FAILED\n", failures, criteria.size());
  return failures;
}
