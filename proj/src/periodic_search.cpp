#include "billiards/periodic_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>

#include "billiards/codes.hpp"
#include "billiards/unfolding.hpp"

namespace billiards {
namespace {

// s-interval widths below this are numeric dust, not cylinders
constexpr double kWidthFloor = 1e-13;
constexpr double kInf = 1e30;

double wrap02pi(double a) {
  double w = std::fmod(a, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  return w;
}

/// Reflect the unfolded chord direction across the base side to get the
/// outgoing direction of the folded orbit.
Vec2 fold_direction(const Polygon& p, int side, Vec2 w) {
  const Vec2 t = p.side_dir(side);
  return t * (2.0 * w.dot(t)) - w;
}

/// Value a + b s of the start parameter s.
struct Affine {
  double a = 0.0;
  double b = 0.0;
  Affine operator-(const Affine& o) const { return {a - o.a, b - o.b}; }
};

/// {s : f(s) > 0} as a sub-line.
Interval positive_set(const Affine& f) {
  if (std::abs(f.b) < 1e-15) return f.a > 0.0 ? Interval{-kInf, kInf} : Interval::empty_interval();
  const double root = -f.a / f.b;
  return f.b > 0.0 ? Interval{root, kInf} : Interval{-kInf, root};
}

void clip_pieces(std::vector<Interval>& pieces, Interval keep) {
  std::vector<Interval> out;
  for (const Interval& piece : pieces) {
    const Interval cut = piece.intersect(keep);
    if (!cut.empty()) out.push_back(cut);
  }
  pieces = std::move(out);
}

void subtract_pieces(std::vector<Interval>& pieces, Interval bad) {
  if (bad.empty()) return;
  std::vector<Interval> out;
  for (const Interval& piece : pieces) {
    const Interval left{piece.lo, std::min(piece.hi, bad.lo)};
    const Interval right{std::max(piece.lo, bad.hi), piece.hi};
    if (!left.empty()) out.push_back(left);
    if (!right.empty()) out.push_back(right);
  }
  pieces = std::move(out);
}

/// Crossing of the chord family X(s) + tau W, X(s) = B0 + s D, with the wall
/// A + w E. Both coordinates are affine in s.
struct WallCross {
  Affine tau;
  Affine w;
  bool transversal = false;
};

WallCross cross_wall(Point2 b0, Vec2 d, Vec2 w, Point2 a, Vec2 e) {
  WallCross c;
  const Vec2 ne = -e;
  const double det = w.cross(ne);
  if (std::abs(det) < 1e-14) return c;
  const Vec2 r = a - b0;
  c.tau = {r.cross(ne) / det, -d.cross(ne) / det};
  c.w = {w.cross(r) / det, -w.cross(d) / det};
  c.transversal = true;
  return c;
}

/// March the midpoint orbit and require the exact itinerary plus metric
/// closure; the interval arithmetic above is conservative either way, so
/// this is the soundness gate.
bool verify_member(const Polygon& p, const std::vector<int>& canon, Vec2 dir, double s,
                   const Tolerances& tol) {
  const int base = canon[0] - 1;
  const auto u0 = phase_from_direction(p, base, s, fold_direction(p, base, dir));
  if (!u0) return false;
  const int m = static_cast<int>(canon.size());
  const OrbitResult orb = iterate(p, *u0, m, tol);
  if (orb.termination != StepKind::Next) return false;
  for (int j = 1; j < m; ++j)
    if (orb.itinerary[static_cast<std::size_t>(j)] != canon[static_cast<std::size_t>(j)])
      return false;
  const PhasePoint& back = orb.points[static_cast<std::size_t>(m)];
  return back.side == base && rho_distance(p, back, *u0) < tol.iso;
}

/// Direction set {lo + t : 0 <= t <= len} on the circle.
struct Arc {
  double lo = 0.0;
  double len = 2.0 * kPi;
};

/// Grow acc to contain direction d.
void arc_extend(Arc& acc, double d) {
  const double phi = wrap02pi(d - acc.lo);
  if (phi <= acc.len) return;
  const double ccw = phi - acc.len;
  const double cw = 2.0 * kPi - phi;
  if (ccw <= cw) {
    acc.len = phi;
  } else {
    acc.lo = wrap02pi(acc.lo - cw);
    acc.len += cw;
  }
}

/// Clip acc to b, keeping the hull when the intersection splits.
bool arc_clip(Arc& acc, const Arc& b) {
  const double d = wrap02pi(b.lo - acc.lo);
  double best_lo = kInf;
  double best_hi = -kInf;
  for (const double shift : {0.0, -2.0 * kPi}) {
    const double lo = std::max(d + shift, 0.0);
    const double hi = std::min(d + shift + b.len, acc.len);
    if (lo <= hi) {
      best_lo = std::min(best_lo, lo);
      best_hi = std::max(best_hi, hi);
    }
  }
  if (best_hi < best_lo) return false;
  acc.lo = wrap02pi(acc.lo + best_lo);
  acc.len = best_hi - best_lo;
  return true;
}

/// Hull of the four endpoint-to-endpoint directions from the base side to a
/// gate. Every chord from the base through the gate points inside it, so it
/// is a sound pruning cone. False when degenerate or too wide to constrain.
bool gate_cone(Point2 ba, Point2 bb, Point2 ga, Point2 gb, Arc& out) {
  bool started = false;
  for (const Point2& from : {ba, bb}) {
    for (const Point2& to : {ga, gb}) {
      const Vec2 d = to - from;
      if (d.norm() < 1e-12) continue;
      if (!started) {
        out = {d.angle(), 0.0};
        started = true;
      } else {
        arc_extend(out, d.angle());
      }
    }
  }
  return started && out.len < kPi - 1e-9;
}

}  // namespace

Realization realize_code(const Polygon& p, const std::vector<int>& code, const Tolerances& tol) {
  validate_code(code, p.sides());
  const std::vector<int> canon = canonical_rotation(code);
  const Corridor cor = unfold_code(p, canon);
  const std::size_t m = canon.size();
  const int k = p.sides();

  Realization out;
  const IsometryClass cls = classify(cor.terminal(), tol.iso);
  if (cls.kind != IsoKind::Translation || cls.translation.norm() < tol.geom) {
    out.reason = RealizeFailure::NotTranslation;
    return out;
  }
  const Vec2 w = cls.translation;
  const int base = canon[0] - 1;
  const Point2 b0 = p.side_a(base);
  const Vec2 d = p.side_b(base) - b0;

  const double smargin = tol.margin;
  std::vector<Interval> pieces{Interval{smargin, 1.0 - smargin}};

  // The chord must cross the interior gates in order, strictly inside each.
  std::vector<WallCross> gate(m);
  for (std::size_t i = 1; i < m; ++i) {
    const Vec2 e = cor.gates[i].b - cor.gates[i].a;
    gate[i] = cross_wall(b0, d, w, cor.gates[i].a, e);
    if (!gate[i].transversal) return out;
    const double wm = tol.margin;
    clip_pieces(pieces, positive_set({gate[i].w.a - wm, gate[i].w.b}));
    clip_pieces(pieces, positive_set({1.0 - wm - gate[i].w.a, -gate[i].w.b}));
    if (i == 1) clip_pieces(pieces, positive_set(gate[i].tau));
    else clip_pieces(pieces, positive_set(gate[i].tau - gate[i - 1].tau));
    if (i == m - 1) clip_pieces(pieces, positive_set({1.0 - gate[i].tau.a, -gate[i].tau.b}));
    if (pieces.empty()) return out;
  }

  // Copy c covers chord parameters (tau_{c-1}, tau_c); any other wall of
  // that copy met inside the window occludes the chord there.
  for (std::size_t c = 1; c <= m; ++c) {
    const int entry = canon[c - 1] - 1;
    const int exit = (c < m ? canon[c] : canon[0]) - 1;
    const Affine tau_lo = (c == 1) ? Affine{0.0, 0.0} : gate[c - 1].tau;
    const Affine tau_hi = (c == m) ? Affine{1.0, 0.0} : gate[c].tau;
    for (int f = 0; f < k; ++f) {
      if (f == entry || f == exit) continue;
      const Point2 a = cor.frames[c].apply(p.side_a(f));
      const Vec2 e = cor.frames[c].apply(p.side_b(f)) - a;
      const WallCross wc = cross_wall(b0, d, w, a, e);
      if (!wc.transversal) continue;
      const double slack = tol.margin;
      Interval bad = positive_set(wc.tau - tau_lo);
      bad = bad.intersect(positive_set(tau_hi - wc.tau));
      bad = bad.intersect(positive_set({wc.w.a + slack, wc.w.b}));
      bad = bad.intersect(positive_set({1.0 + slack - wc.w.a, -wc.w.b}));
      subtract_pieces(pieces, bad);
    }
    if (pieces.empty()) return out;
  }

  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& x, const Interval& y) { return x.width() > y.width(); });
  const double wlen = w.norm();
  const Vec2 dir = w * (1.0 / wlen);
  for (const Interval& piece : pieces) {
    if (piece.width() <= kWidthFloor) break;
    if (!verify_member(p, canon, dir, piece.midpoint(), tol)) continue;
    CylinderFamily fam;
    fam.code = canon;
    fam.direction = dir;
    fam.base_side = base;
    fam.base_interval = piece;
    fam.length = wlen;
    fam.width = piece.width() * p.side_len(base) * std::abs(dir.cross(p.side_dir(base)));
    fam.marginal = fam.width <= tol.gate;
    out.family = fam;
    return out;
  }
  return out;
}

namespace {

struct SpectrumSearch {
  const Polygon* p = nullptr;
  Tolerances tol;
  int depth = 0;
  std::size_t budget = 0;
  std::size_t nodes = 0;
  bool partial = false;
  Point2 base_a{};
  Point2 base_b{};
  std::vector<int> word;
  std::vector<Isometry2> frames;
  std::map<std::vector<int>, CylinderFamily> found;

  // Prenecklace walk in the style of Fredricksen-Kessler-Maiorana: each node
  // is a prefix of a lex-least rotation, so every cyclic class is visited
  // exactly once.
  void gen(int per, Arc cone) {
    const int t = static_cast<int>(word.size());
    if (t >= 2 && t % 2 == 0 && t % per == 0 && word.back() != word.front()) {
      Realization r = realize_code(*p, word, tol);
      if (r.ok()) found.emplace(word, std::move(*r.family));
    }
    if (t == depth || partial) return;
    const int k = p->sides();
    for (int c = 1; c <= k; ++c) {
      if (c == word.back()) continue;
      const int anchor = word[static_cast<std::size_t>(t - per)];
      if (c < anchor) continue;
      if (++nodes > budget) {
        partial = true;
        return;
      }
      Arc next = cone;
      // the candidate's gate: side c placed by the current frame
      const Point2 ga = frames.back().apply(p->side_a(c - 1));
      const Point2 gb = frames.back().apply(p->side_b(c - 1));
      Arc gc;
      if (gate_cone(base_a, base_b, ga, gb, gc) && !arc_clip(next, gc)) continue;
      word.push_back(c);
      frames.push_back(
          compose(frames.back(), Isometry2::reflection(p->side_a(c - 1), p->side_b(c - 1))));
      gen(c == anchor ? per : t + 1, next);
      frames.pop_back();
      word.pop_back();
      if (partial) return;
    }
  }
};

}  // namespace

Spectrum enumerate_spectrum(const Polygon& p, int depth, std::size_t budget,
                            const Tolerances& tol) {
  if (depth < 2 || depth % 2 != 0) throw Error("depth must be even and at least 2");
  SpectrumSearch search;
  search.p = &p;
  search.tol = tol;
  search.depth = depth;
  search.budget = budget;
  for (int a = 1; a <= p.sides() && !search.partial; ++a) {
    search.word.assign(1, a);
    search.frames.assign(1, Isometry2::identity());
    search.frames.push_back(Isometry2::reflection(p.side_a(a - 1), p.side_b(a - 1)));
    search.base_a = p.side_a(a - 1);
    search.base_b = p.side_b(a - 1);
    search.gen(1, Arc{});
  }
  Spectrum sp{p};
  sp.depth = depth;
  sp.partial = search.partial;
  sp.nodes = search.nodes;
  sp.families.reserve(search.found.size());
  for (auto& [code, fam] : search.found) sp.families.push_back(std::move(fam));
  std::sort(sp.families.begin(), sp.families.end(),
            [](const CylinderFamily& x, const CylinderFamily& y) {
              if (x.code.size() != y.code.size()) return x.code.size() < y.code.size();
              return x.code < y.code;
            });
  return sp;
}

std::string serialize_spectrum(const Spectrum& s) {
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "# billiard spectrum v1\n# k=%d L=%d count=%zu\n",
                s.polygon.sides(), s.depth, s.families.size());
  out += buf;
  if (s.partial) out += "# PARTIAL\n";
  const double base_angle = s.polygon.side_dir(0).angle();
  const double perim = s.polygon.perimeter();
  // Fields are quantized to 1e-11 before printing: similar tables reach the
  // same families through different roundoff, and raw %.12g can land on a
  // decimal rounding tie (the corner margins are decimal) and flip a digit.
  const auto grid = [](double v) { return std::round(v * 1e11) / 1e11; };
  for (const CylinderFamily& f : s.families) {
    double rel = wrap02pi(f.direction.angle() - base_angle);
    if (rel < 1e-9 || 2.0 * kPi - rel < 1e-9) rel = 0.0;
    std::snprintf(buf, sizeof buf, "length=%zu dir=%.12g width=%.12g ", f.code.size(), grid(rel),
                  grid(f.width / perim));
    out += buf;
    for (std::size_t i = 0; i < f.code.size(); ++i) {
      if (i) out += ',';
      out += s.polygon.label(f.code[i] - 1);
    }
    out += '\n';
  }
  return out;
}

std::vector<ScanHit> direction_scan_oracle(const Polygon& p, double theta, int max_steps,
                                           int grid, const Tolerances& tol) {
  if (grid < 2) throw Error("grid must be at least 2");
  const Vec2 v = unit_dir(theta);
  std::vector<ScanHit> hits;
  std::set<std::vector<int>> seen;
  for (int side = 0; side < p.sides(); ++side) {
    for (int g = 1; g <= grid; ++g) {
      const double s = static_cast<double>(g) / (grid + 1);
      const auto u0 = phase_from_direction(p, side, s, v);
      if (!u0) continue;
      const OrbitResult orb = iterate(p, *u0, max_steps, tol);
      const int done = static_cast<int>(orb.points.size()) - 1;
      for (int n = 1; n <= done; ++n) {
        const PhasePoint& un = orb.points[static_cast<std::size_t>(n)];
        if (un.side != side || rho_distance(p, un, *u0) >= tol.iso) continue;
        const std::vector<int> word(orb.itinerary.begin(), orb.itinerary.begin() + n);
        if (seen.insert(itinerary_to_code(word, p.sides())).second)
          hits.push_back({word, *u0});
        break;
      }
    }
  }
  return hits;
}

DoublingReport verify_t1_doubling(const Polygon& p, const std::vector<int>& word,
                                  const Tolerances& tol) {
  const int k = p.sides();
  const std::size_t n = word.size();
  if (n < 3 || n % 2 == 0) throw Error("doubling needs an odd word of length at least 3");
  for (std::size_t i = 0; i < n; ++i) {
    if (word[i] < 1 || word[i] > k) throw Error("symbol out of range");
    if (word[i] == word[(i + 1) % n]) throw Error("cyclically adjacent repeat");
  }
  const std::vector<int> wc = canonical_rotation(word);
  std::vector<int> doubled = wc;
  doubled.insert(doubled.end(), wc.begin(), wc.end());

  const Corridor half = unfold_code(p, wc);
  const IsometryClass ghalf = classify(half.terminal(), tol.iso);
  if (ghalf.kind != IsoKind::Glide)
    throw Error(std::string("odd word terminal is a ") + iso_kind_name(ghalf.kind) +
                ", not a glide reflection");

  Realization real = realize_code(p, doubled, tol);
  if (!real.ok())
    throw Error(std::string("no family for the doubled code: ") +
                (real.reason == RealizeFailure::NotTranslation ? "terminal is not a translation"
                                                               : "empty corridor"));

  DoublingReport rep;
  rep.word = word;
  rep.family = *real.family;

  // The short orbit's chord lies on the glide axis; intersect it with the
  // base side to find the start parameter.
  const int base = rep.family.base_side;
  const Point2 b0 = p.side_a(base);
  const Vec2 d = p.side_b(base) - b0;
  const Vec2 nd = -d;
  const double det = ghalf.axis_dir.cross(nd);
  if (std::abs(det) < 1e-14) throw Error("glide axis is parallel to the base side");
  const Vec2 r = b0 - ghalf.axis_point;
  rep.s_odd = ghalf.axis_dir.cross(r) / det;
  if (!rep.family.base_interval.contains(rep.s_odd))
    throw Error("glide axis misses the family interval");

  const Vec2 v0 = fold_direction(p, base, rep.family.direction);
  const auto u = phase_from_direction(p, base, rep.s_odd, v0);
  if (!u) throw Error("short orbit direction does not enter the table");
  rep.odd_point = *u;
  const int half_n = static_cast<int>(n);
  const PeriodResult pr = is_periodic(p, *u, half_n, tol.iso, tol);
  rep.odd_period = pr.status == PeriodResult::Status::Periodic ? pr.period : 0;

  for (const double s : {0.5 * (rep.family.base_interval.lo + rep.s_odd),
                         0.5 * (rep.s_odd + rep.family.base_interval.hi)}) {
    DoublingReport::Neighbor nb;
    nb.s = s;
    const auto un = phase_from_direction(p, base, s, v0);
    if (un) {
      const PeriodResult prn = is_periodic(p, *un, 2 * half_n, tol.iso, tol);
      nb.period = prn.status == PeriodResult::Status::Periodic ? prn.period : 0;
    }
    rep.neighbors.push_back(nb);
  }
  return rep;
}

}  // namespace billiards
