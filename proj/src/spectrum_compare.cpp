#include "billiards/spectrum_compare.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <iterator>
#include <map>

#include "billiards/codes.hpp"

namespace billiards {

namespace {

using CodeMap = std::map<std::vector<int>, const CylinderFamily*>;

CodeMap index_by_code(const Spectrum& s) {
  CodeMap m;
  for (const CylinderFamily& f : s.families) m.emplace(f.code, &f);
  return m;
}

// Symbol map induced by Polygon::relabeled(offset): old side j becomes new
// side j - offset.
std::vector<int> relabel_code(const std::vector<int>& code, int offset, int k) {
  std::vector<int> out;
  out.reserve(code.size());
  for (int sym : code) out.push_back((sym - 1 - offset % k + k) % k + 1);
  return canonical_rotation(out);
}

struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  double det() const { return a * d - b * c; }
};

double fit_residual(const Mat2& m, const std::vector<Vec2>& ps, const std::vector<Vec2>& qs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    worst = std::max(worst, (m.apply(ps[i]) - qs[i]).norm());
  return worst;
}

// Singular values of a 2x2 matrix, largest first.
std::pair<double, double> singular_values(const Mat2& m) {
  const double sxx = m.a * m.a + m.c * m.c;
  const double syy = m.b * m.b + m.d * m.d;
  const double sxy = m.a * m.b + m.c * m.d;
  const double mean = 0.5 * (sxx + syy);
  const double off = std::sqrt(0.25 * (sxx - syy) * (sxx - syy) + sxy * sxy);
  const double hi = std::max(mean + off, 0.0);
  const double lo = std::max(mean - off, 0.0);
  return {std::sqrt(hi), std::sqrt(lo)};
}

}  // namespace

std::optional<SimilarityFit> similarity_recover(
    const Polygon& p, const Polygon& q,
    const std::vector<std::pair<CylinderFamily, CylinderFamily>>& matched,
    const Tolerances& tol) {
  if (matched.size() < 2) throw InsufficientMatches("need at least two matched cylinder pairs");

  std::vector<Vec2> ps, qs;
  ps.reserve(matched.size());
  qs.reserve(matched.size());
  for (const auto& [fp, fq] : matched) {
    ps.push_back(fp.direction * fp.length);
    qs.push_back(fq.direction * fq.length);
  }

  bool spanning = false;
  for (std::size_t i = 0; i < ps.size() && !spanning; ++i)
    for (std::size_t j = i + 1; j < ps.size() && !spanning; ++j)
      spanning = std::abs(ps[i].cross(ps[j])) > 1e-12 * ps[i].norm() * ps[j].norm();
  if (!spanning) throw InsufficientMatches("matched cylinder directions are all parallel");

  const RationalityInfo rp = p.rationality(tol);
  Mat2 m;
  if (rp.kind != RationalityKind::Undetermined && rp.N >= 3) {
    // A table with three or more mirror directions can only match another
    // conformally, so fit q ~ lambda p over the complex plane, trying the
    // conjugated (reflected) variant as well.
    double spp = 0.0, re1 = 0.0, im1 = 0.0, re2 = 0.0, im2 = 0.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      spp += ps[i].dot(ps[i]);
      re1 += ps[i].x * qs[i].x + ps[i].y * qs[i].y;
      im1 += ps[i].x * qs[i].y - ps[i].y * qs[i].x;
      re2 += ps[i].x * qs[i].x - ps[i].y * qs[i].y;
      im2 += ps[i].x * qs[i].y + ps[i].y * qs[i].x;
    }
    const Mat2 proper{re1 / spp, -im1 / spp, im1 / spp, re1 / spp};
    const Mat2 mirror{re2 / spp, im2 / spp, im2 / spp, -re2 / spp};
    m = fit_residual(proper, ps, qs) <= fit_residual(mirror, ps, qs) ? proper : mirror;
  } else {
    // Two mirror directions leave room for independent axis scales; solve
    // the normal equations for an unconstrained linear map.
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    double ux = 0.0, uy = 0.0, vx = 0.0, vy = 0.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      sxx += ps[i].x * ps[i].x;
      sxy += ps[i].x * ps[i].y;
      syy += ps[i].y * ps[i].y;
      ux += qs[i].x * ps[i].x;
      uy += qs[i].x * ps[i].y;
      vx += qs[i].y * ps[i].x;
      vy += qs[i].y * ps[i].y;
    }
    const double det = sxx * syy - sxy * sxy;
    if (std::abs(det) <= 1e-12 * std::max(sxx, syy) * std::max(sxx, syy))
      throw InsufficientMatches("matched cylinder directions are all parallel");
    m.a = (ux * syy - uy * sxy) / det;
    m.b = (uy * sxx - ux * sxy) / det;
    m.c = (vx * syy - vy * sxy) / det;
    m.d = (vy * sxx - vx * sxy) / det;
  }

  // Translation from the vertex correspondence, then verify everything the
  // fit claims: mapped vertices and mapped cylinder vectors alike.
  Vec2 t{};
  for (int i = 0; i < p.sides(); ++i) t = t + (q.vertex(i) - m.apply(p.vertex(i)));
  t = t * (1.0 / p.sides());

  double residual = fit_residual(m, ps, qs);
  for (int i = 0; i < p.sides(); ++i)
    residual = std::max(residual, (m.apply(p.vertex(i)) + t - q.vertex(i)).norm());
  if (residual > tol.sim * q.diameter()) return std::nullopt;

  SimilarityFit fit;
  fit.a = m.a;
  fit.b = m.b;
  fit.c = m.c;
  fit.d = m.d;
  fit.t = t;
  fit.residual = residual;
  const auto [s1, s2] = singular_values(m);
  if (s1 - s2 <= 1e-6 * s1) {
    fit.kind = SimilarityFit::Kind::Similar;
    fit.scale = 0.5 * (s1 + s2);
    fit.reflected = m.det() < 0.0;
    fit.rotation = fit.reflected ? std::atan2(m.b, m.a) : std::atan2(m.c, m.a);
  } else {
    fit.kind = SimilarityFit::Kind::AffinelySimilar;
    fit.scale = std::sqrt(std::abs(m.det()));
    fit.reflected = m.det() < 0.0;
  }
  return fit;
}

ComparisonReport compare_spectra(const Polygon& p, const Polygon& q, int depth, int offset,
                                 std::size_t budget, const Tolerances& tol) {
  if (p.sides() != q.sides()) throw SideCountMismatch(p.sides(), q.sides());
  const int k = p.sides();
  const Polygon qr = q.relabeled((offset % k + k) % k);

  auto task = std::async(std::launch::async,
                         [&] { return enumerate_spectrum(p, depth, budget, tol); });
  const Spectrum sq = enumerate_spectrum(qr, depth, budget, tol);
  const Spectrum sp = task.get();

  ComparisonReport rep;
  rep.depth = depth;
  rep.offset = (offset % k + k) % k;
  rep.partial_p = sp.partial;
  rep.partial_q = sq.partial;
  rep.count_p = sp.families.size();
  rep.count_q = sq.families.size();
  const RationalityInfo rip = p.rationality(tol);
  const RationalityInfo riq = q.rationality(tol);
  if (rip.kind != RationalityKind::Undetermined) rep.n_p = static_cast<int>(rip.N);
  if (riq.kind != RationalityKind::Undetermined) rep.n_q = static_cast<int>(riq.N);

  const CodeMap mp = index_by_code(sp);
  const CodeMap mq = index_by_code(sq);
  std::vector<std::pair<CylinderFamily, CylinderFamily>> matched;
  for (const auto& [code, fam] : mp) {
    auto it = mq.find(code);
    if (it == mq.end())
      rep.only_p.push_back(code);
    else
      matched.emplace_back(*fam, *it->second);
  }
  for (const auto& [code, fam] : mq) {
    (void)fam;
    if (!mp.count(code)) rep.only_q.push_back(code);
  }

  // A missing code is a certain witness only if the search that failed to
  // find it ran to completion.
  const bool certain = (!rep.only_p.empty() && !sq.partial) || (!rep.only_q.empty() && !sp.partial);
  if (rep.only_p.empty() && rep.only_q.empty()) {
    if (sp.partial || sq.partial) {
      rep.verdict = ComparisonReport::Verdict::InconclusivePartial;
    } else {
      rep.verdict = ComparisonReport::Verdict::EqualToDepth;
      try {
        if (auto fit = similarity_recover(p, qr, matched, tol)) rep.similarity = *fit;
      } catch (const InsufficientMatches&) {
      }
    }
  } else {
    rep.verdict = certain ? ComparisonReport::Verdict::Differ
                          : ComparisonReport::Verdict::InconclusivePartial;
  }
  return rep;
}

LabelingChoice best_labeling(const Polygon& p, const Polygon& q, int depth, std::size_t budget,
                             const Tolerances& tol) {
  if (p.sides() != q.sides()) throw SideCountMismatch(p.sides(), q.sides());
  const int k = p.sides();

  auto task = std::async(std::launch::async,
                         [&] { return enumerate_spectrum(p, depth, budget, tol); });
  const Spectrum sq = enumerate_spectrum(q, depth, budget, tol);
  const Spectrum sp = task.get();

  std::vector<std::vector<int>> cp;
  for (const CylinderFamily& f : sp.families) cp.push_back(f.code);
  std::sort(cp.begin(), cp.end());

  // Relabeling permutes symbols, not geometry, so one enumeration of q
  // serves every offset.
  int best = 0;
  std::size_t best_diff = 0;
  bool best_equal = false;
  bool have = false;
  std::vector<int> equal_offsets;
  for (int r = 0; r < k; ++r) {
    std::vector<std::vector<int>> cq;
    for (const CylinderFamily& f : sq.families) cq.push_back(relabel_code(f.code, r, k));
    std::sort(cq.begin(), cq.end());
    std::vector<std::vector<int>> dp, dq;
    std::set_difference(cp.begin(), cp.end(), cq.begin(), cq.end(), std::back_inserter(dp));
    std::set_difference(cq.begin(), cq.end(), cp.begin(), cp.end(), std::back_inserter(dq));
    const bool equal = dp.empty() && dq.empty() && !sp.partial && !sq.partial;
    if (equal) equal_offsets.push_back(r);
    const std::size_t diff = dp.size() + dq.size();
    if (!have || (equal && !best_equal) || (equal == best_equal && diff < best_diff)) {
      have = true;
      best = r;
      best_diff = diff;
      best_equal = equal;
    }
  }

  LabelingChoice choice;
  choice.offset = best;
  choice.equal_offsets = std::move(equal_offsets);
  choice.report = compare_spectra(p, q, depth, best, budget, tol);
  return choice;
}

bool code_equivalence_probe(const Polygon& p, const Polygon& q, const PhasePoint& u,
                            const PhasePoint& v, int horizon, const Tolerances& tol) {
  if (horizon < 1) throw Error("horizon must be positive");
  const OrbitResult a = iterate(p, u, horizon, tol);
  const OrbitResult b = iterate(q, v, horizon, tol);
  return a.itinerary == b.itinerary;
}

}  // namespace billiards
