#include "billiard.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "billiards/billiard_map.hpp"
#include "billiards/codes.hpp"
#include "billiards/document.hpp"
#include "billiards/periodic_search.hpp"
#include "billiards/report.hpp"
#include "billiards/spectrum_compare.hpp"
#include "billiards/svg.hpp"
#include "billiards/unfolding.hpp"

using namespace billiards;

struct billiard_polygon {
  Polygon poly;
  Tolerances tol;
};

struct billiard_spectrum {
  Spectrum spec;
};

namespace {

thread_local std::string g_error;

billiard_status fail(billiard_status st, const std::string& msg) {
  g_error = msg;
  return st;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Tolerances make_tol(double tol_geom) {
  Tolerances t;
  if (tol_geom > 0.0) t.geom = tol_geom;
  return t;
}

/// Runs `fn`, translating exceptions to statuses. Generic Errors map to
/// `fallback`, which encodes what kind of failure the call site expects.
template <class Fn>
billiard_status guarded(billiard_status fallback, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(BILLIARD_ERR_PARSE, e.what());
  } catch (const SideCountMismatch& e) {
    return fail(BILLIARD_ERR_SIDE_COUNT_MISMATCH, e.what());
  } catch (const Error& e) {
    return fail(fallback, e.what());
  } catch (const std::exception& e) {
    return fail(BILLIARD_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* billiard_version(void) { return "billiards 1.0.0"; }

const char* billiard_last_error(void) { return g_error.c_str(); }

void billiard_string_free(char* s) { std::free(s); }

billiard_status billiard_polygon_from_text(const char* text, double tol_geom,
                                           billiard_polygon** out) {
  if (!text || !out) return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  return guarded(BILLIARD_ERR_INVALID_POLYGON, [&] {
    const PolygonDocument doc = parse_polygon_document(text);
    const Tolerances tol = make_tol(tol_geom);
    *out = new billiard_polygon{document_to_polygon(doc, tol), tol};
    return BILLIARD_OK;
  });
}

billiard_status billiard_polygon_from_file(const char* path, double tol_geom,
                                           billiard_polygon** out) {
  if (!path || !out) return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  std::ifstream in(path);
  if (!in) return fail(BILLIARD_ERR_IO, std::string("cannot read ") + path);
  std::ostringstream text;
  text << in.rdbuf();
  return billiard_polygon_from_text(text.str().c_str(), tol_geom, out);
}

billiard_status billiard_polygon_from_vertices(const double* xy, int k, double tol_geom,
                                               billiard_polygon** out) {
  if (!xy || !out || k < 3) return fail(BILLIARD_ERR_BAD_ARGUMENT, "need xy data for k >= 3");
  return guarded(BILLIARD_ERR_INVALID_POLYGON, [&] {
    std::vector<Point2> verts;
    verts.reserve(k);
    for (int i = 0; i < k; ++i) verts.push_back({xy[2 * i], xy[2 * i + 1]});
    const Tolerances tol = make_tol(tol_geom);
    *out = new billiard_polygon{Polygon::from_vertices(verts, {}, tol), tol};
    return BILLIARD_OK;
  });
}

void billiard_polygon_free(billiard_polygon* p) { delete p; }

int billiard_polygon_sides(const billiard_polygon* p) { return p ? p->poly.sides() : 0; }

billiard_status billiard_polygon_describe(const billiard_polygon* p, int degrees, char** out) {
  if (!p || !out) return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  return guarded(BILLIARD_ERR_INTERNAL, [&] {
    *out = dup_string(describe_polygon(p->poly, p->tol, degrees != 0));
    return BILLIARD_OK;
  });
}

billiard_status billiard_polygon_rationality(const billiard_polygon* p, long long* n_out) {
  if (!p || !n_out) return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  return guarded(BILLIARD_ERR_INTERNAL, [&] {
    const RationalityInfo info = p->poly.rationality(p->tol);
    if (info.kind == RationalityKind::Undetermined)
      return fail(BILLIARD_ERR_NOT_RATIONAL, "angles not recognized as rational");
    *n_out = info.N;
    return BILLIARD_OK;
  });
}

billiard_status billiard_polygon_svg(const billiard_polygon* p, char** out) {
  if (!p || !out) return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  return guarded(BILLIARD_ERR_INTERNAL, [&] {
    *out = dup_string(svg_table(p->poly));
    return BILLIARD_OK;
  });
}

billiard_status billiard_simulate(const billiard_polygon* p, const char* side, double s,
                                  double theta, int steps, char** text_out, int* steps_out,
                                  int* term_out, char** svg_out) {
  if (!p || !side || !text_out || !steps_out || !term_out)
    return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  return guarded(BILLIARD_ERR_BAD_ARGUMENT, [&] {
    const auto idx = p->poly.side_by_label(side);
    if (!idx) return fail(BILLIARD_ERR_BAD_ARGUMENT, std::string("unknown side ") + side);
    if (!(s > 0.0 && s < 1.0)) return fail(BILLIARD_ERR_BAD_ARGUMENT, "s must lie in (0,1)");
    if (!(theta > -kPi / 2 && theta < kPi / 2))
      return fail(BILLIARD_ERR_BAD_ARGUMENT, "theta must lie in (-pi/2, pi/2)");
    if (steps < 1) return fail(BILLIARD_ERR_BAD_ARGUMENT, "steps must be positive");

    const OrbitResult r = iterate(p->poly, {*idx, s, theta}, steps, p->tol);
    std::string text;
    for (std::size_t i = 0; i < r.itinerary.size(); ++i) {
      if (i) text += ",";
      text += p->poly.label(r.itinerary[i] - 1);
    }
    if (r.termination != StepKind::Next) {
      text += std::string("\nterminated: ") + step_kind_name(r.termination);
      if (r.termination == StepKind::CornerHit) text += " at vertex " + std::to_string(r.corner);
    }
    text += "\n";
    *text_out = dup_string(text);
    *steps_out = static_cast<int>(r.points.size()) - 1;
    *term_out = r.termination == StepKind::Next      ? 0
                : r.termination == StepKind::CornerHit ? 1
                : r.termination == StepKind::Tangency  ? 2
                                                       : 3;
    if (svg_out) *svg_out = dup_string(svg_orbit(p->poly, r.points));
    return BILLIARD_OK;
  });
}

billiard_status billiard_spectrum_compute(const billiard_polygon* p, int depth,
                                          unsigned long long budget, billiard_spectrum** out) {
  if (!p || !out) return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  return guarded(BILLIARD_ERR_BAD_ARGUMENT, [&] {
    const std::size_t cap = budget ? static_cast<std::size_t>(budget) : kDefaultNodeBudget;
    *out = new billiard_spectrum{enumerate_spectrum(p->poly, depth, cap, p->tol)};
    return BILLIARD_OK;
  });
}

int billiard_spectrum_count(const billiard_spectrum* s) {
  return s ? static_cast<int>(s->spec.families.size()) : 0;
}

int billiard_spectrum_partial(const billiard_spectrum* s) {
  return s && s->spec.partial ? 1 : 0;
}

billiard_status billiard_spectrum_serialize(const billiard_spectrum* s, char** out) {
  if (!s || !out) return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  return guarded(BILLIARD_ERR_INTERNAL, [&] {
    *out = dup_string(serialize_spectrum(s->spec));
    return BILLIARD_OK;
  });
}

void billiard_spectrum_free(billiard_spectrum* s) { delete s; }

billiard_status billiard_compare(const billiard_polygon* p, const billiard_polygon* q, int depth,
                                 int offset, unsigned long long budget, int degrees,
                                 int* verdict_out, char** report_out) {
  if (!p || !q || !verdict_out || !report_out)
    return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  return guarded(BILLIARD_ERR_BAD_ARGUMENT, [&] {
    const std::size_t cap = budget ? static_cast<std::size_t>(budget) : kDefaultNodeBudget;
    ComparisonReport rep;
    if (offset < 0)
      rep = best_labeling(p->poly, q->poly, depth, cap, p->tol).report;
    else
      rep = compare_spectra(p->poly, q->poly, depth, offset, cap, p->tol);
    *verdict_out = rep.verdict == ComparisonReport::Verdict::EqualToDepth ? 0
                   : rep.verdict == ComparisonReport::Verdict::Differ     ? 1
                                                                          : 2;
    *report_out = dup_string(report_comparison(rep, p->poly, q->poly, degrees != 0));
    return BILLIARD_OK;
  });
}

billiard_status billiard_unfold(const billiard_polygon* p, const char* code, char** report_out,
                                char** svg_out) {
  if (!p || !code || !report_out) return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  return guarded(BILLIARD_ERR_BAD_CODE, [&] {
    const std::vector<int> symbols = parse_code(code, p->poly);
    const Corridor cor = unfold_code(p->poly, symbols);

    std::string rep;
    std::vector<Chord> chords;
    if (symbols.size() % 2 == 0) {
      const Realization r = realize_code(p->poly, symbols, p->tol);
      rep = report_realization(p->poly, symbols, r, p->tol);
      if (r.ok()) {
        const CylinderFamily& f = *r.family;
        const Point2 a = p->poly.point_on_side(f.base_side, f.base_interval.midpoint());
        chords.push_back({a, a + f.direction * f.length, false});
      }
    } else {
      rep = "code: " + format_code(symbols, p->poly) + "\n";
      rep += "terminal: " + describe_isometry(classify(cor.terminal(), p->tol.iso)) + "\n";
      rep += "no family: odd length\n";
    }
    *report_out = dup_string(rep);
    if (svg_out) *svg_out = dup_string(svg_unfolding(p->poly, cor, chords));
    return BILLIARD_OK;
  });
}

billiard_status billiard_saddle(const billiard_polygon* p, int max_depth, int degrees,
                                char** out) {
  if (!p || !out) return fail(BILLIARD_ERR_BAD_ARGUMENT, "null argument");
  return guarded(BILLIARD_ERR_BAD_ARGUMENT, [&] {
    const auto conns = find_saddle_connections(p->poly, max_depth, p->tol);
    *out = dup_string(report_saddle(p->poly, conns, degrees != 0));
    return BILLIARD_OK;
  });
}

}  // extern "C"
