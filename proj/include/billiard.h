#ifndef BILLIARD_H
#define BILLIARD_H

/* Flat C interface to the billiard dynamics library. All objects are opaque
 * handles; every function returns a status code and reports details through
 * billiard_last_error(), which is thread local and valid until the next
 * failing call on that thread. Strings returned through char** out
 * parameters are heap allocated; release them with billiard_string_free.
 * Angles cross this boundary in radians. A tol_geom of 0 selects the
 * library default. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum billiard_status {
  BILLIARD_OK = 0,
  BILLIARD_ERR_IO,
  BILLIARD_ERR_PARSE,
  BILLIARD_ERR_INVALID_POLYGON,
  BILLIARD_ERR_BAD_ARGUMENT,
  BILLIARD_ERR_CORNER_HIT,
  BILLIARD_ERR_TANGENCY,
  BILLIARD_ERR_BUDGET_EXCEEDED,
  BILLIARD_ERR_SIDE_COUNT_MISMATCH,
  BILLIARD_ERR_BAD_CODE,
  BILLIARD_ERR_NOT_RATIONAL,
  BILLIARD_ERR_INTERNAL
} billiard_status;

typedef struct billiard_polygon billiard_polygon;
typedef struct billiard_spectrum billiard_spectrum;

const char* billiard_version(void);
const char* billiard_last_error(void);
void billiard_string_free(char* s);

/* Polygon construction from the text document format, a file holding one,
 * or a bare ccw vertex list (xy = x0 y0 x1 y1 ...). */
billiard_status billiard_polygon_from_text(const char* text, double tol_geom,
                                           billiard_polygon** out);
billiard_status billiard_polygon_from_file(const char* path, double tol_geom,
                                           billiard_polygon** out);
billiard_status billiard_polygon_from_vertices(const double* xy, int k, double tol_geom,
                                               billiard_polygon** out);
void billiard_polygon_free(billiard_polygon* p);

int billiard_polygon_sides(const billiard_polygon* p);

/* Validation summary: side count, rationality verdict, angles, labels.
 * degrees selects the angle unit in the text. */
billiard_status billiard_polygon_describe(const billiard_polygon* p, int degrees, char** out);

/* Dihedral order N when the polygon's angles are rational multiples of pi;
 * BILLIARD_ERR_NOT_RATIONAL otherwise. */
billiard_status billiard_polygon_rationality(const billiard_polygon* p, long long* n_out);

billiard_status billiard_polygon_svg(const billiard_polygon* p, char** out);

/* Runs the billiard map up to `steps` bounces from (side, s, theta), side
 * given by label or 1-based number. text_out gets the comma separated
 * itinerary plus a trailing line naming any early termination; steps_out
 * the number of completed bounces; term_out one of 0 completed, 1 corner,
 * 2 tangency, 3 stall. svg_out (nullable) gets a picture of the orbit. */
billiard_status billiard_simulate(const billiard_polygon* p, const char* side, double s,
                                  double theta, int steps, char** text_out, int* steps_out,
                                  int* term_out, char** svg_out);

/* Cylinder spectrum through code length `depth`. A search stopped by the
 * node budget still yields a spectrum, flagged partial. */
billiard_status billiard_spectrum_compute(const billiard_polygon* p, int depth,
                                          unsigned long long budget, billiard_spectrum** out);
int billiard_spectrum_count(const billiard_spectrum* s);
int billiard_spectrum_partial(const billiard_spectrum* s);
billiard_status billiard_spectrum_serialize(const billiard_spectrum* s, char** out);
void billiard_spectrum_free(billiard_spectrum* s);

/* Spectrum comparison at depth. offset >= 0 fixes the relabeling of q;
 * offset -1 searches all of them and keeps the most favorable. verdict_out:
 * 0 equal to depth, 1 differ, 2 inconclusive (partial search). report_out
 * gets the full text report. */
billiard_status billiard_compare(const billiard_polygon* p, const billiard_polygon* q, int depth,
                                 int offset, unsigned long long budget, int degrees,
                                 int* verdict_out, char** report_out);

/* Unfolds a code ("1,3" or labels "l,r,t,l,r,b"): report_out describes the
 * terminal isometry and, when one exists, the cylinder family. svg_out
 * (nullable) gets the corridor picture. Malformed codes give
 * BILLIARD_ERR_BAD_CODE; for a repeated adjacent symbol the error message
 * names the repeat. */
billiard_status billiard_unfold(const billiard_polygon* p, const char* code, char** report_out,
                                char** svg_out);

/* Corner-to-corner connections using at most max_depth table copies, one
 * text line each. */
billiard_status billiard_saddle(const billiard_polygon* p, int max_depth, int degrees,
                                char** out);

#ifdef __cplusplus
}
#endif

#endif /* BILLIARD_H */
