#include "billiard.h"

#include <cstring>
#include <string>

#include "doctest.h"

namespace {

const char* kSquare = "name: square\nvertices: 0 0 1 0 1 1 0 1\n";
const char* kLTable =
    "angles: 1/2 1/2 1/2 3/2 1/2 1/2\n"
    "lengths: 5 1 2 2 3 3\n"
    "labels: b r t m u l\n";
const char* kQuad =
    "vertices: 0 0 0.98877107794 -0.14943813247 2.3 0.25 0.79101686235 0.11955050598\n";

struct PolyHandle {
  billiard_polygon* p = nullptr;
  explicit PolyHandle(const char* text) { REQUIRE(billiard_polygon_from_text(text, 0, &p) == BILLIARD_OK); }
  ~PolyHandle() { billiard_polygon_free(p); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  billiard_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version string is present") {
  CHECK(std::string(billiard_version()).find("billiards") != std::string::npos);
}

TEST_CASE("polygon construction and failure statuses") {
  billiard_polygon* p = nullptr;
  CHECK(billiard_polygon_from_text(kSquare, 0, &p) == BILLIARD_OK);
  CHECK(billiard_polygon_sides(p) == 4);
  billiard_polygon_free(p);

  p = nullptr;
  CHECK(billiard_polygon_from_text("junk junk\n", 0, &p) == BILLIARD_ERR_PARSE);
  CHECK(p == nullptr);
  CHECK(std::strstr(billiard_last_error(), "line 1") != nullptr);

  // Collinear triple: parses fine, fails polygon validation.
  CHECK(billiard_polygon_from_text("vertices: 0 0 1 0 2 0 1 1\n", 0, &p) ==
        BILLIARD_ERR_INVALID_POLYGON);

  CHECK(billiard_polygon_from_file("/nonexistent/table.poly", 0, &p) == BILLIARD_ERR_IO);

  const double xy[] = {0, 0, 2, 0, 2, 1, 0, 1};
  CHECK(billiard_polygon_from_vertices(xy, 4, 0, &p) == BILLIARD_OK);
  CHECK(billiard_polygon_sides(p) == 4);
  billiard_polygon_free(p);

  CHECK(billiard_polygon_from_text(nullptr, 0, &p) == BILLIARD_ERR_BAD_ARGUMENT);
  CHECK(billiard_polygon_from_text(kSquare, 0, nullptr) == BILLIARD_ERR_BAD_ARGUMENT);
}

TEST_CASE("describe and rationality") {
  PolyHandle sq(kSquare);
  char* text = nullptr;
  REQUIRE(billiard_polygon_describe(sq.p, 1, &text) == BILLIARD_OK);
  const auto s = take(text);
  CHECK(s.find("k=4") != std::string::npos);
  CHECK(s.find("N=2") != std::string::npos);

  long long n = 0;
  CHECK(billiard_polygon_rationality(sq.p, &n) == BILLIARD_OK);
  CHECK(n == 2);

  PolyHandle quad(kQuad);
  CHECK(billiard_polygon_rationality(quad.p, &n) == BILLIARD_ERR_NOT_RATIONAL);
}

TEST_CASE("simulation reports itinerary and termination") {
  PolyHandle sq(kSquare);
  char* text = nullptr;
  int done = 0, term = -1;
  REQUIRE(billiard_simulate(sq.p, "1", 0.3, 0.0, 6, &text, &done, &term, nullptr) == BILLIARD_OK);
  const auto s = take(text);
  CHECK(s.rfind("1,3,1,3,1,3,1", 0) == 0);
  CHECK(done == 6);
  CHECK(term == 0);

  // Aimed straight at the corner: dies immediately.
  double theta = 0.46364760900080609;  // atan(1/2): from (0.5, 0) into vertex (1, 1)
  REQUIRE(billiard_simulate(sq.p, "1", 0.5, theta, 10, &text, &done, &term, nullptr) ==
          BILLIARD_OK);
  take(text);
  CHECK(term == 1);
  CHECK(done < 10);

  CHECK(billiard_simulate(sq.p, "9", 0.5, 0.0, 5, &text, &done, &term, nullptr) ==
        BILLIARD_ERR_BAD_ARGUMENT);
  CHECK(billiard_simulate(sq.p, "1", 1.5, 0.0, 5, &text, &done, &term, nullptr) ==
        BILLIARD_ERR_BAD_ARGUMENT);

  // Labels address sides on labeled tables.
  PolyHandle lt(kLTable);
  REQUIRE(billiard_simulate(lt.p, "b", 0.8, -1.4710805, 6, &text, &done, &term, nullptr) ==
          BILLIARD_OK);
  CHECK(take(text).rfind("b,l,r,t,l,r,b", 0) == 0);
}

TEST_CASE("spectrum lifecycle over the C boundary") {
  PolyHandle sq(kSquare);
  billiard_spectrum* spec = nullptr;
  REQUIRE(billiard_spectrum_compute(sq.p, 4, 0, &spec) == BILLIARD_OK);
  CHECK(billiard_spectrum_count(spec) == 6);
  CHECK(billiard_spectrum_partial(spec) == 0);
  char* text = nullptr;
  REQUIRE(billiard_spectrum_serialize(spec, &text) == BILLIARD_OK);
  const auto s = take(text);
  CHECK(s.find("# billiard spectrum v1") == 0);
  CHECK(s.find("length=4 dir=5.49778714378 width=0.17677669494 1,2,3,4") != std::string::npos);
  billiard_spectrum_free(spec);

  spec = nullptr;
  REQUIRE(billiard_spectrum_compute(sq.p, 6, 10, &spec) == BILLIARD_OK);
  CHECK(billiard_spectrum_partial(spec) == 1);
  billiard_spectrum_free(spec);

  CHECK(billiard_spectrum_compute(sq.p, 3, 0, &spec) == BILLIARD_ERR_BAD_ARGUMENT);
}

TEST_CASE("comparison verdicts and side mismatch") {
  PolyHandle sq(kSquare);
  PolyHandle quad(kQuad);
  char* report = nullptr;
  int verdict = -1;

  REQUIRE(billiard_compare(sq.p, sq.p, 4, 0, 0, 1, &verdict, &report) == BILLIARD_OK);
  CHECK(verdict == 0);
  CHECK(take(report).find("equal_to_depth") != std::string::npos);

  REQUIRE(billiard_compare(sq.p, quad.p, 6, -1, 0, 1, &verdict, &report) == BILLIARD_OK);
  CHECK(verdict == 1);
  const auto rep = take(report);
  CHECK(rep.find("differ") != std::string::npos);
  CHECK(rep.find("witness P:") != std::string::npos);

  const char* tri = "vertices: 0 0 1 0 0.5 0.8\n";
  billiard_polygon* t = nullptr;
  REQUIRE(billiard_polygon_from_text(tri, 0, &t) == BILLIARD_OK);
  CHECK(billiard_compare(sq.p, t, 4, 0, 0, 1, &verdict, &report) ==
        BILLIARD_ERR_SIDE_COUNT_MISMATCH);
  CHECK(std::strstr(billiard_last_error(), "side count") != nullptr);
  billiard_polygon_free(t);
}

TEST_CASE("unfolding a code over the C boundary") {
  PolyHandle lt(kLTable);
  char* report = nullptr;
  char* svg = nullptr;
  REQUIRE(billiard_unfold(lt.p, "l,r,t,l,r,b", &report, &svg) == BILLIARD_OK);
  const auto rep = take(report);
  CHECK(rep.find("translation") != std::string::npos);
  CHECK(rep.find("base=b") != std::string::npos);
  const auto pic = take(svg);
  CHECK(pic.find("<svg") != std::string::npos);

  CHECK(billiard_unfold(lt.p, "b,b", &report, nullptr) == BILLIARD_ERR_BAD_CODE);
  CHECK(std::strstr(billiard_last_error(), "repeat") != nullptr);
  CHECK(billiard_unfold(lt.p, "b,zz", &report, nullptr) == BILLIARD_ERR_BAD_CODE);
}

TEST_CASE("saddle connections over the C boundary") {
  PolyHandle sq(kSquare);
  char* text = nullptr;
  REQUIRE(billiard_saddle(sq.p, 2, 1, &text) == BILLIARD_OK);
  const auto s = take(text);
  CHECK(s.find("start=0 end=2 code=- dir=45 length=1.41421356237") != std::string::npos);
  CHECK(s.find("dir=26.5650511771") != std::string::npos);
}
