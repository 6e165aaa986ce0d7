#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "billiard.h"

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

using PolyPtr = std::unique_ptr<billiard_polygon, decltype(&billiard_polygon_free)>;
using StrPtr = std::unique_ptr<char, decltype(&billiard_string_free)>;

// Exit codes: 0 ok/equal, 1 spectra differ, 2 parse or argument trouble,
// 3 invalid polygon, 4 corner hit, 5 budget exhausted, 6 side-count
// mismatch, 7 repeated code symbol.
int status_exit(billiard_status st) {
  switch (st) {
    case BILLIARD_OK:
      return 0;
    case BILLIARD_ERR_INVALID_POLYGON:
      return 3;
    case BILLIARD_ERR_CORNER_HIT:
      return 4;
    case BILLIARD_ERR_BUDGET_EXCEEDED:
      return 5;
    case BILLIARD_ERR_SIDE_COUNT_MISMATCH:
      return 6;
    case BILLIARD_ERR_BAD_CODE:
      return std::strstr(billiard_last_error(), "repeat") ? 7 : 2;
    default:
      return 2;
  }
}

int complain(billiard_status st) {
  std::fprintf(stderr, "error: %s\n", billiard_last_error());
  return status_exit(st);
}

int load_polygon(const std::string& path, double tol, PolyPtr& out) {
  billiard_polygon* raw = nullptr;
  const billiard_status st = billiard_polygon_from_file(path.c_str(), tol, &raw);
  if (st != BILLIARD_OK) return complain(st);
  out.reset(raw);
  return 0;
}

int write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polygonal billiard symbolic dynamics"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  double tol = 0.0;
  unsigned long long budget = 0;
  unsigned long long seed = 0;
  bool radians = false;
  app.add_option("--tol", tol, "geometric tolerance override");
  app.add_option("--budget", budget, "search node budget (0 = default)");
  app.add_option("--seed", seed, "seed for sampling helpers");
  app.add_flag("--radians", radians, "angles in radians instead of degrees");

  std::string file, file_q, side, code, out_path, svg_path, labeling = "auto";
  double s = 0.5, theta = 0.0;
  int steps = 100, depth = 0;

  CLI::App* validate = app.add_subcommand("validate", "check a polygon document");
  validate->add_option("file", file, "polygon document")->required();

  CLI::App* simulate = app.add_subcommand("simulate", "iterate the billiard map");
  simulate->add_option("file", file, "polygon document")->required();
  simulate->add_option("--side", side, "starting side, by label or number")->required();
  simulate->add_option("--s", s, "position along the side in (0,1)");
  simulate->add_option("--theta", theta, "launch angle from the inward normal")->required();
  simulate->add_option("--steps", steps, "number of bounces");
  simulate->add_option("--svg", svg_path, "write an orbit picture");

  CLI::App* spectrum = app.add_subcommand("spectrum", "enumerate cylinder families");
  spectrum->add_option("file", file, "polygon document")->required();
  spectrum->add_option("--depth", depth, "maximum code length (even)")->required();
  spectrum->add_option("--out", out_path, "spectrum file (default: stdout)");

  CLI::App* compare = app.add_subcommand("compare", "compare two spectra");
  compare->add_option("fileP", file, "first polygon document")->required();
  compare->add_option("fileQ", file_q, "second polygon document")->required();
  compare->add_option("--depth", depth, "maximum code length (even)")->required();
  compare->add_option("--labeling", labeling, "auto or a fixed relabeling offset");

  CLI::App* unfold = app.add_subcommand("unfold", "unfold a code into its corridor");
  unfold->add_option("file", file, "polygon document")->required();
  unfold->add_option("code", code, "comma separated side symbols")->required();
  unfold->add_option("--svg", svg_path, "write the corridor picture");

  CLI::App* saddle = app.add_subcommand("saddle", "list corner-to-corner connections");
  saddle->add_option("file", file, "polygon document")->required();
  saddle->add_option("--depth", depth, "maximum table copies")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const int degrees = radians ? 0 : 1;
  PolyPtr poly(nullptr, &billiard_polygon_free);
  if (int rc = load_polygon(file, tol, poly)) return rc;

  if (validate->parsed()) {
    char* text = nullptr;
    const billiard_status st = billiard_polygon_describe(poly.get(), degrees, &text);
    if (st != BILLIARD_OK) return complain(st);
    StrPtr guard(text, &billiard_string_free);
    std::fputs(text, stdout);
    return 0;
  }

  if (simulate->parsed()) {
    char* text = nullptr;
    char* svg = nullptr;
    int done = 0, term = 0;
    const billiard_status st =
        billiard_simulate(poly.get(), side.c_str(), s, radians ? theta : theta * kDegToRad,
                          steps, &text, &done, &term, svg_path.empty() ? nullptr : &svg);
    if (st != BILLIARD_OK) return complain(st);
    StrPtr tguard(text, &billiard_string_free), sguard(svg, &billiard_string_free);
    std::fputs(text, stdout);
    if (svg)
      if (int rc = write_file(svg_path, svg)) return rc;
    return done == 0 && term == 1 ? 4 : 0;
  }

  if (spectrum->parsed()) {
    billiard_spectrum* raw = nullptr;
    billiard_status st = billiard_spectrum_compute(poly.get(), depth, budget, &raw);
    if (st != BILLIARD_OK) return complain(st);
    std::unique_ptr<billiard_spectrum, decltype(&billiard_spectrum_free)> spec(
        raw, &billiard_spectrum_free);
    char* text = nullptr;
    st = billiard_spectrum_serialize(spec.get(), &text);
    if (st != BILLIARD_OK) return complain(st);
    StrPtr guard(text, &billiard_string_free);
    if (out_path.empty()) {
      std::fputs(text, stdout);
    } else {
      if (int rc = write_file(out_path, text)) return rc;
      std::printf("count=%d%s\n", billiard_spectrum_count(spec.get()),
                  billiard_spectrum_partial(spec.get()) ? " PARTIAL" : "");
    }
    return billiard_spectrum_partial(spec.get()) ? 5 : 0;
  }

  if (compare->parsed()) {
    PolyPtr poly_q(nullptr, &billiard_polygon_free);
    if (int rc = load_polygon(file_q, tol, poly_q)) return rc;
    int offset = -1;
    if (labeling != "auto") {
      try {
        offset = std::stoi(labeling);
      } catch (...) {
        std::fprintf(stderr, "error: --labeling wants auto or an integer\n");
        return 2;
      }
    }
    int verdict = 0;
    char* text = nullptr;
    const billiard_status st = billiard_compare(poly.get(), poly_q.get(), depth, offset, budget,
                                                degrees, &verdict, &text);
    if (st != BILLIARD_OK) return complain(st);
    StrPtr guard(text, &billiard_string_free);
    std::fputs(text, stdout);
    return verdict == 0 ? 0 : verdict == 1 ? 1 : 5;
  }

  if (unfold->parsed()) {
    char* text = nullptr;
    char* svg = nullptr;
    const billiard_status st = billiard_unfold(poly.get(), code.c_str(), &text,
                                               svg_path.empty() ? nullptr : &svg);
    if (st != BILLIARD_OK) return complain(st);
    StrPtr tguard(text, &billiard_string_free), sguard(svg, &billiard_string_free);
    std::fputs(text, stdout);
    if (svg)
      if (int rc = write_file(svg_path, svg)) return rc;
    return 0;
  }

  if (saddle->parsed()) {
    char* text = nullptr;
    const billiard_status st = billiard_saddle(poly.get(), depth, degrees, &text);
    if (st != BILLIARD_OK) return complain(st);
    StrPtr guard(text, &billiard_string_free);
    std::fputs(text, stdout);
    return 0;
  }

  return 2;
}
