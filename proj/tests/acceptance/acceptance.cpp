// Acceptance run: one PASS/FAIL line per criterion with its pinned time limit.
// Exits non-zero if any criterion fails.

#include "fano/polygon.hpp"
#include "fano/polygon_io.hpp"
#include "fano/theorems.hpp"
#include "fano_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace fano;

namespace {

const std::string kFixtures = FANO_FIXTURE_DIR;
const std::string kPropertyBinary = FANO_PROPERTY_BINARY;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

Outcome hexagon_golden() {
  Outcome o;
  auto r = cli({"analyze", kFixtures + "/hexagon.json"});
  o.require(r.code == 0, "analyze exit code " + std::to_string(r.code));
  o.require(contains(r.out, "singularity content: (0, {6 × 1/3(1,1)})"), "content line missing");
  return o;
}

Outcome lsls_golden() {
  Outcome o;
  const std::string expected = "LSLS (23 entries): [1:1:1:-1:1:1:1:-1:1:1:1:-1:1:1:1:-1:1:1:1:-1:1:1:1]";
  for (int start = 0; start < 6; ++start) {
    auto r = cli({"lsls", kFixtures + "/hexagon.json", "--start", std::to_string(start)});
    o.require(r.code == 0, "lsls exit code");
    o.require(contains(r.out, expected), "sequence at start " + std::to_string(start));
    o.require(contains(r.out, "(P,Q) = (0,1)"), "(P,Q) at start " + std::to_string(start));
    o.require(contains(r.out, "closed=true"), "closure verdict");
  }
  return o;
}

Outcome uniqueness() {
  Outcome o;
  auto r = cli({"search", "--r", "3", "--kmax", "12", "--nmax", "4"});
  o.require(r.code == 0, "search exit code");
  o.require(contains(r.out, "polygons=1"), "polygon count");
  auto result = search_basket(3, 12, 4);
  o.require(result.polygons.size() == 1, "search_basket count " + std::to_string(result.polygons.size()));
  if (result.polygons.size() == 1) {
    const auto& f = result.polygons[0];
    auto hex = FanoPolygon::validate(read_polygon_file(kFixtures + "/hexagon.json"));
    o.require(f.polygon == canonical_form(hex), "not equivalent to the hexagon");
    o.require(f.polygon.size() == 6, "k != 6");
    o.require(std::all_of(f.parameters.begin(), f.parameters.end(), [](const BigInt& n) { return n == 0; }), "n_i != 0");
  }
  return o;
}

Outcome thm18_odd() {
  Outcome o;
  for (int r = 5; r <= 25; r += 2) {
    auto rep = verify_thm18(r, static_cast<std::size_t>(2 * r), 5, {1000, 18, 0});
    std::string tag = "R=" + std::to_string(r) + ": ";
    o.require(rep.modular && rep.modular->samples == 1000, tag + "sample count");
    o.require(rep.modular && rep.modular->mod_r_failures == 0, tag + "mod-R failures");
    o.require(rep.modular && rep.modular->mod_r2_failures == 0, tag + "mod-R^2 failures");
    o.require(rep.words && rep.words->phi_failures == 0, tag + "Phi(a_word) failures");
    o.require(rep.words && rep.words->matrix_failures == 0, tag + "eval_word(a_word) failures");
    o.require(rep.contradiction, tag + "no contradiction certificate");
    o.require(rep.search_empty(), tag + "bounded search not empty");
    o.require(rep.passed() && rep.label() == "proof chain certified", tag + "report verdict");
  }
  return o;
}

Outcome thm18_even() {
  Outcome o;
  for (int r = 6; r <= 12; r += 2) {
    auto rep = verify_thm18(r, 14, 4);
    std::string tag = "R=" + std::to_string(r) + ": ";
    o.require(rep.matrix_search.polygons.empty(), tag + "matrix search found a polygon");
    o.require(rep.broken_line_search && rep.broken_line_search->polygons.empty(), tag + "broken-line search found a polygon");
    o.require(rep.label() == "bounded verification, not proof", tag + "label");
    o.require(rep.flagged == (12 % r == 0), tag + "12 = 0 mod R flag");
  }
  return o;
}

Outcome thm19() {
  Outcome o;
  auto reports = verify_thm19(40, {200, 12});
  // {3} u [5, 40] has 37 values: C(39, 3) unordered triples with repetition.
  o.require(reports.size() == 9139, "triple count " + std::to_string(reports.size()));
  std::size_t mismatches = 0, solutions = 0, unbrute = 0, disagreements = 0, degenerate = 0;
  for (const auto& r : reports) {
    mismatches += r.coefficient_mismatches;
    solutions += r.solutions.size();
    degenerate += r.degenerate ? 1 : 0;
    disagreements += r.brute_force_agrees ? 0 : 1;
    bool small = r.triple[2] <= 12;
    if (small && !r.brute_forced) ++unbrute;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " coefficient mismatches");
  o.require(solutions == 0, std::to_string(solutions) + " solutions");
  o.require(degenerate == 0, std::to_string(degenerate) + " degenerate eliminations");
  o.require(unbrute == 0, "small triples not brute-forced");
  o.require(disagreements == 0, std::to_string(disagreements) + " brute-force disagreements");
  return o;
}

Outcome properties() {
  Outcome o;
  std::string cmd = "\"" + kPropertyBinary + "\" --gtest_brief=1 > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  o.require(status == 0, "property suite exit status " + std::to_string(status));
  return o;
}

Outcome degenerate_inputs() {
  Outcome o;
  struct Case {
    const char* file;
    const char* code;
  };
  const Case cases[] = {{"non_primitive.txt", "non-primitive-vertex"},
                        {"origin_on_boundary.txt", "origin-not-interior"},
                        {"non_convex.txt", "non-convex"},
                        {"too_few.txt", "too-few-vertices"},
                        {"repeated.txt", "repeated-vertex"}};
  std::set<std::string> diagnostics;
  for (const auto& c : cases) {
    auto r = cli({"analyze", kFixtures + "/errors/" + c.file});
    o.require(r.code == 1, std::string(c.file) + " exit code");
    o.require(contains(r.err, c.code), std::string(c.file) + " missing code " + c.code);
    diagnostics.insert(r.err);
  }
  o.require(diagnostics.size() == std::size(cases), "diagnostics not distinct");
  auto malformed = cli({"analyze", kFixtures + "/errors/malformed.txt"});
  o.require(malformed.code == 1 && contains(malformed.err, "malformed.txt:2"), "malformed file diagnostic");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "hexagon singularity content", 1, hexagon_golden},
      {2, "hexagon LSLS golden from every start", 1, lsls_golden},
      {3, "R=3 search finds exactly the hexagon", 300, uniqueness},
      {4, "odd R in [5,25] certified, search empty", 600, thm18_odd},
      {5, "even R in [6,12] bounded searches empty", 600, thm18_even},
      {6, "three-cone baskets to R=40 have no solution", 300, thm19},
      {7, "property suites", 300, properties},
      {8, "validator error fixtures", 5, degenerate_inputs},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_seconds;
    bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  (" << std::fixed
              << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds << " s)";
    if (!o.ok) std::cout << "  " << o.detail;
    if (o.ok && !in_time) std::cout << "  over time limit";
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
