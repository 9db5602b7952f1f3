#pragma once

// Transition-matrix families for 1/R(1,1) cones, the modular and winding-number
// obstructions to closing a chain of such cones, the exhaustive searches, and
// the single-order and three-cone basket verifiers with their reports.

#include "fano/lattice.hpp"
#include "fano/polygon.hpp"

#include <cstddef>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fano {

// ---------------------------------------------------------------------------
// Families

struct StandardCone {
  LatticePoint v1;
  LatticePoint v2;
};

// Anticlockwise 1/R(1,1) cone in standard position, R >= 2:
//   odd R:  v1 = (-(R-1)/2, R), v2 = (-(R+1)/2, R)
//   even R: v1 = (1, R/2),      v2 = (-1, R/2)
StandardCone standard_cone(const BigInt& order);

// {M integral : M v1 = v2, det M = 1} = {base + n step : n in Z}.
struct MatrixFamily {
  IntMatrix2 base;
  IntMatrix2 step;
  BigInt order;  // |det(v1, v2)|
  LatticePoint v1;
  LatticePoint v2;

  IntMatrix2 member(const BigInt& n) const { return base + n * step; }
  // Image of v2 under member(n): the vertex following the cone.
  LatticePoint third_vertex(const BigInt& n) const { return member(n) * v2; }

  // Residue class of the lower-right entry over the family, (residue, modulus).
  std::pair<BigInt, BigInt> lower_right_congruence() const;
  // det(base + n step) == 1 identically in n and base, step both map v1 as
  // required (step v1 = 0).
  bool invariants_hold() const;
};

// Solves the constraints exactly and indexes the family so that n = 0 is the
// most clockwise member whose third vertex makes a strictly convex turn at v2;
// n >= 0 are then exactly the convex choices. Throws std::invalid_argument for
// non-primitive or parallel input.
MatrixFamily family_solve(const LatticePoint& v1, const LatticePoint& v2);

// A_n for the standard cone of order R >= 3. R = 3 gives
// [[-6n-1, -2n-1], [9n+3, 3n+2]]; odd R >= 5 the closed form below; even R the
// solved family. Throws std::invalid_argument for R < 3.
IntMatrix2 family_matrix(const BigInt& order, const BigInt& n);

// [[-n(R+1)R/2 - 2R - 1, -n(R^2-1)/4 - R], [nR^2 + 4R, 2R - 1 + n(R-1)R/2]]
// for odd R >= 3 (at R = 3 this is family_matrix(3, n + 1)).
IntMatrix2 odd_family_closed_form(const BigInt& order, const BigInt& n);

// ---------------------------------------------------------------------------
// Modular obstructions

struct ModObstructionReport {
  BigInt order;
  std::size_t samples = 0;
  std::size_t mod_r_failures = 0;
  std::size_t mod_r2_failures = 0;
  std::size_t anticlockwise_failures = 0;
  std::size_t even_zero_sum_samples = 0;  // samples exercising the "== Id" branch
  std::vector<std::string> witnesses;      // first few failing tuples

  bool passed() const { return mod_r_failures == 0 && mod_r2_failures == 0 && anticlockwise_failures == 0; }
};

// Samples k in [1, kmax] and n_i in [-nrange, nrange] and checks, for the
// clockwise product A_{n_1}^-1 ... A_{n_k}^-1 of odd_family_closed_form:
//   mod R:   odd k never Id; even k Id iff sum n_i = 0 (mod R),
//   mod R^2: lower-left = (-1)^k 4kR,
// and lower-left (-1)^(k+1) 4kR for the anticlockwise product A_{n_1}...A_{n_k}.
ModObstructionReport mod_obstructions(const BigInt& order, std::size_t kmax, std::size_t samples, std::uint64_t seed,
                                      std::int64_t nrange = 50);

// ---------------------------------------------------------------------------
// Searches

struct FoundPolygon {
  FanoPolygon polygon;  // canonical form
  std::vector<BigInt> parameters;  // n_1..n_k along the discovered chain
};

struct SearchResult {
  BigInt order;
  std::size_t kmax = 0;
  std::size_t parameter_bound = 0;
  std::vector<FoundPolygon> polygons;  // sorted by canonical vertex list
  std::uint64_t nodes = 0;
  std::uint64_t closures = 0;  // chains returning to v1 before deduplication
};

// Chains of 1/R(1,1) cones from the standard cone, each step a family member
// with n in [0, nmax], pruned by strict convexity against every earlier edge.
// Accepts chains whose vertex cycle closes with product Id and whose polygon has
// singularity content (0, {k x 1/R(1,1)}), k <= kmax.
SearchResult search_basket(const BigInt& order, std::size_t kmax, std::size_t nmax);

// Same question through broken lines: LSLS sequences
// [1:R-2:1:m_1:1:R-2:1:...:m_{k-1}:1:R-2:1] with m_i in [-mmax, -1],
// reconstructed geometrically with convexity pruning; accepted when the
// sequence evaluates to (0,1) and the vertex cycle is a Fano polygon of the
// required content.
SearchResult search_broken_lines(const BigInt& order, std::size_t kmax, std::size_t mmax);

// ---------------------------------------------------------------------------
// Baskets {k x 1/R(1,1)}

struct WordCheck {
  std::size_t checked = 0;
  std::size_t phi_failures = 0;
  std::size_t matrix_failures = 0;
};

struct Thm18Report {
  BigInt order;
  bool odd = true;
  std::size_t kmax = 0;
  std::size_t nmax = 0;

  // Odd R only.
  std::optional<ModObstructionReport> modular;
  std::optional<WordCheck> words;  // Phi(a_word(R,n)) == -6+R-n, eval == family_matrix
  BigInt min_k;                    // smallest k allowed by parity and R | k
  BigInt phi_slope;                // sum n_i = 12 + phi_slope * k
  BigInt final_residue;            // 12 mod R
  bool contradiction = false;

  SearchResult matrix_search;
  std::optional<SearchResult> broken_line_search;  // even R
  bool flagged = false;  // even R with 12 = 0 (mod R)

  bool search_empty() const;
  bool passed() const;
  std::string label() const;
};

struct Thm18Options {
  std::size_t samples = 1000;
  std::uint64_t seed = 18;
  std::size_t mmax = 0;  // broken-line bound for even R; 0 means 2R
};

// Throws std::invalid_argument for R < 5.
Thm18Report verify_thm18(const BigInt& order, std::size_t kmax, std::size_t nmax, const Thm18Options& options = {});

// ---------------------------------------------------------------------------
// Three-cone baskets {1/R1(1,1), 1/R2(1,1), 1/R3(1,1)}

// P = A m1 m2 + B m1 + C m2 + D and Q = E m1 m2 + F m1 + G m2 + H for the
// sequence [1:R1-2:1:m1:1:R2-2:1:m2:1:R3-2:1].
struct Thm19Coefficients {
  BigInt A, B, C, D, E, F, G, H;
  friend bool operator==(const Thm19Coefficients&, const Thm19Coefficients&) = default;
};

Thm19Coefficients thm19_coefficients(const BigInt& r1, const BigInt& r2, const BigInt& r3);
// Extracted from eval_pq_bilinear.
Thm19Coefficients thm19_oracle_coefficients(const BigInt& r1, const BigInt& r2, const BigInt& r3);

struct Thm19Solution {
  BigInt m1;
  BigInt m2;
  friend bool operator==(const Thm19Solution&, const Thm19Solution&) = default;
  friend bool operator<(const Thm19Solution& a, const Thm19Solution& b) {
    return a.m1 < b.m1 || (a.m1 == b.m1 && a.m2 < b.m2);
  }
};

struct Thm19Solve {
  std::vector<Thm19Solution> solutions;  // m1, m2 < 0 with P = 0, Q = 1
  bool degenerate = false;               // elimination lost information
  // (CE - AG) m2^2 + (CF + DE - A(H-1) - BG) m2 + (DF - B(H-1))
  BigInt qa, qb, qc;
  BigInt discriminant;
  bool perfect_square = false;
};

Thm19Solve solve_thm19(const BigInt& r1, const BigInt& r2, const BigInt& r3);

// Negative solutions in [-window, -1]^2 by direct evaluation.
std::vector<Thm19Solution> brute_force_thm19(const BigInt& r1, const BigInt& r2, const BigInt& r3, std::int64_t window);

struct Thm19Report {
  std::array<BigInt, 3> triple;  // sorted
  Thm19Coefficients coefficients;  // for the sorted ordering
  std::size_t coefficient_mismatches = 0;  // over the six orderings
  std::vector<std::pair<std::array<BigInt, 3>, Thm19Solution>> solutions;
  bool degenerate = false;
  bool brute_forced = false;
  bool brute_force_agrees = true;

  bool passed() const { return coefficient_mismatches == 0 && solutions.empty() && !degenerate && brute_force_agrees; }
};

struct Thm19Options {
  std::int64_t window = 200;
  std::int64_t brute_force_max_order = 12;  // brute force triples with every R_i <= this
};

// Every unordered triple with R_i in {3} u [5, Rmax], each checked in all six
// orderings (the rotations and reflections of a cyclic basket of three).
std::vector<Thm19Report> verify_thm19(std::int64_t rmax, const Thm19Options& options = {});

// ---------------------------------------------------------------------------
// Reports

inline constexpr int kReportSchemaVersion = 1;

std::string thm18_report_json(const std::vector<Thm18Report>& reports, int indent = 2);
std::string thm19_report_json(const std::vector<Thm19Report>& reports, std::int64_t rmax, const Thm19Options& options,
                              int indent = 2);
std::string search_report_json(const SearchResult& result, int indent = 2);
std::string mod_report_json(const ModObstructionReport& report, int indent = 2);

std::string thm18_summary_table(const std::vector<Thm18Report>& reports);
std::string thm19_summary_table(const std::vector<Thm19Report>& reports);
std::string search_summary(const SearchResult& result);

}  // namespace fano
