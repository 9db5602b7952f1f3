#include "fano/broken_line.hpp"
#include "fano/contfrac.hpp"
#include "fano/sl2_lift.hpp"
#include "fano/theorems.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

using namespace fano;

namespace {

FanoPolygon hexagon() { return FanoPolygon::validate({{-1, 2}, {1, 1}, {2, -1}, {1, -2}, {-1, -1}, {-2, 1}}); }

std::vector<BigInt> thm19_sequence(const BigInt& r1, const BigInt& r2, const BigInt& r3, const BigInt& m1, const BigInt& m2) {
  return {1, r1 - 2, 1, m1, 1, r2 - 2, 1, m2, 1, r3 - 2, 1};
}

// Every convex lattice polygon with primitive vertices in [-b, b]^2 whose
// edges all span 1/R(1,1) cones: det(u, v) = R and u + v in R Z^2.
// Each polygon is reported once, from its lexicographically least vertex.
std::vector<std::vector<LatticePoint>> box_polygons(std::int64_t r, std::int64_t b, std::size_t kmax) {
  using P = std::pair<std::int64_t, std::int64_t>;
  std::vector<P> pts;
  for (std::int64_t x = -b; x <= b; ++x)
    for (std::int64_t y = -b; y <= b; ++y)
      if (std::gcd(x, y) == 1) pts.emplace_back(x, y);
  auto cross = [](P a, P c) { return a.first * c.second - a.second * c.first; };
  auto sub = [](P a, P c) { return P{a.first - c.first, a.second - c.second}; };
  auto edge = [&](P u, P v) {
    return cross(u, v) == r && (u.first + v.first) % r == 0 && (u.second + v.second) % r == 0;
  };
  std::vector<std::vector<LatticePoint>> out;
  std::vector<P> path;
  std::function<void()> dfs = [&] {
    const P s = path.front(), u = path.back();
    const std::size_t n = path.size();
    if (n >= 3 && edge(u, s) && cross(sub(u, path[n - 2]), sub(s, u)) > 0 && cross(sub(s, u), sub(path[1], s)) > 0) {
      std::vector<LatticePoint> poly;
      for (auto [x, y] : path) poly.emplace_back(x, y);
      out.push_back(std::move(poly));
    }
    if (n >= kmax) return;
    for (const P& v : pts) {
      if (!(s < v) || !edge(u, v)) continue;
      if (n >= 2 && cross(sub(u, path[n - 2]), sub(v, u)) <= 0) continue;
      if (cross(u, s) > 0 && cross(v, s) < 0) continue;
      path.push_back(v);
      dfs();
      path.pop_back();
    }
  };
  for (const P& p : pts) {
    path = {p};
    dfs();
  }
  return out;
}

}  // namespace

TEST(StandardCone, Positions) {
  auto c3 = standard_cone(3);
  EXPECT_EQ(c3.v1, LatticePoint(-1, 3));
  EXPECT_EQ(c3.v2, LatticePoint(-2, 3));
  auto c6 = standard_cone(6);
  EXPECT_EQ(c6.v1, LatticePoint(1, 3));
  EXPECT_EQ(c6.v2, LatticePoint(-1, 3));
  for (int r = 2; r <= 30; ++r) {
    auto c = standard_cone(r);
    EXPECT_EQ(det(c.v1, c.v2), r);
    EXPECT_EQ(cone_from_rays(c.v1, c.v2), normalize_weights(r, 1, 1));
  }
  EXPECT_THROW(standard_cone(1), std::invalid_argument);
}

TEST(FamilyMatrix, Examples) {
  EXPECT_EQ(family_matrix(3, 0), IntMatrix2(-1, -1, 3, 2));
  EXPECT_EQ(family_matrix(3, 1) * LatticePoint(-2, 3), LatticePoint(5, -9));
  EXPECT_EQ(family_matrix(3, 0) * LatticePoint(-2, 3), LatticePoint(-1, 0));
  EXPECT_EQ(family_matrix(5, 0), IntMatrix2(-11, -5, 20, 9));
  EXPECT_THROW(family_matrix(2, 0), std::invalid_argument);
}

TEST(FamilyMatrix, ThreeMatchesPrintedForm) {
  for (int n = -10; n <= 10; ++n) EXPECT_EQ(family_matrix(3, n), IntMatrix2(-6 * n - 1, -2 * n - 1, 9 * n + 3, 3 * n + 2));
  for (int n = -10; n <= 10; ++n) EXPECT_EQ(odd_family_closed_form(3, n), family_matrix(3, n + 1));
}

TEST(FamilyMatrix, MapsTheStandardConeWithDeterminantOne) {
  for (int r = 3; r <= 30; ++r) {
    auto c = standard_cone(r);
    for (int n = -5; n <= 5; ++n) {
      auto m = family_matrix(r, n);
      EXPECT_EQ(m.det(), 1) << r << " " << n;
      EXPECT_EQ(m * c.v1, c.v2) << r << " " << n;
    }
  }
}

TEST(FamilySolve, ThreeReproducesTheFamily) {
  auto f = family_solve({-1, 3}, {-2, 3});
  EXPECT_TRUE(f.invariants_hold());
  EXPECT_EQ(f.order, 3);
  for (int n = -5; n <= 5; ++n) EXPECT_EQ(f.member(n), family_matrix(3, n));
  EXPECT_EQ(f.base, IntMatrix2(-1, -1, 3, 2));
  EXPECT_EQ(f.step, IntMatrix2(-6, -2, 9, 3));
  auto [residue, modulus] = f.lower_right_congruence();
  EXPECT_EQ(modulus, 3);
  EXPECT_EQ(residue, 2);
  EXPECT_EQ(f.third_vertex(0), LatticePoint(-1, 0));
}

TEST(FamilySolve, OddOrdersMatchClosedForm) {
  for (int r = 5; r <= 21; r += 2) {
    auto c = standard_cone(r);
    auto f = family_solve(c.v1, c.v2);
    EXPECT_TRUE(f.invariants_hold());
    for (int n = -3; n <= 3; ++n) {
      auto m = f.member(n);
      EXPECT_EQ(m, odd_family_closed_form(r, n));
      EXPECT_EQ(mod_floor(m.d, r), r - 1);
      EXPECT_EQ(mod_floor(m.d, (r - 1) / 2), (r - 1) / 2 == 1 ? 0 : 1);
    }
  }
}

TEST(FamilySolve, EvenOrdersAreIntegralFamilies) {
  auto f6 = family_solve({1, 3}, {-1, 3});
  EXPECT_TRUE(f6.invariants_hold());
  EXPECT_EQ(f6.base, IntMatrix2(-1, 0, 6, -1));
  EXPECT_EQ(f6.step, IntMatrix2(-3, 1, 9, -3));
  for (int r = 4; r <= 30; r += 2) {
    auto c = standard_cone(r);
    auto f = family_solve(c.v1, c.v2);
    EXPECT_TRUE(f.invariants_hold()) << r;
    EXPECT_EQ(family_matrix(r, 0), f.base);
  }
}

TEST(FamilySolve, ZeroIsTheFirstConvexMember) {
  testgen::Gen gen(301);
  for (int i = 0; i < 200; ++i) {
    auto v1 = gen.primitive_point(12), v2 = gen.primitive_point(12);
    if (det(v1, v2) <= 1) continue;
    auto f = family_solve(v1, v2);
    ASSERT_TRUE(f.invariants_hold());
    EXPECT_LT(orientation_sign(v1, v2, f.third_vertex(0)), 0);
    EXPECT_GE(orientation_sign(v1, v2, f.third_vertex(-1)), 0);
    EXPECT_LT(orientation_sign(v1, v2, f.third_vertex(5)), 0);
  }
  EXPECT_THROW(family_solve({2, 0}, {0, 1}), std::invalid_argument);
  EXPECT_THROW(family_solve({1, 0}, {-1, 0}), std::invalid_argument);
}

TEST(ModObstructions, OddOrdersPass) {
  for (int r = 3; r <= 25; r += 2) {
    auto rep = mod_obstructions(r, 2 * r, 300, 7);
    EXPECT_TRUE(rep.passed()) << r << " " << mod_report_json(rep);
    EXPECT_EQ(rep.samples, 300u);
  }
}

TEST(ModObstructions, ClockwiseProductFormula) {
  // Hand-rolled oracle: lower-left of the clockwise product mod R^2.
  for (int r : {3, 5, 7}) {
    testgen::Gen gen(302 + r);
    for (int i = 0; i < 100; ++i) {
      int k = static_cast<int>(gen.uniform(1, 8));
      IntMatrix2 prod;
      for (int j = 0; j < k; ++j) prod = prod * mat_inverse_unimodular(odd_family_closed_form(r, gen.uniform(-20, 20)));
      BigInt expected = (k % 2 ? -1 : 1) * 4 * k * r;
      EXPECT_EQ(mod_floor(prod.c - expected, r * r), 0);
    }
  }
}

TEST(SearchBasket, ThreeFindsOnlyTheHexagon) {
  auto res = search_basket(3, 12, 4);
  ASSERT_EQ(res.polygons.size(), 1u);
  const auto& found = res.polygons[0];
  EXPECT_EQ(found.polygon.size(), 6u);
  EXPECT_EQ(found.parameters, std::vector<BigInt>(6, BigInt(0)));
  EXPECT_EQ(found.polygon, canonical_form(hexagon()));
  EXPECT_EQ(singularity_content(found.polygon).to_compact_string(), "(0, {6 × 1/3(1,1)})");
}

TEST(SearchBasket, OddOrdersEmpty) {
  EXPECT_TRUE(search_basket(5, 20, 4).polygons.empty());
  EXPECT_TRUE(search_basket(7, 28, 3).polygons.empty());
}

TEST(SearchBasket, AgreesWithBoxEnumeration) {
  auto hexes = box_polygons(3, 6, 14);
  EXPECT_FALSE(hexes.empty());
  for (const auto& vs : hexes) EXPECT_EQ(canonical_form(FanoPolygon::validate(vs)), canonical_form(hexagon()));
  for (int r = 4; r <= 10; ++r) {
    EXPECT_TRUE(box_polygons(r, 6, 14).empty()) << r;
    EXPECT_TRUE(search_basket(r, 14, 4).polygons.empty()) << r;
  }
}

TEST(SearchBasket, SmallerBoundsMissTheHexagon) {
  EXPECT_TRUE(search_basket(3, 5, 4).polygons.empty());
}

TEST(SearchBrokenLines, ThreeFindsTheHexagon) {
  auto res = search_broken_lines(3, 12, 6);
  ASSERT_EQ(res.polygons.size(), 1u);
  EXPECT_EQ(res.polygons[0].polygon, canonical_form(hexagon()));
  EXPECT_EQ(res.polygons[0].parameters, std::vector<BigInt>(5, BigInt(-1)));
}

TEST(VerifyThm18, FiveIsContradicted) {
  auto rep = verify_thm18(5, 10, 5, {200, 18, 0});
  EXPECT_TRUE(rep.odd);
  EXPECT_EQ(rep.final_residue, 2);
  EXPECT_EQ(rep.min_k, 10);
  EXPECT_EQ(rep.phi_slope, -1);
  EXPECT_TRUE(rep.contradiction);
  EXPECT_TRUE(rep.search_empty());
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.label(), "proof chain certified");
}

TEST(VerifyThm18, SevenWithLargeBound) {
  auto rep = verify_thm18(7, 28, 5, {200, 18, 0});
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(rep.matrix_search.polygons.empty());
}

TEST(VerifyThm18, EvenIsBoundedOnly) {
  auto rep6 = verify_thm18(6, 10, 3);
  EXPECT_FALSE(rep6.odd);
  EXPECT_TRUE(rep6.flagged);
  EXPECT_TRUE(rep6.broken_line_search.has_value());
  EXPECT_TRUE(rep6.passed());
  EXPECT_EQ(rep6.label(), "bounded verification, not proof");
  EXPECT_FALSE(verify_thm18(8, 10, 3).flagged);
  EXPECT_THROW(verify_thm18(3, 12, 4), std::invalid_argument);
}

TEST(Thm19, CoefficientsForThrees) {
  EXPECT_EQ(thm19_coefficients(3, 3, 3), (Thm19Coefficients{27, 36, 36, 45, 18, 24, 21, 26}));
  EXPECT_EQ(thm19_oracle_coefficients(3, 3, 3), thm19_coefficients(3, 3, 3));
}

TEST(Thm19, CoefficientsMatchOracle) {
  for (int a : {3, 5, 6, 7, 11})
    for (int b : {3, 5, 8, 13})
      for (int c : {3, 5, 9, 40}) EXPECT_EQ(thm19_coefficients(a, b, c), thm19_oracle_coefficients(a, b, c));
}

TEST(Thm19, CoefficientsMatchNumericEvaluation) {
  testgen::Gen gen(303);
  for (int i = 0; i < 300; ++i) {
    BigInt r1 = gen.uniform(3, 40), r2 = gen.uniform(3, 40), r3 = gen.uniform(3, 40);
    BigInt m1 = gen.uniform(-50, 50), m2 = gen.uniform(-50, 50);
    auto c = thm19_coefficients(r1, r2, r3);
    auto pq = eval_pq(thm19_sequence(r1, r2, r3, m1, m2));
    EXPECT_EQ(c.A * m1 * m2 + c.B * m1 + c.C * m2 + c.D, pq.p);
    EXPECT_EQ(c.E * m1 * m2 + c.F * m1 + c.G * m2 + c.H, pq.q);
  }
}

TEST(Thm19, NoSolutions) {
  for (auto [a, b, c] : {std::tuple{3, 3, 3}, std::tuple{5, 7, 11}, std::tuple{5, 5, 5}}) {
    auto s = solve_thm19(a, b, c);
    EXPECT_TRUE(s.solutions.empty());
    EXPECT_FALSE(s.degenerate);
    EXPECT_TRUE(brute_force_thm19(a, b, c, 60).empty());
  }
}

TEST(Thm19, QuadraticIsTheElimination) {
  auto c = thm19_coefficients(5, 7, 11);
  auto s = solve_thm19(5, 7, 11);
  EXPECT_EQ(s.qa, c.C * c.E - c.A * c.G);
  EXPECT_EQ(s.qb, c.C * c.F + c.D * c.E - c.A * (c.H - 1) - c.B * c.G);
  EXPECT_EQ(s.qc, c.D * c.F - c.B * (c.H - 1));
  EXPECT_EQ(s.discriminant, s.qb * s.qb - 4 * s.qa * s.qc);
}

TEST(Thm19, SolverFindsRootsWhenTheyExist) {
  // Smooth cones (R = 1) admit closing chains; the solver must find exactly
  // what brute force finds.
  for (int c = 1; c <= 6; ++c) {
    auto s = solve_thm19(1, 1, c);
    auto bf = brute_force_thm19(1, 1, c, 50);
    ASSERT_EQ(s.solutions, bf) << c;
    ASSERT_EQ(s.solutions.size(), 1u);
    EXPECT_EQ(s.solutions[0], (Thm19Solution{-c, -1}));
    EXPECT_TRUE(is_zero_over_one(thm19_sequence(1, 1, c, -c, -1)));
  }
}

TEST(VerifyThm19, SmallRangeAllPassAndIsDeterministic) {
  auto a = verify_thm19(12, {100, 12});
  auto b = verify_thm19(12, {100, 12});
  ASSERT_EQ(a.size(), b.size());
  // {3} u [5, 12] has 9 values; unordered triples with repetition: C(11, 3).
  EXPECT_EQ(a.size(), 165u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].triple, b[i].triple);
    EXPECT_TRUE(a[i].passed());
    EXPECT_TRUE(a[i].brute_forced);
  }
}

TEST(Reports, JsonParsesWithSchemaVersion) {
  using nlohmann::json;
  auto t18 = json::parse(thm18_report_json({verify_thm18(5, 10, 3, {50, 1, 0}), verify_thm18(6, 8, 2)}));
  EXPECT_EQ(t18["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(t18["records"].size(), 2u);
  EXPECT_EQ(t18["records"][1]["label"], "bounded verification, not proof");

  auto t19 = json::parse(thm19_report_json(verify_thm19(6, {20, 6}), 6, {20, 6}));
  EXPECT_EQ(t19["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(t19["solutions"], 0);

  auto s = json::parse(search_report_json(search_basket(3, 12, 4)));
  EXPECT_EQ(s["polygons"].size(), 1u);
  EXPECT_EQ(s["polygons"][0]["k"], 6);

  EXPECT_NE(thm18_summary_table({verify_thm18(5, 10, 3, {50, 1, 0})}).find("PASS"), std::string::npos);
}
