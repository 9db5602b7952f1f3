#include "fano/polygon.hpp"
#include "fano/polygon_io.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>

using namespace fano;

namespace {

const std::string kFixtures = FANO_FIXTURE_DIR;

FanoPolygon hexagon() { return FanoPolygon::validate({{-1, 2}, {1, 1}, {2, -1}, {1, -2}, {-1, -1}, {-2, 1}}); }
FanoPolygon p2() { return FanoPolygon::validate({{0, 1}, {1, 0}, {-1, -1}}); }
FanoPolygon square() { return FanoPolygon::validate({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}); }

PolygonErrorCode error_of(std::vector<LatticePoint> pts) {
  try {
    FanoPolygon::validate(std::move(pts));
  } catch (const PolygonError& e) {
    return e.code();
  }
  ADD_FAILURE() << "polygon unexpectedly valid";
  return PolygonErrorCode::TooFewVertices;
}

std::string message_of(const std::string& fixture) {
  try {
    FanoPolygon::validate(read_polygon_file(kFixtures + "/errors/" + fixture));
  } catch (const PolygonError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_EQ(p2().size(), 3u);
  EXPECT_EQ(hexagon().size(), 6u);
  EXPECT_EQ(error_of({{0, 1}, {0, 2}, {1, 0}, {-1, -1}}), PolygonErrorCode::NonPrimitiveVertex);
}

TEST(Validate, StoresAnticlockwiseFromFirstVertex) {
  auto h = hexagon();
  EXPECT_EQ(h.vertex(0), LatticePoint(-1, 2));
  EXPECT_EQ(h.vertex(1), LatticePoint(-2, 1));
  for (std::size_t i = 0; i < h.size(); ++i) EXPECT_GT(det(h.vertex(i), h.vertex(i + 1)), 0);
}

TEST(Validate, EveryErrorCode) {
  EXPECT_EQ(error_of({{1, 0}, {0, 1}}), PolygonErrorCode::TooFewVertices);
  EXPECT_EQ(error_of({{1, 0}, {0, 1}, {-1, -1}, {0, 1}}), PolygonErrorCode::RepeatedVertex);
  EXPECT_EQ(error_of({{2, 2}, {-1, 1}, {-1, -1}, {1, -1}}), PolygonErrorCode::NonPrimitiveVertex);
  EXPECT_EQ(error_of({{2, 1}, {-1, 2}, {-2, -1}, {1, -2}, {1, 0}}), PolygonErrorCode::NonConvex);
  EXPECT_EQ(error_of({{1, 0}, {0, 1}, {-1, 0}}), PolygonErrorCode::OriginNotInterior);
  EXPECT_EQ(error_of({{1, 0}, {2, 1}, {1, 1}}), PolygonErrorCode::OriginNotInterior);
  EXPECT_EQ(error_of({{1, 0}, {0, 1}, {-1, -1}, {1, 0}}), PolygonErrorCode::RepeatedVertex);
  EXPECT_EQ(error_of({{1, 0}, {1, 1}, {1, -1}}), PolygonErrorCode::NonConvex);
}

TEST(Validate, ErrorFixturesHaveDistinctDiagnostics) {
  std::set<std::string> messages;
  for (const char* name : {"non_primitive.txt", "origin_on_boundary.txt", "non_convex.txt", "too_few.txt", "repeated.txt"}) {
    auto m = message_of(name);
    EXPECT_FALSE(m.empty()) << name;
    messages.insert(m);
  }
  EXPECT_EQ(messages.size(), 5u);
}

TEST(EdgeData, Examples) {
  auto e = edge_data(p2());
  auto it = std::find_if(e.begin(), e.end(), [](const EdgeData& d) {
    return (d.from == LatticePoint(0, 1) && d.to == LatticePoint(1, 0)) || (d.from == LatticePoint(1, 0) && d.to == LatticePoint(0, 1));
  });
  ASSERT_NE(it, e.end());
  EXPECT_EQ(it->length, 1);
  EXPECT_EQ(it->height, 1);

  auto h = edge_data(hexagon());
  EXPECT_EQ(h[0].from, LatticePoint(-1, 2));
  EXPECT_EQ(h[0].to, LatticePoint(-2, 1));
  EXPECT_EQ(h[0].length, 1);
  EXPECT_EQ(h[0].height, 3);
  EXPECT_EQ(det(h[0].from, h[0].to), 3);

  auto cone6 = edge_data(FanoPolygon::validate({{1, 3}, {-1, 3}, {0, -1}}));
  EXPECT_EQ(cone6[0].length, 2);
  EXPECT_EQ(cone6[0].height, 3);
}

TEST(SingularityContent, Examples) {
  EXPECT_EQ(singularity_content(hexagon()).to_compact_string(), "(0, {6 × 1/3(1,1)})");
  EXPECT_EQ(singularity_content(p2()).to_compact_string(), "(3, ∅)");
  EXPECT_EQ(singularity_content(square()).to_compact_string(), "(8, ∅)");
  EXPECT_EQ(singularity_content(p2()).to_string(), "(3, ∅)");
}

TEST(SingularityContent, SumsConeContents) {
  auto h = hexagon();
  BigInt total = 0;
  for (std::size_t i = 0; i < h.size(); ++i) total += content_of_cone(h.vertex(i), h.vertex(i + 1)).primitive_t_count;
  EXPECT_EQ(singularity_content(h).primitive_t_count, total);
  EXPECT_EQ(singularity_content(square()).primitive_t_count, 8);
}

TEST(TransitionMatrices, DefiningEquationsAndIdentityProduct) {
  for (const auto& poly : {hexagon(), p2(), square()}) {
    auto ms = transition_matrices(poly);
    ASSERT_EQ(ms.size(), poly.size());
    RationalMatrix2 product;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      auto m = ms[i].matrix;
      EXPECT_TRUE(ms[i].integral);
      auto apply = [&](const LatticePoint& p) {
        return std::pair<Rational, Rational>{m.a * Rational(p.x) + m.b * Rational(p.y), m.c * Rational(p.x) + m.d * Rational(p.y)};
      };
      auto [x1, y1] = apply(poly.vertex(i));
      EXPECT_EQ(x1, Rational(poly.vertex(i + 1).x));
      EXPECT_EQ(y1, Rational(poly.vertex(i + 1).y));
      auto [x2, y2] = apply(poly.vertex(i + 1));
      EXPECT_EQ(x2, Rational(poly.vertex(i + 2).x));
      EXPECT_EQ(y2, Rational(poly.vertex(i + 2).y));
      EXPECT_EQ(m.det(), Rational(1));
      product = m * product;
    }
    EXPECT_EQ(product, RationalMatrix2());
  }
}

TEST(TransitionMatrices, HexagonInStandardFrameGivesAZero) {
  // Hexagon moved so that its first edge is the standard 1/3(1,1) cone.
  auto h = FanoPolygon::validate({{-1, 3}, {-2, 3}, {-1, 0}, {1, -3}, {2, -3}, {1, 0}});
  EXPECT_EQ(singularity_content(h).to_compact_string(), "(0, {6 × 1/3(1,1)})");
  auto ms = transition_matrices(h);
  EXPECT_EQ(ms[0].matrix.to_integer(), IntMatrix2(-1, -1, 3, 2));
}

TEST(TransitionMatrices, NonIntegralForMixedCones) {
  auto ms = transition_matrices(FanoPolygon::validate({{1, 3}, {-1, 3}, {0, -1}}));
  bool any_fractional = false;
  for (const auto& m : ms) {
    EXPECT_EQ(m.matrix.is_integral(), m.integral);
    any_fractional = any_fractional || !m.integral;
  }
  EXPECT_TRUE(any_fractional);
}

TEST(CanonicalForm, InvariantUnderUnimodularMaps) {
  EXPECT_EQ(canonical_form(hexagon()), canonical_form(transform(hexagon(), IntMatrix2{2, 1, 1, 1})));
  EXPECT_EQ(canonical_form(square()), canonical_form(transform(square(), IntMatrix2{1, 0, 0, -1})));
  EXPECT_NE(canonical_form(p2()), canonical_form(hexagon()));
  EXPECT_EQ(canonical_form(canonical_form(hexagon())), canonical_form(hexagon()));
}

TEST(CanonicalForm, SeparatesInequivalentPolygons) {
  // Same vertex count, different singularity content.
  auto a = FanoPolygon::validate({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  auto b = square();
  EXPECT_NE(canonical_form(a), canonical_form(b));
}

TEST(SameCyclicBasket, RotationAndReflection) {
  auto a = normalize_weights(3, 1, 1), b = normalize_weights(5, 1, 1), c = normalize_weights(7, 1, 1);
  std::vector<CyclicQuotientSingularity> x{a, b, c}, rot{b, c, a}, refl{c, b, a}, other{a, a, c};
  EXPECT_TRUE(same_cyclic_basket(x, rot));
  EXPECT_TRUE(same_cyclic_basket(x, refl));
  EXPECT_FALSE(same_cyclic_basket(x, other));
}

TEST(PolygonIo, FixturesParse) {
  EXPECT_EQ(FanoPolygon::validate(read_polygon_file(kFixtures + "/hexagon.json")), hexagon());
  EXPECT_EQ(FanoPolygon::validate(read_polygon_file(kFixtures + "/hexagon_clockwise.txt")), hexagon());
  EXPECT_EQ(FanoPolygon::validate(read_polygon_file(kFixtures + "/p2.txt")).size(), 3u);
  EXPECT_EQ(FanoPolygon::validate(read_polygon_file(kFixtures + "/square.json")), square());
}

TEST(PolygonIo, TextAndJsonRoundTrip) {
  auto h = hexagon();
  EXPECT_EQ(FanoPolygon::validate(parse_polygon(polygon_to_text(h))), h);
  EXPECT_EQ(FanoPolygon::validate(parse_polygon(polygon_to_json(h))), h);
}

TEST(PolygonIo, BigCoordinatesAsStrings) {
  auto pts = parse_polygon(R"({"vertices": [["100000000000000000000001", 1], [-1, 0], [0, -1]]})");
  EXPECT_EQ(pts[0].x, BigInt("100000000000000000000001"));
}

TEST(PolygonIo, ParseErrorsCarryLineNumbers) {
  try {
    read_polygon_file(kFixtures + "/errors/malformed.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("malformed.txt:2"), std::string::npos);
  }
  EXPECT_THROW(read_polygon_file(kFixtures + "/errors/malformed.json"), ParseError);
  EXPECT_THROW(read_polygon_file(kFixtures + "/does_not_exist.txt"), ParseError);
  EXPECT_THROW(parse_polygon("1 2 3\n"), ParseError);
  EXPECT_THROW(parse_polygon("{\"vertices\": 3}"), ParseError);
}

TEST(PolygonIo, ReportJsonMentionsContent) {
  auto doc = polygon_report_json(hexagon());
  EXPECT_NE(doc.find("\"orientation\": \"ccw\""), std::string::npos);
  EXPECT_NE(doc.find("1/3(1,1)"), std::string::npos);
}
