#include "fano/polygon.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fano {

std::string_view to_string(PolygonErrorCode code) {
  switch (code) {
    case PolygonErrorCode::TooFewVertices: return "too-few-vertices";
    case PolygonErrorCode::RepeatedVertex: return "repeated-vertex";
    case PolygonErrorCode::NonPrimitiveVertex: return "non-primitive-vertex";
    case PolygonErrorCode::NonConvex: return "non-convex";
    case PolygonErrorCode::OriginNotInterior: return "origin-not-interior";
  }
  return "?";
}

PolygonError::PolygonError(PolygonErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

FanoPolygon FanoPolygon::validate(std::vector<LatticePoint> points) {
  const std::size_t n = points.size();
  if (n < 3) throw PolygonError(PolygonErrorCode::TooFewVertices, std::to_string(n) + " vertices given, need at least 3");

  std::set<LatticePoint> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) throw PolygonError(PolygonErrorCode::RepeatedVertex, "vertex " + p.to_string() + " appears twice");

  for (const auto& p : points)
    if (!is_primitive(p)) throw PolygonError(PolygonErrorCode::NonPrimitiveVertex, "vertex " + p.to_string() + " is not primitive");

  BigInt twice_area = 0;
  for (std::size_t i = 0; i < n; ++i) twice_area += det(points[i], points[(i + 1) % n]);
  if (twice_area == 0) throw PolygonError(PolygonErrorCode::NonConvex, "vertices enclose zero area");
  if (twice_area < 0) std::reverse(points.begin() + 1, points.end());

  // Strict convexity of a simple cycle: every vertex lies strictly to the left
  // of every edge it is not an endpoint of.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = points[i];
    const auto& b = points[(i + 1) % n];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (det(b - a, points[j] - a) <= 0)
        throw PolygonError(PolygonErrorCode::NonConvex,
                           "vertex " + points[j].to_string() + " is not strictly inside edge " + a.to_string() + "-" + b.to_string());
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (det(points[i], points[(i + 1) % n]) <= 0)
      throw PolygonError(PolygonErrorCode::OriginNotInterior,
                         "origin is not strictly inside edge " + points[i].to_string() + "-" + points[(i + 1) % n].to_string());
  }
  return FanoPolygon(std::move(points));
}

std::vector<EdgeData> edge_data(const FanoPolygon& polygon) {
  std::vector<EdgeData> out;
  out.reserve(polygon.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& a = polygon.vertex(i);
    const auto& b = polygon.vertex(i + 1);
    BigInt length = integer_length(a, b);
    // Primitive inward normal of the edge line; height is |<a, normal>|.
    LatticePoint normal{(a.y - b.y) / length, (b.x - a.x) / length};
    BigInt height = abs(a.x * normal.x + a.y * normal.y);
    out.push_back({a, b, length, height});
  }
  return out;
}

namespace {

std::string join_basket(std::span<const CyclicQuotientSingularity> basket) {
  std::string out;
  for (std::size_t i = 0; i < basket.size(); ++i) {
    if (i) out += ", ";
    out += basket[i].to_string();
  }
  return out;
}

}  // namespace

std::string SingularityContent::to_string() const {
  if (basket.empty()) return "(" + primitive_t_count.str() + ", ∅)";
  return "(" + primitive_t_count.str() + ", {" + join_basket(basket) + "})";
}

std::string SingularityContent::to_compact_string() const {
  if (basket.empty()) return "(" + primitive_t_count.str() + ", ∅)";
  std::map<CyclicQuotientSingularity, int> counts;
  for (const auto& s : basket) ++counts[s];
  std::string out = "(" + primitive_t_count.str() + ", {";
  bool first = true;
  for (const auto& [s, count] : counts) {
    if (!first) out += ", ";
    first = false;
    if (count > 1) out += std::to_string(count) + " × ";
    out += s.to_string();
  }
  return out + "})";
}

SingularityContent singularity_content(const FanoPolygon& polygon) {
  SingularityContent sc;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    ConeContent cone = content_of_cone(polygon.vertex(i), polygon.vertex(i + 1));
    sc.primitive_t_count += cone.primitive_t_count;
    if (cone.residue) sc.basket.push_back(*cone.residue);
  }
  return sc;
}

std::vector<TransitionMatrix> transition_matrices(const FanoPolygon& polygon) {
  std::vector<TransitionMatrix> out;
  out.reserve(polygon.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    RationalMatrix2 source(IntMatrix2::from_columns(polygon.vertex(i), polygon.vertex(i + 1)));
    RationalMatrix2 target(IntMatrix2::from_columns(polygon.vertex(i + 1), polygon.vertex(i + 2)));
    RationalMatrix2 m = target * source.inverse();
    bool integral = m.is_integral();
    out.push_back({std::move(m), integral});
  }
  return out;
}

FanoPolygon transform(const FanoPolygon& polygon, const IntMatrix2& map) {
  if (!map.is_unimodular()) throw std::domain_error("transform: map is not unimodular");
  std::vector<LatticePoint> image;
  image.reserve(polygon.size());
  for (const auto& v : polygon.vertices()) image.push_back(map * v);
  return FanoPolygon::validate(std::move(image));
}

namespace {

// Vertex list of an anticlockwise polygon in the frame where (v_i, v_{i+1}) is
// Hermite-reduced: v_i -> (1, 0), v_{i+1} -> (a, b) with 0 <= a < b.
std::vector<LatticePoint> framed_vertices(std::span<const LatticePoint> cycle, std::size_t i) {
  const std::size_t n = cycle.size();
  IntMatrix2 frame = frame_to_first_axis(cycle[i]);
  LatticePoint next = frame * cycle[(i + 1) % n];
  // Shear fixing (1,0): (x, y) -> (x + t y, y); next.y = det(v_i, v_{i+1}) > 0.
  BigInt t = -floor_div(next.x, next.y);
  frame = IntMatrix2{1, t, 0, 1} * frame;
  std::vector<LatticePoint> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.push_back(frame * cycle[(i + j) % n]);
  return out;
}

}  // namespace

FanoPolygon canonical_form(const FanoPolygon& polygon) {
  std::vector<LatticePoint> forward(polygon.vertices().begin(), polygon.vertices().end());
  // Mirror image under (x, y) -> (x, -y), re-oriented anticlockwise.
  std::vector<LatticePoint> mirrored;
  mirrored.reserve(forward.size());
  for (const auto& v : forward) mirrored.push_back({v.x, -v.y});
  std::reverse(mirrored.begin(), mirrored.end());

  std::vector<LatticePoint> best;
  for (const auto* cycle : {&forward, &mirrored}) {
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      auto candidate = framed_vertices(*cycle, i);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return FanoPolygon::validate(std::move(best));
}

bool same_cyclic_basket(std::span<const CyclicQuotientSingularity> a, std::span<const CyclicQuotientSingularity> b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (int direction : {1, -1}) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      bool match = true;
      for (std::size_t i = 0; i < n && match; ++i) {
        std::size_t j = direction == 1 ? (shift + i) % n : (shift + n - i) % n;
        match = a[i] == b[j];
      }
      if (match) return true;
    }
  }
  return false;
}

}  // namespace fano
