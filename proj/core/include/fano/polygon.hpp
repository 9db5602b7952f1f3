#pragma once

// Fano polygons: validated anticlockwise vertex cycles with their edge data,
// singularity content, transition matrices and a GL2(Z) canonical form.

#include "fano/lattice.hpp"
#include "fano/singularity.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fano {

enum class PolygonErrorCode {
  TooFewVertices,
  RepeatedVertex,
  NonPrimitiveVertex,
  NonConvex,
  OriginNotInterior,
};

std::string_view to_string(PolygonErrorCode code);

class PolygonError : public std::runtime_error {
 public:
  PolygonError(PolygonErrorCode code, const std::string& detail);
  PolygonErrorCode code() const { return code_; }

 private:
  PolygonErrorCode code_;
};

class FanoPolygon {
 public:
  // Accepts either orientation; stores the cycle anticlockwise starting from the
  // first input vertex. Throws PolygonError.
  static FanoPolygon validate(std::vector<LatticePoint> points);

  std::span<const LatticePoint> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // Cyclic access: vertex(i) for any i, taken modulo size().
  const LatticePoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  friend bool operator==(const FanoPolygon&, const FanoPolygon&) = default;

 private:
  explicit FanoPolygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}
  std::vector<LatticePoint> vertices_;
};

struct EdgeData {
  LatticePoint from;
  LatticePoint to;
  BigInt length;
  BigInt height;
};

// One record per edge (v_i, v_{i+1}) in anticlockwise order.
std::vector<EdgeData> edge_data(const FanoPolygon& polygon);

struct SingularityContent {
  BigInt primitive_t_count;
  // Residues in anticlockwise edge order; absent residues omitted.
  std::vector<CyclicQuotientSingularity> basket;

  friend bool operator==(const SingularityContent&, const SingularityContent&) = default;
  // "(nT, {1/3(1,1), ...})", "(3, ∅)" for an empty basket.
  std::string to_string() const;
  // Multiplicity notation, e.g. "(0, {6 × 1/3(1,1)})"; groups equal residues.
  std::string to_compact_string() const;
};

SingularityContent singularity_content(const FanoPolygon& polygon);

struct TransitionMatrix {
  RationalMatrix2 matrix;
  bool integral = false;
};

// M_i with M_i v_i = v_{i+1} and M_i v_{i+1} = v_{i+2}, for i = 0..k-1.
std::vector<TransitionMatrix> transition_matrices(const FanoPolygon& polygon);

// Deterministic representative of the GL2(Z)-orbit of the polygon.
FanoPolygon canonical_form(const FanoPolygon& polygon);

// Image of the polygon under a unimodular map (re-validated, so a det -1 map is
// re-oriented anticlockwise).
FanoPolygon transform(const FanoPolygon& polygon, const IntMatrix2& map);

// Basket comparison up to rotation and reflection of the cyclic order.
bool same_cyclic_basket(std::span<const CyclicQuotientSingularity> a, std::span<const CyclicQuotientSingularity> b);

}  // namespace fano
