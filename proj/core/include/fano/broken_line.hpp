#pragma once

// 0-broken lines (every segment at lattice height 1 from the origin), sails of
// two-dimensional cones and their lattice-signed-length-sine (LSLS) sequences.

#include "fano/lattice.hpp"
#include "fano/polygon.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fano {

struct BrokenLine {
  std::vector<LatticePoint> points;
  bool closed = false;

  friend bool operator==(const BrokenLine&, const BrokenLine&) = default;
};

// Lattice height of the line through a and b above the origin: |det(a,b)| / l(ab).
BigInt segment_height(const LatticePoint& a, const LatticePoint& b);

// At least two points, none at the origin, consecutive points distinct and every
// segment at lattice height 1.
bool is_zero_broken(const BrokenLine& line);

// Compact boundary of the sail of cone(rho1, rho2), from rho1 to rho2 in the
// given order. Throws std::invalid_argument for non-primitive or parallel rays.
BrokenLine sail_chain(const LatticePoint& rho1, const LatticePoint& rho2);

// Entries exactly as defined:
//   a_{2i}   = s_i l(A_i A_{i+1}),
//   a_{2i+1} = s_i s_{i+1} sign(A_i A_{i+1} A_{i+2}) lsin(A_i A_{i+1} A_{i+2}),
// with s_i = sign(A_i 0 A_{i+1}). Throws std::invalid_argument unless the line
// is 0-broken; std::logic_error if a sine is not an integer.
std::vector<BigInt> lsls_signed(const BrokenLine& line);

// lsls_signed multiplied by s_0, so the first length is positive. Agrees with
// lsls_signed on anticlockwise chains and is invariant under all of GL2(Z).
std::vector<BigInt> lsls_open(const BrokenLine& line);

// Chain with the given (normalized) LSLS sequence starting at A_0 = (1,0) in
// direction (0,1). Odd-length sequences only; throws std::invalid_argument.
BrokenLine chain_from_lsls(std::span<const BigInt> seq);

// Sails of the polygon's cones glued anticlockwise from vertex `start` back to
// itself.
BrokenLine polygon_broken_line(const FanoPolygon& polygon, std::size_t start = 0);

// LSLS sequence of the polygon's broken line opened at `start` (the angle at the
// start vertex is not part of the sequence).
std::vector<BigInt> lsls_polygon(const FanoPolygon& polygon, std::size_t start = 0);

// True iff the sequence evaluates to exactly (P, Q) = (0, 1) for every start.
bool closure_test(const FanoPolygon& polygon);

}  // namespace fano
