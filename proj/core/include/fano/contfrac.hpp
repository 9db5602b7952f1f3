#pragma once

// Finite continued fractions [a0 : a1 : ... : ak] evaluated as exact numerator /
// denominator pairs through the P_k, Q_k recursion (no division), plus a
// symbolic variant that is bilinear in two unknowns m1, m2.

#include "fano/lattice.hpp"

#include <span>
#include <utility>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fano {

struct PQPair {
  BigInt p;
  BigInt q;
  friend bool operator==(const PQPair&, const PQPair&) = default;
};

// P_{-2} = 0, P_{-1} = 1, Q_{-2} = 1, Q_{-1} = 0;
// P_k = a_k P_{k-1} + P_{k-2}, Q_k = a_k Q_{k-1} + Q_{k-2}.
// Throws std::invalid_argument on an empty sequence.
PQPair eval_pq(std::span<const BigInt> seq);

// Same value from the product of [[a_i, 1], [1, 0]]: the first column is (P, Q).
PQPair eval_pq_matrix(std::span<const BigInt> seq);

// Fixed-width recursion for brute-force loops where the bounds are known to fit.
template <class Int>
std::pair<Int, Int> eval_pq_fixed(std::span<const Int> seq) {
  Int p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (const Int& a : seq) {
    Int p = a * p1 + p2;
    Int q = a * q1 + q2;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
  }
  return {p1, q1};
}

bool is_zero_over_one(std::span<const BigInt> seq);

// c0 + c1*m1 + c2*m2 + c12*m1*m2.
struct BilinearPoly {
  BigInt c0, c1, c2, c12;

  friend bool operator==(const BilinearPoly&, const BilinearPoly&) = default;
  BilinearPoly operator+(const BilinearPoly& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2, c12 + o.c12}; }
  friend BilinearPoly operator*(const BigInt& s, const BilinearPoly& p) { return {s * p.c0, s * p.c1, s * p.c2, s * p.c12}; }
  // Throws std::domain_error("nonlinear continued fraction") if the product
  // would have degree 2 in the unknown.
  BilinearPoly times_m1() const;
  BilinearPoly times_m2() const;

  BigInt evaluate(const BigInt& m1, const BigInt& m2) const { return c0 + c1 * m1 + c2 * m2 + c12 * m1 * m2; }
  std::string to_string() const;
};

enum class Unknown { M1, M2 };
using CFTerm = std::variant<BigInt, Unknown>;

struct BilinearPQ {
  BilinearPoly p;
  BilinearPoly q;
};

// Each unknown may occur at most once; otherwise throws std::domain_error
// ("nonlinear continued fraction"). Throws std::invalid_argument when empty.
BilinearPQ eval_pq_bilinear(std::span<const CFTerm> seq);

// "[a0:a1:...:ak]"
std::string render_sequence(std::span<const BigInt> seq);
// Inverse of render_sequence; whitespace allowed. Throws std::invalid_argument.
std::vector<BigInt> parse_sequence(std::string_view text);

}  // namespace fano
