#pragma once

// Cyclic quotient surface singularities 1/R(1,q), their T/R classification and
// the residue / singularity-content decomposition of a single cone.

#include "fano/lattice.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace fano {

// A cyclic quotient singularity in normal form 1/R(1,q), 0 <= q < R, with q the
// smaller of the two representatives {q, q^-1 mod R} (swapping the weights
// gives the same singularity). Writing it as 1/(kr)(1, kc-1):
//   k = gcd(1+q, R), r = R/k, and c in [1, r] with k*c = 1+q (mod R).
// R == 1 is the smooth point, stored as 1/1(1,0).
class CyclicQuotientSingularity {
 public:
  // Throws std::invalid_argument unless R >= 1 and gcd(q, R) == 1 (for R > 1).
  static CyclicQuotientSingularity from_order_weight(const BigInt& order, const BigInt& weight);
  static CyclicQuotientSingularity smooth() { return from_order_weight(1, 0); }

  const BigInt& order() const { return order_; }
  const BigInt& weight() const { return weight_; }
  const BigInt& k() const { return k_; }
  const BigInt& r() const { return r_; }
  const BigInt& c() const { return c_; }

  bool is_smooth() const { return order_ == 1; }

  // "1/R(1,q)"
  std::string to_string() const;

  friend bool operator==(const CyclicQuotientSingularity& a, const CyclicQuotientSingularity& b) {
    return a.order_ == b.order_ && a.weight_ == b.weight_;
  }
  friend bool operator<(const CyclicQuotientSingularity& a, const CyclicQuotientSingularity& b) {
    return a.order_ < b.order_ || (a.order_ == b.order_ && a.weight_ < b.weight_);
  }

 private:
  CyclicQuotientSingularity() = default;

  BigInt order_;
  BigInt weight_;
  BigInt k_;
  BigInt r_;
  BigInt c_;
};

enum class SingularityClass {
  Smooth,
  PrimitiveT,  // r == k
  T,           // r | k
  Residual,    // k < r
  Mixed,       // k > r, r does not divide k: n primitive T-cones plus a residue
};

std::string_view to_string(SingularityClass cls);

// Singularity content of a cone: n primitive T-cones plus an optional residue.
struct ConeContent {
  BigInt primitive_t_count;
  std::optional<CyclicQuotientSingularity> residue;

  friend bool operator==(const ConeContent&, const ConeContent&) = default;
};

// Normal form of 1/R(a,b). Throws std::invalid_argument("not a cyclic quotient
// singularity") when gcd(a,R) or gcd(b,R) is not 1.
CyclicQuotientSingularity normalize_weights(const BigInt& order, const BigInt& a, const BigInt& b);

SingularityClass classify(const CyclicQuotientSingularity& s);

// r | k; true for the smooth point as well.
bool is_t_singularity(const CyclicQuotientSingularity& s);

// Algebraic decomposition k = n*r + k0: residue 1/(k0 r)(1, k0 c - 1), absent
// when k0 == 0.
ConeContent residue(const CyclicQuotientSingularity& s);

// Singularity of the cone spanned by two primitive, independent rays.
// Throws std::invalid_argument otherwise.
CyclicQuotientSingularity cone_from_rays(const LatticePoint& rho1, const LatticePoint& rho2);

// Geometric decomposition of the cone over the segment [rho1, rho2]: with
// l = h*n + k0, the n primitive T-cones of length h and the residual sub-cone of
// length k0 adjacent to rho1.
ConeContent content_of_cone(const LatticePoint& rho1, const LatticePoint& rho2);

// Parses "1/R(a,b)" with arbitrary whitespace; throws std::invalid_argument.
CyclicQuotientSingularity parse_singularity(std::string_view text);

}  // namespace fano
