#pragma once

// Exact integer geometry in the plane lattice Z^2.
//
// Everything here works on arbitrary-precision integers: products of
// transition matrices grow geometrically and the verifiers multiply long
// chains of them, so fixed-width arithmetic is never used.

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <utility>

namespace fano {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor division and the matching non-negative remainder (divisor != 0).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& m);

BigInt gcd(const BigInt& a, const BigInt& b);

struct ExtendedGcd {
  BigInt g;  // always >= 0
  BigInt s;
  BigInt t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b);

// Inverse of a modulo m in [0, m). Throws std::domain_error when gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// Exact integer square root: root*root <= n < (root+1)^2, remainder = n - root^2.
struct IntegerSqrt {
  BigInt root;
  BigInt remainder;
  bool is_perfect_square() const { return remainder == 0; }
};
IntegerSqrt integer_sqrt(const BigInt& n);

struct LatticePoint {
  BigInt x;
  BigInt y;

  LatticePoint() = default;
  LatticePoint(BigInt x_, BigInt y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  // Lexicographic on (x, y).
  friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }

  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
  LatticePoint operator-() const { return {-x, -y}; }
  friend LatticePoint operator*(const BigInt& s, const LatticePoint& p) { return {s * p.x, s * p.y}; }

  bool is_origin() const { return x == 0 && y == 0; }
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

// det of the 2x2 matrix with columns u, v.
BigInt det(const LatticePoint& u, const LatticePoint& v);

// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct IntMatrix2 {
  BigInt a{1}, b{0}, c{0}, d{1};

  IntMatrix2() = default;
  IntMatrix2(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static IntMatrix2 identity() { return {}; }
  // Matrix whose columns are u and v.
  static IntMatrix2 from_columns(const LatticePoint& u, const LatticePoint& v) {
    return {u.x, v.x, u.y, v.y};
  }

  BigInt det() const { return a * d - b * c; }
  bool is_unimodular() const;

  IntMatrix2 operator*(const IntMatrix2& o) const;
  LatticePoint operator*(const LatticePoint& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  IntMatrix2 operator+(const IntMatrix2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  friend IntMatrix2 operator*(const BigInt& s, const IntMatrix2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

  // Entry-wise reduction into [0, m).
  IntMatrix2 mod(const BigInt& m) const;

  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m);

IntMatrix2 mat_mul(const IntMatrix2& lhs, const IntMatrix2& rhs);
BigInt mat_det(const IntMatrix2& m);
LatticePoint mat_apply(const IntMatrix2& m, const LatticePoint& p);
// Throws std::domain_error unless det(m) is +1 or -1.
IntMatrix2 mat_inverse_unimodular(const IntMatrix2& m);

// 2x2 matrix over Q; cpp_rational keeps every entry reduced with a positive
// denominator.
struct RationalMatrix2 {
  Rational a{1}, b{0}, c{0}, d{1};

  RationalMatrix2() = default;
  RationalMatrix2(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  explicit RationalMatrix2(const IntMatrix2& m) : a(m.a), b(m.b), c(m.c), d(m.d) {}

  Rational det() const { return a * d - b * c; }
  bool is_integral() const;
  // Throws std::domain_error if some entry is not an integer.
  IntMatrix2 to_integer() const;
  // Throws std::domain_error on a singular matrix.
  RationalMatrix2 inverse() const;

  RationalMatrix2 operator*(const RationalMatrix2& o) const;
  friend bool operator==(const RationalMatrix2&, const RationalMatrix2&) = default;
  std::string to_string() const;
};

// |segment ∩ Z^2| - 1, i.e. gcd(|dx|, |dy|); zero for a degenerate segment.
BigInt integer_length(const LatticePoint& a, const LatticePoint& b);

// Index of the sublattice spanned by b - a and c - a: |det(b - a, c - a)|.
BigInt integer_area(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

// Integer sine of the angle ABC: lArea(ABC) / (l(AB) l(BC)).
// Throws std::invalid_argument("zero-length arm") when a == b or b == c.
Rational integer_sine(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

// Sign of det(a - b, c - b): +1 when the frame (BA, BC) is positively
// oriented, 0 when the points are collinear.
int orientation_sign(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

bool is_primitive(const LatticePoint& v);

// For primitive v, the matrix U in SL2(Z) with U v = (1, 0). Its second row is
// a primitive vector orthogonal to v.
IntMatrix2 frame_to_first_axis(const LatticePoint& v);

int sign(const BigInt& v);

}  // namespace fano
