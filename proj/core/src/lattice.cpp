#include "fano/lattice.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fano {

namespace mp = boost::multiprecision;

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (m == 0) throw std::domain_error("mod_floor: zero modulus");
  BigInt r = a % m;
  if (r != 0 && ((r < 0) != (m < 0))) r += m;
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) { return mp::gcd(mp::abs(a), mp::abs(b)); }

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  auto eg = extended_gcd(mod_floor(a, m), m);
  if (eg.g != 1) throw std::domain_error("mod_inverse: not invertible");
  return mod_floor(eg.s, m);
}

IntegerSqrt integer_sqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("integer_sqrt: negative argument");
  BigInt rem;
  BigInt root = mp::sqrt(n, rem);
  return {root, rem};
}

int sign(const BigInt& v) { return v.sign(); }

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

BigInt det(const LatticePoint& u, const LatticePoint& v) { return u.x * v.y - u.y * v.x; }

bool IntMatrix2::is_unimodular() const {
  BigInt dt = det();
  return dt == 1 || dt == -1;
}

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

IntMatrix2 IntMatrix2::mod(const BigInt& m) const {
  return {mod_floor(a, m), mod_floor(b, m), mod_floor(c, m), mod_floor(d, m)};
}

std::string IntMatrix2::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) {
  return os << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
}

IntMatrix2 mat_mul(const IntMatrix2& lhs, const IntMatrix2& rhs) { return lhs * rhs; }

BigInt mat_det(const IntMatrix2& m) { return m.det(); }

LatticePoint mat_apply(const IntMatrix2& m, const LatticePoint& p) { return m * p; }

IntMatrix2 mat_inverse_unimodular(const IntMatrix2& m) {
  BigInt dt = m.det();
  if (dt == 1) return {m.d, -m.b, -m.c, m.a};
  if (dt == -1) return {-m.d, m.b, m.c, -m.a};
  throw std::domain_error("inverse of a non-unimodular matrix (det " + dt.str() + ")");
}

namespace {
bool is_integer(const Rational& q) { return mp::denominator(q) == 1; }
}  // namespace

bool RationalMatrix2::is_integral() const {
  return is_integer(a) && is_integer(b) && is_integer(c) && is_integer(d);
}

IntMatrix2 RationalMatrix2::to_integer() const {
  if (!is_integral()) throw std::domain_error("rational matrix has non-integral entries");
  return {mp::numerator(a), mp::numerator(b), mp::numerator(c), mp::numerator(d)};
}

RationalMatrix2 RationalMatrix2::inverse() const {
  Rational dt = det();
  if (dt == 0) throw std::domain_error("inverse of a singular matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

RationalMatrix2 RationalMatrix2::operator*(const RationalMatrix2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string RationalMatrix2::to_string() const {
  std::ostringstream os;
  os << "[[" << a << ',' << b << "],[" << c << ',' << d << "]]";
  return os.str();
}

BigInt integer_length(const LatticePoint& a, const LatticePoint& b) {
  return gcd(b.x - a.x, b.y - a.y);
}

BigInt integer_area(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return mp::abs(det(b - a, c - a));
}

Rational integer_sine(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  if (a == b || b == c) throw std::invalid_argument("zero-length arm");
  BigInt area = integer_area(a, b, c);
  if (area == 0) return Rational(0);
  return Rational(area, integer_length(a, b) * integer_length(b, c));
}

int orientation_sign(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return sign(det(a - b, c - b));
}

bool is_primitive(const LatticePoint& v) { return gcd(v.x, v.y) == 1; }

IntMatrix2 frame_to_first_axis(const LatticePoint& v) {
  if (!is_primitive(v)) throw std::invalid_argument("frame_to_first_axis: vector " + v.to_string() + " is not primitive");
  auto eg = extended_gcd(v.x, v.y);
  // [[s, t], [-y, x]] has det s*x + t*y = 1 and sends v to (1, 0).
  return {eg.s, eg.t, -v.y, v.x};
}

}  // namespace fano
