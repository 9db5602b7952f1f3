#include "fano/singularity.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fano {

CyclicQuotientSingularity CyclicQuotientSingularity::from_order_weight(const BigInt& order, const BigInt& weight) {
  if (order < 1) throw std::invalid_argument("singularity order must be positive");
  CyclicQuotientSingularity s;
  s.order_ = order;
  if (order == 1) {
    s.weight_ = 0;
    s.k_ = 1;
    s.r_ = 1;
    s.c_ = 1;
    return s;
  }
  BigInt q = mod_floor(weight, order);
  if (gcd(q, order) != 1) throw std::invalid_argument("not a cyclic quotient singularity");
  s.weight_ = std::min(q, mod_inverse(q, order));
  s.k_ = gcd(s.weight_ + 1, order);
  s.r_ = order / s.k_;
  // k c = 1 + q (mod k r)  <=>  c = (1 + q)/k (mod r); pick the representative in [1, r].
  s.c_ = mod_floor((s.weight_ + 1) / s.k_ - 1, s.r_) + 1;
  return s;
}

std::string CyclicQuotientSingularity::to_string() const {
  return "1/" + order_.str() + "(1," + weight_.str() + ")";
}

std::string_view to_string(SingularityClass cls) {
  switch (cls) {
    case SingularityClass::Smooth: return "smooth";
    case SingularityClass::PrimitiveT: return "primitive-T";
    case SingularityClass::T: return "T";
    case SingularityClass::Residual: return "R";
    case SingularityClass::Mixed: return "mixed";
  }
  return "?";
}

CyclicQuotientSingularity normalize_weights(const BigInt& order, const BigInt& a, const BigInt& b) {
  if (order < 1) throw std::invalid_argument("singularity order must be positive");
  if (order == 1) return CyclicQuotientSingularity::smooth();
  if (gcd(a, order) != 1 || gcd(b, order) != 1) throw std::invalid_argument("not a cyclic quotient singularity");
  return CyclicQuotientSingularity::from_order_weight(order, mod_inverse(a, order) * b);
}

SingularityClass classify(const CyclicQuotientSingularity& s) {
  if (s.is_smooth()) return SingularityClass::Smooth;
  if (s.r() == s.k()) return SingularityClass::PrimitiveT;
  if (s.k() % s.r() == 0) return SingularityClass::T;
  if (s.k() < s.r()) return SingularityClass::Residual;
  return SingularityClass::Mixed;
}

bool is_t_singularity(const CyclicQuotientSingularity& s) { return s.k() % s.r() == 0; }

ConeContent residue(const CyclicQuotientSingularity& s) {
  BigInt n = s.k() / s.r();
  BigInt k0 = s.k() % s.r();
  if (k0 == 0) return {n, std::nullopt};
  return {n, CyclicQuotientSingularity::from_order_weight(k0 * s.r(), k0 * s.c() - 1)};
}

namespace {

void require_cone(const LatticePoint& rho1, const LatticePoint& rho2) {
  if (!is_primitive(rho1) || !is_primitive(rho2)) throw std::invalid_argument("cone rays must be primitive");
  if (det(rho1, rho2) == 0) throw std::invalid_argument("cone rays are parallel");
}

}  // namespace

CyclicQuotientSingularity cone_from_rays(const LatticePoint& rho1, const LatticePoint& rho2) {
  require_cone(rho1, rho2);
  // U rho1 = (0, 1); then det((0,1), U rho2) = -x forces U rho2 = (-det(rho1, rho2), y).
  const IntMatrix2 rotate{0, -1, 1, 0};
  LatticePoint w = rotate * frame_to_first_axis(rho1) * rho2;
  BigInt order = abs(w.x);
  if (order == 1) return CyclicQuotientSingularity::smooth();
  // Up to a reflection and shears fixing (0,1), the cone is cone((0,1), (R, -q)).
  return CyclicQuotientSingularity::from_order_weight(order, -w.y);
}

ConeContent content_of_cone(const LatticePoint& rho1, const LatticePoint& rho2) {
  require_cone(rho1, rho2);
  BigInt length = integer_length(rho1, rho2);
  BigInt height = abs(det(rho1, rho2)) / length;
  BigInt n = length / height;
  BigInt k0 = length % height;
  if (k0 == 0) return {n, std::nullopt};
  // Endpoint of the residual sub-edge. It is primitive: in coordinates where the
  // edge lies on y = h it is congruent to rho2 modulo h.
  LatticePoint step{(rho2.x - rho1.x) / length, (rho2.y - rho1.y) / length};
  LatticePoint end = rho1 + k0 * step;
  return {n, cone_from_rays(rho1, end)};
}

CyclicQuotientSingularity parse_singularity(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto fail = [&]() { return std::invalid_argument("malformed singularity '" + std::string(text) + "', expected 1/R(a,b)"); };
  if (s.size() < 8 || s.compare(0, 2, "1/") != 0) throw fail();
  auto open = s.find('(');
  auto comma = s.find(',', open == std::string::npos ? 0 : open);
  auto close = s.find(')', comma == std::string::npos ? 0 : comma);
  if (open == std::string::npos || comma == std::string::npos || close != s.size() - 1) throw fail();
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw fail();
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw fail();
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw fail();
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };
  BigInt order = parse_int(s.substr(2, open - 2));
  BigInt a = parse_int(s.substr(open + 1, comma - open - 1));
  BigInt b = parse_int(s.substr(comma + 1, close - comma - 1));
  return normalize_weights(order, a, b);
}

}  // namespace fano
