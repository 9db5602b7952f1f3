#include "fano/broken_line.hpp"

#include "fano/contfrac.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano {

BigInt segment_height(const LatticePoint& a, const LatticePoint& b) {
  BigInt l = integer_length(a, b);
  if (l == 0) return 0;
  return abs(det(a, b)) / l;
}

bool is_zero_broken(const BrokenLine& line) {
  const auto& pts = line.points;
  if (pts.size() < 2) return false;
  for (const auto& p : pts)
    if (p.is_origin()) return false;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1]) return false;
    if (segment_height(pts[i], pts[i + 1]) != 1) return false;
  }
  return true;
}

namespace {

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

// Strict convex hull (collinear points dropped), anticlockwise.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) { return det(a - o, b - o); };
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

BrokenLine sail_chain(const LatticePoint& rho1, const LatticePoint& rho2) {
  if (!is_primitive(rho1) || !is_primitive(rho2))
    throw std::invalid_argument("sail_chain: rays must be primitive");
  BigInt d = det(rho1, rho2);
  if (d == 0) throw std::invalid_argument("sail_chain: rays are parallel");

  // Standard frame: rho1 -> (1,0), rho2 -> (p, q) with q = |d| > 0, 0 <= p < q.
  IntMatrix2 frame = frame_to_first_axis(rho1);
  if (d < 0) frame = IntMatrix2{1, 0, 0, -1} * frame;
  LatticePoint image = frame * rho2;
  frame = IntMatrix2{1, -floor_div(image.x, image.y), 0, 1} * frame;
  image = frame * rho2;
  const BigInt& p = image.x;
  const BigInt& q = image.y;

  // Triangle conv(0, (1,0), (p,q)): at height y, x runs over
  // [p*y/q, 1 + (p-1)*y/q].
  std::vector<LatticePoint> pts;
  for (BigInt y = 0; y <= q; ++y) {
    BigInt lo = ceil_div(p * y, q);
    BigInt hi = floor_div(q + (p - 1) * y, q);
    for (BigInt x = lo; x <= hi; ++x)
      if (x != 0 || y != 0) pts.emplace_back(x, y);
  }
  std::vector<LatticePoint> hull = convex_hull(std::move(pts));

  const LatticePoint a{1, 0};
  const LatticePoint& b = image;
  std::vector<LatticePoint> arc;
  if (hull.size() < 3) {
    arc = {a, b};
  } else {
    // The hull is anticlockwise with a -> b as its outer edge, so the
    // origin-facing arc runs backwards from a to b.
    const std::size_t m = hull.size();
    auto ia = static_cast<std::size_t>(std::find(hull.begin(), hull.end(), a) - hull.begin());
    for (std::size_t i = ia;; i = (i + m - 1) % m) {
      arc.push_back(hull[i]);
      if (hull[i] == b) break;
    }
  }

  IntMatrix2 back = mat_inverse_unimodular(frame);
  BrokenLine out;
  out.points.reserve(arc.size());
  for (const auto& pt : arc) out.points.push_back(back * pt);
  return out;
}

std::vector<BigInt> lsls_signed(const BrokenLine& line) {
  if (!is_zero_broken(line)) throw std::invalid_argument("LSLS sequence requires a 0-broken line");
  const auto& A = line.points;
  const std::size_t n = A.size() - 1;
  std::vector<int> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = sign(det(A[i], A[i + 1]));
  std::vector<BigInt> out;
  out.reserve(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(s[i] * integer_length(A[i], A[i + 1]));
    if (i + 1 == n) break;
    Rational sine = integer_sine(A[i], A[i + 1], A[i + 2]);
    if (denominator(sine) != 1)
      throw std::logic_error("internal error: non-integral sine at " + A[i + 1].to_string());
    out.push_back(s[i] * s[i + 1] * orientation_sign(A[i], A[i + 1], A[i + 2]) * numerator(sine));
  }
  return out;
}

std::vector<BigInt> lsls_open(const BrokenLine& line) {
  auto seq = lsls_signed(line);
  if (sign(det(line.points[0], line.points[1])) < 0)
    for (auto& e : seq) e = -e;
  return seq;
}

BrokenLine chain_from_lsls(std::span<const BigInt> seq) {
  if (seq.size() % 2 == 0) throw std::invalid_argument("chain_from_lsls: sequence length must be odd");
  BrokenLine out;
  LatticePoint point{1, 0};
  LatticePoint dir{0, 1};
  out.points.push_back(point);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i % 2 == 0) {
      point = point + seq[i] * dir;
      out.points.push_back(point);
    } else {
      dir = dir + seq[i] * point;
    }
  }
  return out;
}

BrokenLine polygon_broken_line(const FanoPolygon& polygon, std::size_t start) {
  BrokenLine out;
  out.closed = true;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    BrokenLine cone = sail_chain(polygon.vertex(start + i), polygon.vertex(start + i + 1));
    auto first = cone.points.begin() + (out.points.empty() ? 0 : 1);
    out.points.insert(out.points.end(), first, cone.points.end());
  }
  return out;
}

std::vector<BigInt> lsls_polygon(const FanoPolygon& polygon, std::size_t start) {
  return lsls_open(polygon_broken_line(polygon, start));
}

bool closure_test(const FanoPolygon& polygon) {
  for (std::size_t s = 0; s < polygon.size(); ++s)
    if (!is_zero_over_one(lsls_polygon(polygon, s))) return false;
  return true;
}

}  // namespace fano
