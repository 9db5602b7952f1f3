#include "fano/theorems.hpp"

#include <random>
#include <stdexcept>

namespace fano {

StandardCone standard_cone(const BigInt& order) {
  if (order < 2) throw std::invalid_argument("standard_cone: R must be at least 2, got " + order.str());
  if (order % 2 != 0) return {{-(order - 1) / 2, order}, {-(order + 1) / 2, order}};
  return {{1, order / 2}, {-1, order / 2}};
}

std::pair<BigInt, BigInt> MatrixFamily::lower_right_congruence() const {
  BigInt modulus = abs(step.d);
  if (modulus == 0) return {base.d, 0};
  return {mod_floor(base.d, modulus), modulus};
}

bool MatrixFamily::invariants_hold() const {
  // det(base + n step) = det(base) + n * linear + n^2 * det(step)
  BigInt linear = base.a * step.d + step.a * base.d - base.b * step.c - step.b * base.c;
  return base.det() == 1 && linear == 0 && step.det() == 0 && base * v1 == v2 && (step * v1).is_origin();
}

MatrixFamily family_solve(const LatticePoint& v1, const LatticePoint& v2) {
  if (!is_primitive(v1) || !is_primitive(v2)) throw std::invalid_argument("family_solve: vertices must be primitive");
  BigInt d = det(v1, v2);
  if (d == 0) throw std::invalid_argument("family_solve: vertices are parallel");

  // In the frame U v1 = (1,0) the solutions are [[p, s], [q, t]] with
  // (p, q) = U v2 and p t - q s = 1; s, t move along (p, q).
  IntMatrix2 u = frame_to_first_axis(v1);
  IntMatrix2 u_inv = mat_inverse_unimodular(u);
  LatticePoint w = u * v2;
  ExtendedGcd eg = extended_gcd(w.x, w.y);
  if (eg.g != 1) throw std::invalid_argument("family_solve: no integral solution");
  IntMatrix2 m0 = u_inv * IntMatrix2{w.x, -eg.t, w.y, eg.s} * u;
  IntMatrix2 pencil = u_inv * IntMatrix2{0, w.x, 0, w.y} * u;

  // Turn at v2 towards the third vertex: c0 + j * slope.
  BigInt c0 = det(v2 - v1, m0 * v2 - v2);
  BigInt slope = det(v2 - v1, pencil * v2);
  if (slope == 0) throw std::invalid_argument("family_solve: degenerate family");

  MatrixFamily fam;
  fam.order = abs(d);
  fam.v1 = v1;
  fam.v2 = v2;
  if (slope < 0) {
    BigInt jmax = floor_div(c0 - 1, -slope);
    fam.base = m0 + jmax * pencil;
    fam.step = BigInt(-1) * pencil;
  } else {
    BigInt jmin = floor_div(-c0, slope) + 1;
    fam.base = m0 + jmin * pencil;
    fam.step = pencil;
  }
  return fam;
}

IntMatrix2 odd_family_closed_form(const BigInt& order, const BigInt& n) {
  if (order < 3 || order % 2 == 0) throw std::invalid_argument("odd_family_closed_form: R must be odd and at least 3");
  const BigInt& R = order;
  return {-n * (R + 1) * R / 2 - 2 * R - 1, -n * (R * R - 1) / 4 - R, n * R * R + 4 * R, 2 * R - 1 + n * (R - 1) * R / 2};
}

IntMatrix2 family_matrix(const BigInt& order, const BigInt& n) {
  if (order < 3) throw std::invalid_argument("family_matrix: R must be at least 3, got " + order.str());
  if (order == 3) return {-6 * n - 1, -2 * n - 1, 9 * n + 3, 3 * n + 2};
  if (order % 2 != 0) return odd_family_closed_form(order, n);
  StandardCone cone = standard_cone(order);
  return family_solve(cone.v1, cone.v2).member(n);
}

namespace {

std::string tuple_string(const std::vector<std::int64_t>& ns) {
  std::string out = "(";
  for (std::size_t i = 0; i < ns.size(); ++i) out += (i ? "," : "") + std::to_string(ns[i]);
  return out + ")";
}

bool is_identity_mod(const IntMatrix2& m, const BigInt& modulus) {
  IntMatrix2 r = m.mod(modulus);
  BigInt one = mod_floor(1, modulus);
  return r.a == one && r.b == 0 && r.c == 0 && r.d == one;
}

}  // namespace

ModObstructionReport mod_obstructions(const BigInt& order, std::size_t kmax, std::size_t samples, std::uint64_t seed,
                                      std::int64_t nrange) {
  if (kmax == 0) throw std::invalid_argument("mod_obstructions: kmax must be positive");
  const BigInt& R = order;
  const BigInt R2 = R * R;
  ModObstructionReport report;
  report.order = R;
  report.samples = samples;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_k(1, kmax);
  std::uniform_int_distribution<std::int64_t> pick_n(-nrange, nrange);

  auto note = [&](const std::string& what, const std::vector<std::int64_t>& ns) {
    if (report.witnesses.size() < 5) report.witnesses.push_back(what + " k=" + std::to_string(ns.size()) + " n=" + tuple_string(ns));
  };

  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t k = pick_k(rng);
    std::vector<std::int64_t> ns(k);
    for (auto& n : ns) n = pick_n(rng);
    BigInt sum = 0;
    for (auto n : ns) sum += n;
    // Half of the even-k samples are steered onto sum = 0 (mod R).
    if (k % 2 == 0 && s % 2 == 1) {
      BigInt shift = mod_floor(sum, R);
      ns.back() -= static_cast<std::int64_t>(shift);
      sum -= shift;
    }
    const bool zero_sum = mod_floor(sum, R) == 0;
    if (k % 2 == 0 && zero_sum) ++report.even_zero_sum_samples;

    IntMatrix2 cw, acw;
    for (auto n : ns) {
      IntMatrix2 a = odd_family_closed_form(R, n);
      cw = (cw * mat_inverse_unimodular(a)).mod(R2);
      acw = (acw * a).mod(R2);
    }

    const bool expect_id = k % 2 == 0 && zero_sum;
    if (is_identity_mod(cw, R) != expect_id || is_identity_mod(acw, R) != expect_id) {
      ++report.mod_r_failures;
      note("mod R", ns);
    }
    const BigInt sgn = k % 2 == 0 ? 1 : -1;
    const BigInt expected = mod_floor(sgn * 4 * BigInt(k) * R, R2);
    if (cw.c != expected) {
      ++report.mod_r2_failures;
      note("mod R^2", ns);
    }
    if (acw.c != mod_floor(-sgn * 4 * BigInt(k) * R, R2)) {
      ++report.anticlockwise_failures;
      note("mod R^2 anticlockwise", ns);
    }
  }
  return report;
}

}  // namespace fano
