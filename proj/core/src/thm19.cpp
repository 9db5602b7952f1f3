#include "fano/contfrac.hpp"
#include "fano/theorems.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

namespace fano {

Thm19Coefficients thm19_coefficients(const BigInt& r1, const BigInt& r2, const BigInt& r3) {
  const BigInt p = r1 * r2 * r3;
  const BigInt r12 = r1 * r2, r13 = r1 * r3, r23 = r2 * r3;
  Thm19Coefficients c;
  c.A = p;
  c.B = 2 * p - r12 - r13;
  c.C = 2 * p - r13 - r23;
  c.D = 4 * p - 2 * r12 - 4 * r13 - 2 * r23 + r1 + r2 + r3;
  c.E = p - r23;
  c.F = 2 * p - r12 - r13 - 2 * r23 + r2 + r3;
  c.G = 2 * p - r13 - 3 * r23 + r3;
  c.H = 4 * p - 2 * r12 - 4 * r13 - 6 * r23 + r1 + 3 * r2 + 5 * r3 - 1;
  return c;
}

namespace {

std::vector<CFTerm> thm19_terms(const BigInt& r1, const BigInt& r2, const BigInt& r3) {
  return {BigInt(1), BigInt(r1 - 2), BigInt(1), Unknown::M1, BigInt(1), BigInt(r2 - 2), BigInt(1), Unknown::M2,
          BigInt(1), BigInt(r3 - 2), BigInt(1)};
}

std::vector<BigInt> thm19_sequence(const BigInt& r1, const BigInt& r2, const BigInt& r3, const BigInt& m1, const BigInt& m2) {
  return {1, r1 - 2, 1, m1, 1, r2 - 2, 1, m2, 1, r3 - 2, 1};
}

// Exact quotient when it exists.
std::optional<BigInt> exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0 || num % den != 0) return std::nullopt;
  return num / den;
}

}  // namespace

Thm19Coefficients thm19_oracle_coefficients(const BigInt& r1, const BigInt& r2, const BigInt& r3) {
  auto terms = thm19_terms(r1, r2, r3);
  BilinearPQ pq = eval_pq_bilinear(terms);
  return {pq.p.c12, pq.p.c1, pq.p.c2, pq.p.c0, pq.q.c12, pq.q.c1, pq.q.c2, pq.q.c0};
}

Thm19Solve solve_thm19(const BigInt& r1, const BigInt& r2, const BigInt& r3) {
  const Thm19Coefficients k = thm19_coefficients(r1, r2, r3);
  Thm19Solve out;
  // P = 0:     m1 (A m2 + B) = -(C m2 + D)
  // Q - 1 = 0: m1 (E m2 + F) = -(G m2 + H - 1)
  const BigInt h1 = k.H - 1;
  out.qa = k.C * k.E - k.A * k.G;
  out.qb = k.C * k.F + k.D * k.E - k.A * h1 - k.B * k.G;
  out.qc = k.D * k.F - k.B * h1;

  std::vector<BigInt> roots;
  if (out.qa != 0) {
    out.discriminant = out.qb * out.qb - 4 * out.qa * out.qc;
    if (out.discriminant >= 0) {
      IntegerSqrt s = integer_sqrt(out.discriminant);
      out.perfect_square = s.is_perfect_square();
      if (out.perfect_square) {
        for (const BigInt& num : {BigInt(-out.qb + s.root), BigInt(-out.qb - s.root)})
          if (auto m2 = exact_div(num, 2 * out.qa)) roots.push_back(*m2);
      }
    }
  } else if (out.qb != 0) {
    if (auto m2 = exact_div(-out.qc, out.qb)) roots.push_back(*m2);
  } else if (out.qc == 0) {
    out.degenerate = true;
  }

  std::set<Thm19Solution> found;
  for (const BigInt& m2 : roots) {
    const BigInt den1 = k.A * m2 + k.B, num1 = -(k.C * m2 + k.D);
    const BigInt den2 = k.E * m2 + k.F, num2 = -(k.G * m2 + h1);
    std::optional<BigInt> m1;
    if (den1 != 0) {
      m1 = exact_div(num1, den1);
    } else if (num1 == 0) {
      if (den2 != 0) {
        m1 = exact_div(num2, den2);
      } else if (num2 == 0) {
        out.degenerate = true;  // m1 unconstrained
      }
    }
    if (!m1 || *m1 >= 0 || m2 >= 0) continue;
    auto seq = thm19_sequence(r1, r2, r3, *m1, m2);
    if (is_zero_over_one(seq)) found.insert({*m1, m2});
  }
  out.solutions.assign(found.begin(), found.end());
  return out;
}

std::vector<Thm19Solution> brute_force_thm19(const BigInt& r1, const BigInt& r2, const BigInt& r3, std::int64_t window) {
  // |P|, |Q| stay below roughly 16 R^3 window^2, inside int64 for these bounds.
  const BigInt rmax = std::max({abs(r1), abs(r2), abs(r3)});
  if (rmax > 1000 || window > 10000 || window < 1)
    throw std::invalid_argument("brute_force_thm19: bounds exceed the fixed-width range");
  const auto a = static_cast<std::int64_t>(r1 - 2), b = static_cast<std::int64_t>(r2 - 2), c = static_cast<std::int64_t>(r3 - 2);
  std::vector<Thm19Solution> out;
  std::array<std::int64_t, 11> seq{1, a, 1, 0, 1, b, 1, 0, 1, c, 1};
  for (std::int64_t m1 = -window; m1 <= -1; ++m1) {
    seq[3] = m1;
    for (std::int64_t m2 = -window; m2 <= -1; ++m2) {
      seq[7] = m2;
      auto [p, q] = eval_pq_fixed<std::int64_t>(seq);
      if (p == 0 && q == 1) out.push_back({m1, m2});
    }
  }
  return out;
}

namespace {

Thm19Report check_triple(const std::array<BigInt, 3>& sorted, const Thm19Options& options) {
  Thm19Report report;
  report.triple = sorted;
  report.coefficients = thm19_coefficients(sorted[0], sorted[1], sorted[2]);
  report.brute_forced = sorted[2] <= options.brute_force_max_order;

  std::array<BigInt, 3> perm = sorted;
  do {
    const auto& [r1, r2, r3] = perm;
    if (thm19_coefficients(r1, r2, r3) != thm19_oracle_coefficients(r1, r2, r3)) ++report.coefficient_mismatches;
    Thm19Solve solve = solve_thm19(r1, r2, r3);
    report.degenerate = report.degenerate || solve.degenerate;
    for (const auto& s : solve.solutions) report.solutions.emplace_back(perm, s);
    if (report.brute_forced) {
      std::vector<Thm19Solution> in_window;
      for (const auto& s : solve.solutions)
        if (s.m1 >= -options.window && s.m2 >= -options.window) in_window.push_back(s);
      if (brute_force_thm19(r1, r2, r3, options.window) != in_window) report.brute_force_agrees = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return report;
}

}  // namespace

std::vector<Thm19Report> verify_thm19(std::int64_t rmax, const Thm19Options& options) {
  if (rmax < 5) throw std::invalid_argument("verify_thm19: Rmax must be at least 5");
  std::vector<std::int64_t> orders{3};
  for (std::int64_t r = 5; r <= rmax; ++r) orders.push_back(r);

  std::vector<std::array<BigInt, 3>> triples;
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i; j < orders.size(); ++j)
      for (std::size_t l = j; l < orders.size(); ++l) triples.push_back({orders[i], orders[j], orders[l]});

  // Independent work units; each thread fills a strided slice of the output.
  std::vector<Thm19Report> reports(triples.size());
  const unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < triples.size(); i += workers) reports[i] = check_triple(triples[i], options);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return reports;
}

}  // namespace fano
