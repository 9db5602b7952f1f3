#include "fano/sl2_lift.hpp"
#include "fano/theorems.hpp"

#include <stdexcept>

namespace fano {

bool Thm18Report::search_empty() const {
  return matrix_search.polygons.empty() && (!broken_line_search || broken_line_search->polygons.empty());
}

bool Thm18Report::passed() const {
  if (!odd) return search_empty();
  return modular && modular->passed() && words && words->phi_failures == 0 && words->matrix_failures == 0 &&
         contradiction && search_empty();
}

std::string Thm18Report::label() const {
  return odd ? "proof chain certified" : "bounded verification, not proof";
}

Thm18Report verify_thm18(const BigInt& order, std::size_t kmax, std::size_t nmax, const Thm18Options& options) {
  if (order < 5) throw std::invalid_argument("verify_thm18: R must be at least 5 (R = 3 is handled by search_basket)");
  Thm18Report report;
  report.order = order;
  report.odd = order % 2 != 0;
  report.kmax = kmax;
  report.nmax = nmax;
  const BigInt& R = order;

  if (report.odd) {
    report.modular = mod_obstructions(R, kmax, options.samples, options.seed);

    WordCheck words;
    const auto bound = static_cast<long long>(nmax);
    for (long long n = -bound; n <= bound; ++n) {
      LiftedWord w = a_word(R, n);
      ++words.checked;
      if (phi(w).phi != -6 + R - n) ++words.phi_failures;
      if (eval_word(w) != family_matrix(R, n)) ++words.matrix_failures;
    }
    report.words = words;

    // k even (mod R) and R | k (mod R^2), R odd: k is a multiple of 2R.
    report.min_k = 2 * R;
    // Phi total -12 = sum (-6 + R - n_i) = (R - 6) k - sum n_i.
    report.phi_slope = R - 6;
    // sum n_i = 0 (mod R) and R | k turn sum n_i = 12 + (R-6)k into 12 = 0 (mod R).
    report.final_residue = mod_floor(12 + report.phi_slope * report.min_k, R);
    report.contradiction = report.final_residue != 0;
  } else {
    report.flagged = mod_floor(12, R) == 0;
    std::size_t mmax = options.mmax ? options.mmax : static_cast<std::size_t>(2 * R);
    report.broken_line_search = search_broken_lines(R, kmax, mmax);
  }
  report.matrix_search = search_basket(R, kmax, nmax);
  return report;
}

}  // namespace fano
