#pragma once

// Words in the generators S~, T~ of the universal central extension of
// SL2(Z), their evaluation to matrices and the winding homomorphism Phi with
// Phi(S~) = -3, Phi(T~) = 1.

#include "fano/lattice.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fano {

enum class Generator { S, T };

struct Letter {
  Generator gen;
  BigInt exponent;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Normalized on construction: adjacent letters with the same generator are
// merged and zero exponents dropped. No relations are applied.
class LiftedWord {
 public:
  LiftedWord() = default;
  explicit LiftedWord(std::vector<Letter> letters);

  static LiftedWord S(const BigInt& e = 1) { return LiftedWord({{Generator::S, e}}); }
  static LiftedWord T(const BigInt& e = 1) { return LiftedWord({{Generator::T, e}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  LiftedWord operator*(const LiftedWord& rhs) const;
  LiftedWord pow(unsigned n) const;
  LiftedWord inverse() const;

  // "T S^-1 T^-2"; the empty word renders as "1".
  std::string to_string() const;

  friend bool operator==(const LiftedWord&, const LiftedWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// Parses the to_string grammar; exponents may be parenthesized ("T^(-2)").
// Throws std::invalid_argument.
LiftedWord parse_word(std::string_view text);

struct WindingValue {
  BigInt phi;
  friend bool operator==(const WindingValue&, const WindingValue&) = default;
};

IntMatrix2 generator_matrix(Generator g);
IntMatrix2 eval_word(const LiftedWord& w);
WindingValue phi(const LiftedWord& w);

// Word with eval_word(result) == m, by the Euclidean algorithm on the first
// column. Throws std::domain_error unless det(m) == 1.
LiftedWord conrad_decompose(const IntMatrix2& m);

// Lift of the transition matrix A_n^(R) along the straight-line path:
//   R = 3:  Phi = -2 - n,
//   R >= 5: Phi = -6 + R - n.
// eval_word(a_word(R, n)) == family_matrix(R, n). Throws std::invalid_argument
// for even R or R < 3.
LiftedWord a_word(const BigInt& order, const BigInt& n);

}  // namespace fano
