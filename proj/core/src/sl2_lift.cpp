#include "fano/sl2_lift.hpp"

#include <cctype>
#include <stdexcept>

namespace fano {

LiftedWord::LiftedWord(std::vector<Letter> letters) {
  for (auto& l : letters) {
    if (l.exponent == 0) continue;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
      letters_.back().exponent += l.exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
    } else {
      letters_.push_back(std::move(l));
    }
  }
}

LiftedWord LiftedWord::operator*(const LiftedWord& rhs) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
  return LiftedWord(std::move(all));
}

LiftedWord LiftedWord::pow(unsigned n) const {
  LiftedWord out;
  for (unsigned i = 0; i < n; ++i) out = out * *this;
  return out;
}

LiftedWord LiftedWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->gen, -it->exponent});
  return LiftedWord(std::move(out));
}

std::string LiftedWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.gen == Generator::S ? 'S' : 'T';
    if (l.exponent != 1) out += "^" + l.exponent.str();
  }
  return out;
}

LiftedWord parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid word '" + std::string(text) + "': " + why);
  };
  skip_space();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_space();
    if (i != text.size()) fail("trailing input after identity");
    return {};
  }
  while (i < text.size()) {
    char g = text[i++];
    if (g != 'S' && g != 'T') fail(std::string("unexpected '") + g + "'");
    BigInt e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool paren = i < text.size() && text[i] == '(';
      if (paren) ++i;
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) fail("missing exponent");
      std::string num(text.substr(start, i - start));
      if (num[0] == '+') num.erase(0, 1);
      e = BigInt(num);
      if (paren) {
        if (i >= text.size() || text[i] != ')') fail("unbalanced parenthesis");
        ++i;
      }
    }
    letters.push_back({g == 'S' ? Generator::S : Generator::T, e});
    skip_space();
  }
  return LiftedWord(std::move(letters));
}

IntMatrix2 generator_matrix(Generator g) {
  return g == Generator::S ? IntMatrix2{0, -1, 1, 0} : IntMatrix2{1, 1, 0, 1};
}

namespace {

IntMatrix2 letter_matrix(const Letter& l) {
  if (l.gen == Generator::T) return {1, l.exponent, 0, 1};
  switch (static_cast<int>(mod_floor(l.exponent, 4))) {
    case 0: return {1, 0, 0, 1};
    case 1: return {0, -1, 1, 0};
    case 2: return {-1, 0, 0, -1};
    default: return {0, 1, -1, 0};
  }
}

}  // namespace

IntMatrix2 eval_word(const LiftedWord& w) {
  IntMatrix2 out;
  for (const auto& l : w.letters()) out = out * letter_matrix(l);
  return out;
}

WindingValue phi(const LiftedWord& w) {
  BigInt total = 0;
  for (const auto& l : w.letters()) total += l.gen == Generator::S ? -3 * l.exponent : l.exponent;
  return {total};
}

LiftedWord conrad_decompose(const IntMatrix2& m) {
  if (m.det() != 1) throw std::domain_error("conrad_decompose: determinant is " + m.det().str() + ", expected 1");
  std::vector<Letter> letters;
  BigInt a = m.a, b = m.b, c = m.c, d = m.d;
  // M = T^q S M' with M' = S^-1 T^-q M; the lower-left entry strictly shrinks.
  while (c != 0) {
    BigInt q = floor_div(a, c);
    letters.push_back({Generator::T, q});
    letters.push_back({Generator::S, 1});
    BigInt na = c, nb = d, nc = -(a - q * c), nd = -(b - q * d);
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
  }
  if (a == 1) {
    letters.push_back({Generator::T, b});
  } else {
    letters.push_back({Generator::S, 2});
    letters.push_back({Generator::T, -b});
  }
  return LiftedWord(std::move(letters));
}

LiftedWord a_word(const BigInt& order, const BigInt& n) {
  if (order < 3 || order % 2 == 0)
    throw std::invalid_argument("a_word: R must be odd and at least 3, got " + order.str());
  using W = LiftedWord;
  W tmpl;
  if (order == 3) {
    tmpl = W::T() * W::S(-1) * W::T(-2) * W::S(-1) * W::T(-(n + 1)) * W::S() * W::T(-3);
  } else {
    const W block = W::T(-2) * W::S(-1);
    const unsigned left = static_cast<unsigned>((order - 3) / 2);
    const unsigned right = static_cast<unsigned>((order - 5) / 2);
    tmpl = W::T() * W::S(-1) * block.pow(left) * W::T(-2) * W::S(-1) * W::T(-(n + 2)) * W::S(-1) * block.pow(right) *
           W::T(-2) * W::S() * W::T(-3);
  }
  // The template evaluates to S^-1 A S; conjugating back leaves Phi unchanged.
  return W::S() * tmpl * W::S(-1);
}

}  // namespace fano
