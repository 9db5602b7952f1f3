#include "fano/contfrac.hpp"

#include <cctype>
#include <utility>
#include <stdexcept>

namespace fano {

PQPair eval_pq(std::span<const BigInt> seq) {
  if (seq.empty()) throw std::invalid_argument("eval_pq: empty continued fraction");
  BigInt p2 = 0, p1 = 1, q2 = 1, q1 = 0;
  for (const auto& a : seq) {
    BigInt p = a * p1 + p2;
    BigInt q = a * q1 + q2;
    p2 = std::move(p1);
    p1 = std::move(p);
    q2 = std::move(q1);
    q1 = std::move(q);
  }
  return {p1, q1};
}

PQPair eval_pq_matrix(std::span<const BigInt> seq) {
  if (seq.empty()) throw std::invalid_argument("eval_pq_matrix: empty continued fraction");
  IntMatrix2 m;
  for (const auto& a : seq) m = m * IntMatrix2{a, 1, 1, 0};
  return {m.a, m.c};
}

bool is_zero_over_one(std::span<const BigInt> seq) {
  auto pq = eval_pq(seq);
  return pq.p == 0 && pq.q == 1;
}

BilinearPoly BilinearPoly::times_m1() const {
  if (c1 != 0 || c12 != 0) throw std::domain_error("nonlinear continued fraction");
  return {0, c0, 0, c2};
}

BilinearPoly BilinearPoly::times_m2() const {
  if (c2 != 0 || c12 != 0) throw std::domain_error("nonlinear continued fraction");
  return {0, 0, c0, c1};
}

std::string BilinearPoly::to_string() const {
  const std::pair<const BigInt*, const char*> terms[] = {{&c0, ""}, {&c1, "m1"}, {&c2, "m2"}, {&c12, "m1 m2"}};
  std::string out;
  for (const auto& [coef, name] : terms) {
    if (*coef == 0) continue;
    BigInt mag = abs(*coef);
    bool neg = *coef < 0;
    if (out.empty())
      out = neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (*name == '\0')
      out += mag.str();
    else
      out += (mag == 1 ? std::string() : mag.str() + " ") + name;
  }
  return out.empty() ? "0" : out;
}

BilinearPQ eval_pq_bilinear(std::span<const CFTerm> seq) {
  if (seq.empty()) throw std::invalid_argument("eval_pq_bilinear: empty continued fraction");
  bool seen_m1 = false, seen_m2 = false;
  for (const auto& t : seq) {
    if (const auto* u = std::get_if<Unknown>(&t)) {
      bool& seen = *u == Unknown::M1 ? seen_m1 : seen_m2;
      if (seen) throw std::domain_error("nonlinear continued fraction");
      seen = true;
    }
  }
  BilinearPoly p2{0, 0, 0, 0}, p1{1, 0, 0, 0}, q2{1, 0, 0, 0}, q1{0, 0, 0, 0};
  for (const auto& t : seq) {
    BilinearPoly p, q;
    if (const auto* a = std::get_if<BigInt>(&t)) {
      p = *a * p1 + p2;
      q = *a * q1 + q2;
    } else if (std::get<Unknown>(t) == Unknown::M1) {
      p = p1.times_m1() + p2;
      q = q1.times_m1() + q2;
    } else {
      p = p1.times_m2() + p2;
      q = q1.times_m2() + q2;
    }
    p2 = std::move(p1);
    p1 = std::move(p);
    q2 = std::move(q1);
    q1 = std::move(q);
  }
  return {p1, q1};
}

std::string render_sequence(std::span<const BigInt> seq) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ':';
    out += seq[i].str();
  }
  return out + "]";
}

std::vector<BigInt> parse_sequence(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']')
    throw std::invalid_argument("sequence must look like [a0:a1:...], got '" + std::string(text) + "'");
  std::vector<BigInt> out;
  std::string body = compact.substr(1, compact.size() - 2);
  if (body.empty()) throw std::invalid_argument("empty sequence");
  std::size_t pos = 0;
  while (true) {
    auto colon = body.find(':', pos);
    std::string tok = body.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
    std::size_t start = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    bool ok = start < tok.size();
    for (std::size_t i = start; i < tok.size() && ok; ++i) ok = std::isdigit(static_cast<unsigned char>(tok[i]));
    if (!ok) throw std::invalid_argument("bad sequence entry '" + tok + "'");
    if (tok[0] == '+') tok.erase(0, 1);
    out.emplace_back(tok);
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  return out;
}

}  // namespace fano
