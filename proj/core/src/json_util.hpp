#pragma once

#include "fano/lattice.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <span>

namespace fano::detail {

// Integers that fit in int64 are emitted as JSON numbers, larger ones as strings.
inline nlohmann::json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline nlohmann::json point_json(const LatticePoint& p) { return nlohmann::json::array({integer_json(p.x), integer_json(p.y)}); }

inline nlohmann::json points_json(std::span<const LatticePoint> points) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : points) out.push_back(point_json(p));
  return out;
}

inline nlohmann::json matrix_json(const IntMatrix2& m) {
  return nlohmann::json::array({nlohmann::json::array({integer_json(m.a), integer_json(m.b)}),
                                nlohmann::json::array({integer_json(m.c), integer_json(m.d)})});
}

}  // namespace fano::detail
