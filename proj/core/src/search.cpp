#include "fano/broken_line.hpp"
#include "fano/contfrac.hpp"
#include "fano/theorems.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace fano {

namespace {

// w extends the convex chain verts (anticlockwise) if it lies strictly left of
// every chain edge and every earlier vertex lies strictly left of last -> w.
bool extends_convexly(const std::vector<LatticePoint>& verts, const LatticePoint& w) {
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    if (det(verts[i + 1] - verts[i], w - verts[i]) <= 0) return false;
  const LatticePoint& last = verts.back();
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    if (det(w - last, verts[i] - last) <= 0) return false;
  return true;
}

bool has_required_content(const FanoPolygon& polygon, const CyclicQuotientSingularity& target) {
  SingularityContent sc = singularity_content(polygon);
  if (sc.primitive_t_count != 0 || sc.basket.size() != polygon.size()) return false;
  for (const auto& s : sc.basket)
    if (!(s == target)) return false;
  return true;
}

class Collector {
 public:
  explicit Collector(SearchResult& result) : result_(result) {}

  void offer(const std::vector<LatticePoint>& verts, const std::vector<BigInt>& params, const CyclicQuotientSingularity& target) {
    ++result_.closures;
    std::optional<FanoPolygon> polygon;
    try {
      polygon = FanoPolygon::validate(verts);
    } catch (const PolygonError&) {
      return;
    }
    if (!has_required_content(*polygon, target)) return;
    FanoPolygon canon = canonical_form(*polygon);
    std::vector<LatticePoint> key(canon.vertices().begin(), canon.vertices().end());
    found_.try_emplace(std::move(key), FoundPolygon{std::move(canon), params});
  }

  void finish() {
    for (auto& [key, found] : found_) result_.polygons.push_back(std::move(found));
  }

 private:
  SearchResult& result_;
  std::map<std::vector<LatticePoint>, FoundPolygon> found_;
};

}  // namespace

SearchResult search_basket(const BigInt& order, std::size_t kmax, std::size_t nmax) {
  if (order < 3) throw std::invalid_argument("search_basket: R must be at least 3");
  SearchResult result;
  result.order = order;
  result.kmax = kmax;
  result.parameter_bound = nmax;

  const StandardCone cone = standard_cone(order);
  const auto target = normalize_weights(order, 1, 1);
  std::vector<IntMatrix2> family;
  for (std::size_t n = 0; n <= nmax; ++n) family.push_back(family_matrix(order, n));

  Collector collector(result);
  std::vector<LatticePoint> verts{cone.v1, cone.v2};
  std::vector<BigInt> params;

  // verts = v_1..v_j with v_j = G v_2, G = A_{n_1}...A_{n_{j-2}}.
  auto dfs = [&](auto&& self, const IntMatrix2& g) -> void {
    ++result.nodes;
    for (std::size_t n = 0; n <= nmax; ++n) {
      IntMatrix2 ga = g * family[n];
      LatticePoint w = ga * cone.v2;
      params.push_back(n);
      if (w == cone.v1) {
        // Back at v_1: the last cone must carry G back to the identity.
        for (std::size_t m = 0; m <= nmax; ++m) {
          if (ga * family[m] == IntMatrix2::identity()) {
            params.push_back(m);
            collector.offer(verts, params, target);
            params.pop_back();
          }
        }
      } else if (verts.size() < kmax && extends_convexly(verts, w)) {
        verts.push_back(w);
        self(self, ga);
        verts.pop_back();
      }
      params.pop_back();
    }
  };
  dfs(dfs, IntMatrix2::identity());
  collector.finish();
  return result;
}

SearchResult search_broken_lines(const BigInt& order, std::size_t kmax, std::size_t mmax) {
  if (order < 3) throw std::invalid_argument("search_broken_lines: R must be at least 3");
  SearchResult result;
  result.order = order;
  result.kmax = kmax;
  result.parameter_bound = mmax;
  const auto target = normalize_weights(order, 1, 1);
  const BigInt middle = order - 2;

  Collector collector(result);
  std::vector<BigInt> seq;
  std::vector<BigInt> angles;
  std::vector<LatticePoint> verts;

  // Appends one 1/R(1,1) block [1 : R-2 : 1], moving (point, dir) to the next vertex.
  auto block = [&](LatticePoint& point, LatticePoint& dir) {
    point = point + dir;
    dir = dir + middle * point;
    point = point + dir;
    seq.push_back(1);
    seq.push_back(middle);
    seq.push_back(1);
  };

  auto dfs = [&](auto&& self, const LatticePoint& point, const LatticePoint& dir) -> void {
    ++result.nodes;
    if (verts.size() >= kmax) return;
    for (std::size_t m = 1; m <= mmax; ++m) {
      BigInt angle = -BigInt(m);
      LatticePoint p = point;
      LatticePoint d = dir + angle * p;
      const std::size_t mark = seq.size();
      seq.push_back(angle);
      angles.push_back(angle);
      block(p, d);
      if (p == verts.front()) {
        if (is_zero_over_one(seq)) collector.offer(verts, angles, target);
      } else if (extends_convexly(verts, p)) {
        verts.push_back(p);
        self(self, p, d);
        verts.pop_back();
      }
      seq.resize(mark);
      angles.pop_back();
    }
  };

  LatticePoint point{1, 0};
  LatticePoint dir{0, 1};
  verts.push_back(point);
  block(point, dir);
  verts.push_back(point);
  dfs(dfs, point, dir);
  collector.finish();
  return result;
}

}  // namespace fano
