#include "kloverify/int_poly.hpp"

#include <stdexcept>

#include "kloverify/util.hpp"

namespace kloverify {

void poly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_degree(const IntPoly& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[static_cast<std::size_t>(d)] == 0) --d;
  return d;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

mpz_class poly_eval(const IntPoly& a, const mpz_class& x) {
  mpz_class v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

bool poly_divide_one_minus_rs(const IntPoly& a, const mpz_class& r, IntPoly& quotient) {
  const int d = poly_degree(a);
  if (d < 0) throw std::invalid_argument("cannot divide the zero polynomial");
  // a = (1 - r s) q  matches coefficients as  a_i = q_i - r q_{i-1}
  quotient.assign(static_cast<std::size_t>(d), mpz_class(0));
  mpz_class prev = 0;
  for (int i = 0; i < d; ++i) {
    quotient[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + r * prev;
    prev = quotient[static_cast<std::size_t>(i)];
  }
  if (a[static_cast<std::size_t>(d)] != -r * prev) return false;  // remainder
  poly_trim(quotient);
  return true;
}

NewtonPolygon lower_hull(const std::vector<std::pair<long long, long long>>& points) {
  if (points.empty()) throw std::invalid_argument("Newton polygon of an empty point set");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i - 1].first >= points[i].first)
      throw std::invalid_argument("hull points must have strictly increasing x");
  NewtonPolygon np;
  auto& h = np.vertices;
  for (const auto& pt : points) {
    // pop while the previous vertex is not strictly below the line h[-2]..pt
    while (h.size() >= 2) {
      const auto& a = h[h.size() - 2];
      const auto& b = h.back();
      // cross product of (b - a) x (pt - a); <= 0 means b on or above the chord
      const long long cross = (b.first - a.first) * (pt.second - a.second) -
                              (b.second - a.second) * (pt.first - a.first);
      if (cross <= 0)
        h.pop_back();
      else
        break;
    }
    h.push_back(pt);
  }
  for (std::size_t i = 1; i < h.size(); ++i) {
    mpq_class slope(static_cast<long>(h[i].second - h[i - 1].second),
                    static_cast<long>(h[i].first - h[i - 1].first));
    slope.canonicalize();
    np.slopes.emplace_back(slope, h[i].first - h[i - 1].first);
  }
  return np;
}

NewtonPolygon newton_polygon_int(const IntPoly& a, int p) {
  if (a.empty() || a[0] == 0)
    throw std::invalid_argument("Newton polygon needs a nonzero constant term");
  std::vector<std::pair<long long, long long>> pts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    pts.emplace_back(static_cast<long long>(i),
                     static_cast<long long>(valuation(a[i], p)));
  }
  return lower_hull(pts);
}

}  // namespace kloverify
