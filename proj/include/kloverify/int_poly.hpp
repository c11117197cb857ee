#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace kloverify {

// polynomial over Z, coeffs[i] = coefficient of s^i; normalized = no trailing
// zero coefficients (the zero polynomial is the empty vector)
using IntPoly = std::vector<mpz_class>;

void poly_trim(IntPoly& a);
int poly_degree(const IntPoly& a);  // -1 for the zero polynomial
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
mpz_class poly_eval(const IntPoly& a, const mpz_class& x);

// Exact division by (1 - r s): on success quotient holds a / (1 - r s) and
// true is returned; returns false (quotient unspecified) when the remainder
// is nonzero.  a must be normalized and nonzero.
bool poly_divide_one_minus_rs(const IntPoly& a, const mpz_class& r, IntPoly& quotient);

// lower convex hull of integer points (x strictly increasing on input)
struct NewtonPolygon {
  // hull vertices, left to right; first vertex is the leftmost point
  std::vector<std::pair<long long, long long>> vertices;
  // (slope, horizontal multiplicity) per hull edge, slopes weakly increasing
  std::vector<std::pair<mpq_class, long long>> slopes;
};

NewtonPolygon lower_hull(const std::vector<std::pair<long long, long long>>& points);

// Newton polygon of a nonzero integer polynomial at the prime p: hull of
// (i, ord_p a_i) over nonzero coefficients.  Requires a_0 != 0, so the hull
// starts at (0, ord_p a_0) -- at (0, 0) whenever a_0 = 1.
NewtonPolygon newton_polygon_int(const IntPoly& a, int p);

}  // namespace kloverify
