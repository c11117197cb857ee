#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "kloverify/int_poly.hpp"
#include "kloverify/padic.hpp"

namespace kloverify {

// truncated power series over the p-adics: c[n] multiplies s^n
using PadicSeries = std::vector<PadicNum>;

PadicSeries series_mul(const PadicSeries& a, const PadicSeries& b, int N);
// a / b mod s^(N+1); b[0] must be a unit
PadicSeries series_div(const PadicSeries& a, const PadicSeries& b, int N);
// substitute s -> p s (coefficient n gains a factor p^n)
PadicSeries series_scale_ps(const PadicSeries& a);

// series truncation caps for the Euler-product route (the closed-point count
// grows like p^N / N)
constexpr int kEulerCapP2 = 12;
constexpr int kEulerCapP3 = 10;

// A closed point of G_m over F_p of degree d: a Frobenius orbit in F_{p^d}^*,
// identified by its monic minimal polynomial over F_p, carrying the (orbit-
// invariant) Kloosterman sum of any orbit member.
struct ClosedPoint {
  int d = 0;
  std::uint64_t rep = 0;        // packed orbit representative (smallest)
  std::vector<int> minpoly;     // c_0 .. c_d = 1
  long long kl = 0;             // Kl_{p^d}(rep)
};

// All closed points of exact degree d, ordered by ascending representative.
// With a nonempty cache_dir the per-orbit records are read from / written to
// orbits_p<p>_d<d>.json (keyed by minimal polynomial, checksummed).
std::vector<ClosedPoint> closed_points(int p, int d, const std::string& cache_dir = "");

// L(Sym^(infinity, kappa) Kl/F_p, s) via the truncated Euler product
//   prod over closed points t, prod over i >= 0 of
//     (1 - pi0(t)^(kappa - i) pi1(t)^i s^deg(t))^(-1),
// truncated at s^N; factors with i deg(t) >= M are 1 at working precision.
// Coefficients come back with absolute precision >= M.
PadicSeries l_sym_infty_euler(int p, const PadicNum& kappa, int N, long M,
                              const std::string& cache_dir = "");

// The same series by the finite-weight limit: L(Sym^k_e) coefficients mod
// p^M along the schedule k_e = (kappa mod p^e) + p^e, with per-coefficient
// stabilization = agreement of the last three schedule entries.
struct LimitResult {
  std::vector<mpz_class> schedule;       // the k_e actually used
  std::vector<PadicSeries> per_entry;    // coefficients per schedule entry
  PadicSeries stabilized;                // final values at agreement precision
};

LimitResult l_sym_infty_limit(int p, const PadicNum& kappa, int N, long M);

// Unit-root L-function L_unit(kappa, s) = prod (1 - pi0(t)^kappa s^deg(t))^(-1):
// the direct product, plus (for kappa distinct from 0 and 2) the ratio
//   L(Sym^(infinity,kappa), s) / L(Sym^(infinity,kappa-2), ps),
// asserted equal to the direct route at shared precision (hard error).
struct LUnitResult {
  PadicSeries direct;
  PadicSeries ratio;      // empty when has_ratio is false
  bool has_ratio = false;
};

LUnitResult l_unit(int p, const PadicNum& kappa, int N, long M,
                   const std::string& cache_dir = "");

// Newton polygon of a truncated p-adic series with certification: hull of the
// exactly-known points (valuation < precision); every other computed index
// must have precision on or above the hull (extended past the last vertex at
// the final slope), else std::logic_error -- insufficient precision may hide
// a lower vertex.  margins[i] = precision - valuation at hull vertex i.
struct CertifiedPolygon {
  NewtonPolygon hull;
  std::vector<long long> margins;
};

CertifiedPolygon slopes_report(const PadicSeries& c);

}  // namespace kloverify
