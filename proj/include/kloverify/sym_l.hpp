#pragma once

#include <gmpxx.h>

#include <vector>

#include "kloverify/hecke.hpp"
#include "kloverify/int_poly.hpp"

namespace kloverify {

// relative tolerance on |1/root| = p^((k+1)/2) in the numeric purity check
constexpr double kPurityRelTol = 1e-9;
// target relative accuracy of the complex root finder
constexpr double kRootRelTol = 1e-12;
// slack coefficients computed beyond the expected degree
constexpr int kDegreeSlack = 8;
// trailing zeros required before a degree is accepted
constexpr int kMinDegreeSlack = 5;

// L(Sym^k Kl/F_p, s) as an exact integer polynomial
struct SymL {
  int p = 0;
  int k = 0;
  IntPoly L;                         // a_0 = 1, degree = 1 + dim S_{k+2}
  std::vector<mpz_class> power_sums; // S_1 .. S_M actually used
  bool classnumber_mode = false;     // true if any S_m came from class numbers
};

// Raw Newton-identity assembly: coefficients a_0..a_M of
// exp(sum_m S_m s^m / m) from S_1..S_M, with every division by n checked
// exact (a fractional a_n means the power sums are wrong).
IntPoly assemble_raw(const std::vector<mpz_class>& S);

// Degree detection by trailing zeros: the largest n with a_n != 0, requiring
// at least kMinDegreeSlack computed zero coefficients beyond it; throws
// std::logic_error on an ambiguous (too-short or nonzero) tail.
int detect_degree(const IntPoly& with_slack);

// Full pipeline for L(Sym^k Kl/F_p, s): compute power sums to the expected
// degree + kDegreeSlack (M_override > 0 forces the truncation order), run the
// Newton identities, detect the degree, and check it equals
// 1 + dim S_{k+2}(Gamma_1(4 or 3)).
SymL assemble_L(int p, int k, PowerSumMode mode = PowerSumMode::kAuto,
                int shards = 1, int M_override = 0);

// Newton-identity inverse: S_n = n a_n - sum_{j<n} S_j a_{n-j}; exact.
std::vector<mpz_class> power_sums_from_poly(const IntPoly& L, int mmax);

// Even-k factorization  L = (1 - s) (1 + p^(k/2) s)^mult_plus
//                           (1 - p^(k/2) s)^mult_minus  middle(s)
// with both multiplicities maximal (middle has no root at -+p^(-k/2)).
struct Factorization {
  int mult_plus = 0;
  int mult_minus = 0;
  IntPoly middle;
};

Factorization factor_even(const SymL& sym);

// reassemble the factorization (for exact round-trip comparison)
IntPoly factorization_product(const Factorization& f, int p, int k);

// Exact functional-equation test on M(s) = sum m_j s^j of degree d:
//   m_{d-j} p^((k+1) j) = c m_j  for all j, with the single constant c = m_d.
// Returns c; throws std::logic_error if no consistent c exists.
// (Applying the reversal twice is the identity, so c^2 = p^((k+1)d).)
mpz_class check_functional_equation(const IntPoly& M, int p, int k);

// Weight-purity check: every reciprocal root of `poly` has absolute value
// p^((k+1)/2).  `surrogate_ok` is the exact self-inversive coefficient test;
// the numeric part scales roots by p^(-(k+1)/2) and measures the worst
// deviation from the unit circle (Durand-Kerner, kRootRelTol).
struct PurityReport {
  int degree = 0;
  bool surrogate_ok = false;
  bool numeric_ok = false;
  double worst_deviation = 0.0;  // max over roots of ||z| - 1|
};

PurityReport check_purity(const IntPoly& poly, int p, int k);

}  // namespace kloverify
