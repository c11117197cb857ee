#pragma once

#include <gmpxx.h>

#include <vector>

namespace kloverify {

// cheb(j, f, q) = (rho^(j+1) - rhobar^(j+1)) / (rho - rhobar) where rho,
// rhobar are the roots of x^2 - f x + q; concretely the recurrence
//   cheb(0) = 1,  cheb(1) = f,  cheb(j+1) = f cheb(j) - q cheb(j-1).
// Satisfies cheb(j, -f, q) = (-1)^j cheb(j, f, q).
mpz_class cheb(unsigned long j, const mpz_class& f, const mpz_class& q);

// cheb(j, f, q) mod `mod` for arbitrarily large j, via a binary power ladder
// on the companion matrix [[f, -q], [1, 0]].  Result is reduced to [0, mod).
mpz_class cheb_mod(const mpz_class& j, const mpz_class& f, const mpz_class& q,
                   const mpz_class& mod);

// Hecke trace on weight-w cusp forms, w >= 3, at the prime power q = p^m:
//   Tr(T_q | S_w(Gamma_1(4))) = -1 - (-1)^(qw/2) * Sum_f cheb(w-2, f, q) H(f^2 - 4q)
//     over f = 1 (mod 4), f^2 < 4q                                   (q = 2^m)
//   Tr(T_q | S_w(Gamma_1(3))) = -1 - Sum_f cheb(w-2, f, q) H(f^2 - 4q)
//     over f = 1 (mod 3), f^2 < 4q                                   (q = 3^m)
mpz_class trace_gamma1_4(int m, int w);
mpz_class trace_gamma1_3(int m, int w);

// S_m(k) over q = p^m: the k-th symmetric-power sum of Kloosterman angles,
//   S_m = Sum over t in F_q^* of cheb(k, -Kl_q(t), q).
// kDirect evaluates the sum literally from a Kloosterman frequency table
// (available only while q <= kDirectEnumerationCap); kClassNumber replaces
// frequencies by Hurwitz class numbers,
//   S_m = Sum over admissible f of cheb(k, f, q) H(f^2 - 4q)
// (for q = 2 the single term is cheb(k, -1, 2)), which reaches far larger m:
// m <= 24 for p = 2, m <= 16 for p = 3 (class-number work grows like q^(1+eps)).
// kAuto picks whichever applies.  Both modes agree exactly on the overlap.
enum class PowerSumMode { kAuto, kDirect, kClassNumber };

mpz_class power_sum(int p, int k, int m, PowerSumMode mode = PowerSumMode::kAuto,
                    int shards = 1);

// S_1 .. S_mmax as a vector (index i-1 holds S_i)
std::vector<mpz_class> power_sums(int p, int k, int mmax,
                                  PowerSumMode mode = PowerSumMode::kAuto,
                                  int shards = 1);

// dim S_w(SL_2(Z)): 0 for odd w or w < 12, else floor(w/12) minus one exactly
// when w = 2 (mod 12)
int dim_cusp_sl2z(int w);

// dim S_w(Gamma_1(4)) = floor((w-3)/2) and dim S_w(Gamma_1(3)) = floor(w/3) - 1
// for w >= 3 (argument p picks the level: 2 -> Gamma_1(4), 3 -> Gamma_1(3))
int dim_cusp_gamma1(int p, int w);

}  // namespace kloverify
