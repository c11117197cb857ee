// Independent oracles used only by the tests: deliberately naive
// re-derivations of quantities the library computes by faster routes.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "kloverify/class_number.hpp"
#include "kloverify/hecke.hpp"

namespace oracles {

// dim S_w(SL_2(Z)) by counting monomials E_4^a E_6^b of weight w:
// dim M_w = #{(a, b) >= 0 : 4a + 6b = w}, and one Eisenstein series is
// removed for even w >= 4.
inline int dim_cusp_sl2z(int w) {
  if (w < 4 || w % 2 != 0) return 0;
  int monomials = 0;
  for (int a = 0; 4 * a <= w; ++a)
    if ((w - 4 * a) % 6 == 0) ++monomials;
  return monomials - 1;
}

// Level-1 Eichler-Selberg trace of T_n on S_k(SL_2(Z)), even k >= 4:
//   Tr = -(1/2) sum_{t^2 <= 4n} cheb(k-2, t, n) H(4n - t^2)
//        -(1/2) sum_{d d' = n} min(d, d')^(k-1)
// with the Hurwitz-Kronecker H (H(0) = -1/12 enters at t^2 = 4n).
inline mpz_class trace_level1(int k, int n) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("weight must be even, >= 4");
  mpq_class total = 0;
  for (long long t = 0; t * t <= 4LL * n; ++t) {
    const mpq_class term =
        mpq_class(kloverify::cheb(static_cast<unsigned long>(k - 2),
                                  mpz_class(static_cast<long>(t)), mpz_class(n))) *
        kloverify::kronecker_H(t * t - 4LL * n);
    // cheb(k-2, -t, n) = (-1)^(k-2) cheb(k-2, t, n), so for even k the +-t
    // terms are equal and doubling once is exact
    total += (t == 0) ? term : 2 * term;
  }
  mpq_class elliptic = total / 2;
  mpz_class hyperbolic = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      const int dprime = n / d;
      mpz_class md;
      mpz_ui_pow_ui(md.get_mpz_t(), static_cast<unsigned long>(std::min(d, dprime)),
                    static_cast<unsigned long>(k - 1));
      hyperbolic += md;
    }
  mpq_class tr = -elliptic - mpq_class(hyperbolic) / 2;
  tr.canonicalize();
  if (tr.get_den() != 1) throw std::logic_error("level-1 trace is not an integer");
  return tr.get_num();
}

// Brute-force unit root of x^2 + kl x + p^d modulo p^e: scan the units.
// The unit root is unique (the companion root is divisible by p).
inline mpz_class hensel_scan(int p, int d, long long kl, int e) {
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(d));
  if (!mod.fits_slong_p()) throw std::invalid_argument("scan modulus too large");
  const long long M = mod.get_si(), pdv = pd.get_si();
  for (long long x = 0; x < M; ++x) {
    if (x % p == 0) continue;
    const __int128 f = static_cast<__int128>(x) * x + static_cast<__int128>(kl) * x + pdv;
    if (f % M == 0) return mpz_class(static_cast<long>(x));
  }
  throw std::logic_error("no unit root found by scan");
}

// Textbook Hurwitz class number: enumerate reduced primitive forms
// (|b| <= a <= c, b >= 0 when |b| = a or a = c, gcd 1), with the weighted
// counts 1/3 at D = -3 and 1/2 at D = -4.
inline mpq_class h_naive(long long D) {
  if (D >= 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
    throw std::invalid_argument("not a discriminant");
  if (D == -3) return mpq_class(1, 3);
  if (D == -4) return mpq_class(1, 2);
  long long count = 0;
  for (long long a = 1; 3 * a * a <= -D; ++a)
    for (long long b = -a; b <= a; ++b) {
      const long long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const long long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (b == -a || a == c)) continue;
      long long g = std::gcd(std::gcd(a, b < 0 ? -b : b), c);
      if (g != 1) continue;
      ++count;
    }
  return mpq_class(static_cast<long>(count));
}

}  // namespace oracles
