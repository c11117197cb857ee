#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace kloverify {

// Truncated p-adic integer: the value is known modulo p^prec (absolute
// precision); residue is the canonical representative in [0, p^prec).
// Arithmetic tracks precision pessimistically:
//   add/sub: min of the precisions;
//   mul:     min(prec_a + val_b, prec_b + val_a);
//   div:     min(prec_a, val_a + prec_b - val_b) - val_b  (exact division
//            only; the numerator must be divisible by p^val_b).
// A residue of zero never claims a valuation -- it means val >= prec.
struct PadicNum {
  int p = 2;
  long prec = 0;
  mpz_class residue;
};

PadicNum padic_make(int p, const mpz_class& value, long prec);
mpz_class padic_modulus(const PadicNum& a);  // p^prec

// (valuation capped at prec, cap-was-not-hit); the first member is a lower
// bound on the true valuation whenever the second is false
std::pair<long, bool> padic_val(const PadicNum& a);

PadicNum padic_reduce(const PadicNum& a, long prec);  // prec <= a.prec
PadicNum padic_neg(const PadicNum& a);
PadicNum padic_add(const PadicNum& a, const PadicNum& b);
PadicNum padic_sub(const PadicNum& a, const PadicNum& b);
PadicNum padic_mul(const PadicNum& a, const PadicNum& b);
PadicNum padic_div(const PadicNum& a, const PadicNum& b);
PadicNum padic_inv(const PadicNum& a);
PadicNum padic_shift(const PadicNum& a, long e);  // multiply by p^e (exact)
PadicNum padic_pow_ui(const PadicNum& a, unsigned long e);

// largest e <= min(precisions) with a = b (mod p^e)
long padic_agreement(const PadicNum& a, const PadicNum& b);
// equality at the shared precision
bool padic_eq(const PadicNum& a, const PadicNum& b);

std::string padic_to_string(const PadicNum& a);

// The unit root pi0 of x^2 + kl x + p^d (Hensel from the seed -kl) together
// with its valuation-d companion pi1 = p^d / pi0; pi0 pi1 = p^d and
// pi0 + pi1 = -kl hold to working precision by construction.
struct UnitRoot {
  int d = 0;
  PadicNum pi0;
  PadicNum pi1;
};

// requires p not dividing kl (so exactly one root is a unit) and M > d
UnitRoot unit_root(int p, int d, const mpz_class& kl, long M);

// u^kappa for a unit u and kappa in Z_p, to absolute precision M (requires
// both inputs known at least mod p^M; throws std::range_error otherwise).
// Computed by the binomial series (1 + x)^kappa, x = u - 1, which converges
// exactly when x = 0 mod 4 (p = 2) or mod 3 (p = 3); for p = 2, u = 3 mod 4
// the sign-split u = -v applies: u^kappa = (-1)^(kappa mod 2) v^kappa.
// For p = 3, u = 2 mod 3 there is no continuous definition: domain_error.
PadicNum kappa_power(const PadicNum& u, const PadicNum& kappa, long M);

}  // namespace kloverify
