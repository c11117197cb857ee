#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kloverify {

// gmpxx has no long long constructor; long is 64-bit on every supported target
static_assert(sizeof(long) == 8, "64-bit long required");
inline mpz_class z_ll(long long v) { return mpz_class(static_cast<long>(v)); }

// base^e as an exact integer
inline mpz_class zpow(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

inline mpz_class zpow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// ord_p(v); v must be nonzero
inline long valuation(const mpz_class& v, unsigned long p) {
  if (v == 0) throw std::domain_error("valuation of zero is unbounded");
  mpz_class strip, pz(static_cast<long>(p));
  return static_cast<long>(mpz_remove(strip.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t()));
}

inline long valuation_ull(unsigned long long v, unsigned long p) {
  if (v == 0) throw std::domain_error("valuation of zero is unbounded");
  long e = 0;
  while (v % p == 0) { v /= p; ++e; }
  return e;
}

}  // namespace kloverify
