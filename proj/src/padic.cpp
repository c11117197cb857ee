#include "kloverify/padic.hpp"

#include <sstream>
#include <stdexcept>

#include "kloverify/util.hpp"

namespace kloverify {

namespace {

void require_same_p(const PadicNum& a, const PadicNum& b) {
  if (a.p != b.p) throw std::invalid_argument("mixed p-adic characteristics");
}

mpz_class ppow(int p, long e) {
  return zpow(static_cast<unsigned long>(p), static_cast<unsigned long>(e));
}

}  // namespace

PadicNum padic_make(int p, const mpz_class& value, long prec) {
  if (p != 2 && p != 3) throw std::invalid_argument("p must be 2 or 3");
  if (prec < 1) throw std::invalid_argument("precision must be >= 1");
  PadicNum out{p, prec, value % ppow(p, prec)};
  if (out.residue < 0) out.residue += ppow(p, prec);
  return out;
}

mpz_class padic_modulus(const PadicNum& a) { return ppow(a.p, a.prec); }

std::pair<long, bool> padic_val(const PadicNum& a) {
  if (a.residue == 0) return {a.prec, false};
  const long v = valuation(a.residue, static_cast<unsigned long>(a.p));
  return (v >= a.prec) ? std::pair<long, bool>{a.prec, false}
                       : std::pair<long, bool>{v, true};
}

PadicNum padic_reduce(const PadicNum& a, long prec) {
  if (prec > a.prec) throw std::invalid_argument("cannot raise p-adic precision");
  return padic_make(a.p, a.residue, prec);
}

PadicNum padic_neg(const PadicNum& a) { return padic_make(a.p, -a.residue, a.prec); }

PadicNum padic_add(const PadicNum& a, const PadicNum& b) {
  require_same_p(a, b);
  return padic_make(a.p, a.residue + b.residue, std::min(a.prec, b.prec));
}

PadicNum padic_sub(const PadicNum& a, const PadicNum& b) {
  require_same_p(a, b);
  return padic_make(a.p, a.residue - b.residue, std::min(a.prec, b.prec));
}

PadicNum padic_mul(const PadicNum& a, const PadicNum& b) {
  require_same_p(a, b);
  const long prec = std::min(a.prec + padic_val(b).first, b.prec + padic_val(a).first);
  return padic_make(a.p, a.residue * b.residue, prec);
}

PadicNum padic_div(const PadicNum& a, const PadicNum& b) {
  require_same_p(a, b);
  const auto [w, w_exact] = padic_val(b);
  if (!w_exact)
    throw std::domain_error("division by a value indistinguishable from zero");
  const long va = padic_val(a).first;
  if (va < w)
    throw std::domain_error("quotient would leave the p-adic integers");
  const long prec = std::min(a.prec, va + b.prec - w) - w;
  if (prec < 1) throw std::domain_error("division exhausts all precision");
  const mpz_class pw = ppow(a.p, w);
  const mpz_class mod = ppow(a.p, prec);
  mpz_class bu = (b.residue / pw) % mod, inv;
  if (mpz_invert(inv.get_mpz_t(), bu.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::logic_error("unit part failed to invert");
  return padic_make(a.p, (a.residue / pw) * inv, prec);
}

PadicNum padic_inv(const PadicNum& a) {
  const long w = padic_val(a).first;
  PadicNum one = padic_make(a.p, mpz_class(1), a.prec + w);
  return padic_div(one, a);
}

PadicNum padic_shift(const PadicNum& a, long e) {
  if (e < 0) throw std::invalid_argument("padic_shift needs e >= 0");
  return padic_make(a.p, a.residue * ppow(a.p, e), a.prec + e);
}

PadicNum padic_pow_ui(const PadicNum& a, unsigned long e) {
  PadicNum acc = padic_make(a.p, mpz_class(1), a.prec + static_cast<long>(e) * padic_val(a).first);
  for (unsigned long i = 0; i < e; ++i) acc = padic_mul(acc, a);
  return acc;
}

long padic_agreement(const PadicNum& a, const PadicNum& b) {
  require_same_p(a, b);
  const PadicNum d = padic_sub(a, b);
  return padic_val(d).first;  // = shared prec when the residues agree fully
}

bool padic_eq(const PadicNum& a, const PadicNum& b) {
  return padic_agreement(a, b) >= std::min(a.prec, b.prec);
}

std::string padic_to_string(const PadicNum& a) {
  std::ostringstream os;
  os << a.residue.get_str() << " + O(" << a.p << "^" << a.prec << ")";
  return os.str();
}

UnitRoot unit_root(int p, int d, const mpz_class& kl, long M) {
  if (p != 2 && p != 3) throw std::invalid_argument("p must be 2 or 3");
  if (d < 1) throw std::invalid_argument("point degree must be >= 1");
  if (M <= d) throw std::invalid_argument("precision must exceed the point degree");
  if (kl % p == 0)
    throw std::invalid_argument("-kl must be a unit mod p for a unit root to exist");

  const mpz_class mod = ppow(p, M);
  const mpz_class pd = ppow(p, d);
  // Newton iteration on f(x) = x^2 + kl x + p^d from the seed x = -kl;
  // f'(seed) = -kl is a unit, so convergence is quadratic from the start.
  mpz_class x = (-kl) % mod;
  if (x < 0) x += mod;
  long converged_bits = 1;
  for (int iter = 0; iter < 64 && converged_bits < M; ++iter) {
    mpz_class fx = (x * x + kl * x + pd) % mod;
    mpz_class fpx = (2 * x + kl) % mod, inv;
    if (fpx < 0) fpx += mod;
    if (mpz_invert(inv.get_mpz_t(), fpx.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw std::logic_error("Hensel derivative is not invertible");
    x = (x - fx * inv) % mod;
    if (x < 0) x += mod;
    converged_bits *= 2;
  }
  if ((x * x + kl * x + pd) % mod != 0)
    throw std::logic_error("Hensel iteration failed to converge");

  UnitRoot ur;
  ur.d = d;
  ur.pi0 = padic_make(p, x, M);
  if (!padic_val(ur.pi0).second || padic_val(ur.pi0).first != 0)
    throw std::logic_error("computed root is not a unit");
  ur.pi1 = padic_div(padic_make(p, pd, M + d), ur.pi0);
  if (padic_val(ur.pi1).first != d)
    throw std::logic_error("companion root does not have valuation d");
  return ur;
}

PadicNum kappa_power(const PadicNum& u, const PadicNum& kappa, long M) {
  if (u.p != kappa.p) throw std::invalid_argument("mixed p-adic characteristics");
  if (M < 1) throw std::invalid_argument("precision must be >= 1");
  if (u.prec < M || kappa.prec < M)
    throw std::range_error("requested precision unattainable from input precision");
  const auto [vu, vu_exact] = padic_val(u);
  if (!vu_exact || vu != 0) throw std::invalid_argument("kappa_power needs a unit base");
  const int p = u.p;

  if (p == 2 && u.residue % 4 == 3) {
    // sign split: u = -v with v = 1 (mod 4); (-1)^kappa is read off the
    // 2-adic parity digit of kappa
    const PadicNum v = padic_neg(u);
    const PadicNum vk = kappa_power(v, kappa, M);
    return (kappa.residue % 2 == 1) ? padic_neg(vk) : vk;
  }
  if (p == 3 && u.residue % 3 == 2)
    throw std::domain_error("u^kappa has no continuous meaning for u = 2 (mod 3)");

  // binomial series (1 + x)^kappa, x = u - 1 with ord(x) >= 2 (p = 2) or
  // >= 1 (p = 3).  Term j = binom(kappa, j) x^j has ord >= j (p = 2) resp.
  // >= j/2 (p = 3), so jmax terms suffice; dividing by j! costs v_p(jmax!)
  // digits, compensated by working at internal precision Mp.
  const long jmax = ((p == 2) ? M : 2 * M) + 4;
  long vfact = 0;
  for (long pe = p; pe <= jmax; pe *= p) vfact += jmax / pe;
  const long Mp = M + vfact;
  const mpz_class mod = ppow(p, Mp);

  mpz_class x = u.residue - 1;
  mpz_class kl = kappa.residue;
  mpz_class term = 1, sum = 1;
  for (long j = 1; j <= jmax; ++j) {
    term = (term * (kl - (j - 1))) % mod;
    term = (term * x) % mod;
    if (term < 0) term += mod;
    // divide exactly by j = p^e * unit
    long e = 0;
    long ju = j;
    while (ju % p == 0) { ju /= p; ++e; }
    if (e > 0) {
      const mpz_class pe = ppow(p, e);
      if (term % pe != 0)
        throw std::logic_error("binomial term lost p-divisibility");
      term /= pe;
    }
    if (ju > 1) {
      mpz_class juz(ju), inv;
      mpz_invert(inv.get_mpz_t(), juz.get_mpz_t(), mod.get_mpz_t());
      term = (term * inv) % mod;
    }
    sum = (sum + term) % mod;
  }
  return padic_make(p, sum, M);
}

}  // namespace kloverify
