#include "kloverify/hecke.hpp"

#include <stdexcept>

#include "kloverify/class_number.hpp"
#include "kloverify/kloosterman.hpp"
#include "kloverify/util.hpp"

namespace kloverify {

namespace {

void require_p(int p) {
  if (p != 2 && p != 3) throw std::invalid_argument("characteristic must be 2 or 3");
}

// class-number evaluation cost scales like q^(1+eps); these caps keep a
// single evaluation in the seconds range
void require_classnumber_range(int p, int m) {
  const int cap = (p == 2) ? 24 : 16;
  if (m < 1 || m > cap)
    throw std::range_error("class-number mode supports 1 <= m <= 24 (p=2) or 16 (p=3)");
}

// Sum over admissible f (f = 1 mod pi^2, f^2 < 4q) of cheb(j, f, q) H(f^2-4q).
// Every slot's class number is an integer; a fractional one means the
// discriminant bookkeeping broke, so it is a hard error.
mpz_class sum_cheb_H(int p, int m, unsigned long j) {
  const mpz_class q = zpow(static_cast<unsigned long>(p), static_cast<unsigned long>(m));
  const long long qll = mpz_get_si(q.get_mpz_t());
  mpz_class sum = 0;
  for (long long f : admissible_f(p, m)) {
    const mpq_class H = kronecker_H(f * f - 4 * qll);
    if (H.get_den() != 1)
      throw std::logic_error("non-integral class number at an admissible frequency slot");
    sum += cheb(j, z_ll(f), q) * H.get_num();
  }
  return sum;
}

mpz_class power_sum_direct(int p, int k, int m, int shards) {
  const FreqTable tbl = freq_table_direct(p, m, shards);
  const mpz_class q = zpow(static_cast<unsigned long>(p), static_cast<unsigned long>(m));
  mpz_class sum = 0;
  for (const auto& [f, cnt] : tbl.freq)
    sum += z_ll(cnt) * cheb(static_cast<unsigned long>(k), z_ll(f), q);
  return sum;
}

mpz_class power_sum_classnumber(int p, int k, int m) {
  require_classnumber_range(p, m);
  if (p == 2 && m == 1)  // F_2 has the single point t = 1 with -Kl = -1
    return cheb(static_cast<unsigned long>(k), mpz_class(-1), mpz_class(2));
  return sum_cheb_H(p, m, static_cast<unsigned long>(k));
}

}  // namespace

mpz_class cheb(unsigned long j, const mpz_class& f, const mpz_class& q) {
  mpz_class prev = 1, cur = f;  // cheb(0), cheb(1)
  if (j == 0) return prev;
  for (unsigned long i = 1; i < j; ++i) {
    mpz_class next = f * cur - q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

mpz_class cheb_mod(const mpz_class& j, const mpz_class& f, const mpz_class& q,
                   const mpz_class& mod) {
  if (j < 0) throw std::invalid_argument("cheb_mod needs j >= 0");
  if (mod <= 0) throw std::invalid_argument("cheb_mod needs a positive modulus");
  // companion matrix power: [[f, -q], [1, 0]]^j applied to (cheb(0), cheb(-1)=0)
  mpz_class a = 1, b = 0, c = 0, d = 1;          // accumulator = identity
  mpz_class ma = f % mod, mb = (-q) % mod, mc = 1, md = 0;
  if (ma < 0) ma += mod;
  if (mb < 0) mb += mod;
  const mp_bitcnt_t bits = mpz_sizeinbase(j.get_mpz_t(), 2);
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(j.get_mpz_t(), i)) {
      mpz_class na = (a * ma + b * mc) % mod, nb = (a * mb + b * md) % mod;
      mpz_class nc = (c * ma + d * mc) % mod, nd = (c * mb + d * md) % mod;
      a = std::move(na), b = std::move(nb), c = std::move(nc), d = std::move(nd);
    }
    mpz_class na = (ma * ma + mb * mc) % mod, nb = (ma * mb + mb * md) % mod;
    mpz_class nc = (mc * ma + md * mc) % mod, nd = (mc * mb + md * md) % mod;
    ma = std::move(na), mb = std::move(nb), mc = std::move(nc), md = std::move(nd);
  }
  return a;  // (M^j)[0][0] = cheb(j)
}

mpz_class trace_gamma1_4(int m, int w) {
  if (w < 3) throw std::invalid_argument("trace formula needs weight w >= 3");
  require_classnumber_range(2, m);
  // (-1)^(qw/2) with q = 2^m: only q = 2 can make the exponent odd
  const int sign = (m == 1 && (w & 1)) ? -1 : 1;
  return mpz_class(-1) - sign * sum_cheb_H(2, m, static_cast<unsigned long>(w - 2));
}

mpz_class trace_gamma1_3(int m, int w) {
  if (w < 3) throw std::invalid_argument("trace formula needs weight w >= 3");
  require_classnumber_range(3, m);
  return mpz_class(-1) - sum_cheb_H(3, m, static_cast<unsigned long>(w - 2));
}

mpz_class power_sum(int p, int k, int m, PowerSumMode mode, int shards) {
  require_p(p);
  if (k < 0 || m < 1) throw std::invalid_argument("power_sum needs k >= 0, m >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < m && q <= kDirectEnumerationCap; ++i) q *= p;
  switch (mode) {
    case PowerSumMode::kDirect:
      return power_sum_direct(p, k, m, shards);
    case PowerSumMode::kClassNumber:
      return power_sum_classnumber(p, k, m);
    case PowerSumMode::kAuto:
      return (q <= kDirectEnumerationCap) ? power_sum_direct(p, k, m, shards)
                                          : power_sum_classnumber(p, k, m);
  }
  throw std::logic_error("unreachable power-sum mode");
}

std::vector<mpz_class> power_sums(int p, int k, int mmax, PowerSumMode mode, int shards) {
  std::vector<mpz_class> out;
  out.reserve(static_cast<std::size_t>(mmax));
  for (int m = 1; m <= mmax; ++m) out.push_back(power_sum(p, k, m, mode, shards));
  return out;
}

int dim_cusp_sl2z(int w) {
  if (w < 12 || (w & 1)) return 0;
  return w / 12 - (w % 12 == 2 ? 1 : 0);
}

int dim_cusp_gamma1(int p, int w) {
  require_p(p);
  if (w < 3) throw std::invalid_argument("dimension formula needs w >= 3");
  return (p == 2) ? (w - 3) / 2 : w / 3 - 1;
}

}  // namespace kloverify
