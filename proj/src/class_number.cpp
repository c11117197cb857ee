#include "kloverify/class_number.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace kloverify {

namespace {

// largest |D| handled by the quadratic form loop before switching to the
// divisor-based strategy
constexpr long long kFormLoopCutoff = 1'000'000;

long long isqrt_ll(long long n) {
  if (n < 0) throw std::logic_error("isqrt of a negative number");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void require_discriminant(long long D) {
  if (D >= 0 || (((D % 4) + 4) % 4) > 1)
    throw std::invalid_argument("class number needs D < 0 with D = 0,1 (mod 4)");
}

// ---- smallest-prime-factor sieve, grown on demand ----

std::vector<std::uint32_t> g_spf;  // g_spf[n] = least prime factor of n (n >= 2)
std::mutex g_spf_mutex;

void ensure_spf(std::uint64_t limit) {
  std::lock_guard<std::mutex> lock(g_spf_mutex);
  if (g_spf.size() > limit) return;
  const std::size_t n = static_cast<std::size_t>(limit) + 1;
  g_spf.assign(n, 0);
  for (std::size_t i = 2; i < n; ++i)
    if (g_spf[i] == 0)
      for (std::size_t j = i; j < n; j += i)
        if (g_spf[j] == 0) g_spf[j] = static_cast<std::uint32_t>(i);
}

// all divisors d of n with lo <= d <= hi, in no particular order;
// requires the sieve to cover n
void divisors_in_range(std::uint64_t n, std::uint64_t lo, std::uint64_t hi,
                       std::vector<std::uint64_t>& out) {
  out.clear();
  std::vector<std::uint64_t> divs{1};
  while (n > 1) {
    const std::uint64_t p = g_spf[n];
    std::uint64_t pk = 1;
    const std::size_t base = divs.size();
    while (n % p == 0) {
      n /= p;
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  for (std::uint64_t d : divs)
    if (lo <= d && d <= hi) out.push_back(d);
}

}  // namespace

mpq_class class_number_h_formloop(long long D) {
  require_discriminant(D);
  if (D == -3) return mpq_class(1, 3);
  if (D == -4) return mpq_class(1, 2);
  long long count = 0;
  for (long long a = 1; 3 * a * a <= -D; ++a) {
    for (long long b = -a; b <= a; ++b) {
      const long long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const long long c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;  // boundary forms need b >= 0
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++count;
    }
  }
  return mpq_class(static_cast<long>(count));
}

mpq_class class_number_h_bloop(long long D) {
  require_discriminant(D);
  if (D == -3) return mpq_class(1, 3);
  if (D == -4) return mpq_class(1, 2);
  const long long b_max = isqrt_ll(-D / 3);
  ensure_spf(static_cast<std::uint64_t>((b_max * b_max - D) / 4));
  long long count = 0;
  std::vector<std::uint64_t> as;
  for (long long b = (-D) & 1; b <= b_max; b += 2) {
    const std::uint64_t N = static_cast<std::uint64_t>((b * b - D) / 4);  // = a*c
    divisors_in_range(N, static_cast<std::uint64_t>(b < 1 ? 1 : b), isqrt_ll(N), as);
    for (std::uint64_t au : as) {
      const long long a = static_cast<long long>(au);
      const long long c = static_cast<long long>(N / au);
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      // (a, b, c) is reduced; (a, -b, c) is a distinct reduced form only in
      // the strict interior |b| < a < c
      count += (b > 0 && b < a && a < c) ? 2 : 1;
    }
  }
  return mpq_class(static_cast<long>(count));
}

mpq_class class_number_h(long long D) {
  require_discriminant(D);
  return (-D <= kFormLoopCutoff) ? class_number_h_formloop(D)
                                 : class_number_h_bloop(D);
}

mpq_class kronecker_H(long long D) {
  if (D > 0) throw std::invalid_argument("Hurwitz class number needs D <= 0");
  if (D == 0) return mpq_class(-1, 12);
  if ((((D % 4) + 4) % 4) > 1) return mpq_class(0);

  static std::map<long long, mpq_class> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(D);
    if (it != memo.end()) return it->second;
  }

  mpq_class sum(0);
  for (long long f = 1; f * f <= -D; ++f) {
    if (D % (f * f) != 0) continue;
    const long long d = D / (f * f);
    if ((((d % 4) + 4) % 4) > 1) continue;
    sum += class_number_h(d);
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(D, sum);
  return sum;
}

}  // namespace kloverify
