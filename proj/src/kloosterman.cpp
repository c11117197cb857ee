#include "kloverify/kloosterman.hpp"

#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "kloverify/class_number.hpp"

namespace kloverify {

namespace {

// Kloosterman sum with t given by its discrete log.  The additive trace is
// F_p-linear, so Tr(x + t/x) = Tr(x) + Tr(t/x) splits into two table lookups;
// with x = g^i we have t/x = g^(lt - i mod q-1).
long long kl_at_log(const FqField& F, std::uint64_t lt) {
  const std::uint64_t n = F.q() - 1;
  long long fiber[3] = {0, 0, 0};
  std::uint64_t j = lt;  // log of t/x, starts at x = 1
  if (F.p() == 2) {
    for (std::uint64_t i = 0; i < n; ++i) {
      fiber[(F.trace_at_index(static_cast<std::uint32_t>(i)) +
             F.trace_at_index(static_cast<std::uint32_t>(j))) & 1]++;
      j = (j == 0) ? n - 1 : j - 1;
    }
  } else {
    for (std::uint64_t i = 0; i < n; ++i) {
      int s = F.trace_at_index(static_cast<std::uint32_t>(i)) +
              F.trace_at_index(static_cast<std::uint32_t>(j));
      fiber[s >= 3 ? s - 3 : s]++;
      j = (j == 0) ? n - 1 : j - 1;
    }
    if (fiber[1] != fiber[2])
      throw std::logic_error("conjugate trace fibers unbalanced: Kloosterman sum not rational");
  }
  return fiber[0] - fiber[1];
}

void check_kl_invariants(const FqField& F, long long value) {
  const long long q = static_cast<long long>(F.q());
  if (value * value >= 4 * q)
    throw std::logic_error("square-root bound violated: Kl^2 >= 4q");
  if (F.p() == 2 && F.m() >= 2 && ((value + 1) % 4 + 4) % 4 != 0)
    throw std::logic_error("congruence violated: -Kl != 1 (mod 4)");
  if (F.p() == 3 && ((value + 1) % 3 + 3) % 3 != 0)
    throw std::logic_error("congruence violated: -Kl != 1 (mod 3)");
}

}  // namespace

long long kl_sum(const FqField& F, fq_t t) {
  if (t == 0) throw std::invalid_argument("Kloosterman sum needs t in F_q^*");
  if (!F.has_tables())
    throw std::range_error("Kloosterman enumeration needs multiplicative tables (q too large)");
  const long long value = kl_at_log(F, F.log(t));
  check_kl_invariants(F, value);
  return value;
}

FreqTable freq_table_direct(int p, int m, int shards) {
  const FqField& F = field(p, m);
  if (F.q() > kDirectEnumerationCap)
    throw std::range_error("direct frequency enumeration capped at q <= 8192");
  if (shards < 1) throw std::invalid_argument("shard count must be positive");

  // the table is shard-independent, so completed scans are memoized
  static std::map<std::pair<int, int>, FreqTable> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({p, m});
    if (it != memo.end()) return it->second;
  }
  const std::uint64_t n = F.q() - 1;

  auto scan = [&F](std::uint64_t lo, std::uint64_t hi) {
    std::map<long long, long long> out;
    for (std::uint64_t lt = lo; lt < hi; ++lt) {
      const long long v = kl_at_log(F, lt);
      check_kl_invariants(F, v);
      out[-v]++;
    }
    return out;
  };

  FreqTable table;
  table.p = p;
  table.m = m;
  table.q = F.q();
  if (shards == 1) {
    table.freq = scan(0, n);
  } else {
    std::vector<std::future<std::map<long long, long long>>> parts;
    for (int s = 0; s < shards; ++s) {
      const std::uint64_t lo = n * s / shards, hi = n * (s + 1) / shards;
      parts.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    for (auto& f : parts)
      for (const auto& [key, cnt] : f.get()) table.freq[key] += cnt;
  }

  long long total = 0;
  for (const auto& [key, cnt] : table.freq) total += cnt;
  if (total != static_cast<long long>(n))
    throw std::logic_error("frequency counts do not sum to q - 1");

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::make_pair(p, m), table);
  return table;
}

FreqTable freq_table(int p, int m, int shards) {
  const FqField& F = field(p, m);
  if (F.q() <= kDirectEnumerationCap) return freq_table_direct(p, m, shards);

  // above the enumeration cap, synthesize counts from class numbers:
  // the number of t with -Kl = f equals H(f^2 - 4q)
  FreqTable table;
  table.p = p;
  table.m = m;
  table.q = F.q();
  table.synthesized = true;
  long long total = 0;
  for (long long f : admissible_f(p, m)) {
    const mpq_class H = kronecker_H(f * f - 4 * static_cast<long long>(F.q()));
    if (H.get_den() != 1)
      throw std::logic_error("class number in a frequency slot is not an integer");
    const long long cnt = static_cast<long long>(H.get_num().get_si());
    table.freq[f] = cnt;
    total += cnt;
  }
  if (total != static_cast<long long>(F.q() - 1))
    throw std::logic_error("synthesized frequency counts do not sum to q - 1");
  return table;
}

std::vector<long long> admissible_f(int p, int m) {
  if (p != 2 && p != 3) throw std::invalid_argument("characteristic must be 2 or 3");
  const long long q = [&] {
    long long r = 1;
    for (int i = 0; i < m; ++i) r *= p;
    return r;
  }();
  const long long step = (p == 2) ? 4 : 3;
  std::vector<long long> out;
  for (long long f = 1; f * f < 4 * q; f += step) out.push_back(f);
  for (long long f = 1 - step; f * f < 4 * q; f -= step) out.push_back(f);
  return out;
}

std::uint64_t ec_count_p2(const FqField& F, fq_t t) {
  if (F.p() != 2) throw std::invalid_argument("curve Y^2 + XY = X^3 + tX lives over F_{2^m}");
  if (t == 0) throw std::invalid_argument("curve parameter t must be nonzero");
  // X = 0: Y^2 = 0 has the single solution Y = 0.
  std::uint64_t count = 1;
  // X != 0: substituting Y = XZ reduces to Z^2 + Z = X + t/X, solvable in Z
  // exactly when Tr(X + t/X) = 0, and then twice.
  for (fq_t x = 1; x < F.q(); ++x) {
    const fq_t w = F.add(x, F.mul(t, F.inv(x)));
    if (F.trace(w) == 0) count += 2;
  }
  return count + 1;  // point at infinity
}

std::uint64_t ec_count_p3(const FqField& F, fq_t t) {
  if (F.p() != 3) throw std::invalid_argument("curve Y^2 = X^3 + X^2 - t lives over F_{3^m}");
  if (t == 0) throw std::invalid_argument("curve parameter t must be nonzero");
  // #E = 1 + sum over X of (1 + chi(X^3 + X^2 - t)), chi the quadratic
  // character (chi(0) = 0); chi reads off the parity of the discrete log.
  const fq_t neg_t = F.neg(t);
  long long chi_sum = 0;
  for (fq_t x = 0; x < F.q(); ++x) {
    const fq_t x2 = F.mul(x, x);
    const fq_t u = F.add(F.add(F.mul(x2, x), x2), neg_t);
    if (u != 0) chi_sum += (F.log(u) & 1) ? -1 : 1;
  }
  return static_cast<std::uint64_t>(1 + static_cast<long long>(F.q()) + chi_sum);
}

}  // namespace kloverify
