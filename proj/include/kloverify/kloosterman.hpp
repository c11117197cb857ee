#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kloverify/fq.hpp"

namespace kloverify {

// Exact value of the Kloosterman sum over F_q (q = p^m, p in {2,3}):
//   Kl_q(t) = sum over x in F_q^* of zeta_p^Tr(x + t/x),
// computed from trace-fiber counts; always a rational integer.
// For p = 3 the computation asserts that the two nontrivial character fibers
// balance (N_1 = N_2), which is what makes the sum rational.
// Enforced invariants (hard errors when violated):
//   * strict square-root bound  Kl^2 < 4q,
//   * -Kl = 1 (mod 4) when p = 2, m >= 2;  -Kl = 1 (mod 3) when p = 3.
long long kl_sum(const FqField& F, fq_t t);

struct FreqTable {
  int p = 0;
  int m = 0;
  std::uint64_t q = 0;
  // key f = -Kl_q(t), value = number of t in F_q^* attaining it
  std::map<long long, long long> freq;
  // true when the table was synthesized from class numbers instead of
  // enumerating t (direct enumeration is capped at q <= 8192)
  bool synthesized = false;
};

// Frequency table of f = -Kl_q(t) over t in F_q^*.
// Direct enumeration for q <= 8192 (optionally sharded over t; the result is
// independent of the shard count).  For larger q the table is synthesized from
// Kronecker class numbers and flagged.  Post-condition: counts sum to q - 1.
FreqTable freq_table(int p, int m, int shards = 1);

// Like freq_table but never synthesizes; throws std::range_error above the cap.
FreqTable freq_table_direct(int p, int m, int shards = 1);

constexpr std::uint64_t kDirectEnumerationCap = 8192;

// All integers f that can appear as -Kl_q(t): f = 1 mod 4 (p = 2, m >= 2) or
// f = 1 mod 3 (p = 3), with f^2 < 4q.  Ordered 1, 1+step, ..., then 1-step, ...
std::vector<long long> admissible_f(int p, int m);

// Independent point counts of the companion elliptic curves, including the
// point at infinity.  They satisfy  #E = q + 1 - (-Kl_q(t))  and are used to
// cross-check kl_sum.
//   p = 2:  Y^2 + XY = X^3 + tX   (singular Y-solution counted at X = 0)
std::uint64_t ec_count_p2(const FqField& F, fq_t t);
//   p = 3:  Y^2 = X^3 + X^2 - t
std::uint64_t ec_count_p3(const FqField& F, fq_t t);

}  // namespace kloverify
