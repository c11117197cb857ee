#pragma once

#include <gmpxx.h>

namespace kloverify {

// h(D): weighted number of primitive reduced positive-definite binary
// quadratic forms a x^2 + b xy + c y^2 of discriminant D = b^2 - 4ac < 0
// (reduced: |b| <= a <= c, with b >= 0 when |b| = a or a = c).
// Weighted means h(-3) = 1/3 and h(-4) = 1/2 (extra automorphisms); every
// other discriminant contributes integer counts.
// Throws std::invalid_argument unless D < 0 and D = 0 or 1 (mod 4).
mpq_class class_number_h(long long D);

// The two interchangeable enumeration strategies behind class_number_h,
// exposed so they can be cross-checked against each other:
//   formloop scans (a, b) pairs directly, O(|D|) - used for small |D|;
//   bloop scans b and splits (b^2 - D)/4 = a*c via divisor enumeration,
//   O(|D|^(1/2 + eps)) with a shared smallest-prime-factor sieve.
mpq_class class_number_h_formloop(long long D);
mpq_class class_number_h_bloop(long long D);

// Hurwitz-Kronecker class number, indexed by the (negative) discriminant:
//   H(D) = sum of h(D / f^2) over f >= 1 with f^2 | D and D / f^2 = 0,1 (mod 4).
// Conventions: H(0) = -1/12; H(D) = 0 when D = 2,3 (mod 4); D > 0 throws.
// Memoized (unbounded, process lifetime): the trace formulas evaluate it on
// overlapping discriminant sets many times.
mpq_class kronecker_H(long long D);

}  // namespace kloverify
