#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace kloverify {

// Elements of F_{p^m} (p = 2 or 3) live in the power basis
//   c_0 + c_1 x + ... + c_{m-1} x^{m-1}   (mod a fixed monic irreducible of degree m)
// and are packed as the base-p integer  sum c_j p^j  <  p^m.
// Packed value 0 is the zero element; every nonzero packed value is a unit.
using fq_t = std::uint64_t;

// Representation-independent view of an element (m residues mod p, low degree first).
struct FqElem {
  int p = 0;
  int m = 0;
  std::vector<int> coeffs;
};

class FqField {
 public:
  // Throws std::invalid_argument unless p in {2,3} and 1 <= m <= 30.
  // The modulus is taken from a fixed table for m <= 16; for larger m it is the
  // first monic irreducible of degree m with nonzero constant term, coefficient
  // vectors ordered as base-p integers (high digit most significant).
  FqField(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  std::uint64_t q() const { return q_; }
  // m+1 coefficients of the modulus, low degree first; leading coefficient 1
  const std::vector<int>& modulus() const { return modulus_; }

  // --- arithmetic on packed values ---
  fq_t add(fq_t a, fq_t b) const;
  fq_t neg(fq_t a) const;
  fq_t sub(fq_t a, fq_t b) const { return add(a, neg(b)); }
  fq_t mul(fq_t a, fq_t b) const;
  fq_t inv(fq_t a) const;  // throws std::domain_error at zero
  fq_t div(fq_t a, fq_t b) const { return mul(a, inv(b)); }
  fq_t pow(fq_t a, std::uint64_t e) const;
  fq_t frobenius(fq_t a) const { return pow(a, static_cast<std::uint64_t>(p_)); }
  int trace(fq_t a) const;  // absolute trace, value in {0,...,p-1}

  // --- multiplicative tables (built when q <= table_cap()) ---
  static std::uint64_t table_cap() { return 1u << 20; }
  bool has_tables() const { return !exp_.empty(); }
  // canonical generator: the packed-smallest multiplicative generator
  fq_t generator() const;
  std::uint32_t log(fq_t a) const;           // discrete log base generator(), a != 0
  fq_t exp(std::uint32_t i) const;           // generator()^i, 0 <= i < q-1
  int trace_at_index(std::uint32_t i) const { return trace_log_[i]; }

  // --- conversions ---
  fq_t from_coeffs(const std::vector<int>& coeffs) const;
  std::vector<int> to_coeffs(fq_t a) const;
  FqElem elem(fq_t a) const { return FqElem{p_, m_, to_coeffs(a)}; }

 private:
  void build_tables();
  fq_t mul_generic(fq_t a, fq_t b) const;

  int p_ = 0;
  int m_ = 0;
  std::uint64_t q_ = 0;
  std::vector<int> modulus_;

  std::vector<fq_t> exp_;          // exp_[i] = g^i, size q-1
  std::vector<std::uint32_t> log_; // log_[packed], size q (entry 0 unused)
  std::vector<std::int8_t> trace_packed_;  // trace by packed value, size q
  std::vector<std::int8_t> trace_log_;     // trace_log_[i] = trace(g^i), size q-1
};

// Shared per-(p,m) field instances; builds (and keeps) tables once.
const FqField& field(int p, int m);

// Minimal polynomial over F_p of the element with multiplicative index `log_t`
// (i.e. of g^log_t): returns d+1 coefficients in {0,...,p-1}, low degree first,
// monic, where d is the size of the Frobenius orbit of the element.
std::vector<int> minimal_polynomial(const FqField& F, std::uint32_t log_t);

// Degree-m monic irreducibility test over F_p for small coefficient vectors.
bool poly_is_irreducible(int p, const std::vector<int>& poly);

// The frozen modulus table for 1 <= m <= 16, as packed non-leading
// coefficients (see FqField); index 0 is unused.  Cheap (no field tables are
// built) -- run manifests embed it so reports pin the field presentation.
const std::array<std::uint32_t, 17>& modulus_table(int p);

}  // namespace kloverify
