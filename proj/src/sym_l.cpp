#include "kloverify/sym_l.hpp"

#include <complex>
#include <sstream>
#include <stdexcept>

#include "kloverify/kloosterman.hpp"
#include "kloverify/util.hpp"

namespace kloverify {

namespace {

std::string nth(int n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

}  // namespace

IntPoly assemble_raw(const std::vector<mpz_class>& S) {
  const std::size_t M = S.size();
  IntPoly a(M + 1);
  a[0] = 1;
  for (std::size_t n = 1; n <= M; ++n) {
    mpz_class acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += S[j - 1] * a[n - j];
    if (acc % static_cast<long>(n) != 0)
      throw std::logic_error("Newton identity gave a non-integral coefficient a_" + nth(static_cast<int>(n)));
    a[n] = acc / static_cast<long>(n);
  }
  return a;
}

int detect_degree(const IntPoly& with_slack) {
  int d = static_cast<int>(with_slack.size()) - 1;
  while (d >= 0 && with_slack[static_cast<std::size_t>(d)] == 0) --d;
  if (d < 0) throw std::logic_error("degree detection on the zero polynomial");
  const int slack = static_cast<int>(with_slack.size()) - 1 - d;
  if (slack < kMinDegreeSlack)
    throw std::logic_error("ambiguous tail: a_" + nth(d) + " != 0 leaves only " +
                           nth(slack) + " trailing zeros");
  return d;
}

SymL assemble_L(int p, int k, PowerSumMode mode, int shards, int M_override) {
  if (k < 1) throw std::invalid_argument("symmetric power k must be >= 1");
  const int expected_degree = 1 + dim_cusp_gamma1(p, k + 2);
  const int M = (M_override > 0) ? M_override : expected_degree + kDegreeSlack;
  if (M < expected_degree + kMinDegreeSlack)
    throw std::invalid_argument("truncation order leaves fewer than 5 slack coefficients");

  SymL out;
  out.p = p;
  out.k = k;
  out.power_sums = power_sums(p, k, M, mode, shards);
  std::uint64_t q = 1;
  for (int m = 1; m <= M; ++m) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kDirectEnumerationCap || mode == PowerSumMode::kClassNumber) {
      out.classnumber_mode = true;
      break;
    }
  }

  out.L = assemble_raw(out.power_sums);
  // 1 + dim S_{k+2} bounds the degree; U_p can be singular on the cusp space
  // (p = 2, even k), so the detected degree may fall strictly below the bound.
  const int degree = detect_degree(out.L);
  if (degree > expected_degree)
    throw std::logic_error("detected degree " + nth(degree) + " exceeds 1 + dim S_" +
                           nth(k + 2) + " = " + nth(expected_degree));
  out.L.resize(static_cast<std::size_t>(degree) + 1);
  return out;
}

std::vector<mpz_class> power_sums_from_poly(const IntPoly& L, int mmax) {
  std::vector<mpz_class> S(static_cast<std::size_t>(mmax));
  for (int n = 1; n <= mmax; ++n) {
    mpz_class acc = (n <= poly_degree(L)) ? mpz_class(n * L[static_cast<std::size_t>(n)]) : mpz_class(0);
    for (int j = 1; j < n; ++j)
      if (n - j <= poly_degree(L)) acc -= S[static_cast<std::size_t>(j - 1)] * L[static_cast<std::size_t>(n - j)];
    S[static_cast<std::size_t>(n - 1)] = acc;
  }
  return S;
}

Factorization factor_even(const SymL& sym) {
  if (sym.k % 2 != 0) throw std::invalid_argument("factor_even needs even k");
  const mpz_class root = zpow(static_cast<unsigned long>(sym.p),
                              static_cast<unsigned long>(sym.k / 2));
  Factorization f;
  IntPoly cur;
  if (!poly_divide_one_minus_rs(sym.L, mpz_class(1), cur))
    throw std::logic_error("(1 - s) does not divide L(Sym^k)");
  IntPoly next;
  while (poly_divide_one_minus_rs(cur, -root, next)) {  // (1 + p^(k/2) s) factors
    cur = next;
    ++f.mult_plus;
  }
  while (poly_divide_one_minus_rs(cur, root, next)) {   // (1 - p^(k/2) s) factors
    cur = next;
    ++f.mult_minus;
  }
  f.middle = cur;
  return f;
}

IntPoly factorization_product(const Factorization& f, int p, int k) {
  const mpz_class root = zpow(static_cast<unsigned long>(p),
                              static_cast<unsigned long>(k / 2));
  IntPoly prod{mpz_class(1), mpz_class(-1)};  // (1 - s)
  for (int i = 0; i < f.mult_plus; ++i) prod = poly_mul(prod, IntPoly{mpz_class(1), root});
  for (int i = 0; i < f.mult_minus; ++i) prod = poly_mul(prod, IntPoly{mpz_class(1), -root});
  return poly_mul(prod, f.middle);
}

mpz_class check_functional_equation(const IntPoly& M, int p, int k) {
  const int d = poly_degree(M);
  if (d < 0) throw std::invalid_argument("functional equation on the zero polynomial");
  if (d == 0) {
    if (M[0] != 1) throw std::logic_error("degree-0 middle factor is not 1");
    return mpz_class(1);
  }
  const mpz_class c = M[static_cast<std::size_t>(d)];  // j = 0 row with m_0 = 1
  const mpz_class pk1 = zpow(static_cast<unsigned long>(p),
                             static_cast<unsigned long>(k + 1));
  mpz_class scale = 1;
  for (int j = 0; j <= d; ++j) {
    if (M[static_cast<std::size_t>(d - j)] * scale != c * M[static_cast<std::size_t>(j)])
      throw std::logic_error("no consistent functional-equation constant at coefficient " + nth(j));
    scale *= pk1;
  }
  return c;
}

PurityReport check_purity(const IntPoly& poly, int p, int k) {
  PurityReport rep;
  const int d = poly_degree(poly);
  if (d < 0) throw std::invalid_argument("purity check on the zero polynomial");
  rep.degree = d;

  // exact surrogate: self-inversive coefficient test = functional equation
  rep.surrogate_ok = true;
  try {
    check_functional_equation(poly, p, k);
  } catch (const std::logic_error&) {
    rep.surrogate_ok = false;
  }

  if (d == 0) {  // empty root set
    rep.numeric_ok = rep.surrogate_ok;
    return rep;
  }

  // scale s = z / p^((k+1)/2): pure reciprocal roots land on the unit circle,
  // and the scaled coefficients are bounded by binomial(d, j)
  const double w = static_cast<double>(k + 1) / 2.0;
  std::vector<std::complex<double>> c(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    const double scale = std::pow(static_cast<double>(p), -w * j);
    c[static_cast<std::size_t>(j)] = mpz_get_d(poly[static_cast<std::size_t>(j)].get_mpz_t()) * scale;
  }
  for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(j)] /= c[static_cast<std::size_t>(d)];

  // Durand-Kerner on the monic scaled polynomial
  std::vector<std::complex<double>> z(static_cast<std::size_t>(d));
  const std::complex<double> seed(0.4, 0.9);
  z[0] = seed;
  for (int i = 1; i < d; ++i) z[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i - 1)] * seed;
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 0;
    for (int j = d; j >= 0; --j) v = v * x + c[static_cast<std::size_t>(j)];
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double worst = 0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> den = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      const std::complex<double> delta = eval(z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= delta;
      worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(z[static_cast<std::size_t>(i)])));
    }
    if (worst < kRootRelTol / 10) break;
  }

  rep.worst_deviation = 0;
  for (int i = 0; i < d; ++i)
    rep.worst_deviation = std::max(rep.worst_deviation,
                                   std::abs(std::abs(z[static_cast<std::size_t>(i)]) - 1.0));
  rep.numeric_ok = rep.worst_deviation <= kPurityRelTol;
  return rep;
}

}  // namespace kloverify
