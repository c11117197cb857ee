#include "kloverify/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "kloverify/class_number.hpp"
#include "kloverify/fq.hpp"
#include "kloverify/hecke.hpp"
#include "kloverify/int_poly.hpp"
#include "kloverify/kloosterman.hpp"
#include "kloverify/padic.hpp"
#include "kloverify/padic_l.hpp"
#include "kloverify/sym_l.hpp"
#include "kloverify/util.hpp"

namespace kloverify {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::logic_error(msg); }

long long ipow(int p, int m) {
  long long r = 1;
  for (int i = 0; i < m; ++i) r *= p;
  return r;
}

std::string fmt(long long v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// criterion 1: -Kl = 1 (mod pi^2) and Kl^2 < 4q, exhaustively
std::string suite_congruence(int shards) {
  long long checked = 0;
  for (int p : {2, 3}) {
    const int lo = (p == 2) ? 2 : 1, hi = (p == 2) ? 13 : 8;
    const int step = (p == 2) ? 4 : 3;
    for (int m = lo; m <= hi; ++m) {
      // the scan itself enforces both bounds per t (hard errors);
      // re-check the congruence on the aggregated keys as well
      const FreqTable tbl = freq_table_direct(p, m, shards);
      const long long q = ipow(p, m);
      for (const auto& [f, cnt] : tbl.freq) {
        if (((f % step) + step) % step != 1)
          fail("frequency key " + fmt(f) + " not 1 mod " + fmt(step) + " at q=" + fmt(q));
        if (f * f >= 4 * q) fail("frequency key " + fmt(f) + " breaks f^2 < 4q at q=" + fmt(q));
      }
      checked += q - 1;
    }
  }
  return fmt(checked) + " Kloosterman values within bounds (p=2 m<=13, p=3 m<=8)";
}

// criterion 2: frequency of -Kl = f equals the Hurwitz class number H(f^2-4q)
std::string suite_freqclass(int shards) {
  long long slots = 0;
  for (int p : {2, 3}) {
    const int lo = (p == 2) ? 2 : 1, hi = (p == 2) ? 10 : 6;
    for (int m = lo; m <= hi; ++m) {
      const FreqTable tbl = freq_table_direct(p, m, shards);
      const long long q = ipow(p, m);
      std::map<long long, long long> expected;
      for (long long f : admissible_f(p, m)) {
        const mpq_class H = kronecker_H(f * f - 4 * q);
        if (H.get_den() != 1)
          fail("H(" + fmt(f * f - 4 * q) + ") is not an integer");
        expected[f] = static_cast<long long>(H.get_num().get_si());
      }
      if (tbl.freq != expected) {
        for (const auto& [f, cnt] : expected)
          if (!tbl.freq.count(f) || tbl.freq.at(f) != cnt)
            fail("at q=" + fmt(q) + ", f=" + fmt(f) + ": counted " +
                 fmt(tbl.freq.count(f) ? tbl.freq.at(f) : 0) + " but H gives " + fmt(cnt));
        fail("at q=" + fmt(q) + ": extra frequency keys beyond the admissible set");
      }
      slots += static_cast<long long>(expected.size());
    }
  }
  return fmt(slots) + " frequency slots match class numbers exactly";
}

// criterion 3: -Kl_q(t) = q + 1 - #E_t(F_q) for the two companion curves
std::string suite_eccount(int) {
  long long curves = 0;
  for (int m = 1; m <= 10; ++m) {
    const FqField& F = field(2, m);
    const long long q = ipow(2, m);
    for (fq_t t = 1; t < F.q(); ++t) {
      const long long kl = kl_sum(F, t);
      const long long ec = static_cast<long long>(ec_count_p2(F, t));
      if (ec != q + 1 + kl)
        fail("p=2 m=" + fmt(m) + " t=" + fmt(static_cast<long long>(t)) + ": #E=" + fmt(ec) +
             " but q+1+Kl=" + fmt(q + 1 + kl));
      ++curves;
    }
  }
  for (int m = 1; m <= 6; ++m) {
    const FqField& F = field(3, m);
    const long long q = ipow(3, m);
    for (fq_t t = 1; t < F.q(); ++t) {
      const long long kl = kl_sum(F, t);
      const long long ec = static_cast<long long>(ec_count_p3(F, t));
      if (ec != q + 1 + kl)
        fail("p=3 m=" + fmt(m) + " t=" + fmt(static_cast<long long>(t)) + ": #E=" + fmt(ec) +
             " but q+1+Kl=" + fmt(q + 1 + kl));
      ++curves;
    }
  }
  return fmt(curves) + " curve point counts match Kloosterman sums";
}

// criterion 4: Tr(U_p^m | S_{k+2}) = -1 - S_m, traces from the class-number
// formula vs. power sums from direct enumeration
std::string suite_traceid(int shards) {
  long long identities = 0;
  for (int p : {2, 3}) {
    const int mmax = (p == 2) ? 10 : 6;
    for (int m = 1; m <= mmax; ++m) {
      const FreqTable tbl = freq_table_direct(p, m, shards);
      const mpz_class q = zpow(static_cast<unsigned long>(p), static_cast<unsigned long>(m));
      for (int k = 1; k <= 20; ++k) {
        mpz_class S = 0;
        for (const auto& [f, cnt] : tbl.freq)
          S += z_ll(cnt) * cheb(static_cast<unsigned long>(k), z_ll(f), q);
        const mpz_class tr = (p == 2) ? trace_gamma1_4(m, k + 2) : trace_gamma1_3(m, k + 2);
        if (tr != -1 - S)
          fail("p=" + fmt(p) + " m=" + fmt(m) + " k=" + fmt(k) + ": trace " + tr.get_str() +
               " != -1 - S_m with S_m = " + S.get_str());
        ++identities;
      }
    }
  }
  return fmt(identities) + " trace identities hold (k<=20; p=2 m<=10, p=3 m<=6)";
}

// criterion 5: the L-polynomial terminates (zero tail) for k <= 20
std::string suite_polynomiality(int shards) {
  const SymL base = assemble_L(2, 1, PowerSumMode::kAuto, shards);
  if (base.L != IntPoly{mpz_class(1), mpz_class(-1)})
    fail("L(Sym^1 /F_2) is not 1 - s");
  int count = 0;
  for (int p : {2, 3})
    for (int k = 1; k <= 20; ++k) {
      assemble_L(p, k, PowerSumMode::kAuto, shards);  // asserts tail + degree internally
      ++count;
    }
  return fmt(count) + " L-polynomials with clean tails; L(Sym^1 /F_2) = 1 - s";
}

// criterion 6: ord_p a_m >= m(m-1), with equality for p = 2 and odd k <= 11
std::string suite_newton(int shards) {
  long long coeffs = 0;
  for (int p : {2, 3})
    for (int k = 1; k <= 20; ++k) {
      const SymL s = assemble_L(p, k, PowerSumMode::kAuto, shards);
      const bool equality = (p == 2) && (k % 2 == 1) && (k <= 11);
      for (int m = 1; m <= poly_degree(s.L); ++m) {
        const mpz_class& a = s.L[static_cast<std::size_t>(m)];
        const long long bound = static_cast<long long>(m) * (m - 1);
        if (a == 0) {
          if (equality)
            fail("p=2 k=" + fmt(k) + ": a_" + fmt(m) + " = 0 breaks ord = m(m-1)");
          continue;
        }
        const long long v = valuation(a, static_cast<unsigned long>(p));
        if (v < bound)
          fail("p=" + fmt(p) + " k=" + fmt(k) + ": ord a_" + fmt(m) + " = " + fmt(v) +
               " < " + fmt(bound));
        if (equality && v != bound)
          fail("p=2 k=" + fmt(k) + ": ord a_" + fmt(m) + " = " + fmt(v) +
               " != " + fmt(bound) + " (equality case)");
        ++coeffs;
      }
    }
  return fmt(coeffs) + " coefficient valuations on or above m(m-1)";
}

// criterion 7: even-k factorization, functional equation, purity of the middle
std::string suite_evenfactor(int shards) {
  int count = 0;
  for (int p : {2, 3})
    for (int k : {4, 6, 8, 10, 12}) {
      const SymL s = assemble_L(p, k, PowerSumMode::kAuto, shards);
      const Factorization f = factor_even(s);
      if (factorization_product(f, p, k) != s.L)
        fail("p=" + fmt(p) + " k=" + fmt(k) + ": factorization round-trip mismatch");
      if (poly_degree(f.middle) != 2 * dim_cusp_sl2z(k + 2))
        fail("p=" + fmt(p) + " k=" + fmt(k) + ": deg M = " + fmt(poly_degree(f.middle)) +
             " != 2 dim S_" + fmt(k + 2) + "(SL2(Z))");
      const mpz_class root = zpow(static_cast<unsigned long>(p),
                                  static_cast<unsigned long>(k / 2));
      IntPoly tmp;
      if (poly_divide_one_minus_rs(f.middle, -root, tmp) ||
          poly_divide_one_minus_rs(f.middle, root, tmp))
        fail("p=" + fmt(p) + " k=" + fmt(k) + ": middle factor still has a root at -+p^(-k/2)");
      const mpz_class c = check_functional_equation(f.middle, p, k);
      const int d = poly_degree(f.middle);
      if (c * c != zpow(zpow(static_cast<unsigned long>(p),
                             static_cast<unsigned long>(k + 1)),
                        static_cast<unsigned long>(d)))
        fail("p=" + fmt(p) + " k=" + fmt(k) + ": c^2 != p^((k+1) deg M)");
      const PurityReport rep = check_purity(f.middle, p, k);
      if (!rep.surrogate_ok || !rep.numeric_ok) {
        std::ostringstream os;
        os << "p=" << p << " k=" << k << ": middle factor impure (deviation "
           << rep.worst_deviation << ")";
        fail(os.str());
      }
      ++count;
    }
  return fmt(count) + " even-k factorizations exact, middles pure of weight k+1";
}

// criterion 8: odd k, everything but (1 - s) is pure of weight k+1
std::string suite_oddpurity(int shards) {
  int count = 0;
  for (int p : {2, 3})
    for (int k : {3, 5, 7, 9}) {
      const SymL s = assemble_L(p, k, PowerSumMode::kAuto, shards);
      IntPoly rest;
      if (!poly_divide_one_minus_rs(s.L, mpz_class(1), rest))
        fail("p=" + fmt(p) + " k=" + fmt(k) + ": (1 - s) is not a factor");
      const PurityReport rep = check_purity(rest, p, k);
      if (!rep.surrogate_ok || !rep.numeric_ok) {
        std::ostringstream os;
        os << "p=" << p << " k=" << k << ": L/(1-s) impure (deviation "
           << rep.worst_deviation << ")";
        fail(os.str());
      }
      ++count;
    }
  return fmt(count) + " odd-k polynomials pure of weight k+1 away from s = 1";
}

// criterion 9: the two routes to L(Sym^(infinity,kappa)) and its polygon
std::string suite_padiclimit(int) {
  int checks = 0;
  for (long kap : {1L, -1L, 5L, -3L}) {
    const PadicNum kappa = padic_make(2, mpz_class(kap), 64);
    const PadicSeries eu = l_sym_infty_euler(2, kappa, 6, 48);
    const LimitResult lm = l_sym_infty_limit(2, kappa, 6, 64);
    for (int n = 0; n <= 6; ++n) {
      const long agree = padic_agreement(eu[static_cast<std::size_t>(n)],
                                         lm.stabilized[static_cast<std::size_t>(n)]);
      if (agree < 40)
        fail("p=2 kappa=" + fmt(kap) + ": routes agree only mod 2^" + fmt(agree) +
             " at c_" + fmt(n));
    }
    const CertifiedPolygon pol = slopes_report(eu);
    std::vector<std::pair<long long, long long>> want;
    for (long long n = 0; n <= 6; ++n) want.emplace_back(n, n * (n - 1));
    if (pol.hull.vertices != want)
      fail("p=2 kappa=" + fmt(kap) + ": polygon vertices are not (n, n(n-1))");
    ++checks;
  }
  for (long kap : {1L, -1L}) {
    const PadicNum kappa = padic_make(3, mpz_class(kap), 64);
    const PadicSeries eu = l_sym_infty_euler(3, kappa, 6, 32);
    const LimitResult lm = l_sym_infty_limit(3, kappa, 6, 64);
    for (int n = 0; n <= 6; ++n) {
      const long agree = padic_agreement(eu[static_cast<std::size_t>(n)],
                                         lm.stabilized[static_cast<std::size_t>(n)]);
      if (agree < 25)
        fail("p=3 kappa=" + fmt(kap) + ": routes agree only mod 3^" + fmt(agree) +
             " at c_" + fmt(n));
      const auto [v, exact] = padic_val(eu[static_cast<std::size_t>(n)]);
      if (v < static_cast<long>(n) * (n - 1))
        fail("p=3 kappa=" + fmt(kap) + ": ord c_" + fmt(n) + " certified only >= " + fmt(v));
      (void)exact;
    }
    ++checks;
  }
  return fmt(checks) + " kappa values: Euler and limit routes agree, polygons certified";
}

// criterion 10: unit-root L-function ratio identity, closed form, interlacing
std::string suite_unitroot(int) {
  int checks = 0;
  for (int p : {2, 3}) {
    const long M = (p == 2) ? 48 : 32;
    const std::vector<long> kaps = (p == 2) ? std::vector<long>{1, -1, 3}
                                            : std::vector<long>{1, -1};
    for (long kap : kaps) {
      const PadicNum kappa = padic_make(p, mpz_class(kap), 64);
      const LUnitResult lu = l_unit(p, kappa, 6, M);  // ratio asserted inside
      if (!lu.has_ratio) fail("ratio route unexpectedly unavailable");
      ++checks;
    }
    // kappa = 0 closed form: zeta of the torus, (1 - s)/(1 - ps)
    const PadicNum zero = padic_make(p, mpz_class(0), 64);
    const LUnitResult lu0 = l_unit(p, zero, 6, M);
    if (lu0.has_ratio) fail("kappa = 0 must be excluded from the ratio route");
    for (int n = 0; n <= 6; ++n) {
      const mpz_class want = (n == 0) ? mpz_class(1)
                                      : mpz_class((p - 1) * zpow(static_cast<unsigned long>(p),
                                                                 static_cast<unsigned long>(n - 1)));
      if (!padic_eq(lu0.direct[static_cast<std::size_t>(n)], padic_make(p, want, M)))
        fail("p=" + fmt(p) + " kappa=0: c_" + fmt(n) + " != (p-1) p^(n-1)");
    }
    ++checks;
  }
  // slope interlacing for p = 2, odd kappa: numerator slopes even, denominator
  // (at 2s) slopes odd -- disjoint, so no zero/pole cancellation can occur
  for (long kap : {1L, 3L, -1L}) {
    const PadicNum kappa = padic_make(2, mpz_class(kap), 64);
    const PadicNum kappa2 = padic_sub(kappa, padic_make(2, mpz_class(2), 64));
    const CertifiedPolygon num = slopes_report(l_sym_infty_euler(2, kappa, 5, 48));
    const CertifiedPolygon den =
        slopes_report(series_scale_ps(l_sym_infty_euler(2, kappa2, 5, 48)));
    std::vector<std::pair<long long, long long>> want_num, want_den;
    for (long long n = 0; n <= 5; ++n) {
      want_num.emplace_back(n, n * (n - 1));
      want_den.emplace_back(n, n * n);
    }
    if (num.hull.vertices != want_num)
      fail("kappa=" + fmt(kap) + ": numerator vertices off (n, n(n-1))");
    if (den.hull.vertices != want_den)
      fail("kappa=" + fmt(kap) + ": denominator-at-2s vertices off (n, n^2)");
    for (const auto& [slope, mult] : num.hull.slopes)
      if (slope.get_den() != 1 || slope.get_num() % 2 != 0)
        fail("kappa=" + fmt(kap) + ": numerator slope not an even integer");
    for (const auto& [slope, mult] : den.hull.slopes)
      if (slope.get_den() != 1 || (slope.get_num() % 2) == 0)
        fail("kappa=" + fmt(kap) + ": denominator slope not an odd integer");
    ++checks;
  }
  return fmt(checks) + " unit-root identities, closed form, and interlacing certified";
}

struct SuiteSpec {
  int criterion;
  const char* name;
  std::function<std::string(int)> run;
};

const std::vector<SuiteSpec>& specs() {
  static const std::vector<SuiteSpec> s = {
      {1, "congruence", suite_congruence},
      {2, "freqclass", suite_freqclass},
      {3, "eccount", suite_eccount},
      {4, "traceid", suite_traceid},
      {5, "polynomiality", suite_polynomiality},
      {6, "newton", suite_newton},
      {7, "evenfactor", suite_evenfactor},
      {8, "oddpurity", suite_oddpurity},
      {9, "padiclimit", suite_padiclimit},
      {10, "unitroot", suite_unitroot},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : specs()) n.push_back(s.name);
    return n;
  }();
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& which, int shards) {
  std::vector<SuiteResult> out;
  bool matched = false;
  for (const auto& spec : specs()) {
    if (which != "all" && which != spec.name) continue;
    matched = true;
    SuiteResult r;
    r.criterion = spec.criterion;
    r.name = spec.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = spec.run(shards);
      r.pass = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
      r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  if (!matched) throw std::invalid_argument("unknown suite: " + which);
  return out;
}

}  // namespace kloverify
