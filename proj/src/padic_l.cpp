#include "kloverify/padic_l.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kloverify/cache.hpp"
#include "kloverify/fq.hpp"
#include "kloverify/hecke.hpp"
#include "kloverify/kloosterman.hpp"
#include "kloverify/util.hpp"

namespace kloverify {

namespace {

PadicNum padic_int(int p, long value, long prec) {
  return padic_make(p, mpz_class(value), prec);
}

void require_same_len(const PadicSeries& a, const PadicSeries& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("series length mismatch");
}

// stabilization schedules: exponents e with k_e = (kappa mod p^e) + p^e
const long kScheduleP2[] = {10, 16, 22, 28, 34, 40, 46, 52};
const long kScheduleP3[] = {7, 11, 15, 19, 23, 27, 31, 35};

// number of closed points of G_m/F_p of exact degree d, by Moebius counting
// of Frobenius orbits
long long expected_point_count(int p, int d) {
  auto mobius = [](int n) {
    int m = 1;
    for (int q = 2; q * q <= n; ++q) {
      if (n % q != 0) continue;
      n /= q;
      if (n % q == 0) return 0;
      m = -m;
    }
    if (n > 1) m = -m;
    return m;
  };
  long long total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    long long pe = 1;
    for (int i = 0; i < d / e; ++i) pe *= p;
    total += mobius(e) * (pe - 1);
  }
  if (total % d != 0) throw std::logic_error("orbit count is not divisible by the degree");
  return total / d;
}

std::string orbits_cache_name(int p, int d) {
  std::ostringstream os;
  os << "orbits_p" << p << "_d" << d << ".json";
  return os.str();
}

bool load_points_from_cache(int p, int d, const std::string& dir,
                            std::vector<ClosedPoint>& out) {
  nlohmann::ordered_json doc;
  if (!cache_load(dir, orbits_cache_name(p, d), doc)) return false;
  if (!doc.is_object() || doc.value("schema", 0) != 1 || doc.value("p", 0) != p ||
      doc.value("d", 0) != d || !doc.contains("orbits") || !doc["orbits"].is_array())
    return false;
  std::vector<ClosedPoint> pts;
  for (const auto& rec : doc["orbits"]) {
    ClosedPoint cp;
    cp.d = d;
    cp.rep = rec.value("t", std::uint64_t(0));
    cp.kl = rec.value("kl", (long long)0);
    if (!rec.contains("minpoly") || !rec["minpoly"].is_array()) return false;
    for (const auto& c : rec["minpoly"]) cp.minpoly.push_back(c.get<int>());
    if (static_cast<int>(cp.minpoly.size()) != d + 1 || cp.minpoly.back() != 1)
      return false;
    pts.push_back(std::move(cp));
  }
  if (static_cast<long long>(pts.size()) != expected_point_count(p, d)) return false;
  out = std::move(pts);
  return true;
}

void store_points_to_cache(int p, int d, const std::string& dir,
                           const std::vector<ClosedPoint>& pts) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["p"] = p;
  doc["d"] = d;
  auto& arr = doc["orbits"] = nlohmann::ordered_json::array();
  for (const auto& cp : pts) {
    nlohmann::ordered_json rec;
    rec["t"] = cp.rep;
    rec["minpoly"] = cp.minpoly;
    rec["kl"] = cp.kl;
    arr.push_back(std::move(rec));
  }
  cache_store(dir, orbits_cache_name(p, d), doc);
}

void require_euler_range(int p, int N) {
  const int cap = (p == 2) ? kEulerCapP2 : kEulerCapP3;
  if (N < 0 || N > cap)
    throw std::range_error("Euler-product truncation capped at N <= 12 (p=2) / 10 (p=3)");
}

// multiply acc by the geometric factor (1 - c s^d)^(-1) in place:
// out = acc + c s^d out
void mul_geometric_inverse(PadicSeries& acc, const PadicNum& c, int d) {
  for (std::size_t n = static_cast<std::size_t>(d); n < acc.size(); ++n)
    acc[n] = padic_add(acc[n], padic_mul(c, acc[n - static_cast<std::size_t>(d)]));
}

PadicSeries ones_series(int p, int N, long prec) {
  PadicSeries c;
  c.reserve(static_cast<std::size_t>(N) + 1);
  c.push_back(padic_int(p, 1, prec + 2 * N + 16));  // headroom; mins do the rest
  for (int n = 1; n <= N; ++n) c.push_back(padic_make(p, mpz_class(0), prec + 2 * N + 16));
  return c;
}

// Euler accumulation shared by l_sym_infty_euler (all i) and the direct
// unit-root product (i = 0 only).
PadicSeries euler_accumulate(int p, const PadicNum& kappa, int N, long M,
                             const std::string& cache_dir, bool unit_factor_only) {
  require_euler_range(p, N);
  if (kappa.p != p) throw std::invalid_argument("kappa has the wrong characteristic");
  if (kappa.prec < M)
    throw std::range_error("kappa must be known at least to the working precision");
  PadicSeries acc = ones_series(p, N, M);
  for (int d = 1; d <= N; ++d) {
    for (const ClosedPoint& cp : closed_points(p, d, cache_dir)) {
      const UnitRoot ur = unit_root(p, d, z_ll(cp.kl), M);
      const PadicNum pi0k = kappa_power(ur.pi0, kappa, M);
      if (unit_factor_only) {
        mul_geometric_inverse(acc, pi0k, d);
        continue;
      }
      const PadicNum r = padic_div(ur.pi1, ur.pi0);  // valuation exactly d
      PadicNum ci = pi0k;                            // pi0^(kappa - i) pi1^i
      for (long i = 0; i * d < M; ++i) {
        mul_geometric_inverse(acc, ci, d);
        ci = padic_mul(ci, r);
      }
    }
  }
  for (auto& c : acc)
    if (c.prec < M) throw std::logic_error("Euler accumulation lost precision below target");
  return acc;
}

}  // namespace

PadicSeries series_mul(const PadicSeries& a, const PadicSeries& b, int N) {
  require_same_len(a, b);
  if (a.empty()) return {};
  const int p = a[0].p;
  PadicSeries out;
  for (int n = 0; n <= N && n < static_cast<int>(a.size()); ++n) {
    PadicNum acc = padic_int(p, 0, a[0].prec + b[0].prec);
    for (int i = 0; i <= n; ++i)
      acc = padic_add(acc, padic_mul(a[static_cast<std::size_t>(i)],
                                     b[static_cast<std::size_t>(n - i)]));
    out.push_back(acc);
  }
  return out;
}

PadicSeries series_div(const PadicSeries& a, const PadicSeries& b, int N) {
  require_same_len(a, b);
  if (b.empty() || padic_val(b[0]).first != 0)
    throw std::invalid_argument("series division needs a unit constant term");
  PadicSeries q;
  for (int n = 0; n <= N && n < static_cast<int>(a.size()); ++n) {
    PadicNum acc = a[static_cast<std::size_t>(n)];
    for (int i = 1; i <= n; ++i)
      acc = padic_sub(acc, padic_mul(b[static_cast<std::size_t>(i)],
                                     q[static_cast<std::size_t>(n - i)]));
    q.push_back(padic_div(acc, b[0]));
  }
  return q;
}

PadicSeries series_scale_ps(const PadicSeries& a) {
  PadicSeries out;
  for (std::size_t n = 0; n < a.size(); ++n)
    out.push_back(padic_shift(a[n], static_cast<long>(n)));
  return out;
}

std::vector<ClosedPoint> closed_points(int p, int d, const std::string& cache_dir) {
  const std::string dir = resolve_cache_dir(cache_dir);
  std::vector<ClosedPoint> pts;
  if (!dir.empty() && load_points_from_cache(p, d, dir, pts)) return pts;

  const FqField& F = field(p, d);
  std::vector<bool> seen(F.q(), false);
  std::vector<fq_t> orbit;
  for (fq_t t = 1; t < F.q(); ++t) {
    if (seen[t]) continue;
    orbit.clear();
    fq_t x = t;
    do {
      seen[x] = true;
      orbit.push_back(x);
      x = F.frobenius(x);
    } while (x != t);
    if (static_cast<int>(orbit.size()) != d) continue;  // proper-subfield orbit
    ClosedPoint cp;
    cp.d = d;
    cp.rep = *std::min_element(orbit.begin(), orbit.end());
    cp.minpoly = minimal_polynomial(F, F.log(cp.rep));
    cp.kl = kl_sum(F, cp.rep);
    pts.push_back(std::move(cp));
  }
  if (static_cast<long long>(pts.size()) != expected_point_count(p, d))
    throw std::logic_error("closed-point enumeration lost an orbit");
  if (!dir.empty()) store_points_to_cache(p, d, dir, pts);
  return pts;
}

PadicSeries l_sym_infty_euler(int p, const PadicNum& kappa, int N, long M,
                              const std::string& cache_dir) {
  return euler_accumulate(p, kappa, N, M, cache_dir, /*unit_factor_only=*/false);
}

LimitResult l_sym_infty_limit(int p, const PadicNum& kappa, int N, long M) {
  if (p != 2 && p != 3) throw std::invalid_argument("p must be 2 or 3");
  if (kappa.p != p) throw std::invalid_argument("kappa has the wrong characteristic");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  const mpz_class modW = zpow(static_cast<unsigned long>(p), static_cast<unsigned long>(M));

  std::vector<long> sched;
  for (long e : (p == 2) ? std::vector<long>(std::begin(kScheduleP2), std::end(kScheduleP2))
                         : std::vector<long>(std::begin(kScheduleP3), std::end(kScheduleP3)))
    if (e <= kappa.prec) sched.push_back(e);
  if (sched.size() < 3)
    throw std::invalid_argument("kappa precision supports fewer than 3 schedule entries");

  LimitResult res;
  for (long e : sched) {
    const mpz_class pe = zpow(static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    mpz_class ke = kappa.residue % pe;
    if (ke < 0) ke += pe;
    ke += pe;
    res.schedule.push_back(ke);

    // S_m mod p^M for m <= N via frequency tables and the companion-matrix
    // Chebyshev ladder (k_e is astronomically large)
    PadicSeries a{padic_int(p, 1, M)};
    std::vector<PadicNum> S;
    for (int m = 1; m <= N; ++m) {
      const FreqTable tbl = freq_table(p, m);
      const mpz_class q = zpow(static_cast<unsigned long>(p), static_cast<unsigned long>(m));
      mpz_class acc = 0;
      for (const auto& [f, cnt] : tbl.freq)
        acc += z_ll(cnt) * cheb_mod(ke, z_ll(f), q, modW);
      S.push_back(padic_make(p, acc, M));
    }
    // Newton identities in tracked p-adic arithmetic: division by n costs
    // ord_p(n) digits, so a_n carries precision ~ M - ord_p(n!)
    for (int n = 1; n <= N; ++n) {
      PadicNum acc = padic_int(p, 0, M);
      for (int j = 1; j <= n; ++j)
        acc = padic_add(acc, padic_mul(S[static_cast<std::size_t>(j - 1)],
                                       a[static_cast<std::size_t>(n - j)]));
      a.push_back(padic_div(acc, padic_int(p, n, M + valuation_ull(
                                                        static_cast<unsigned long long>(n),
                                                        static_cast<unsigned long>(p)))));
    }
    res.per_entry.push_back(std::move(a));
  }

  // stabilization: pairwise agreement of the last three schedule entries
  const PadicSeries& A = res.per_entry[res.per_entry.size() - 3];
  const PadicSeries& B = res.per_entry[res.per_entry.size() - 2];
  const PadicSeries& C = res.per_entry[res.per_entry.size() - 1];
  for (int n = 0; n <= N; ++n) {
    const std::size_t i = static_cast<std::size_t>(n);
    const long t = std::min({padic_agreement(A[i], B[i]), padic_agreement(A[i], C[i]),
                             padic_agreement(B[i], C[i])});
    if (t < 1) {
      std::ostringstream os;
      os << "no stabilization at coefficient " << n << ": last three entries "
         << padic_to_string(A[i]) << ", " << padic_to_string(B[i]) << ", "
         << padic_to_string(C[i]);
      throw std::logic_error(os.str());
    }
    res.stabilized.push_back(padic_reduce(C[i], t));
  }
  return res;
}

LUnitResult l_unit(int p, const PadicNum& kappa, int N, long M,
                   const std::string& cache_dir) {
  LUnitResult res;
  res.direct = euler_accumulate(p, kappa, N, M, cache_dir, /*unit_factor_only=*/true);

  // the ratio identity excludes kappa = 0 and kappa = 2
  const bool is0 = padic_eq(kappa, padic_int(p, 0, kappa.prec));
  const bool is2 = padic_eq(kappa, padic_int(p, 2, kappa.prec));
  res.has_ratio = !is0 && !is2;
  if (!res.has_ratio) return res;

  const PadicNum kappa2 = padic_sub(kappa, padic_int(p, 2, kappa.prec));
  const PadicSeries num = l_sym_infty_euler(p, kappa, N, M, cache_dir);
  const PadicSeries den = series_scale_ps(l_sym_infty_euler(p, kappa2, N, M, cache_dir));
  res.ratio = series_div(num, den, N);

  for (int n = 0; n <= N; ++n) {
    const std::size_t i = static_cast<std::size_t>(n);
    if (!padic_eq(res.direct[i], res.ratio[i])) {
      std::ostringstream os;
      os << "unit-root routes disagree at coefficient " << n << ": direct "
         << padic_to_string(res.direct[i]) << " vs ratio " << padic_to_string(res.ratio[i]);
      throw std::logic_error(os.str());
    }
  }
  return res;
}

CertifiedPolygon slopes_report(const PadicSeries& c) {
  if (c.empty()) throw std::invalid_argument("slopes of an empty series");
  std::vector<std::pair<long long, long long>> exact;
  for (std::size_t n = 0; n < c.size(); ++n) {
    const auto [v, is_exact] = padic_val(c[n]);
    if (is_exact) exact.emplace_back(static_cast<long long>(n), v);
  }
  if (exact.empty() || exact[0].first != 0)
    throw std::logic_error("cannot certify a polygon without an exactly-known constant term");

  CertifiedPolygon rep;
  rep.hull = lower_hull(exact);

  // hull value at x (extended by the last slope past the final vertex),
  // as a rational compare against the precision bound
  auto below_requirement = [&](long long x, long long bound) {
    const auto& vs = rep.hull.vertices;
    if (vs.size() == 1) return false;  // a single vertex claims nothing away from it
    std::size_t seg = vs.size() - 1;
    for (std::size_t i = 1; i < vs.size(); ++i)
      if (x <= vs[i].first) {
        seg = i;
        break;
      }
    const auto& a = vs[seg - 1];
    const auto& b = vs[seg];
    // bound < a.y + (b.y - a.y)(x - a.x)/(b.x - a.x)  <=>  uncertifiable
    return (bound - a.second) * (b.first - a.first) < (b.second - a.second) * (x - a.first);
  };

  for (std::size_t n = 0; n < c.size(); ++n) {
    const auto [v, is_exact] = padic_val(c[n]);
    if (is_exact) continue;
    if (below_requirement(static_cast<long long>(n), v)) {
      std::ostringstream os;
      os << "precision insufficient to certify the polygon at coefficient " << n
         << " (known only to O(" << c[n].p << "^" << c[n].prec << "))";
      throw std::logic_error(os.str());
    }
  }

  for (const auto& [x, y] : rep.hull.vertices) {
    const std::size_t i = static_cast<std::size_t>(x);
    rep.margins.push_back(c[i].prec - y);
  }
  return rep;
}

}  // namespace kloverify
