#include "kloverify/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace kloverify {

namespace {

// ---- dense polynomial helpers over F_p (coefficients 0..p-1, low degree first) ----

void ptrim(std::vector<int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a*b mod p, sizes stay small (degrees <= ~60 here)
std::vector<int> pmul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  ptrim(r);
  return r;
}

// a mod f, f monic
std::vector<int> pmod(std::vector<int> a, const std::vector<int>& f, int p) {
  const int df = static_cast<int>(f.size()) - 1;
  ptrim(a);
  while (static_cast<int>(a.size()) - 1 >= df) {
    const int lead = a.back();
    const int shift = static_cast<int>(a.size()) - 1 - df;
    if (lead != 0) {
      for (int j = 0; j <= df; ++j) {
        int& c = a[shift + j];
        c = ((c - lead * f[j]) % p + p) % p;
      }
    }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

std::vector<int> pgcd(std::vector<int> a, std::vector<int> b, int p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // normalize b monic so pmod applies
    std::vector<int> bm = b;
    const int lead = bm.back();
    if (lead != 1) {
      const int linv = (p == 2) ? 1 : ((lead == 1) ? 1 : 2);  // inverse in F_2, F_3
      for (int& c : bm) c = (c * linv) % p;
    }
    std::vector<int> r = pmod(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// u^p mod f
std::vector<int> pfrob(const std::vector<int>& u, const std::vector<int>& f, int p) {
  std::vector<int> sq = pmod(pmul(u, u, p), f, p);
  if (p == 2) return sq;
  return pmod(pmul(sq, u, p), f, p);
}

// x^(p^e) mod f
std::vector<int> pfrob_iter(const std::vector<int>& f, int p, int e) {
  std::vector<int> u = {0, 1};  // x
  u = pmod(u, f, p);
  for (int i = 0; i < e; ++i) u = pfrob(u, f, p);
  return u;
}

std::vector<int> psub(std::vector<int> a, const std::vector<int>& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  ptrim(a);
  return a;
}

std::vector<int> small_primes_of(std::uint64_t n) {
  std::vector<int> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Fixed modulus table for m <= 16: packed value of the non-leading coefficients
// (sum c_j p^j for the monic modulus x^m + ... ).  Each entry equals the output
// of the search rule below; a unit test re-derives them.
constexpr std::uint32_t kModTable2[17] = {
    0,    // unused (m = 0)
    1,    // x + 1
    3,    // x^2 + x + 1
    3,    // x^3 + x + 1
    3,    // x^4 + x + 1
    5,    // x^5 + x^2 + 1
    3,    // x^6 + x + 1
    3,    // x^7 + x + 1
    27,   // x^8 + x^4 + x^3 + x + 1
    3,    // x^9 + x + 1
    9,    // x^10 + x^3 + 1
    5,    // x^11 + x^2 + 1
    9,    // x^12 + x^3 + 1
    27,   // x^13 + x^4 + x^3 + x + 1
    33,   // x^14 + x^5 + 1
    3,    // x^15 + x + 1
    43,   // x^16 + x^5 + x^3 + x + 1
};

constexpr std::uint32_t kModTable3[17] = {
    0,    // unused (m = 0)
    1,    // x + 1
    1,    // x^2 + 1
    7,    // x^3 + 2x + 1
    5,    // x^4 + x + 2
    7,    // x^5 + 2x + 1
    5,    // x^6 + x + 2
    11,   // x^7 + x^2 + 2
    11,   // x^8 + x^2 + 2
    64,   // x^9 + 2x^3 + x^2 + 1
    19,   // x^10 + 2x^2 + 1
    11,   // x^11 + x^2 + 2
    11,   // x^12 + x^2 + 2
    7,    // x^13 + 2x + 1
    5,    // x^14 + x + 2
    11,   // x^15 + x^2 + 2
    37,   // x^16 + x^3 + x^2 + 1
};

}  // namespace

bool poly_is_irreducible(int p, const std::vector<int>& poly) {
  std::vector<int> f = poly;
  ptrim(f);
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1 || f.back() != 1) return false;
  if (m == 1) return true;
  // x^(p^m) == x mod f
  std::vector<int> x = pmod({0, 1}, f, p);
  if (pfrob_iter(f, p, m) != x) return false;
  // gcd(x^(p^(m/r)) - x, f) == 1 for every prime r | m
  for (int r : small_primes_of(static_cast<std::uint64_t>(m))) {
    std::vector<int> u = pfrob_iter(f, p, m / r);
    std::vector<int> g = pgcd(psub(u, x, p), f, p);
    if (static_cast<int>(g.size()) - 1 != 0) return false;
  }
  return true;
}

FqField::FqField(int p, int m) : p_(p), m_(m) {
  if (p != 2 && p != 3) throw std::invalid_argument("characteristic must be 2 or 3");
  if (m < 1 || m > 30) throw std::invalid_argument("extension degree must be in [1, 30]");
  q_ = upow(static_cast<std::uint64_t>(p), m);

  std::uint64_t packed_low = 0;
  if (m <= 16) {
    packed_low = (p == 2) ? kModTable2[m] : kModTable3[m];
  } else {
    // first irreducible with nonzero constant term, coefficient vectors ordered
    // as base-p integers
    bool found = false;
    for (std::uint64_t c = 1; c < q_; ++c) {
      if (c % static_cast<std::uint64_t>(p) == 0) continue;
      std::vector<int> f(m + 1, 0);
      std::uint64_t v = c;
      for (int j = 0; j < m; ++j) {
        f[j] = static_cast<int>(v % p);
        v /= p;
      }
      f[m] = 1;
      if (poly_is_irreducible(p, f)) {
        packed_low = c;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");  // unreachable
  }

  modulus_.assign(m + 1, 0);
  {
    std::uint64_t v = packed_low;
    for (int j = 0; j < m; ++j) {
      modulus_[j] = static_cast<int>(v % p);
      v /= p;
    }
    modulus_[m] = 1;
  }

  if (q_ <= table_cap()) build_tables();
}

fq_t FqField::add(fq_t a, fq_t b) const {
  if (p_ == 2) return a ^ b;
  // digitwise base-3 addition
  fq_t r = 0, mult = 1;
  for (int j = 0; j < m_; ++j) {
    const int da = static_cast<int>((a / mult) % 3);
    const int db = static_cast<int>((b / mult) % 3);
    r += static_cast<fq_t>((da + db) % 3) * mult;
    mult *= 3;
  }
  return r;
}

fq_t FqField::neg(fq_t a) const {
  if (p_ == 2) return a;
  fq_t r = 0, mult = 1;
  for (int j = 0; j < m_; ++j) {
    const int da = static_cast<int>((a / mult) % 3);
    r += static_cast<fq_t>((3 - da) % 3) * mult;
    mult *= 3;
  }
  return r;
}

fq_t FqField::mul_generic(fq_t a, fq_t b) const {
  if (a == 0 || b == 0) return 0;
  if (p_ == 2) {
    // carry-less multiply then top-down reduction by the modulus mask
    const std::uint64_t fmask = [&] {
      std::uint64_t f = 0;
      for (int j = 0; j <= m_; ++j)
        if (modulus_[j]) f |= (1ull << j);
      return f;
    }();
    std::uint64_t r = 0, aa = a;
    for (std::uint64_t bb = b; bb; bb >>= 1, aa <<= 1)
      if (bb & 1) r ^= aa;
    for (int i = 2 * m_ - 2; i >= m_; --i)
      if (r & (1ull << i)) r ^= fmask << (i - m_);
    return r;
  }
  // base-3: convolution then reduction
  int da[31], db[31], rr[61] = {0};
  {
    fq_t v = a;
    for (int j = 0; j < m_; ++j) { da[j] = static_cast<int>(v % 3); v /= 3; }
    v = b;
    for (int j = 0; j < m_; ++j) { db[j] = static_cast<int>(v % 3); v /= 3; }
  }
  for (int i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < m_; ++j) rr[i + j] += da[i] * db[j];
  }
  for (int i = 2 * m_ - 2; i >= m_; --i) {
    const int c = rr[i] % 3;
    if (c == 0) continue;
    for (int j = 0; j < m_; ++j) rr[i - m_ + j] -= c * modulus_[j];
    rr[i] -= c;  // keep the array consistent; entry is dead afterwards
  }
  fq_t r = 0, mult = 1;
  for (int j = 0; j < m_; ++j) {
    r += static_cast<fq_t>(((rr[j] % 3) + 3) % 3) * mult;
    mult *= 3;
  }
  return r;
}

fq_t FqField::mul(fq_t a, fq_t b) const {
  if (a == 0 || b == 0) return 0;
  if (has_tables()) {
    const std::uint64_t n = q_ - 1;
    std::uint64_t s = log_[a] + log_[b];
    if (s >= n) s -= n;
    return exp_[s];
  }
  return mul_generic(a, b);
}

fq_t FqField::pow(fq_t a, std::uint64_t e) const {
  if (a == 0) {
    if (e == 0) throw std::domain_error("0^0 in F_q");
    return 0;
  }
  if (has_tables()) {
    const std::uint64_t n = q_ - 1;
    const std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) % n) * (e % n) % n;
    return exp_[le];
  }
  fq_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul_generic(r, base);
    base = mul_generic(base, base);
    e >>= 1;
  }
  return r;
}

fq_t FqField::inv(fq_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  if (has_tables()) {
    const std::uint64_t n = q_ - 1;
    const std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : n - l];
  }
  return pow(a, q_ - 2);
}

int FqField::trace(fq_t a) const {
  if (has_tables()) return trace_packed_[a];
  // sum of Frobenius conjugates lands in the prime field
  fq_t acc = a, b = a;
  for (int j = 1; j < m_; ++j) {
    b = pow(b, static_cast<std::uint64_t>(p_));
    acc = add(acc, b);
  }
  if (acc >= static_cast<fq_t>(p_)) throw std::logic_error("trace left the prime field");
  return static_cast<int>(acc);
}

fq_t FqField::generator() const {
  if (!has_tables()) throw std::domain_error("no multiplicative tables for this field size");
  return exp_[q_ - 1 > 1 ? 1 : 0];
}

std::uint32_t FqField::log(fq_t a) const {
  if (a == 0) throw std::domain_error("log of zero in F_q");
  if (!has_tables()) throw std::domain_error("no multiplicative tables for this field size");
  return log_[a];
}

fq_t FqField::exp(std::uint32_t i) const {
  if (!has_tables()) throw std::domain_error("no multiplicative tables for this field size");
  return exp_[i];
}

void FqField::build_tables() {
  const std::uint64_t n = q_ - 1;

  // canonical generator: packed-smallest element of full multiplicative order
  fq_t g = 1;
  if (n > 1) {
    const std::vector<std::uint64_t> primes = prime_factors_u64(n);
    for (fq_t cand = 2; cand < q_; ++cand) {
      bool ok = true;
      for (std::uint64_t r : primes) {
        // cand^(n/r) via generic powering (tables not built yet)
        std::uint64_t e = n / r;
        fq_t acc = 1, base = cand;
        while (e) {
          if (e & 1) acc = mul_generic(acc, base);
          base = mul_generic(base, base);
          e >>= 1;
        }
        if (acc == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = cand;
        break;
      }
    }
  }

  exp_.resize(n);
  log_.assign(q_, 0);
  exp_[0] = 1;
  for (std::uint64_t i = 1; i < n; ++i) exp_[i] = mul_generic(exp_[i - 1], g);
  if (n > 1 && mul_generic(exp_[n - 1], g) != 1)
    throw std::logic_error("generator order mismatch while building tables");
  for (std::uint64_t i = 0; i < n; ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);

  // monomial traces once, then every packed value by digit sums
  std::vector<int> tr_basis(m_);
  for (int j = 0; j < m_; ++j) {
    // trace of x^j computed generically
    fq_t xj = 1;
    for (int t = 0; t < j; ++t) xj = mul_generic(xj, (p_ == 2) ? 2u : 3u);
    fq_t acc = xj, b = xj;
    for (int t = 1; t < m_; ++t) {
      fq_t bb = 1;
      std::uint64_t e = static_cast<std::uint64_t>(p_);
      fq_t base = b;
      while (e) {
        if (e & 1) bb = mul_generic(bb, base);
        base = mul_generic(base, base);
        e >>= 1;
      }
      b = bb;
      acc = add(acc, b);
    }
    if (acc >= static_cast<fq_t>(p_)) throw std::logic_error("monomial trace left the prime field");
    tr_basis[j] = static_cast<int>(acc);
  }
  trace_packed_.resize(q_);
  if (p_ == 2) {
    std::uint64_t mask = 0;
    for (int j = 0; j < m_; ++j)
      if (tr_basis[j]) mask |= (1ull << j);
    for (std::uint64_t v = 0; v < q_; ++v)
      trace_packed_[v] = static_cast<std::int8_t>(__builtin_popcountll(v & mask) & 1);
  } else {
    for (std::uint64_t v = 0; v < q_; ++v) {
      std::uint64_t w = v;
      int s = 0;
      for (int j = 0; j < m_; ++j) {
        s += static_cast<int>(w % 3) * tr_basis[j];
        w /= 3;
      }
      trace_packed_[v] = static_cast<std::int8_t>(s % 3);
    }
  }
  trace_log_.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) trace_log_[i] = trace_packed_[exp_[i]];
}

fq_t FqField::from_coeffs(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != m_) throw std::invalid_argument("coefficient count != m");
  fq_t r = 0, mult = 1;
  for (int j = 0; j < m_; ++j) {
    const int c = coeffs[j];
    if (c < 0 || c >= p_) throw std::invalid_argument("coefficient out of range");
    r += static_cast<fq_t>(c) * mult;
    mult *= static_cast<fq_t>(p_);
  }
  return r;
}

std::vector<int> FqField::to_coeffs(fq_t a) const {
  std::vector<int> out(m_);
  for (int j = 0; j < m_; ++j) {
    out[j] = static_cast<int>(a % p_);
    a /= static_cast<fq_t>(p_);
  }
  return out;
}

const FqField& field(int p, int m) {
  static std::map<std::pair<int, int>, std::unique_ptr<FqField>> registry;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::make_unique<FqField>(p, m)).first;
  return *it->second;
}

std::vector<int> minimal_polynomial(const FqField& F, std::uint32_t log_t) {
  const std::uint64_t n = F.q() - 1;
  // Frobenius orbit of the exponent
  std::vector<std::uint64_t> orbit;
  std::uint64_t i = log_t % n;
  do {
    orbit.push_back(i);
    i = (i * static_cast<std::uint64_t>(F.p())) % n;
  } while (i != log_t % n);

  // product of (x - g^j) over the orbit, computed in the field
  std::vector<fq_t> poly = {1};
  for (std::uint64_t j : orbit) {
    const fq_t root = F.exp(static_cast<std::uint32_t>(j));
    std::vector<fq_t> next(poly.size() + 1, 0);
    for (size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] = F.add(next[d + 1], poly[d]);
      next[d] = F.sub(next[d], F.mul(root, poly[d]));
    }
    poly = std::move(next);
  }
  std::vector<int> out(poly.size());
  for (size_t d = 0; d < poly.size(); ++d) {
    if (poly[d] >= static_cast<fq_t>(F.p()))
      throw std::logic_error("minimal polynomial has a coefficient outside the prime field");
    out[d] = static_cast<int>(poly[d]);
  }
  return out;
}

const std::array<std::uint32_t, 17>& modulus_table(int p) {
  static const std::array<std::uint32_t, 17> t2 = [] {
    std::array<std::uint32_t, 17> a{};
    for (int m = 0; m <= 16; ++m) a[static_cast<std::size_t>(m)] = kModTable2[m];
    return a;
  }();
  static const std::array<std::uint32_t, 17> t3 = [] {
    std::array<std::uint32_t, 17> a{};
    for (int m = 0; m <= 16; ++m) a[static_cast<std::size_t>(m)] = kModTable3[m];
    return a;
  }();
  if (p == 2) return t2;
  if (p == 3) return t3;
  throw std::invalid_argument("characteristic must be 2 or 3");
}

}  // namespace kloverify
