// kloverify: exact verification toolkit for Kloosterman sum statistics,
// Hecke traces, symmetric-power L-functions, and their p-adic limits
// (characteristics 2 and 3).
//
// Reports are deterministic: fixed iteration orders, integers as decimal
// strings, no wall-clock data -- the same invocation yields byte-identical
// output.  Timing goes to stderr only.

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kloverify/cache.hpp"
#include "kloverify/class_number.hpp"
#include "kloverify/fq.hpp"
#include "kloverify/hecke.hpp"
#include "kloverify/int_poly.hpp"
#include "kloverify/kloosterman.hpp"
#include "kloverify/padic.hpp"
#include "kloverify/padic_l.hpp"
#include "kloverify/sym_l.hpp"
#include "kloverify/util.hpp"
#include "kloverify/verify.hpp"

using nlohmann::ordered_json;
using namespace kloverify;

namespace {

constexpr const char* kVersion = "1.0.0";

// command-line misuse (exit 2), as opposed to a failed mathematical check (exit 1)
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

mpz_class parse_int(const std::string& s, const char* what) {
  try {
    return mpz_class(trimmed(s));
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " is not an integer: '" + s + "'");
  }
}

// kappa forms: plain integer ("5", "-3"), explicit modulus ("5 mod 2^10",
// "5%2^10"), or truncated digit expansion ("...111" = low base-p digits,
// rightmost = units digit; precision = digit count)
PadicNum parse_kappa(const std::string& raw, int p, long default_prec) {
  const std::string s = trimmed(raw);
  if (s.empty()) throw UsageError("empty kappa");

  if (s.rfind("...", 0) == 0) {
    const std::string digits = s.substr(3);
    if (digits.empty()) throw UsageError("kappa digit string has no digits");
    mpz_class v = 0;
    for (char c : digits) {
      if (c < '0' || c >= '0' + p)
        throw UsageError(std::string("kappa digit '") + c + "' out of range for base " +
                         std::to_string(p));
      v = v * p + (c - '0');
    }
    return padic_make(p, v, static_cast<long>(digits.size()));
  }

  std::size_t pos = s.find("mod");
  std::size_t skip = 3;
  if (pos == std::string::npos) {
    pos = s.find('%');
    skip = 1;
  }
  if (pos != std::string::npos) {
    const mpz_class a = parse_int(s.substr(0, pos), "kappa residue");
    const std::string mod = trimmed(s.substr(pos + skip));
    const std::size_t caret = mod.find('^');
    if (caret == std::string::npos)
      throw UsageError("kappa modulus must be of the form p^e, got '" + mod + "'");
    const mpz_class base = parse_int(mod.substr(0, caret), "kappa modulus base");
    const mpz_class e = parse_int(mod.substr(caret + 1), "kappa modulus exponent");
    if (base != p)
      throw UsageError("kappa modulus base " + base.get_str() + " does not match --p " +
                       std::to_string(p));
    if (e <= 0 || !e.fits_slong_p()) throw UsageError("kappa modulus exponent out of range");
    return padic_make(p, a, e.get_si());
  }

  return padic_make(p, parse_int(s, "kappa"), default_prec);
}

ordered_json poly_json(const IntPoly& a) {
  ordered_json out = ordered_json::array();
  for (const mpz_class& c : a) out.push_back(c.get_str());
  return out;
}

ordered_json polygon_json(const NewtonPolygon& np) {
  ordered_json out;
  out["vertices"] = ordered_json::array();
  for (const auto& [x, y] : np.vertices) out["vertices"].push_back({x, y});
  out["slopes"] = ordered_json::array();
  for (const auto& [slope, mult] : np.slopes)
    out["slopes"].push_back({{"slope", slope.get_str()}, {"multiplicity", mult}});
  return out;
}

ordered_json padic_json(const PadicNum& a) {
  const auto [val, exact] = padic_val(a);
  ordered_json out;
  out["residue"] = a.residue.get_str();
  out["precision"] = a.prec;
  out["valuation"] = val;  // lower bound when exact is false
  out["exact"] = exact;
  return out;
}

ordered_json series_json(const PadicSeries& c) {
  ordered_json out = ordered_json::array();
  for (std::size_t n = 0; n < c.size(); ++n) {
    ordered_json e = padic_json(c[n]);
    e["n"] = static_cast<long long>(n);
    // put n first for readability
    ordered_json reordered;
    reordered["n"] = e["n"];
    reordered["residue"] = e["residue"];
    reordered["precision"] = e["precision"];
    reordered["valuation"] = e["valuation"];
    reordered["exact"] = e["exact"];
    out.push_back(reordered);
  }
  return out;
}

ordered_json manifest_json(const std::string& command, const ordered_json& config,
                           const std::string& cache_dir) {
  ordered_json m;
  m["tool"] = "kloverify";
  m["version"] = kVersion;
  m["command"] = command;
  m["config"] = config;
  ordered_json t2 = ordered_json::array(), t3 = ordered_json::array();
  for (int i = 1; i <= 16; ++i) {
    t2.push_back(modulus_table(2)[static_cast<std::size_t>(i)]);
    t3.push_back(modulus_table(3)[static_cast<std::size_t>(i)]);
  }
  m["modulus_table_p2"] = t2;  // packed non-leading coefficients, m = 1..16
  m["modulus_table_p3"] = t3;
  m["cache"] = {{"dir", cache_dir}, {"hits", cache_hit_count()}, {"misses", cache_miss_count()}};
  return m;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

void emit_report(ordered_json& report, const std::string& out_path) {
  emit(report.dump(1) + "\n", out_path);
}

struct CommonOpts {
  std::string format = "json";
  std::string out_path;
  std::string cache_dir;
  int shards = 1;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_shards = true,
                bool with_cache = false) {
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out_path, "write the report to this file instead of stdout");
  if (with_shards)
    cmd->add_option("--shards", c.shards, "worker shard count for field scans")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  if (with_cache)
    cmd->add_option("--cache-dir", c.cache_dir,
                    "orbit cache directory (KLOVERIFY_CACHE also honored)");
}

void require_json(const CommonOpts& c, const char* cmd) {
  if (c.format != "json")
    throw UsageError(std::string(cmd) + " emits json only (csv covers frequency and slope tables)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Kloosterman sum statistics, Hecke traces,\n"
               "symmetric-power L-functions and their p-adic limits (p = 2, 3)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  int rc = 0;

  // ---- klsum: one Kloosterman sum ------------------------------------------
  {
    auto* cmd = app.add_subcommand("klsum", "Kloosterman sum Kl_q(t) over F_q, q = p^m");
    auto p = std::make_shared<int>(2);
    auto m = std::make_shared<int>(1);
    auto t = std::make_shared<std::uint64_t>(1);
    auto c = std::make_shared<CommonOpts>();
    cmd->add_option("--p", *p, "characteristic")->check(CLI::IsMember({2, 3}))->required();
    cmd->add_option("--m", *m, "extension degree")->check(CLI::PositiveNumber)->required();
    cmd->add_option("--t", *t,
                    "field element, packed base-p digits (sum c_j p^j); must be nonzero")
        ->required();
    add_common(cmd, *c, false);
    cmd->callback([=]() {
      require_json(*c, "klsum");
      const FqField& F = field(*p, *m);
      const long long kl = kl_sum(F, static_cast<fq_t>(*t));
      ordered_json config{{"p", *p}, {"m", *m}, {"t", *t}};
      ordered_json report;
      report["schema"] = 1;
      report["manifest"] = manifest_json("klsum", config, "");
      report["q"] = static_cast<std::uint64_t>(F.q());
      report["kl"] = kl;
      emit_report(report, c->out_path);
    });
  }

  // ---- freq: full frequency table of -Kl over a field ----------------------
  {
    auto* cmd = app.add_subcommand(
        "freq", "frequency table of f = -Kl_q(t) over t in F_q^*; above the direct\n"
                "enumeration cap the table is synthesized from class numbers");
    auto p = std::make_shared<int>(2);
    auto m = std::make_shared<int>(1);
    auto c = std::make_shared<CommonOpts>();
    cmd->add_option("--p", *p, "characteristic")->check(CLI::IsMember({2, 3}))->required();
    cmd->add_option("--m", *m, "extension degree")->check(CLI::PositiveNumber)->required();
    add_common(cmd, *c);
    cmd->callback([=]() {
      const FreqTable tbl = freq_table(*p, *m, c->shards);
      if (c->format == "csv") {
        std::ostringstream os;
        os << "f,count\n";
        for (const auto& [f, cnt] : tbl.freq) os << f << "," << cnt << "\n";
        emit(os.str(), c->out_path);
        return;
      }
      ordered_json config{{"p", *p}, {"m", *m}, {"shards", c->shards}};
      ordered_json report;
      report["schema"] = 1;
      report["manifest"] = manifest_json("freq", config, "");
      report["q"] = tbl.q;
      report["synthesized"] = tbl.synthesized;
      report["table"] = ordered_json::array();
      long long sum = 0;
      for (const auto& [f, cnt] : tbl.freq) {
        report["table"].push_back({{"f", f}, {"count", cnt}});
        sum += cnt;
      }
      report["count_sum"] = sum;
      emit_report(report, c->out_path);
    });
  }

  // ---- classno: Hurwitz class numbers --------------------------------------
  {
    auto* cmd = app.add_subcommand("classno",
                                   "Hurwitz class numbers h(D) and H(D) for D <= 0");
    auto D = std::make_shared<long long>(0);
    auto c = std::make_shared<CommonOpts>();
    cmd->add_option("--D", *D, "discriminant (non-positive)")->required();
    add_common(cmd, *c, false);
    cmd->callback([=]() {
      require_json(*c, "classno");
      const mpq_class H = kronecker_H(*D);
      ordered_json config{{"D", *D}};
      ordered_json report;
      report["schema"] = 1;
      report["manifest"] = manifest_json("classno", config, "");
      report["H"] = H.get_str();
      if (*D < 0 && ((*D % 4 == 0) || ((*D % 4 + 4) % 4 == 1)))
        report["h"] = class_number_h(*D).get_str();
      emit_report(report, c->out_path);
    });
  }

  // ---- trace: Hecke trace on weight-w cusp forms ---------------------------
  {
    auto* cmd = app.add_subcommand(
        "trace", "Tr(U_q | S_w(Gamma_1(4 or 3))), q = p^m, by the class-number formula");
    auto p = std::make_shared<int>(2);
    auto m = std::make_shared<int>(1);
    auto w = std::make_shared<int>(3);
    auto c = std::make_shared<CommonOpts>();
    cmd->add_option("--p", *p, "characteristic (2 -> Gamma_1(4), 3 -> Gamma_1(3))")
        ->check(CLI::IsMember({2, 3}))
        ->required();
    cmd->add_option("--m", *m, "extension degree")->check(CLI::PositiveNumber)->required();
    cmd->add_option("--w", *w, "weight (>= 3)")->required();
    add_common(cmd, *c, false);
    cmd->callback([=]() {
      require_json(*c, "trace");
      const mpz_class tr = (*p == 2) ? trace_gamma1_4(*m, *w) : trace_gamma1_3(*m, *w);
      ordered_json config{{"p", *p}, {"m", *m}, {"w", *w}};
      ordered_json report;
      report["schema"] = 1;
      report["manifest"] = manifest_json("trace", config, "");
      report["level"] = (*p == 2) ? 4 : 3;
      report["dim"] = dim_cusp_gamma1(*p, *w);
      report["trace"] = tr.get_str();
      emit_report(report, c->out_path);
    });
  }

  // ---- symL: the symmetric-power L-polynomial ------------------------------
  {
    auto* cmd = app.add_subcommand(
        "symL", "L(Sym^k Kl/F_p, s) as an exact integer polynomial, with Newton\n"
                "polygon and (even k) factorization / (odd k) purity report");
    auto p = std::make_shared<int>(2);
    auto k = std::make_shared<int>(1);
    auto mode = std::make_shared<std::string>("auto");
    auto c = std::make_shared<CommonOpts>();
    cmd->add_option("--p", *p, "characteristic")->check(CLI::IsMember({2, 3}))->required();
    cmd->add_option("--k", *k, "symmetric power")->check(CLI::PositiveNumber)->required();
    cmd->add_option("--mode", *mode, "power-sum evaluation strategy")
        ->check(CLI::IsMember({"auto", "direct", "classnumber"}))
        ->capture_default_str();
    add_common(cmd, *c);
    cmd->callback([=]() {
      require_json(*c, "symL");
      const PowerSumMode psm = (*mode == "direct")        ? PowerSumMode::kDirect
                               : (*mode == "classnumber") ? PowerSumMode::kClassNumber
                                                          : PowerSumMode::kAuto;
      const SymL s = assemble_L(*p, *k, psm, c->shards);
      ordered_json config{{"p", *p}, {"k", *k}, {"mode", *mode}, {"shards", c->shards}};
      ordered_json report;
      report["schema"] = 1;
      report["manifest"] = manifest_json("symL", config, "");
      report["degree"] = poly_degree(s.L);
      report["coefficients"] = poly_json(s.L);
      ordered_json ps = ordered_json::array();
      for (const mpz_class& v : s.power_sums) ps.push_back(v.get_str());
      report["power_sums"] = ps;
      report["classnumber_mode"] = s.classnumber_mode;
      report["newton"] = polygon_json(newton_polygon_int(s.L, *p));
      if (*k % 2 == 0) {
        const Factorization f = factor_even(s);
        const mpz_class cst = check_functional_equation(f.middle, *p, *k);
        const PurityReport pr = check_purity(f.middle, *p, *k);
        ordered_json fac;
        fac["trivial_root"] = "1";  // the (1 - s) factor
        fac["mult_plus"] = f.mult_plus;
        fac["mult_minus"] = f.mult_minus;
        fac["middle"] = poly_json(f.middle);
        fac["functional_constant"] = cst.get_str();
        fac["purity"] = {{"degree", pr.degree},
                         {"surrogate_ok", pr.surrogate_ok},
                         {"numeric_ok", pr.numeric_ok},
                         {"worst_deviation", pr.worst_deviation}};
        report["factorization"] = fac;
      } else {
        IntPoly rest;
        if (!poly_divide_one_minus_rs(s.L, mpz_class(1), rest))
          throw std::logic_error("odd k: (1 - s) does not divide L");
        const PurityReport pr = check_purity(rest, *p, *k);
        report["unit_factor_removed"] = {
            {"coefficients", poly_json(rest)},
            {"purity",
             {{"degree", pr.degree},
              {"surrogate_ok", pr.surrogate_ok},
              {"numeric_ok", pr.numeric_ok},
              {"worst_deviation", pr.worst_deviation}}}};
      }
      emit_report(report, c->out_path);
    });
  }

  // ---- newton: Newton polygon of an integer polynomial ---------------------
  {
    auto* cmd = app.add_subcommand(
        "newton", "Newton polygon at p of L(Sym^k) (via --k) or of explicit\n"
                  "coefficients (--coeffs c0,c1,...)");
    auto p = std::make_shared<int>(2);
    auto k = std::make_shared<int>(0);
    auto coeffs = std::make_shared<std::string>();
    auto c = std::make_shared<CommonOpts>();
    cmd->add_option("--p", *p, "prime for valuations")->check(CLI::IsMember({2, 3}))->required();
    auto* kopt = cmd->add_option("--k", *k, "symmetric power (assembles the L-polynomial)");
    auto* copt = cmd->add_option("--coeffs", *coeffs, "comma-separated integer coefficients");
    kopt->excludes(copt);
    add_common(cmd, *c);
    cmd->callback([=]() {
      IntPoly a;
      ordered_json config{{"p", *p}};
      if (!coeffs->empty()) {
        std::stringstream ss(*coeffs);
        std::string item;
        while (std::getline(ss, item, ',')) a.push_back(parse_int(item, "--coeffs entry"));
        poly_trim(a);
        if (a.empty()) throw UsageError("--coeffs gives the zero polynomial");
        config["coeffs"] = poly_json(a);
      } else if (*k > 0) {
        a = assemble_L(*p, *k, PowerSumMode::kAuto, c->shards).L;
        config["k"] = *k;
      } else {
        throw UsageError("newton needs --k or --coeffs");
      }
      const NewtonPolygon np = newton_polygon_int(a, *p);
      if (c->format == "csv") {
        std::ostringstream os;
        os << "slope,multiplicity\n";
        for (const auto& [slope, mult] : np.slopes)
          os << slope.get_str() << "," << mult << "\n";
        emit(os.str(), c->out_path);
        return;
      }
      ordered_json report;
      report["schema"] = 1;
      report["manifest"] = manifest_json("newton", config, "");
      report["coefficients"] = poly_json(a);
      ordered_json vals = ordered_json::array();
      for (std::size_t i = 0; i < a.size(); ++i)
        vals.push_back(a[i] == 0 ? ordered_json(nullptr)
                                 : ordered_json(valuation(a[i], static_cast<unsigned long>(*p))));
      report["valuations"] = vals;
      report["polygon"] = polygon_json(np);
      emit_report(report, c->out_path);
    });
  }

  // ---- padic: the two routes to L(Sym^(infinity, kappa)) -------------------
  {
    auto* cmd = app.add_subcommand(
        "padic", "L(Sym^(infinity, kappa) Kl/F_p, s): Euler-product route, finite-\n"
                 "weight limit route, their agreement, and the certified polygon");
    auto p = std::make_shared<int>(2);
    auto kappa_s = std::make_shared<std::string>();
    auto N = std::make_shared<int>(6);
    auto M = std::make_shared<long>(0);
    auto route = std::make_shared<std::string>("both");
    auto c = std::make_shared<CommonOpts>();
    cmd->add_option("--p", *p, "characteristic")->check(CLI::IsMember({2, 3}))->required();
    cmd->add_option("--kappa", *kappa_s,
                    "weight parameter: integer, 'a mod p^e', or '...digits'")
        ->required();
    cmd->add_option("--coeffs", *N, "series coefficients c_0..c_N")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--precision", *M, "target absolute precision p^M (0 = default 48/32)");
    cmd->add_option("--route", *route, "which construction(s) to run")
        ->check(CLI::IsMember({"euler", "limit", "both"}))
        ->capture_default_str();
    add_common(cmd, *c, false, true);
    cmd->callback([=]() {
      const long Mv = (*M > 0) ? *M : (*p == 2 ? 48 : 32);
      const PadicNum kappa = parse_kappa(*kappa_s, *p, Mv + 16);
      const std::string cache = resolve_cache_dir(c->cache_dir);
      ordered_json config{{"p", *p},
                          {"kappa", kappa.residue.get_str()},
                          {"kappa_precision", kappa.prec},
                          {"coeffs", *N},
                          {"precision", Mv},
                          {"route", *route}};
      const bool want_euler = (*route != "limit");
      const bool want_limit = (*route != "euler");
      PadicSeries eu;
      LimitResult lm;
      if (want_euler) eu = l_sym_infty_euler(*p, kappa, *N, Mv, cache);
      if (want_limit) lm = l_sym_infty_limit(*p, kappa, *N, Mv);
      if (c->format == "csv") {
        // slope table of the certified polygon (euler route when available)
        const CertifiedPolygon pol = slopes_report(want_euler ? eu : lm.stabilized);
        std::ostringstream os;
        os << "slope,multiplicity\n";
        for (const auto& [slope, mult] : pol.hull.slopes)
          os << slope.get_str() << "," << mult << "\n";
        emit(os.str(), c->out_path);
        return;
      }
      ordered_json report;
      report["schema"] = 1;
      report["manifest"] = manifest_json("padic", config, cache);
      if (want_euler) report["euler"] = series_json(eu);
      if (want_limit) {
        ordered_json sch = ordered_json::array();
        for (const mpz_class& ke : lm.schedule) sch.push_back(ke.get_str());
        report["limit"] = {{"schedule", sch}, {"stabilized", series_json(lm.stabilized)}};
      }
      if (want_euler && want_limit) {
        ordered_json agree = ordered_json::array();
        for (int n = 0; n <= *N; ++n)
          agree.push_back({{"n", n},
                           {"ord", padic_agreement(eu[static_cast<std::size_t>(n)],
                                                   lm.stabilized[static_cast<std::size_t>(n)])}});
        report["route_agreement"] = agree;
      }
      const CertifiedPolygon pol = slopes_report(want_euler ? eu : lm.stabilized);
      ordered_json polygon = polygon_json(pol.hull);
      polygon["certification_margins"] = pol.margins;
      report["polygon"] = polygon;
      emit_report(report, c->out_path);
    });
  }

  // ---- unitroot: Frobenius unit roots and the unit-root L-function ---------
  {
    auto* cmd = app.add_subcommand(
        "unitroot", "unit root pi_0 of x^2 + Kl x + q at one closed point (--d/--t),\n"
                    "or the unit-root L-function L_unit(kappa, s) (--kappa)");
    auto p = std::make_shared<int>(2);
    auto d = std::make_shared<int>(0);
    auto t = std::make_shared<std::uint64_t>(0);
    auto kappa_s = std::make_shared<std::string>();
    auto N = std::make_shared<int>(6);
    auto M = std::make_shared<long>(0);
    auto c = std::make_shared<CommonOpts>();
    cmd->add_option("--p", *p, "characteristic")->check(CLI::IsMember({2, 3}))->required();
    auto* dopt = cmd->add_option("--d", *d, "closed-point degree")->check(CLI::PositiveNumber);
    auto* topt = cmd->add_option(
        "--t", *t, "field element of F_{p^d}, packed base-p digits; nonzero");
    auto* kopt = cmd->add_option("--kappa", *kappa_s,
                                 "weight parameter: integer, 'a mod p^e', or '...digits'");
    dopt->needs(topt);
    topt->needs(dopt);
    kopt->excludes(dopt);
    cmd->add_option("--coeffs", *N, "series coefficients c_0..c_N (with --kappa)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--precision", *M, "absolute precision p^M (0 = default 48/32)");
    add_common(cmd, *c, false, true);
    cmd->callback([=]() {
      require_json(*c, "unitroot");
      const long Mv = (*M > 0) ? *M : (*p == 2 ? 48 : 32);
      const std::string cache = resolve_cache_dir(c->cache_dir);
      ordered_json report;
      report["schema"] = 1;
      if (!kappa_s->empty()) {
        const PadicNum kappa = parse_kappa(*kappa_s, *p, Mv + 16);
        ordered_json config{{"p", *p},
                            {"kappa", kappa.residue.get_str()},
                            {"kappa_precision", kappa.prec},
                            {"coeffs", *N},
                            {"precision", Mv}};
        const LUnitResult lu = l_unit(*p, kappa, *N, Mv, cache);
        report["manifest"] = manifest_json("unitroot", config, cache);
        report["direct"] = series_json(lu.direct);
        report["has_ratio"] = lu.has_ratio;
        if (lu.has_ratio) report["ratio"] = series_json(lu.ratio);
      } else if (*d > 0) {
        const FqField& F = field(*p, *d);
        const long long kl = kl_sum(F, static_cast<fq_t>(*t));
        const UnitRoot ur = unit_root(*p, *d, z_ll(kl), Mv);
        ordered_json config{{"p", *p}, {"d", *d}, {"t", *t}, {"precision", Mv}};
        report["manifest"] = manifest_json("unitroot", config, cache);
        report["kl"] = kl;
        report["pi0"] = padic_json(ur.pi0);
        report["pi1"] = padic_json(ur.pi1);
      } else {
        throw UsageError("unitroot needs either --kappa or --d with --t");
      }
      emit_report(report, c->out_path);
    });
  }

  // ---- verify: the release-gate suites --------------------------------------
  {
    auto* cmd = app.add_subcommand("verify", "run one named release-gate suite, or all of them");
    auto suite = std::make_shared<std::string>("all");
    auto c = std::make_shared<CommonOpts>();
    std::vector<std::string> allowed = suite_names();
    allowed.push_back("all");
    cmd->add_option("--suite", *suite, "suite name")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
    add_common(cmd, *c);
    cmd->callback([=, &rc]() {
      require_json(*c, "verify");
      const std::vector<SuiteResult> results = run_suites(*suite, c->shards);
      ordered_json config{{"suite", *suite}, {"shards", c->shards}};
      ordered_json report;
      report["schema"] = 1;
      report["manifest"] = manifest_json("verify", config, "");
      report["results"] = ordered_json::array();
      bool all_pass = true;
      for (const SuiteResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.criterion << " ("
                  << r.name << "): " << r.detail << "\n";
        std::cerr << "# criterion " << r.criterion << " took " << r.seconds << "s\n";
        report["results"].push_back({{"criterion", r.criterion},
                                     {"name", r.name},
                                     {"pass", r.pass},
                                     {"detail", r.detail}});
        all_pass = all_pass && r.pass;
      }
      report["all_pass"] = all_pass;
      if (!c->out_path.empty()) emit_report(report, c->out_path);
      if (!all_pass) rc = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
