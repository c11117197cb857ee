// Python bindings for the main operations: Kloosterman statistics, class
// numbers, Hecke traces, symmetric-power L-polynomials, and the p-adic
// routes.  Big integers cross the boundary as exact Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gmpxx.h>

#include <string>

#include "kloverify/class_number.hpp"
#include "kloverify/fq.hpp"
#include "kloverify/hecke.hpp"
#include "kloverify/int_poly.hpp"
#include "kloverify/kloosterman.hpp"
#include "kloverify/padic.hpp"
#include "kloverify/padic_l.hpp"
#include "kloverify/sym_l.hpp"
#include "kloverify/verify.hpp"

namespace py = pybind11;
using namespace kloverify;

namespace {

py::int_ to_pyint(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

mpz_class to_mpz(const py::int_& v) {
  auto s = py::reinterpret_steal<py::object>(PyObject_Str(v.ptr()));
  return mpz_class(s.cast<std::string>());
}

py::tuple to_pyrational(const mpq_class& r) {
  return py::make_tuple(to_pyint(r.get_num()), to_pyint(r.get_den()));
}

py::list poly_to_list(const IntPoly& a) {
  py::list out;
  for (const mpz_class& c : a) out.append(to_pyint(c));
  return out;
}

PowerSumMode parse_mode(const std::string& mode) {
  if (mode == "auto") return PowerSumMode::kAuto;
  if (mode == "direct") return PowerSumMode::kDirect;
  if (mode == "classnumber") return PowerSumMode::kClassNumber;
  throw std::invalid_argument("mode must be auto, direct, or classnumber");
}

py::dict padic_to_dict(const PadicNum& a) {
  const auto [val, exact] = padic_val(a);
  py::dict d;
  d["residue"] = to_pyint(a.residue);
  d["precision"] = a.prec;
  d["valuation"] = val;
  d["exact"] = exact;
  return d;
}

py::list series_to_list(const PadicSeries& c) {
  py::list out;
  for (const PadicNum& a : c) out.append(padic_to_dict(a));
  return out;
}

py::dict polygon_to_dict(const NewtonPolygon& np) {
  py::list vertices, slopes;
  for (const auto& [x, y] : np.vertices) vertices.append(py::make_tuple(x, y));
  for (const auto& [slope, mult] : np.slopes)
    slopes.append(py::make_tuple(to_pyrational(slope), mult));
  py::dict d;
  d["vertices"] = vertices;
  d["slopes"] = slopes;
  return d;
}

py::dict purity_to_dict(const PurityReport& r) {
  py::dict d;
  d["degree"] = r.degree;
  d["surrogate_ok"] = r.surrogate_ok;
  d["numeric_ok"] = r.numeric_ok;
  d["worst_deviation"] = r.worst_deviation;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Kloosterman / Hecke / p-adic L-function verification core";

  m.def(
      "kl_sum",
      [](int p, int mm, std::uint64_t t) {
        return kl_sum(field(p, mm), static_cast<fq_t>(t));
      },
      py::arg("p"), py::arg("m"), py::arg("t"),
      "Kloosterman sum Kl_q(t) over F_q, q = p^m; t is packed base-p digits");

  m.def(
      "freq_table",
      [](int p, int mm, int shards) {
        const FreqTable tbl = freq_table(p, mm, shards);
        py::dict table;
        for (const auto& [f, cnt] : tbl.freq) table[py::int_(f)] = cnt;
        py::dict d;
        d["q"] = tbl.q;
        d["synthesized"] = tbl.synthesized;
        d["table"] = table;
        return d;
      },
      py::arg("p"), py::arg("m"), py::arg("shards") = 1,
      "frequency table of f = -Kl_q(t) over t in F_q^*");

  m.def(
      "class_number_h", [](long long D) { return to_pyrational(class_number_h(D)); },
      py::arg("D"), "Hurwitz class number h(D), as a (numerator, denominator) pair");

  m.def(
      "kronecker_H", [](long long D) { return to_pyrational(kronecker_H(D)); },
      py::arg("D"), "Hurwitz-Kronecker class number H(D), as (numerator, denominator)");

  m.def(
      "cheb",
      [](unsigned long j, const py::int_& f, const py::int_& q) {
        return to_pyint(cheb(j, to_mpz(f), to_mpz(q)));
      },
      py::arg("j"), py::arg("f"), py::arg("q"),
      "degree-j coefficient sequence of x^2 - f x + q: cheb(j+1) = f cheb(j) - q cheb(j-1)");

  m.def(
      "power_sum",
      [](int p, int k, int mm, const std::string& mode, int shards) {
        return to_pyint(power_sum(p, k, mm, parse_mode(mode), shards));
      },
      py::arg("p"), py::arg("k"), py::arg("m"), py::arg("mode") = "auto",
      py::arg("shards") = 1, "S_m(k) = sum over t of cheb(k, -Kl_q(t), q), q = p^m");

  m.def(
      "trace",
      [](int p, int mm, int w) {
        return to_pyint(p == 2 ? trace_gamma1_4(mm, w) : trace_gamma1_3(mm, w));
      },
      py::arg("p"), py::arg("m"), py::arg("w"),
      "Tr(T_q | S_w(Gamma_1(4 or 3))), q = p^m, by the class-number formula");

  m.def("dim_cusp_sl2z", &dim_cusp_sl2z, py::arg("w"), "dim S_w(SL_2(Z))");
  m.def("dim_cusp_gamma1", &dim_cusp_gamma1, py::arg("p"), py::arg("w"),
        "dim S_w(Gamma_1(4)) for p = 2, dim S_w(Gamma_1(3)) for p = 3");

  m.def(
      "sym_l",
      [](int p, int k, const std::string& mode, int shards) {
        const SymL s = assemble_L(p, k, parse_mode(mode), shards);
        py::dict d;
        d["degree"] = poly_degree(s.L);
        d["coefficients"] = poly_to_list(s.L);
        py::list ps;
        for (const mpz_class& v : s.power_sums) ps.append(to_pyint(v));
        d["power_sums"] = ps;
        d["classnumber_mode"] = s.classnumber_mode;
        if (k % 2 == 0) {
          const Factorization f = factor_even(s);
          py::dict fac;
          fac["mult_plus"] = f.mult_plus;
          fac["mult_minus"] = f.mult_minus;
          fac["middle"] = poly_to_list(f.middle);
          fac["functional_constant"] = to_pyint(check_functional_equation(f.middle, p, k));
          fac["purity"] = purity_to_dict(check_purity(f.middle, p, k));
          d["factorization"] = fac;
        } else {
          IntPoly rest;
          if (!poly_divide_one_minus_rs(s.L, mpz_class(1), rest))
            throw std::logic_error("odd k: (1 - s) does not divide L");
          py::dict u;
          u["coefficients"] = poly_to_list(rest);
          u["purity"] = purity_to_dict(check_purity(rest, p, k));
          d["unit_factor_removed"] = u;
        }
        return d;
      },
      py::arg("p"), py::arg("k"), py::arg("mode") = "auto", py::arg("shards") = 1,
      "L(Sym^k Kl/F_p, s) with factorization (even k) or purity report (odd k)");

  m.def(
      "newton_polygon",
      [](const std::vector<py::int_>& coeffs, int p) {
        IntPoly a;
        for (const py::int_& c : coeffs) a.push_back(to_mpz(c));
        poly_trim(a);
        return polygon_to_dict(newton_polygon_int(a, p));
      },
      py::arg("coefficients"), py::arg("p"),
      "Newton polygon at p of an integer polynomial (constant term nonzero)");

  m.def(
      "l_sym_euler",
      [](int p, const py::int_& kappa, long kappa_prec, int N, long M,
         const std::string& cache_dir) {
        const PadicNum kap = padic_make(p, to_mpz(kappa), kappa_prec);
        return series_to_list(l_sym_infty_euler(p, kap, N, M, cache_dir));
      },
      py::arg("p"), py::arg("kappa"), py::arg("kappa_prec"), py::arg("N"), py::arg("M"),
      py::arg("cache_dir") = "",
      "L(Sym^(infinity, kappa), s) coefficients via the Euler-product route");

  m.def(
      "l_sym_limit",
      [](int p, const py::int_& kappa, long kappa_prec, int N, long M) {
        const PadicNum kap = padic_make(p, to_mpz(kappa), kappa_prec);
        const LimitResult lm = l_sym_infty_limit(p, kap, N, M);
        py::list sch;
        for (const mpz_class& ke : lm.schedule) sch.append(to_pyint(ke));
        py::dict d;
        d["schedule"] = sch;
        d["stabilized"] = series_to_list(lm.stabilized);
        return d;
      },
      py::arg("p"), py::arg("kappa"), py::arg("kappa_prec"), py::arg("N"), py::arg("M"),
      "L(Sym^(infinity, kappa), s) coefficients via the finite-weight limit route");

  m.def(
      "l_unit",
      [](int p, const py::int_& kappa, long kappa_prec, int N, long M,
         const std::string& cache_dir) {
        const PadicNum kap = padic_make(p, to_mpz(kappa), kappa_prec);
        const LUnitResult lu = l_unit(p, kap, N, M, cache_dir);
        py::dict d;
        d["direct"] = series_to_list(lu.direct);
        d["has_ratio"] = lu.has_ratio;
        if (lu.has_ratio) d["ratio"] = series_to_list(lu.ratio);
        return d;
      },
      py::arg("p"), py::arg("kappa"), py::arg("kappa_prec"), py::arg("N"), py::arg("M"),
      py::arg("cache_dir") = "",
      "unit-root L-function: direct Euler product, plus the two-weight ratio check");

  m.def(
      "unit_root",
      [](int p, int d, const py::int_& kl, long M) {
        const UnitRoot ur = unit_root(p, d, to_mpz(kl), M);
        py::dict out;
        out["d"] = ur.d;
        out["pi0"] = padic_to_dict(ur.pi0);
        out["pi1"] = padic_to_dict(ur.pi1);
        return out;
      },
      py::arg("p"), py::arg("d"), py::arg("kl"), py::arg("M"),
      "unit root pi_0 of x^2 + kl x + p^d and its valuation-d companion pi_1");

  m.def("suite_names", [] { return suite_names(); },
        "names of the release-gate verification suites, in order");

  m.def(
      "run_suites",
      [](const std::string& which, int shards) {
        py::list out;
        for (const SuiteResult& r : run_suites(which, shards)) {
          py::dict d;
          d["criterion"] = r.criterion;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("which") = "all", py::arg("shards") = 1,
      "run release-gate suites by name (or 'all'); failures are reported, not raised");
}
