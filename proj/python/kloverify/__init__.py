"""Exact verification of Kloosterman sum statistics, Hecke traces, and
p-adic symmetric-power L-functions in characteristics 2 and 3.

All arithmetic is exact: big integers cross the boundary as Python ints,
rationals as (numerator, denominator) pairs (see `hurwitz_h` / `hurwitz_H`
for `Fraction` conveniences), and p-adic numbers as dicts carrying the
canonical residue, the absolute precision, and a certified valuation bound.
"""

from fractions import Fraction

from ._core import (
    cheb,
    class_number_h,
    dim_cusp_gamma1,
    dim_cusp_sl2z,
    freq_table,
    kl_sum,
    kronecker_H,
    l_sym_euler,
    l_sym_limit,
    l_unit,
    newton_polygon,
    power_sum,
    run_suites,
    suite_names,
    sym_l,
    trace,
    unit_root,
)

__all__ = [
    "cheb",
    "class_number_h",
    "dim_cusp_gamma1",
    "dim_cusp_sl2z",
    "freq_table",
    "hurwitz_H",
    "hurwitz_h",
    "kl_sum",
    "kronecker_H",
    "l_sym_euler",
    "l_sym_limit",
    "l_unit",
    "newton_polygon",
    "power_sum",
    "run_suites",
    "suite_names",
    "sym_l",
    "trace",
    "unit_root",
]

__version__ = "1.0.0"


def hurwitz_h(D):
    """Hurwitz class number h(D) as a Fraction."""
    return Fraction(*class_number_h(D))


def hurwitz_H(D):
    """Hurwitz-Kronecker class number H(D) as a Fraction."""
    return Fraction(*kronecker_H(D))
