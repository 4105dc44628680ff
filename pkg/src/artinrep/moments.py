"""Moments of the normalized local-factor coefficients of the genus-3 twist.

Closed forms are exact rationals evaluated from the degree-3 character's
trace values t and the class sizes of the 24-element table (element-weighted
sums, i.e. class size times class value).  The per-prime quantities feeding
the empirical estimates are

    abar1 = abar * t,
    abar2 = t * (abar^2 - 2 + t),
    abar3 = abar * (abar^2 + t^2 - 3),

with abar the normalized elliptic trace of the base twin at p and t the
trace at the Frobenius class.  Floating point enters only in the averaging
layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .characters import GroupTable
from .curves import EllipticCurveSpec, ap_table
from .errors import ArtinrepError
from .frobenius import S4FieldSpec, frobenius_class
from .intpoly import catalan, primes_up_to

MIN_SAMPLE = 100


def _weighted_power_sum(table: GroupTable, fn) -> int:
    """sum over group elements of fn(t_sigma), via class sizes."""
    chi4 = table.by_name["chi4"]
    total = 0
    for c in table.classes:
        t = chi4.value(c.label).to_int()
        total += c.size * fn(t)
    return total


def theoretical_moment(index: int, order: int, table: GroupTable) -> Fraction:
    """Exact n-th moment of abar_index for the genus-3 twist.

    Odd moments of abar1 and abar3 vanish.  The even/general closed forms
    combine Catalan numbers with element-weighted trace sums.
    """
    if index not in (1, 2, 3):
        raise ArtinrepError(f"coefficient index {index} not in {{1, 2, 3}}")
    if order < 0:
        raise ValueError("moment order must be nonnegative")
    if not table.sizes_trusted:
        raise ArtinrepError("moment formulas need trusted class sizes")
    size = table.order
    if index == 1:
        if order % 2:
            return Fraction(0)
        n = order // 2
        s = _weighted_power_sum(table, lambda t: t ** (2 * n))
        return Fraction(catalan(n) * s, size)
    if index == 2:
        n = order
        total = Fraction(0)
        for i in range(n + 1):
            s = _weighted_power_sum(table, lambda t: t ** n * (t - 2) ** (n - i))
            total += math.comb(n, i) * catalan(i) * Fraction(s, size)
        return total
    # index == 3
    if order % 2:
        return Fraction(0)
    n = order // 2
    total = Fraction(0)
    for i in range(2 * n + 1):
        s = _weighted_power_sum(table, lambda t: (t * t - 3) ** (2 * n - i))
        total += math.comb(2 * n, i) * catalan(i + n) * Fraction(s, size)
    return total


@dataclass
class MomentReport:
    coefficient: int  # 0 marks the plain elliptic (Catalan) check
    order: int
    theoretical: Fraction
    empirical: float
    stderr: float
    n_primes: int
    tolerance: float
    passed: bool

    def csv_row(self) -> dict:
        return {
            "coefficient": self.coefficient,
            "order": self.order,
            "theoretical_num": self.theoretical.numerator,
            "theoretical_den": self.theoretical.denominator,
            "empirical": f"{self.empirical:.6f}",
            "stderr": f"{self.stderr:.6f}",
            "n_primes": self.n_primes,
            "pass": str(self.passed).lower(),
        }


def _sample_stats(values, theoretical: Fraction, coefficient: int,
                  order: int) -> MomentReport:
    n = len(values)
    if n < MIN_SAMPLE:
        raise ArtinrepError(f"insufficient sample: {n} usable primes")
    mean = sum(values) / n
    var = sum((v - mean) ** 2 for v in values) / n
    stderr = math.sqrt(var / n)
    tol = max(0.1, 3 * stderr)
    passed = abs(mean - float(theoretical)) <= tol
    return MomentReport(coefficient, order, theoretical, mean, stderr, n,
                        tol, passed)


def per_prime_values(curve: EllipticCurveSpec, quartic_field: S4FieldSpec,
                     table: GroupTable, prime_bound: int,
                     include_supersingular: bool = True,
                     workers: int = 1):
    """(p, abar, t) stream for good unramified primes up to the bound."""
    traces = ap_table(curve, prime_bound, workers=workers)
    chi4 = table.by_name["chi4"]
    out = []
    for p, a in traces.items():
        if quartic_field.disc % p == 0:
            continue
        if a == 0 and not include_supersingular:
            continue
        cls = frobenius_class(quartic_field, p).class_label
        t = chi4.value(cls).to_int()
        out.append((p, a / math.sqrt(p), t))
    return out


def empirical_moment(index: int, order: int, curve: EllipticCurveSpec,
                     quartic_field: S4FieldSpec, table: GroupTable,
                     prime_bound: int, include_supersingular: bool = True,
                     workers: int = 1,
                     samples=None) -> MomentReport:
    """Empirical n-th moment of abar_index against the closed form."""
    theo = theoretical_moment(index, order, table)
    if samples is None:
        samples = per_prime_values(curve, quartic_field, table, prime_bound,
                                   include_supersingular, workers=workers)
    vals = []
    for (_, abar, t) in samples:
        if index == 1:
            v = abar * t
        elif index == 2:
            v = t * (abar * abar - 2 + t)
        else:
            v = abar * (abar * abar + t * t - 3)
        vals.append(v ** order)
    return _sample_stats(vals, theo, index, order)


def catalan_moment_check(n: int, curve: EllipticCurveSpec, prime_bound: int,
                         workers: int = 1) -> MomentReport:
    """Even moments of the normalized elliptic trace against Catalan
    numbers (the non-CM equidistribution statement at moment level)."""
    if n < 0:
        raise ValueError("moment index must be nonnegative")
    theo = Fraction(catalan(n))
    traces = ap_table(curve, prime_bound, workers=workers)
    vals = [(a / math.sqrt(p)) ** (2 * n) for p, a in traces.items()]
    return _sample_stats(vals, theo, 0, 2 * n)


def genus3_normalized_coefficients(abar: float, t: int) -> tuple[float, float, float]:
    """The three normalized coefficients from (abar, t); float layer."""
    return (abar * t, t * (abar * abar - 2 + t), abar * (abar * abar + t * t - 3))
