"""Local-factor algebra: Rankin-Selberg expansions of an elliptic factor
against a character at a Frobenius class, the closed forms for the two
ramification-free splitting cases of the genus-3 twist, restriction-of-
scalars identities, twisted point counts, and normalized coefficients.

Everything before the statistics layer is exact: Rankin-Selberg products
are expanded over cyclotomic integers and certified to land in Z[T].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .characters import ClassFunction, GroupTable
from .curves import EllipticCurveSpec, ap, count_points_ext, kronecker, quadratic_twist
from .cyclotomic import CycloInt
from .errors import ArtinrepError, BadReduction
from .intpoly import IntPoly, power_sum


@dataclass(frozen=True)
class LocalFactor:
    """1 + c1 T + ... + c_2g T^2g attached to (label, p)."""

    label: str
    p: int
    genus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 2 * self.genus + 1:
            raise ValueError("coefficient count does not match genus")
        if self.coeffs[0] != 1:
            raise ValueError("local factor must have constant term 1")

    def poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def check_functional_symmetry(self) -> None:
        """c_(2g-i) = p^(g-i) c_i, the exact form of abar_i = abar_(2g-i)."""
        g, p = self.genus, self.p
        for i in range(g + 1):
            if self.coeffs[2 * g - i] != p ** (g - i) * self.coeffs[i]:
                raise ArtinrepError(
                    f"{self.label}@{self.p}: functional-equation symmetry "
                    f"fails at index {i}")

    def check_coefficient_bounds(self) -> None:
        """|abar_i| <= binom(2g, i), checked exactly: c_i^2 <= binom^2 p^i."""
        g, p = self.genus, self.p
        for i, c in enumerate(self.coeffs):
            bound = math.comb(2 * g, i)
            if c * c > bound * bound * p ** i:
                raise ArtinrepError(
                    f"{self.label}@{self.p}: coefficient bound fails at {i}")

    def normalized(self) -> list[float]:
        """abar_i = (-1)^i c_i p^(-i/2); float, for the statistics layer only."""
        self.check_functional_symmetry()
        self.check_coefficient_bounds()
        rt = math.sqrt(self.p)
        return [((-1) ** i) * c / rt ** i for i, c in enumerate(self.coeffs)]

    def reciprocal_power_sums(self, rmax: int) -> list[int]:
        """Newton power sums s_1..s_rmax of the reciprocal roots, exact."""
        n = 2 * self.genus
        e = [(-1) ** i * self.coeffs[i] for i in range(n + 1)]  # elementary syms
        s = []
        for k in range(1, rmax + 1):
            if k <= n:
                acc = (-1) ** (k - 1) * k * e[k]
                for i in range(1, k):
                    acc += (-1) ** (k - 1 + i) * e[k - i] * s[i - 1]
            else:
                acc = 0
                for i in range(1, n + 1):
                    acc += (-1) ** (i - 1) * e[i] * s[k - i - 1]
            s.append(acc)
        return s


def elliptic_factor(a: int, p: int, label: str = "E") -> LocalFactor:
    return LocalFactor(label, p, 1, (1, -a, p))


def local_factor(curve: EllipticCurveSpec, p: int) -> LocalFactor:
    """1 - a_p T + p T^2 at a good prime."""
    return elliptic_factor(ap(curve, p), p, label=curve.label)


def rankin_selberg_from_eigenvalues(a: int, p: int, exponents,
                                    label: str = "RS") -> LocalFactor:
    """prod over eigenvalues zeta_r^k, given as (k, r) pairs, of
    (1 - a lambda T + p lambda^2 T^2), expanded exactly over cyclotomic
    integers; every coefficient is certified to be a rational integer."""
    exponents = list(exponents)
    coeffs = [CycloInt.from_int(1)]
    for (k, r) in exponents:
        lam = CycloInt.zeta(r, k)
        lam2 = lam * lam
        # multiply by 1 - a*lam*T + p*lam^2*T^2
        nxt = [CycloInt.from_int(0)] * (len(coeffs) + 2)
        for i, c in enumerate(coeffs):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] - c * lam * a
            nxt[i + 2] = nxt[i + 2] + c * lam2 * p
        coeffs = nxt
    ints = []
    for c in coeffs:
        if not c.is_rational():
            raise ArtinrepError(
                "Rankin-Selberg coefficient is not rational: corrupted "
                "eigenvalue data")
        ints.append(c.to_int())
    return LocalFactor(label, p, len(exponents), tuple(ints))


def rankin_selberg_elliptic(a: int, p: int, chi: ClassFunction,
                            class_label: str, label: str = "RS") -> LocalFactor:
    """Rankin-Selberg factor of 1 - aT + pT^2 against a character at the
    given Frobenius class."""
    ev = chi.table.eigenvalue_multiset(chi, class_label)
    return rankin_selberg_from_eigenvalues(a, p, ev.exponents(), label=label)


CASE_CUBIC = "fL3=3"
CASE_QUARTIC = "fL4=4"


def split_case_factor(a: int, p: int, case: str, label: str = "J") -> LocalFactor:
    """Degree-6 local factor of the genus-3 twist in the two closed-form
    splitting cases, via the (a, p) symmetric-function expansion.

    Writing 1 - aT + pT^2 = (1 - alpha T)(1 - conj(alpha) T), the extra
    quartic factor collects the cube-root (resp. fourth-root) twists of the
    roots:  case fL3=3 gives 1 + aT + (a^2-p)T^2 + apT^3 + p^2T^4 and case
    fL4=4 gives 1 + (a^2-2p)T^2 + p^2T^4.
    """
    if case == CASE_CUBIC:
        quartic = (1, a, a * a - p, a * p, p * p)
    elif case == CASE_QUARTIC:
        quartic = (1, 0, a * a - 2 * p, 0, p * p)
    else:
        raise ValueError(f"unsupported splitting case {case!r}")
    prod = IntPoly((1, -a, p)) * IntPoly(quartic)
    return LocalFactor(label, p, 3, tuple(prod.coeffs))


def res_scalars_check(curve: EllipticCurveSpec, d: int, p: int,
                      c2_table: GroupTable) -> bool:
    """Degree-2 restriction-of-scalars identity over Q(sqrt(d)).

    Split p: the quadratic-field factor is L_p(E)^2 and must equal the
    product of the Rankin-Selberg factors at the trivial and quadratic
    characters (both trivial at a split class).  Inert p: the factor is
    L_P(E over the field, T^2) with trace a^2 - 2p, and must equal
    L_p(E) * L_p(E_d) computed from an actual point count of the twist.
    """
    if d in (0, 1):
        raise ValueError("d must define a quadratic field")
    from .intpoly import squarefree_kernel

    if squarefree_kernel(d) != d:
        raise ValueError(f"d={d} is not squarefree")
    if p == 2 or not curve.has_good_reduction(p) or d % p == 0:
        raise BadReduction(p, curve.label)
    a = ap(curve, p)
    chi_q = c2_table.by_name["chi_q"]
    twist = quadratic_twist(curve, d)
    a_tw = ap(twist, p)
    if kronecker(d, p) == 1:
        lhs = elliptic_factor(a, p).poly() * elliptic_factor(a, p).poly()
        rhs = (rankin_selberg_elliptic(a, p, c2_table.by_name["chi_t"], "1a").poly()
               * rankin_selberg_elliptic(a, p, chi_q, "1a").poly())
        extra = a_tw == a
    else:
        s2 = power_sum(a, p, 2)
        # L over the quadratic field evaluated at T^2
        lhs = IntPoly((1, 0, -s2, 0, p * p))
        rhs = elliptic_factor(a, p).poly() * elliptic_factor(a_tw, p).poly()
        extra = a_tw == -a
    return lhs == rhs and extra


def twist_point_count(a: int, p: int, table: GroupTable, class_label: str,
                      r: int) -> int:
    """Point count of the genus-3 twist over F_(p^r) by the trace formula
    (1 + p^r)(1 - t_r) + t_r * #E(F_(p^r)) with t_r the degree-3 character
    trace at the class of Frob_p^r; cross-checked against Newton power sums
    of the degree-6 Rankin-Selberg factor."""
    if r <= 0:
        raise ValueError("extension degree must be positive")
    chi4 = table.by_name["chi4"]
    cls_r = table.power_class(class_label, r)
    t_r = chi4.value(cls_r).to_int()
    n_curve = 1 + p ** r - power_sum(a, p, r)
    value = (1 + p ** r) * (1 - t_r) + t_r * n_curve
    # independent route: Newton sums of the full degree-6 factor
    factor = rankin_selberg_elliptic(a, p, chi4, class_label)
    s_r = factor.reciprocal_power_sums(r)[r - 1]
    check = 1 + p ** r - s_r
    if value != check:
        raise ArtinrepError(
            f"twist point count mismatch at p={p}, r={r}: {value} vs {check}")
    return value


def divides(small: LocalFactor, big: LocalFactor) -> bool:
    return small.poly().divides(big.poly())
