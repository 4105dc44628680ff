"""Curve registry types and naive exact point counting.

Traces of Frobenius for elliptic curves come from a single O(p) pass with a
quadratic-character lookup table (vectorized); plane-quartic counts are the
O(p^2) chart-by-chart scan.  Primes 2 and 3 are always refused for elliptic
counts: the short-form transformation used by the counting loop is only
valid away from 6, and every curve in scope has bad reduction there anyway.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np

from .errors import BadReduction
from .finitefield import Fq
from .intpoly import power_sum, prime_support, primes_up_to

ENUMERATION_LIMIT = 10 ** 6


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    res = 1
    if n < 0:
        n = -n
        if a < 0:
            res = -res
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            res = -res
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                res = -res
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            res = -res
        a %= n
    return res if n == 1 else 0


@dataclass(frozen=True)
class EllipticCurveSpec:
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    label: str
    a_invariants: tuple[int, int, int, int, int]
    conductor: int | None = None

    def __post_init__(self):
        if self.discriminant == 0:
            raise ValueError(f"{self.label}: singular Weierstrass model")
        if self.conductor is not None:
            if not prime_support(self.conductor) <= prime_support(self.discriminant):
                raise ValueError(
                    f"{self.label}: conductor support not inside discriminant support")

    @property
    def b_invariants(self) -> tuple[int, int, int, int]:
        a1, a2, a3, a4, a6 = self.a_invariants
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c_invariants(self) -> tuple[int, int]:
        b2, b4, b6, _ = self.b_invariants
        return b2 * b2 - 24 * b4, -b2 ** 3 + 36 * b2 * b4 - 216 * b6

    @property
    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def short_model(self) -> tuple[int, int]:
        """(A, B) with y^2 = x^3 + Ax + B, valid for counting at p > 3."""
        c4, c6 = self.c_invariants
        return -27 * c4, -54 * c6

    def bad_primes(self) -> set[int]:
        bad = prime_support(self.discriminant)
        if self.conductor is not None:
            bad |= prime_support(self.conductor)
        return bad

    def has_good_reduction(self, p: int) -> bool:
        return p > 3 and p not in self.bad_primes()


@dataclass(frozen=True)
class PlaneQuarticSpec:
    """Projective plane quartic, denominator-cleared integer monomial map."""

    label: str
    monomials: dict = field(hash=False)  # (a, b, c) with a+b+c = 4 -> coefficient
    bad_primes: tuple[int, ...] = ()

    def __post_init__(self):
        for expo in self.monomials:
            if len(expo) != 3 or sum(expo) != 4 or min(expo) < 0:
                raise ValueError(f"{self.label}: non-homogeneous monomial {expo}")

    def coefficient_arrays(self):
        expos = sorted(self.monomials)
        coeffs = [self.monomials[e] for e in expos]
        return expos, coeffs


# -- trace of Frobenius -------------------------------------------------

_AP_CACHE: dict = {}
_AP_LOCK = threading.Lock()


def _quadratic_character_table(p: int) -> np.ndarray:
    x = np.arange(p, dtype=np.int64)
    chi = np.full(p, -1, dtype=np.int64)
    chi[(x * x) % p] = 1
    chi[0] = 0
    return chi


def ap(curve: EllipticCurveSpec, p: int) -> int:
    """Trace of Frobenius at a good prime p > 3, by the O(p) character sum."""
    if not curve.has_good_reduction(p):
        raise BadReduction(p, curve.label)
    key = (curve.label, curve.a_invariants, p)
    with _AP_LOCK:
        hit = _AP_CACHE.get(key)
    if hit is not None:
        return hit
    a = _ap_scan(curve, p)
    with _AP_LOCK:
        _AP_CACHE[key] = a
    return a


def _ap_scan(curve: EllipticCurveSpec, p: int) -> int:
    A, B = curve.short_model()
    x = np.arange(p, dtype=np.int64)
    sq = (x * x) % p
    chi = np.full(p, -1, dtype=np.int64)
    chi[sq] = 1
    chi[0] = 0
    vals = (sq * x + (A % p) * x + (B % p)) % p
    a = -int(chi[vals].sum())
    assert a * a <= 4 * p, "Hasse bound violated: corrupted curve data"
    return a


def ap_table(curve: EllipticCurveSpec, limit: int,
             workers: int = 1) -> dict[int, int]:
    """a_p for every good prime 5 <= p <= limit.

    Deterministic regardless of worker count: results are merged in prime
    order.  The per-curve memo cache is shared and lock-guarded.
    """
    ps = [p for p in primes_up_to(limit) if curve.has_good_reduction(p)]
    missing = []
    out = {}
    with _AP_LOCK:
        for p in ps:
            hit = _AP_CACHE.get((curve.label, curve.a_invariants, p))
            if hit is None:
                missing.append(p)
            else:
                out[p] = hit
    if missing:
        if workers > 1:
            from concurrent.futures import ProcessPoolExecutor

            chunks = [missing[i::workers] for i in range(workers)]
            args = [(curve.label, curve.a_invariants, curve.conductor, chunk)
                    for chunk in chunks if chunk]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_scan_chunk, args):
                    out.update(part)
        else:
            for p in missing:
                out[p] = _ap_scan(curve, p)
        with _AP_LOCK:
            for p in missing:
                _AP_CACHE[(curve.label, curve.a_invariants, p)] = out[p]
    return dict(sorted(out.items()))


def _scan_chunk(args):
    label, ainv, conductor, ps = args
    curve = EllipticCurveSpec(label, tuple(ainv), conductor)
    return {p: _ap_scan(curve, p) for p in ps}


def count_points(curve: EllipticCurveSpec, p: int) -> int:
    """#E(F_p) including the point at infinity."""
    return p + 1 - ap(curve, p)


def count_points_ext(curve: EllipticCurveSpec, p: int, r: int,
                     mode: str = "formula") -> int:
    """#E(F_(p^r)), by the trace power-sum formula or by full enumeration."""
    if r < 1:
        raise ValueError("extension degree must be positive")
    if not curve.has_good_reduction(p):
        raise BadReduction(p, curve.label)
    if mode == "formula":
        return 1 + p ** r - power_sum(ap(curve, p), p, r)
    if mode != "enumerate":
        raise ValueError(f"unknown mode {mode!r}")
    q = p ** r
    if q > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration over F_{q} exceeds the size guard")
    field_ = Fq(p, r)
    A, B = curve.short_model()
    a = field_.from_int(A)
    b = field_.from_int(B)
    squares = field_.squares()
    n = 1  # infinity
    for x in field_.elements():
        fx = field_.add(field_.mul(field_.mul(x, x), x),
                        field_.add(field_.mul(a, x), b))
        if field_.is_zero(fx):
            n += 1
        elif fx in squares:
            n += 2
    return n


def quadratic_twist(curve: EllipticCurveSpec, d: int) -> EllipticCurveSpec:
    """Twist y^2 = x^3 + A d^2 x + B d^3 of the short model; d squarefree."""
    if d == 0:
        raise ValueError("twist parameter must be nonzero")
    from .intpoly import squarefree_kernel

    if squarefree_kernel(d) != d:
        raise ValueError(f"twist parameter {d} is not squarefree")
    A, B = curve.short_model()
    return EllipticCurveSpec(
        label=f"{curve.label}(d={d})",
        a_invariants=(0, 0, 0, A * d * d, B * d ** 3),
        conductor=None,
    )


def count_quartic(quartic: PlaneQuarticSpec, p: int) -> int:
    """Projective F_p-points of a smooth plane quartic, chart by chart."""
    if p in quartic.bad_primes:
        raise BadReduction(p, quartic.label)
    expos, coeffs = quartic.coefficient_arrays()

    def form(x, y, z):
        total = np.zeros_like(x)
        for (a, b, c), coef in zip(expos, coeffs):
            term = (coef % p) * _powmod_arr(x, a, p) % p
            term = term * _powmod_arr(y, b, p) % p
            term = term * _powmod_arr(z, c, p) % p
            total = (total + term) % p
        return total

    xs, ys = np.meshgrid(np.arange(p, dtype=np.int64),
                         np.arange(p, dtype=np.int64), indexing="ij")
    n = int((form(xs, ys, np.ones_like(xs)) == 0).sum())        # Z = 1
    xline = np.arange(p, dtype=np.int64)
    n += int((form(xline, np.ones_like(xline), np.zeros_like(xline)) == 0).sum())  # Z=0, Y=1
    one = np.ones(1, dtype=np.int64)
    zero = np.zeros(1, dtype=np.int64)
    n += int((form(one, zero, zero) == 0).sum())                 # (1:0:0)
    count = n
    weil = 6 * np.sqrt(p)
    assert 1 + p - weil <= count <= 1 + p + weil, "genus-3 Weil bound violated"
    return count


def _powmod_arr(arr: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(arr)
    base = arr % p
    while e:
        if e & 1:
            out = (out * base) % p
        base = (base * base) % p
        e >>= 1
    return out


def clear_ap_cache() -> None:
    with _AP_LOCK:
        _AP_CACHE.clear()
