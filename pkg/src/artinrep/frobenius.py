"""Frobenius classification for quartic fields with full symmetric Galois
group whose splitting field contains Q(sqrt(-3)).

The class of Frob_p in the 5-class table is read off the factorization
pattern of the quartic mod p (Dedekind), cross-checked against the resolvent
cubic's pattern and the Kronecker symbol (-3|p) at every call; any
disagreement means corrupted data and aborts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .curves import kronecker
from .errors import MalformedTable, NotFound, RamifiedPrime
from .intpoly import (IntPoly, degree_pattern, discriminant, prime_support,
                      primes_up_to, squarefree_kernel)

PATTERN_TO_CLASS = {
    (1, 1, 1, 1): "1a",
    (2, 2): "2a",
    (1, 1, 2): "2b",
    (1, 3): "3a",
    (4,): "4a",
}
EVEN_CLASSES = {"1a", "2a", "3a"}
# resolvent-cubic residue degree per class (3 partition objects of 4 points)
RESOLVENT_DEGREE = {"1a": 1, "2a": 1, "2b": 2, "3a": 3, "4a": 2}
QUARTIC_WITNESS_BOUND = 100
FINGERPRINT_PRIMES = 100


@dataclass(frozen=True)
class S4FieldSpec:
    """Monic integer quartic x^4 + a x^3 + b x^2 + c x + d plus derived data."""

    coefficients: tuple[int, int, int, int]  # (a, b, c, d)

    @property
    def quartic(self) -> IntPoly:
        a, b, c, d = self.coefficients
        return IntPoly([d, c, b, a, 1])

    @property
    def resolvent_cubic(self) -> IntPoly:
        a, b, c, d = self.coefficients
        return IntPoly([-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1])

    @property
    def disc(self) -> int:
        return discriminant(self.quartic)

    def bad_primes(self) -> set[int]:
        return prime_support(self.disc)

    def contains_sqrt_minus_3(self) -> bool:
        return squarefree_kernel(self.disc) == -3

    def describe(self) -> str:
        a, b, c, d = self.coefficients
        return f"x^4 + {a}x^3 + {b}x^2 + {c}x + {d}"


@dataclass(frozen=True)
class FrobeniusDatum:
    prime: int
    class_label: str
    f_l4: int  # residue degree: max entry of the quartic pattern
    f_l3: int  # max entry of the resolvent pattern
    f_quadratic: int  # 1 or 2, residue degree in Q(sqrt(-3))


def frobenius_class(field: S4FieldSpec, p: int) -> FrobeniusDatum:
    """Classify Frob_p from the quartic's factorization pattern mod p, with
    three-way consistency checks."""
    if field.disc % p == 0:
        raise RamifiedPrime(p, field.describe())
    pattern = degree_pattern(field.quartic, p)
    try:
        label = PATTERN_TO_CLASS[pattern]
    except KeyError:
        raise MalformedTable(
            f"impossible quartic pattern {pattern} at p={p}") from None
    res_pattern = degree_pattern(field.resolvent_cubic, p)
    f_l3 = max(res_pattern)
    if f_l3 != RESOLVENT_DEGREE[label]:
        raise MalformedTable(
            f"inconsistent resolvent pattern {res_pattern} for class {label} "
            f"at p={p}")
    chi = kronecker(-3, p)
    if (label in EVEN_CLASSES) != (chi == 1):
        raise MalformedTable(
            f"parity check failed at p={p}: class {label}, (-3|p)={chi}")
    return FrobeniusDatum(prime=p, class_label=label, f_l4=max(pattern),
                          f_l3=f_l3, f_quadratic=1 if chi == 1 else 2)


def class_table(field: S4FieldSpec, limit: int) -> dict[int, str]:
    """Class label for every unramified prime up to limit."""
    out = {}
    for p in primes_up_to(limit):
        if field.disc % p:
            out[p] = frobenius_class(field, p).class_label
    return out


def fingerprint(field: S4FieldSpec, against: "S4FieldSpec",
                nprimes: int = FINGERPRINT_PRIMES) -> bool:
    """True when the two fields give identical class labels on the first
    nprimes common unramified primes (heuristic same-splitting-field test)."""
    seen = 0
    p = 1
    while seen < nprimes:
        p = _next_prime(p)
        if field.disc % p == 0 or against.disc % p == 0:
            continue
        if (frobenius_class(field, p).class_label
                != frobenius_class(against, p).class_label):
            return False
        seen += 1
    return True


def _next_prime(n: int) -> int:
    n += 1
    while True:
        if n >= 2 and all(n % d for d in range(2, isqrt(n) + 1)):
            return n
        n += 1


def _has_rational_root_monic(poly: IntPoly) -> bool:
    c0 = poly[0]
    if c0 == 0:
        return True
    divisors = set()
    for i in range(1, isqrt(abs(c0)) + 1):
        if c0 % i == 0:
            divisors.update({i, -i, abs(c0) // i, -(abs(c0) // i)})
    return any(poly(t) == 0 for t in divisors)


def _candidates(height: int):
    """Monic quartics ordered by (|a|+|b|+|c|+|d|, a, b, c, d)."""
    for s in range(4 * height + 1):
        batch = []
        for a in range(-min(s, height), min(s, height) + 1):
            ra = s - abs(a)
            for b in range(-min(ra, height), min(ra, height) + 1):
                rb = ra - abs(b)
                for c in range(-min(rb, height), min(rb, height) + 1):
                    rc = rb - abs(c)
                    if rc > height:
                        continue
                    for d in sorted({-rc, rc}):
                        batch.append((a, b, c, d))
        batch.sort()
        yield from batch


def find_s4_quartic(height: int, exclude: tuple[S4FieldSpec, ...] = ()) -> S4FieldSpec:
    """Deterministic scan for the first monic quartic with: a mod-p
    irreducibility witness, irreducible resolvent cubic, nonsquare
    discriminant, and disc / -3 a perfect square.  Candidates whose class
    fingerprint matches an excluded field are skipped."""
    if height < 2:
        raise ValueError("height bound must be at least 2")
    witnesses = primes_up_to(QUARTIC_WITNESS_BOUND)
    for (a, b, c, d) in _candidates(height):
        cand = S4FieldSpec((a, b, c, d))
        disc = cand.disc
        if disc == 0 or squarefree_kernel(disc) != -3:
            continue
        quartic = cand.quartic
        if not any(disc % p and degree_pattern(quartic, p) == (4,)
                   for p in witnesses):
            continue
        if _has_rational_root_monic(cand.resolvent_cubic):
            continue
        if any(fingerprint(cand, old) for old in exclude):
            continue
        return cand
    raise NotFound(f"no admissible quartic with coefficient height <= {height}")


def joint_class(field: S4FieldSpec, field2: S4FieldSpec, p: int,
                compositum_table) -> set[str]:
    """Compositum-table classes compatible with the pair of Frobenius
    classes; may legitimately contain more than one label."""
    c1 = frobenius_class(field, p).class_label
    c2 = frobenius_class(field2, p).class_label
    proj1 = compositum_table.projections["s4"]
    proj2 = compositum_table.projections["s4p"]
    out = {lbl for lbl in proj1
           if proj1[lbl] == c1 and proj2[lbl] == c2}
    if not out:
        raise MalformedTable(
            f"unrealizable class pair ({c1}, {c2}) at p={p}: projection "
            "tables or field pair corrupted")
    return out
