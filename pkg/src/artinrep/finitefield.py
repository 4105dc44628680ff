"""Small finite fields F_(p^r), enough to enumerate points on reduced curves.

The defining polynomial is the deterministically smallest monic irreducible
of degree r over F_p (coefficient tuples ordered as base-p integers), so a
field is reproducible across runs.  Elements are coefficient tuples of
length r; this is intended for q up to about 10^6.
"""

from __future__ import annotations

from functools import lru_cache

from .intpoly import _pgcd, _pmod, _pmul, _ppowmod, _pstrip


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Monic poly over F_p: x^(p^r) = x mod poly and no small-degree factor."""
    r = len(poly) - 1
    x = [0, 1]
    # x^(p^r) mod poly must equal x
    h = x
    for _ in range(r):
        h = _ppowmod(h, p, poly, p)
    diff = list(h) + [0] * max(0, 2 - len(h))
    diff[1] = (diff[1] - 1) % p
    if _pstrip(diff) != [0]:
        return False
    # gcd(x^(p^(r/q)) - x, poly) trivial for each prime q | r
    rr = r
    qs = set()
    d = 2
    while d * d <= rr:
        if rr % d == 0:
            qs.add(d)
            while rr % d == 0:
                rr //= d
        d += 1
    if rr > 1:
        qs.add(rr)
    for q in qs:
        h = x
        for _ in range(r // q):
            h = _ppowmod(h, p, poly, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if _pgcd(list(poly), _pstrip(diff), p) != [1]:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree r over F_p,
    ordering candidates by their base-p value sum(c_i p^i)."""
    if r == 1:
        return (0, 1)
    for k in range(p ** r):
        digits = []
        kk = k
        for _ in range(r):
            digits.append(kk % p)
            kk //= p
        cand = digits + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError("unreachable: irreducibles of every degree exist")


class Fq:
    """The field F_(p^r) with arithmetic on coefficient tuples."""

    def __init__(self, p: int, r: int) -> None:
        if r < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.r = r
        self.q = p ** r
        self.modulus = smallest_irreducible(p, r)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.r

    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.r - 1)

    def from_int(self, n: int) -> tuple[int, ...]:
        return (n % self.p,) + (0,) * (self.r - 1)

    def elements(self):
        """All q field elements, in base-p counting order."""
        for k in range(self.q):
            digits = []
            kk = k
            for _ in range(self.r):
                digits.append(kk % self.p)
                kk //= self.p
            yield tuple(digits)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        prod = _pmul(list(a), list(b), self.p)
        red = _pmod(prod, list(self.modulus), self.p)
        return tuple(red + [0] * (self.r - len(red)))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        acc = self.one()
        base = a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero in F_q")
        return self.pow(a, self.q - 2)

    def is_zero(self, a) -> bool:
        return not any(a)

    def squares(self) -> set:
        """The set {a^2 : a in F_q} (includes zero)."""
        return {self.mul(a, a) for a in self.elements()}

    def multiplicative_order(self, a) -> int:
        if not any(a):
            raise ValueError("zero has no multiplicative order")
        n = 1
        cur = a
        one = self.one()
        while cur != one:
            cur = self.mul(cur, a)
            n += 1
        return n

    def __repr__(self) -> str:
        return f"Fq(p={self.p}, r={self.r})"
