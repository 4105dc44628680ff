"""Exact arithmetic in rings of cyclotomic integers Z[zeta_m].

Elements are stored on the power basis 1, zeta, ..., zeta^(phi(m)-1) modulo
the m-th cyclotomic polynomial, with arbitrary-precision integer
coefficients.  Every value is canonicalized to its minimal conductor (never
congruent to 2 mod 4), so equality and hashing are plain tuple comparisons
and a rational integer is always stored at conductor 1.

The conductors needed by the shipped group tables all divide 12; larger m
works but is only lightly exercised.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("conductor must be positive")
    # x^m - 1 divided by the cyclotomic polynomials of the proper divisors
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _divexact(a: list[int], b: list[int]) -> list[int]:
    # exact division of integer polynomials, b monic or divides exactly
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        k = len(a) - len(b)
        c, r = divmod(a[-1], b[-1])
        if r:
            raise ArithmeticError("division not exact")
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if a == [0]:
            break
    if any(a):
        raise ArithmeticError("division not exact")
    return q


def _phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


@lru_cache(maxsize=None)
def _power_basis_table(m: int) -> tuple[tuple[int, ...], ...]:
    """zeta_m^j on the power basis for j = 0..m-1."""
    phi = _phi(m)
    cyc = cyclotomic_polynomial(m)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by zeta and reduce by the monic cyclotomic polynomial
        cur = [0] + cur
        if len(cur) > phi:
            lead = cur.pop()
            if lead:
                for i in range(phi):
                    cur[i] -= lead * cyc[i]
    return tuple(rows)


def _minimal_conductor(m: int, coeffs: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Rewrite the element at the smallest conductor d | m (d != 2 mod 4)."""
    if m == 1:
        return m, coeffs
    if all(c == 0 for c in coeffs[1:]):
        return 1, (coeffs[0],)
    for d in sorted(k for k in range(1, m) if m % k == 0 and k % 4 != 2):
        if d == 1:
            continue
        # invariant under Gal(Q(zeta_m)/Q(zeta_d)) = {sigma_k : k = 1 mod d}?
        fixed = all(
            _galois_apply(m, coeffs, k) == coeffs
            for k in range(1, m)
            if gcd(k, m) == 1 and k % d == 1
        )
        if not fixed:
            continue
        sub = _express_in_subfield(m, coeffs, d)
        if sub is not None:
            return d, sub
    return m, coeffs


def _galois_apply(m: int, coeffs: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Image of the element under zeta_m -> zeta_m^k."""
    basis = _power_basis_table(m)
    phi = _phi(m)
    out = [0] * phi
    for i, c in enumerate(coeffs):
        if c:
            row = basis[(i * k) % m]
            for j in range(phi):
                out[j] += c * row[j]
    return tuple(out)


def _express_in_subfield(m: int, coeffs: tuple[int, ...], d: int):
    """Solve for coordinates on the zeta_d power basis, or None."""
    phi_m, phi_d = _phi(m), _phi(d)
    basis = _power_basis_table(m)
    cols = [basis[(m // d) * j % m] for j in range(phi_d)]
    # solve sum_j x_j * cols[j] = coeffs over Q
    mat = [[Fraction(cols[j][i]) for j in range(phi_d)] + [Fraction(coeffs[i])]
           for i in range(phi_m)]
    sol = _solve_rational(mat, phi_d)
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


def _solve_rational(mat, ncols):
    """Gaussian elimination on an augmented matrix; None if inconsistent."""
    rows = len(mat)
    piv_rows = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if piv is None:
            piv_rows.append(None)
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        piv_rows.append(r)
        r += 1
    # consistency
    for i in range(r, rows):
        if mat[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for c, pr in enumerate(piv_rows):
        if pr is not None:
            sol[c] = mat[pr][ncols]
    return sol


class CycloInt:
    """An element of Z[zeta_m], stored at its minimal conductor."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs) -> None:
        if m < 1:
            raise ValueError("conductor must be positive")
        phi = _phi(m)
        cs = list(coeffs)
        if len(cs) > phi:
            raise ValueError("coefficient vector longer than phi(m)")
        cs += [0] * (phi - len(cs))
        mm, cc = _minimal_conductor(m, tuple(int(c) for c in cs))
        object.__setattr__(self, "m", mm)
        object.__setattr__(self, "coeffs", cc)

    def __setattr__(self, *a):  # immutable
        raise AttributeError("CycloInt is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_int(n: int) -> "CycloInt":
        return CycloInt(1, (int(n),))

    @staticmethod
    def zeta(m: int, k: int = 1) -> "CycloInt":
        """zeta_m^k."""
        return CycloInt(m, _power_basis_table(m)[k % m])

    # -- structure ----------------------------------------------------
    def is_rational(self) -> bool:
        return self.m == 1

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def _embedded(self, big: int) -> tuple[int, ...]:
        """Coefficients of self viewed in Z[zeta_big] (self.m | big)."""
        if big == self.m:
            return self.coeffs
        step = big // self.m
        basis = _power_basis_table(big)
        phi = _phi(big)
        out = [0] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = basis[(i * step) % big]
                for j in range(phi):
                    out[j] += c * row[j]
        return tuple(out)

    @staticmethod
    def _common(a: "CycloInt", b: "CycloInt"):
        m = _lcm_conductor(a.m, b.m)
        return m, a._embedded(m), b._embedded(m)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "CycloInt":
        other = _coerce(other)
        m, x, y = CycloInt._common(self, other)
        return CycloInt(m, tuple(a + b for a, b in zip(x, y)))

    __radd__ = __add__

    def __neg__(self) -> "CycloInt":
        return CycloInt(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "CycloInt":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "CycloInt":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "CycloInt":
        other = _coerce(other)
        m, x, y = CycloInt._common(self, other)
        phi = _phi(m)
        cyc = cyclotomic_polynomial(m)
        prod = [0] * (2 * phi - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        prod[i + j] += a * b
        # reduce modulo the monic cyclotomic polynomial
        for k in range(len(prod) - 1, phi - 1, -1):
            lead = prod[k]
            if lead:
                prod[k] = 0
                for i in range(phi):
                    prod[k - phi + i] -= lead * cyc[i]
        return CycloInt(m, tuple(prod[:phi]))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycloInt":
        if e < 0:
            raise ValueError("negative powers not supported")
        acc = CycloInt.from_int(1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def conj(self) -> "CycloInt":
        """Complex conjugation, zeta_m -> zeta_m^(-1)."""
        return self.galois(self.m - 1 if self.m > 1 else 1)

    def galois(self, k: int) -> "CycloInt":
        """Galois twin under zeta_m -> zeta_m^k, gcd(k, m) = 1."""
        if self.m == 1:
            return self
        if gcd(k, self.m) != 1:
            raise ValueError(f"k={k} not coprime to conductor {self.m}")
        return CycloInt(self.m, _galois_apply(self.m, self.coeffs, k % self.m))

    def conjugates(self) -> list["CycloInt"]:
        return [self.galois(k) for k in range(1, self.m + 1) if gcd(k, self.m) == 1]

    def trace(self) -> int:
        """Galois trace down to Q (an ordinary integer)."""
        total = CycloInt.from_int(0)
        for c in self.conjugates():
            total = total + c
        return total.to_int()

    # -- protocol -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.m == 1 and self.coeffs[0] == other
        if not isinstance(other, CycloInt):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        if self.m == 1:
            return hash(self.coeffs[0])
        return hash((self.m, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"CycloInt({self.coeffs[0]})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                if i == 0:
                    terms.append(str(c))
                else:
                    z = f"z{self.m}" + (f"^{i}" if i > 1 else "")
                    terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return "CycloInt(" + (" + ".join(terms) or "0").replace("+ -", "- ") + ")"

    def complex_value(self) -> complex:
        """Float embedding zeta_m -> exp(2*pi*i/m); for diagnostics only."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(c * z ** i for i, c in enumerate(self.coeffs))


def _lcm_conductor(a: int, b: int) -> int:
    m = a * b // gcd(a, b)
    # conductors 2 mod 4 are non-canonical; bump to keep zeta_2 = -1 representable
    if m % 4 == 2:
        m *= 2
    return m


def _coerce(x) -> CycloInt:
    if isinstance(x, CycloInt):
        return x
    if isinstance(x, int):
        return CycloInt.from_int(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to CycloInt")


ZERO = CycloInt.from_int(0)
ONE = CycloInt.from_int(1)
