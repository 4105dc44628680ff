"""Exact univariate integer polynomials and the number-theoretic kernels
built on them: subresultant resultants, composed products (the polynomial
whose reciprocal roots are all pairwise products), trace power sums,
Catalan numbers and distinct-degree factorization patterns mod p.

Coefficient lists run low to high degree throughout.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import RamifiedPrime


class IntPoly:
    """Immutable integer polynomial; the zero polynomial is coeffs == (0,)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        cs = [int(c) for c in coeffs] or [0]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("IntPoly is immutable")

    # -- basics ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def lc(self) -> int:
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.degree else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def pretty(self, var: str = "T") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                x = var if i == 1 else f"{var}^{i}"
                parts.append(x if c == 1 else f"-{x}" if c == -1 else f"{c}*{x}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations --------------------------------------------------
    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def reverse(self) -> "IntPoly":
        """x^deg * f(1/x); swaps roots and reciprocal roots."""
        return IntPoly(list(reversed(self.coeffs)))

    def divides(self, other: "IntPoly") -> bool:
        """Exact divisibility over Q[T] (equivalently over Z for our factors)."""
        if self.is_zero():
            return other.is_zero()
        rem = [Fraction(c) for c in other.coeffs]
        den = self.coeffs
        while len(rem) >= len(den) and any(rem):
            q = rem[-1] / den[-1]
            k = len(rem) - len(den)
            for i, d in enumerate(den):
                rem[i + k] -= q * d
            while len(rem) > 1 and rem[-1] == 0:
                rem.pop()
            if rem == [Fraction(0)]:
                break
        return all(c == 0 for c in rem)


def _content(cs) -> int:
    g = 0
    for c in cs:
        g = math.gcd(g, abs(c))
    return g or 1


def _prem(a, b):
    """Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a by b, exact over Z."""
    a = list(a)
    d = len(a) - len(b)
    lb = b[-1]
    a = [c * lb ** (d + 1) for c in a]
    while len(a) >= len(b) and any(a):
        k = len(a) - len(b)
        q, rr = divmod(a[-1], lb)
        assert rr == 0
        for i, bc in enumerate(b):
            a[i + k] -= q * bc
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if a == [0]:
            break
    return a if any(a) else [0]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant over Z via the subresultant pseudo-remainder sequence."""
    if f.is_zero() or g.is_zero():
        return 0
    A, B = list(f.coeffs), list(g.coeffs)
    s = 1
    if len(A) - 1 < len(B) - 1:
        if ((len(A) - 1) * (len(B) - 1)) % 2:
            s = -s
        A, B = B, A
    ca, cb = _content(A), _content(B)
    A = [c // ca for c in A]
    B = [c // cb for c in B]
    t = ca ** (len(B) - 1) * cb ** (len(A) - 1)
    gg, hh = 1, 1
    while len(B) - 1 > 0:
        delta = (len(A) - 1) - (len(B) - 1)
        if ((len(A) - 1) % 2) and ((len(B) - 1) % 2):
            s = -s
        R = _prem(A, B)
        if R == [0]:
            return 0
        A = B
        denom = gg * hh ** delta
        B = [c // denom for c in R]
        gg = A[-1]
        hh = hh if delta == 0 else (gg ** delta) // (hh ** (delta - 1))
    degA = len(A) - 1
    if degA == 0:
        # both ended up constant; only happens for constant inputs
        return s * t
    num = B[0] ** degA
    res = num if degA == 1 else num // (hh ** (degA - 1))
    return s * t * res


def resultant_sylvester(f: IntPoly, g: IntPoly) -> int:
    """Resultant via fraction-free Gaussian elimination of the Sylvester
    matrix; simple and robust, used as the production path at desk scale."""
    m, n = f.degree, g.degree
    if f.is_zero() or g.is_zero():
        return 0
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    mat = [[Fraction(0)] * size for _ in range(size)]
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        for j, c in enumerate(fc):
            mat[i][i + j] = Fraction(c)
    for i in range(m):
        for j, c in enumerate(gc):
            mat[n + i][i + j] = Fraction(c)
    det = Fraction(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, size):
            if mat[r][col]:
                fac = mat[r][col] * inv
                for c in range(col, size):
                    mat[r][c] -= fac * mat[col][c]
    assert det.denominator == 1
    return int(det)


def discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = resultant_sylvester(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    val, rem = divmod(sign * res, f.lc())
    assert rem == 0
    return val


def composed_product(f: IntPoly, g: IntPoly) -> IntPoly:
    """Product-of-roots composition of local-factor style polynomials.

    Both inputs must have constant term 1 (the form prod(1 - gamma*T)); the
    result is prod over pairs (1 - alpha_i*beta_j*T), computed exactly by
    interpolating the resultant Res_y(F(y), y^m G(x/y)) of the reversed
    (monic) polynomials at integer points.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("composed product of the zero polynomial")
    if f[0] != 1 or g[0] != 1:
        raise ValueError("inputs must have constant term 1")
    n, m = f.degree, g.degree
    if n == 0 or m == 0:
        return IntPoly(f.coeffs if m == 0 else g.coeffs)
    F = f.reverse()  # monic, roots = reciprocal roots of f
    G = g.reverse()
    deg = n * m
    xs, ys = [], []
    t = 0
    while len(xs) < deg + 1:
        # H_t(y) = y^m G(t/y) = sum_k G_k t^k y^(m-k)
        ht = [0] * (m + 1)
        for k, c in enumerate(G.coeffs):
            ht[m - k] = c * t ** k
        val = resultant_sylvester(F, IntPoly(ht))
        xs.append(t)
        ys.append(val)
        t = -t if t > 0 else -t + 1  # 0, 1, -1, 2, -2, ...
    coeffs = _lagrange_integer(xs, ys, deg)
    P = IntPoly(coeffs)  # monic with roots alpha_i*beta_j
    out = P.reverse()
    assert out[0] == 1, "composed product lost constant-term normalization"
    return out


def _lagrange_integer(xs, ys, deg):
    """Exact interpolation; asserts the result has integer coefficients."""
    coeffs = [Fraction(0)] * (deg + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        # basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis[:]
            low = [Fraction(-xj) * c for c in basis[1:]] + [Fraction(0)]
            basis = [a + b for a, b in zip(basis, low + [Fraction(0)] * (len(basis) - len(low)))]
            denom *= xi - xj
        w = Fraction(yi, denom)
        for k, c in enumerate(basis):
            if k <= deg:
                coeffs[k] += w * c
    assert all(c.denominator == 1 for c in coeffs), "non-integer interpolation"
    return [int(c) for c in coeffs]


def power_sum(a: int, p: int, r: int) -> int:
    """s_r = alpha^r + conj(alpha)^r for the reciprocal roots of 1 - aT + pT^2."""
    if r < 0:
        raise ValueError("power sum order must be nonnegative")
    s0, s1 = 2, a
    if r == 0:
        return s0
    if r == 1:
        return s1
    for _ in range(r - 1):
        s0, s1 = s1, a * s1 - p * s0
    return s1


def catalan(n: int) -> int:
    """c_n = binom(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError("catalan index must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


# -- polynomials over F_p (private helpers + the degree-pattern kernel) ----

def _pstrip(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pstrip(out)


def _pmod(a, m, p):
    a = _pstrip([c % p for c in a])
    inv = pow(m[-1], -1, p)
    while len(a) >= len(m) and a != [0]:
        k = len(a) - len(m)
        q = a[-1] * inv % p
        for i, c in enumerate(m):
            a[i + k] = (a[i + k] - q * c) % p
        _pstrip(a)
        if a == [0]:
            break
    return a


def _pgcd(a, b, p):
    a = _pstrip([c % p for c in a])
    b = _pstrip([c % p for c in b])
    while b != [0]:
        a, b = b, _pmod(a, b, p)
    if a != [0] and a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _pdivexact(a, g, p):
    a = _pstrip([c % p for c in a])
    g = _pstrip([c % p for c in g])
    q = [0] * (len(a) - len(g) + 1)
    inv = pow(g[-1], -1, p)
    while len(a) >= len(g) and a != [0]:
        k = len(a) - len(g)
        c = a[-1] * inv % p
        q[k] = c
        for i, gc in enumerate(g):
            a[i + k] = (a[i + k] - c * gc) % p
        _pstrip(a)
        if a == [0]:
            break
    assert a == [0], "division not exact mod p"
    return _pstrip(q)


def _ppowmod(base, e, m, p):
    acc = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            acc = _pmod(_pmul(acc, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return acc


def degree_pattern(f: IntPoly, p: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of f mod p (distinct-degree
    factorization; no equal-degree splitting).  Requires p not dividing
    disc(f), so the reduction is squarefree of full degree."""
    if f.lc() % p == 0 or discriminant(f) % p == 0:
        raise RamifiedPrime(p, f.pretty("x"))
    fp = _pstrip([c % p for c in f.coeffs])
    v = list(fp)
    pattern = []
    h = [0, 1]
    d = 1
    while len(v) - 1 >= 2 * d:
        h = _ppowmod(h, p, v, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(list(v), _pstrip(diff), p)
        if g != [1]:
            pattern.extend([d] * ((len(g) - 1) // d))
            v = _pdivexact(v, g, p)
            h = _pmod(h, v, p) if len(v) > 1 else [0]
        d += 1
    if len(v) > 1:
        pattern.append(len(v) - 1)
    assert sum(pattern) == f.degree
    return tuple(sorted(pattern))


def squarefree_kernel(n: int) -> int:
    """Sign times the product of primes dividing n to an odd power."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    k = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            k *= d
        d += 1
    if n > 1:
        k *= n
    return sign * k


def prime_support(n: int) -> set[int]:
    n = abs(n)
    out = set()
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i:: i] = b"\x00" * len(range(i * i, n + 1, i))
    return [i for i in range(n + 1) if sieve[i]]
