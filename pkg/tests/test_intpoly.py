import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artinrep.errors import RamifiedPrime
from artinrep.intpoly import (IntPoly, catalan, composed_product,
                              degree_pattern, discriminant, power_sum,
                              resultant, resultant_sylvester,
                              squarefree_kernel)

# -- brute-force oracles ---------------------------------------------------

def brute_factor_pattern(coeffs, p):
    """Fully factor a monic polynomial over F_p by trial division with monic
    polynomials of ascending degree; returns the sorted degree pattern."""
    import itertools

    from artinrep.intpoly import _pdivexact, _pmod, _pstrip

    f = _pstrip([c % p for c in coeffs])
    pattern = []
    d = 1
    while len(f) > 1:
        if len(f) - 1 < 2 * d:
            pattern.append(len(f) - 1)
            break
        found = False
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            if _pmod(list(f), g, p) == [0]:
                f = _pdivexact(f, g, p)
                pattern.append(d)
                found = True
                break
        if not found:
            d += 1
    return tuple(sorted(pattern))


def mp_composed_product(f, g):
    """50-digit float oracle: multiply out prod(1 - a_i b_j T) from the
    numeric reciprocal roots and round to integers."""
    mpmath.mp.dps = 50
    fr = mpmath.polyroots([mpmath.mpf(c) for c in reversed(f.reverse().coeffs)])
    gr = mpmath.polyroots([mpmath.mpf(c) for c in reversed(g.reverse().coeffs)])
    poly = [mpmath.mpc(1)]
    for a in fr:
        for b in gr:
            nxt = [mpmath.mpc(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i] += c
                nxt[i + 1] -= c * a * b
            poly = nxt
    out = []
    for c in poly:
        assert abs(c.imag) < 1e-20
        out.append(int(mpmath.nint(c.real)))
    return tuple(out)


# -- composed products ------------------------------------------------------

def test_single_roots_multiply():
    assert composed_product(IntPoly([1, -2]), IntPoly([1, -3])).coeffs == (1, -6)


def test_one_minus_t_is_identity():
    f = IntPoly([1, 3, -7, 2])
    assert composed_product(f, IntPoly([1, -1])) == f
    assert composed_product(IntPoly([1, -1]), f) == f


def test_elliptic_self_product_frozen():
    # oracle: roots a+conj(a) = 1, a*conj(a) = 2; pair products are
    # {a^2, 2, 2, conj(a)^2}: (1-2T)^2 (1 - (a^2+c^2)T + 4T^2) with
    # a^2 + c^2 = 1 - 4 = -3, expanded by hand:
    got = composed_product(IntPoly([1, -1, 2]), IntPoly([1, -1, 2]))
    assert got.coeffs == (1, -1, -4, -4, 16)
    # degree n*m and constant 1; leading coefficient is p^4 for genus 1
    assert got.degree == 4 and got[0] == 1 and got[4] == 2 ** 4


@given(st.integers(-5, 5), st.integers(2, 7))
@settings(max_examples=25, deadline=None)
def test_self_product_against_float_oracle(a, p):
    f = IntPoly([1, -a, p])
    assert composed_product(f, f).coeffs == mp_composed_product(f, f)


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=3),
       st.lists(st.integers(-4, 4), min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_composed_product_commutative_with_degree(roots_a, roots_b):
    f = IntPoly([1])
    for r in roots_a:
        f = f * IntPoly([1, -r])
    g = IntPoly([1])
    for r in roots_b:
        g = g * IntPoly([1, -r])
    if 0 in roots_a or 0 in roots_b:
        return  # factored form requires nonzero reciprocal roots
    left = composed_product(f, g)
    assert left == composed_product(g, f)
    assert left.degree == f.degree * g.degree


def test_composed_product_rejects_zero_and_bad_constant():
    with pytest.raises(ValueError):
        composed_product(IntPoly([0]), IntPoly([1, -1]))
    with pytest.raises(ValueError):
        composed_product(IntPoly([2, 1]), IntPoly([1, -1]))


# -- resultants --------------------------------------------------------------

@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6),
       st.lists(st.integers(-9, 9), min_size=1, max_size=6))
@settings(max_examples=150, deadline=None)
def test_prs_resultant_matches_sylvester(a, b):
    f, g = IntPoly(a), IntPoly(b)
    if f.is_zero() or g.is_zero():
        return
    assert resultant(f, g) == resultant_sylvester(f, g)


def test_discriminant_examples():
    assert discriminant(IntPoly([-1, -1, 0, 0, 1])) == -283  # x^4 - x - 1
    assert discriminant(IntPoly([-2, 0, 0, 1])) == -108      # x^3 - 2
    assert discriminant(IntPoly([1, 0, 1])) == -4            # x^2 + 1


# -- power sums ---------------------------------------------------------------

def test_power_sum_base_cases():
    assert power_sum(7, 11, 0) == 2
    assert power_sum(7, 11, 1) == 7
    assert power_sum(7, 11, 2) == 49 - 22


def test_power_sum_cubic_identity():
    # 1 + p^3 - s3 = 1 + p^3 - a^3 + 3ap
    for a, p in [(2, 5), (-4, 11), (0, 13), (6, 17)]:
        assert power_sum(a, p, 3) == a ** 3 - 3 * a * p


def test_power_sum_rejects_negative_order():
    with pytest.raises(ValueError):
        power_sum(1, 5, -1)


@given(st.integers(-8, 8), st.integers(2, 50), st.integers(0, 12))
@settings(max_examples=60, deadline=None)
def test_power_sum_against_50_digit_roots(a, p, r):
    mpmath.mp.dps = 50
    roots = mpmath.polyroots([mpmath.mpf(p), mpmath.mpf(-a), mpmath.mpf(1)])
    val = sum(x ** r for x in roots)
    assert int(mpmath.nint(mpmath.re(val))) == power_sum(a, p, r)
    assert abs(mpmath.im(val)) < mpmath.mpf("1e-30")


# -- catalan ------------------------------------------------------------------

def test_catalan_values():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    with pytest.raises(ValueError):
        catalan(-1)


# -- degree patterns ----------------------------------------------------------

def test_degree_pattern_quadratics():
    assert degree_pattern(IntPoly([1, 0, 1]), 5) == (1, 1)
    assert degree_pattern(IntPoly([1, 0, 1]), 3) == (2,)


def test_degree_pattern_x4_plus_1_mod_3():
    f = IntPoly([1, 0, 0, 0, 1])
    assert degree_pattern(f, 3) == brute_factor_pattern([1, 0, 0, 0, 1], 3) == (2, 2)


def test_degree_pattern_ramified_prime():
    with pytest.raises(RamifiedPrime):
        degree_pattern(IntPoly([1, 0, 1]), 2)  # disc(x^2+1) = -4


@given(st.lists(st.integers(-6, 6), min_size=4, max_size=4),
       st.sampled_from([5, 7, 11, 13, 17]))
@settings(max_examples=50, deadline=None)
def test_degree_pattern_matches_brute_factorization(tail, p):
    f = IntPoly(tail + [1])
    if discriminant(f) % p == 0:
        return
    assert degree_pattern(f, p) == brute_factor_pattern(list(f.coeffs), p)


def test_squarefree_kernel():
    assert squarefree_kernel(-7803) == -3      # -3 * 51^2
    assert squarefree_kernel(3969) == 1        # 63^2
    assert squarefree_kernel(-12) == -3
    assert squarefree_kernel(30) == 30
    assert squarefree_kernel(0) == 0
