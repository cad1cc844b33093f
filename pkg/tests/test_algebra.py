import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewgain import COMPLEX, RATIONAL, GainMatrix, Polynomial, char_poly, det, get_backend, poly_roots
from skewgain.algebra import apply_f, g_of, sqrt_g
from skewgain.algebra.linalg import det_leibniz
from skewgain.errors import BadParameters, GainParseError, NonConvergence, NotSquare, UnknownBackend, ZeroArgument

from oracles import charpoly_interp, det_cofactor


# --- backends -------------------------------------------------------------------

def test_f_examples():
    assert apply_f(RATIONAL, Fraction(2, 3)) == Fraction(2, 3)
    assert apply_f(COMPLEX, 1 + 2j) == 1 - 2j
    assert apply_f(COMPLEX, apply_f(COMPLEX, 3 - 1j)) == 3 - 1j


def test_g_examples():
    assert g_of(RATIONAL, Fraction(-3)) == 9
    assert g_of(COMPLEX, 1 + 1j) == 2
    assert g_of(RATIONAL, Fraction(2, 3)) == Fraction(4, 9)


def test_sqrt_g_examples():
    assert sqrt_g(RATIONAL, Fraction(-3)) == 3
    assert sqrt_g(COMPLEX, 3 + 4j) == 5
    assert sqrt_g(RATIONAL, Fraction(5)) == 5


def test_g_of_zero_is_an_error():
    with pytest.raises(ZeroArgument):
        g_of(RATIONAL, Fraction(0))
    with pytest.raises(ZeroArgument):
        sqrt_g(COMPLEX, 0j)


def test_f_of_zero_is_zero():
    assert apply_f(RATIONAL, Fraction(0)) == 0
    assert apply_f(COMPLEX, 0j) == 0


def test_unknown_backend():
    with pytest.raises(UnknownBackend):
        get_backend("quaternion")


@pytest.mark.parametrize("text,value", [
    ("2", Fraction(2)), ("-3", Fraction(-3)), ("2/3", Fraction(2, 3)), ("-7/14", Fraction(-1, 2)),
])
def test_rational_parse(text, value):
    assert RATIONAL.parse(text) == value


@pytest.mark.parametrize("text", ["", "2/0", "1.5", "i", "2/-3", "x"])
def test_rational_parse_rejects(text):
    with pytest.raises(GainParseError):
        RATIONAL.parse(text)


@pytest.mark.parametrize("text,value", [
    ("i", 1j), ("-i", -1j), ("2", 2), ("1+2i", 1 + 2j), ("1-2i", 1 - 2j), ("0.5i", 0.5j),
    ("-1.25e1+3i", -12.5 + 3j),
])
def test_complex_parse(text, value):
    assert COMPLEX.parse(text) == value


@pytest.mark.parametrize("text", ["", "1+", "ii", "2/3", "1+2j"])
def test_complex_parse_rejects(text):
    with pytest.raises(GainParseError):
        COMPLEX.parse(text)


@pytest.mark.parametrize("z", [1j, -1j, 2, -3.5, 1 + 2j, 0.25 - 0.75j, -1j * 3])
def test_complex_format_round_trip(z):
    assert COMPLEX.parse(COMPLEX.format(z)) == z


def test_rational_format():
    assert RATIONAL.format(Fraction(-3, 6)) == "-1/2"
    assert RATIONAL.format(Fraction(4)) == "4"


def test_automorphism_laws_on_random_pairs():
    rng = random.Random(11)
    for b in (RATIONAL, COMPLEX):
        for _ in range(10_000):
            x, y = b.random_gain(rng), b.random_gain(rng)
            assert b.eq(b.f(x * y), b.f(x) * b.f(y))
            assert b.eq(b.f(x + y), b.f(x) + b.f(y))
            assert b.eq(b.f(b.f(x)), x)


def test_sqrt_g_squares_to_g():
    rng = random.Random(12)
    for _ in range(2000):
        x = RATIONAL.random_gain(rng)
        assert RATIONAL.sqrt_g(x) ** 2 == RATIONAL.g(x)
        z = COMPLEX.random_gain(rng)
        s, g = COMPLEX.sqrt_g(z), COMPLEX.g(z)
        assert abs(s * s - g) <= 1e-12 * abs(g)


# --- determinants -----------------------------------------------------------------

def _rational_matrix(rng, n, lo=-5, hi=5):
    return GainMatrix.from_rows(RATIONAL, [[Fraction(rng.randint(lo, hi), rng.randint(1, 3))
                                            for _ in range(n)] for _ in range(n)])


def test_det_identity():
    assert det(GainMatrix.identity(RATIONAL, 3)) == 1


def test_det_lg_of_triangle_fixture():
    M = GainMatrix.from_rows(RATIONAL, [[7, -2, -5], [-2, 5, 3], [-5, 3, 8]])
    assert det(M) == 120
    assert det_leibniz(M) == 120


def test_det_zero_row():
    M = GainMatrix.from_rows(RATIONAL, [[1, 2, 3], [0, 0, 0], [4, 5, 6]])
    assert det(M) == 0


def test_det_not_square():
    with pytest.raises(NotSquare):
        det(GainMatrix.zeros(RATIONAL, 2, 3))


def test_leibniz_order_limit():
    with pytest.raises(BadParameters):
        det_leibniz(GainMatrix.identity(RATIONAL, 9))


def test_bareiss_matches_leibniz_and_cofactor():
    rng = random.Random(5)
    for _ in range(150):
        n = rng.randint(1, 6)
        M = _rational_matrix(rng, n)
        d = det(M, method="bareiss")
        assert d == det_leibniz(M)
        assert d == det_cofactor(M.tolist())


def test_lu_matches_leibniz_complex():
    rng = random.Random(6)
    for _ in range(100):
        n = rng.randint(1, 6)
        M = GainMatrix.from_rows(COMPLEX, [[complex(rng.randint(-4, 4), rng.randint(-4, 4))
                                            for _ in range(n)] for _ in range(n)])
        assert COMPLEX.eq(det(M), det_leibniz(M), 1e-9)


def test_det_singular_needs_pivot_swap():
    M = GainMatrix.from_rows(RATIONAL, [[0, 1], [1, 0]])
    assert det(M) == -1


# --- characteristic polynomial ------------------------------------------------------

def test_char_poly_one_by_one():
    p = char_poly(GainMatrix.from_rows(RATIONAL, [[Fraction(7, 2)]]))
    assert p == Polynomial(RATIONAL, [Fraction(-7, 2), 1])


def test_char_poly_path_fixture():
    L = GainMatrix.from_rows(RATIONAL, [[1, -2, 0], [-2, 2, -3], [0, -3, 1]])
    assert char_poly(L) == Polynomial(RATIONAL, [11, -8, -4, 1])
    assert char_poly(L).format() == "x^3-4x^2-8x+11"


def test_char_poly_triangle_fixture():
    L = GainMatrix.from_rows(RATIONAL, [[2, -2, -5], [-2, 2, 3], [-5, 3, 2]])
    x2 = Polynomial(RATIONAL, [-2, 1])
    assert char_poly(L) == x2 ** 3 - x2 * 38 - 60


def test_char_poly_not_square():
    with pytest.raises(NotSquare):
        char_poly(GainMatrix.zeros(RATIONAL, 3, 2))


def test_char_poly_matches_interpolation():
    rng = random.Random(7)
    for _ in range(120):
        n = rng.randint(1, 7)
        M = _rational_matrix(rng, n)
        assert list(char_poly(M).coeffs) == _trim(charpoly_interp(M.tolist()))


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def test_char_poly_trace_and_det_coefficients():
    rng = random.Random(8)
    for _ in range(50):
        n = rng.randint(1, 6)
        M = _rational_matrix(rng, n)
        p = char_poly(M)
        assert p[n - 1] == -M.trace()
        assert p[0] == (-1) ** n * det(M)


# --- polynomials -------------------------------------------------------------------

def test_polynomial_arithmetic():
    x = Polynomial.x(RATIONAL)
    p = (x - 1) * (x + 1)
    assert p == x ** 2 - 1
    q, r = (x ** 3 - 1).divmod(x - 1)
    assert q == x ** 2 + x + 1 and r.is_zero
    assert p.derivative() == x * 2
    assert p(Fraction(3)) == 8


def test_polynomial_format():
    x = Polynomial.x(RATIONAL)
    assert (x ** 2 * Fraction(3, 2) - x + 4).format() == "(3/2)x^2-x+4"
    assert Polynomial(RATIONAL, []).format() == "0"


# --- roots ------------------------------------------------------------------------

def _roots_close(found, expected, tol=1e-9):
    exp = sorted(expected, key=lambda z: (z[0].real, z[0].imag))
    if len(found) != len(exp):
        return False
    return all(abs(a - b) <= tol * (1 + abs(b)) and m == k for (a, m), (b, k) in zip(found, exp))


def test_roots_simple():
    x = Polynomial.x(RATIONAL)
    assert _roots_close(poly_roots(x ** 2 - 1), [(-1, 1), (1, 1)])


def test_roots_triple():
    x = Polynomial.x(RATIONAL)
    assert _roots_close(poly_roots((x - 1) ** 3), [(1, 3)])


def test_roots_cycle_laplacian():
    x = Polynomial.x(RATIONAL)
    p = x * (x - 4) * (x - 2) ** 2
    assert _roots_close(poly_roots(p), [(0, 1), (2, 2), (4, 1)])


def test_roots_complex_coefficients():
    x = Polynomial.x(COMPLEX)
    p = (x - 1j) ** 2 * (x + 2 - 1j)
    assert _roots_close(poly_roots(p), [(-2 + 1j, 1), (1j, 2)])


def test_roots_high_multiplicity_float():
    x = Polynomial.x(COMPLEX)
    p = (x - 1.5) ** 5 * (x + 0.5)
    assert _roots_close(poly_roots(p), [(-0.5, 1), (1.5, 5)], 1e-6)


def test_roots_nonconvergence_is_reported():
    x = Polynomial.x(COMPLEX)
    with pytest.raises(NonConvergence) as info:
        poly_roots((x ** 7 - 3) * (x - 1j) ** 3, max_iter=1)
    assert info.value.best_residual >= 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6))
def test_roots_of_integer_products(rs):
    x = Polynomial.x(RATIONAL)
    p = Polynomial.constant(RATIONAL, 1)
    for r in rs:
        p = p * (x - r)
    got = [(z, m) for z, m in poly_roots(p)]
    want = {}
    for r in rs:
        want[r] = want.get(r, 0) + 1
    assert _roots_close(got, [(complex(r), m) for r, m in want.items()])


def test_roots_satisfy_vieta():
    rng = random.Random(9)
    for _ in range(40):
        zs = [complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(rng.randint(1, 7))]
        x = Polynomial.x(COMPLEX)
        p = Polynomial.constant(COMPLEX, 1)
        for z in zs:
            p = p * (x - z)
        found = [z for z, m in poly_roots(p) for _ in range(m)]
        assert abs(sum(found) - sum(zs)) <= 1e-8 * (1 + sum(abs(z) for z in zs))
        assert all(abs(p(z)) <= 1e-6 * (1 + abs(z)) ** len(zs) for z in found)
        assert all(min(abs(z - w) for w in found) <= 1e-6 for z in zs)
        assert cmath.isfinite(sum(found))


def test_coefficient_error_merges_split_root():
    # x^2 - 1e-14 is a double root at 0 once coefficients carry 1e-12 of error.
    p = Polynomial(COMPLEX, [-1e-14, 0, 1])
    assert len(poly_roots(p)) == 2
    (z, m), = poly_roots(p, coeff_err=[1e-12, 1e-12, 0])
    assert m == 2 and abs(z) <= 1e-6


def test_coefficient_error_keeps_distinct_roots():
    x = Polynomial.x(COMPLEX)
    p = (x - 2.1) * (x - 2.3) * (x - 5)
    found = poly_roots(p, coeff_err=[1e-10] * 4)
    assert [m for _, m in found] == [1, 1, 1]


def test_coefficient_error_length_checked():
    with pytest.raises(BadParameters):
        poly_roots(Polynomial(COMPLEX, [1, 0, 1]), coeff_err=[0.0])
