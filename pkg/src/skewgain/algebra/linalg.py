"""Determinants and characteristic polynomials of :class:`GainMatrix`."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

from ..errors import BadParameters, NotSquare
from .matrix import GainMatrix
from .polynomial import Polynomial

LEIBNIZ_MAX_ORDER = 8


def _require_square(M: GainMatrix):
    if not M.is_square:
        raise NotSquare(f"expected a square matrix, got {M.rows}x{M.cols}")


def det(M: GainMatrix, method: str = "auto"):
    """Determinant of a square matrix.

    ``auto`` picks fraction-free Bareiss elimination for exact backends and
    partially pivoted LU otherwise. ``leibniz`` sums over all permutations and
    is only meant as a cross-check for small orders.
    """
    _require_square(M)
    if method == "auto":
        method = "bareiss" if M.backend.exact else "lu"
    if method == "bareiss":
        return _det_bareiss(M)
    if method == "lu":
        return _det_lu(M)
    if method == "leibniz":
        return det_leibniz(M)
    raise BadParameters(f"unknown determinant method {method!r}")


def _det_bareiss(M: GainMatrix) -> Fraction:
    n = M.rows
    if n == 0:
        return Fraction(1)
    # Clear denominators row by row so elimination runs over the integers.
    a = []
    scale = 1
    for i in range(n):
        row = [Fraction(v) for v in M.row(i)]
        lcm = 1
        for v in row:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        scale *= lcm
        a.append([int(v * lcm) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            ak = a[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * pivot - aik * ak[j]) // prev
            ai[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale)


def _det_lu(M: GainMatrix) -> complex:
    n = M.rows
    a = [[complex(v) for v in M.row(i)] for i in range(n)]
    result = 1 + 0j
    for k in range(n):
        p = max(range(k, n), key=lambda r: abs(a[r][k]))
        if a[p][k] == 0:
            return 0j
        if p != k:
            a[k], a[p] = a[p], a[k]
            result = -result
        pivot = a[k][k]
        result *= pivot
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor != 0:
                ai, ak = a[i], a[k]
                for j in range(k + 1, n):
                    ai[j] -= factor * ak[j]
    return result


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_leibniz(M: GainMatrix):
    """Permutation-sum determinant; refuses orders above ``LEIBNIZ_MAX_ORDER``."""
    _require_square(M)
    n = M.rows
    if n > LEIBNIZ_MAX_ORDER:
        raise BadParameters(f"Leibniz expansion limited to n <= {LEIBNIZ_MAX_ORDER}, got {n}")
    total = M.backend.zero
    for perm in itertools.permutations(range(n)):
        term = M.backend.one
        for i, j in enumerate(perm):
            term = term * M[i, j]
            if term == 0:
                break
        if term != 0:
            total = total + _perm_sign(perm) * term
    return total


def char_poly(M: GainMatrix) -> Polynomial:
    """Monic ``det(xI - M)`` via the Faddeev-LeVerrier recursion.

    With ``c_n = 1`` and ``N_0 = 0`` the recursion is
    ``N_k = M N_{k-1} + c_{n-k+1} I`` and ``c_{n-k} = -tr(M N_k) / k``.
    """
    return faddeev_leverrier(M)[0]


def faddeev_leverrier(M: GainMatrix, track: bool = False) -> tuple[Polynomial, list[float]]:
    """:func:`char_poly` and, with ``track``, the magnitude ``sum |M_ij N_ji| / k``
    behind each coefficient (ascending), the scale of its trace rounding."""
    _require_square(M)
    b = M.backend
    n = M.rows
    coeffs = [b.zero] * (n + 1)
    coeffs[n] = b.one
    scale = [0.0] * (n + 1)
    ident = GainMatrix.identity(b, n)
    N = GainMatrix.zeros(b, n, n)
    for k in range(1, n + 1):
        N = M @ N + ident.scale(coeffs[n - k + 1])
        MN = M @ N
        coeffs[n - k] = -MN.trace() / k
        if track:
            scale[n - k] = sum(abs(complex(M[i, j])) * abs(complex(N[j, i]))
                               for i in range(n) for j in range(n)) / k
    if b.exact:
        coeffs = [Fraction(c) for c in coeffs]
    return Polynomial(b, coeffs), scale
