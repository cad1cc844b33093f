"""Laplacian spectra and the two spectrum-level identities.

* On a d-regular graph ``L = dI - A``, so ``spec(L) = d - spec(A)``.
* On ``K_{m,m}`` with bipartite block ``B``, ``spec(L) = {m +- sqrt(mu)}``
  over the eigenvalues ``mu`` of ``B (B^f)^T``, both signs for every ``mu``.
"""
from __future__ import annotations

import cmath
import random
import sys
from dataclasses import dataclass
from typing import Sequence

from .algebra.backends import DEFAULT_TOL
from .algebra.linalg import char_poly, faddeev_leverrier
from .algebra.matrix import GainMatrix
from .algebra.roots import poly_roots
from .core import SkewGainGraph
from .errors import BadParameters, NotCompleteBipartite, NotCompleteBipartiteBalanced, NotRegular
from .matrices import adjacency_matrix, bipartite_block, f_entrywise, g_laplacian, laplacian

WHICH = ("L", "L_g", "A")


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[tuple[complex, int], ...]
    source: str

    @property
    def order(self) -> int:
        return sum(m for _, m in self.eigenvalues)

    def expanded(self) -> list[complex]:
        return [z for z, m in self.eigenvalues for _ in range(m)]

    def multiplicity(self, value: complex, tol: float = DEFAULT_TOL) -> int:
        return sum(m for z, m in self.eigenvalues if abs(z - value) <= tol * (1 + abs(value)))

    def lines(self, tol: float = DEFAULT_TOL) -> list[str]:
        """``"re imag multiplicity"`` per eigenvalue, rounded to the tolerance."""
        return [f"{format_real(z.real, tol)} {format_real(z.imag, tol)} {m}"
                for z, m in self.eigenvalues]


def format_real(v: float, tol: float = DEFAULT_TOL) -> str:
    digits = 0
    while 10.0 ** (-digits) > tol and digits < 15:
        digits += 1
    text = f"{round(v, digits):.{digits}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _select(G: SkewGainGraph, which: str) -> GainMatrix:
    if which == "L":
        return laplacian(G)[1]
    if which in ("L_g", "Lg"):
        return g_laplacian(G)[1]
    if which == "A":
        return adjacency_matrix(G)
    raise BadParameters(f"unknown matrix {which!r}; expected one of {WHICH}")


def matrix_spectrum(M: GainMatrix, source: str, tol: float = DEFAULT_TOL) -> Spectrum:
    """Roots of ``det(xI - M)``.

    For floating matrices an estimate of the coefficient error is handed to
    the root finder, so that a multiple eigenvalue split apart by that error
    is reported once with its full multiplicity.
    """
    if M.rows == 0:
        return Spectrum((), source)
    if M.backend.exact:
        return Spectrum(tuple(poly_roots(char_poly(M), tol)), source)
    p, err = charpoly_with_error_estimate(M)
    return Spectrum(tuple(poly_roots(p, tol, coeff_err=err)), source)


# Scalings for the error estimate; any values whose products round
# differently from the unscaled run serve.
_TRIAL_SCALES = (1.0, 0.8137, 1.2719)


def charpoly_with_error_estimate(M: GainMatrix, safety: float = 16.0):
    """Floating char poly plus an absolute error estimate per coefficient.

    ``s P M P^T`` has coefficients ``s^(n-k) c_k`` for every permutation
    ``P`` and scale ``s`` but rounds differently, so the spread over a few
    such runs measures the error actually made; the rounding of each trace,
    relative to the magnitudes summed, is the floor. Worst-case bounds for
    this recursion overshoot by many orders of magnitude and would merge
    distinct roots.
    """
    n = M.rows
    p, scale = faddeev_leverrier(M, track=True)
    rng = random.Random(n)
    spread = [0.0] * (n + 1)
    for t, s in enumerate(_TRIAL_SCALES):
        perm = list(range(n))[::-1] if t == 0 else rng.sample(range(n), n)
        q = char_poly(GainMatrix.from_rows(M.backend, [[M[i, j] * s for j in perm] for i in perm]))
        for k in range(n + 1):
            back = complex(q[k]) / s ** (n - k)
            spread[k] = max(spread[k], abs(back - complex(p[k])))
    eps = sys.float_info.epsilon
    return p, [safety * (d + n * eps * c) for d, c in zip(spread, scale)]


def laplacian_spectrum(G: SkewGainGraph, which: str = "L", tol: float = DEFAULT_TOL) -> Spectrum:
    """Eigenvalues of L, L_g or A as roots of the characteristic polynomial."""
    source = "L_g" if which == "Lg" else which
    return matrix_spectrum(_select(G, which), source, tol)


def multiset_close(a: Sequence[complex], b: Sequence[complex], tol: float) -> bool:
    """Match each value of ``a`` to a distinct value of ``b`` within ``tol * (1 + |.|)``."""
    if len(a) != len(b):
        return False
    pool = list(b)
    for z in sorted(a, key=lambda c: (c.real, c.imag)):
        best = min(range(len(pool)), key=lambda k: abs(pool[k] - z), default=None)
        if best is None or abs(pool[best] - z) > tol * (1 + max(abs(z), abs(pool[best]))):
            return False
        pool.pop(best)
    return True


@dataclass(frozen=True)
class ShiftReport:
    passed: bool
    degree: int
    spectrum_L: Spectrum
    spectrum_A: Spectrum
    pairs: tuple[tuple[complex, complex], ...]


def regular_degree(G: SkewGainGraph) -> int | None:
    degs = set(G.degrees())
    return degs.pop() if len(degs) == 1 else None


def regular_shift_check(G: SkewGainGraph, tol: float = DEFAULT_TOL) -> ShiftReport:
    d = regular_degree(G)
    if d is None:
        raise NotRegular(f"degrees {sorted(set(G.degrees()))} are not all equal")
    spec_L = laplacian_spectrum(G, "L", tol)
    spec_A = laplacian_spectrum(G, "A", tol)
    shifted = sorted((d - z for z in spec_A.expanded()), key=lambda c: (c.real, c.imag))
    observed = sorted(spec_L.expanded(), key=lambda c: (c.real, c.imag))
    passed = multiset_close(observed, shifted, tol)
    return ShiftReport(passed, d, spec_L, spec_A, tuple(zip(observed, shifted)))


@dataclass(frozen=True)
class BipartiteReport:
    passed: bool
    m: int
    block: GainMatrix
    mu: Spectrum
    spectrum_L: Spectrum
    expected: tuple[complex, ...]


def bipartite_spectrum_check(G: SkewGainGraph, tol: float = DEFAULT_TOL) -> BipartiteReport:
    """Compare ``spec(L)`` with ``{m +- sqrt(mu)}`` on a balanced complete bipartite graph.

    Eigenvalues ``mu`` of ``B (B^f)^T`` within ``tol`` of zero are treated as
    zero before the square root, which would otherwise turn rounding noise of
    size ``tol`` into an error of size ``sqrt(tol)``.
    """
    try:
        B = bipartite_block(G)
    except NotCompleteBipartite as exc:
        raise NotCompleteBipartiteBalanced(str(exc)) from None
    if B.rows != B.cols:
        raise NotCompleteBipartiteBalanced(f"parts have sizes {B.rows} and {B.cols}")
    m = B.rows
    gram = B @ f_entrywise(B).transpose()
    mu = matrix_spectrum(gram, "B(B^f)^T", tol)
    scale = max((abs(z) for z in mu.expanded()), default=0.0)
    expected = []
    for z in mu.expanded():
        root = 0j if abs(z) <= tol * (1 + scale) else cmath.sqrt(z)
        expected += [m - root, m + root]
    spec_L = laplacian_spectrum(G, "L", tol)
    passed = multiset_close(spec_L.expanded(), expected, tol)
    return BipartiteReport(passed, m, B, mu, spec_L,
                           tuple(sorted(expected, key=lambda c: (c.real, c.imag))))
