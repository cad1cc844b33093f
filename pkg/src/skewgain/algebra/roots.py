"""Polynomial roots by Aberth-Ehrlich simultaneous iteration.

Multiple roots are the hard case for any simultaneous iteration: a k-fold
root of a double-precision polynomial is only determined to about
``eps**(1/k)``. Two measures keep reported multiplicities honest:

* exact (rational) polynomials are split into square-free factors first
  (Yun's algorithm), so the iteration only ever sees simple roots and the
  multiplicity comes from the factorisation;
* floating polynomials have their approximations grouped when a single
  k-fold root, perturbed by no more than the evaluation and coefficient
  uncertainty, could have produced them. A group is reported as one root,
  its centroid polished by Newton on the (k-1)-th derivative, which is far
  better conditioned than the individual members.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..errors import BadParameters, NonConvergence
from .backends import DEFAULT_TOL
from .polynomial import Polynomial

EPS = np.finfo(float).eps
MAX_ITER = 500


def poly_roots(p: Polynomial, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER,
               coeff_err: Sequence[float] | None = None) -> list[tuple[complex, int]]:
    """All roots of ``p`` with multiplicities, sorted by (real, imag).

    Roots closer than ``tol * (1 + |root|)`` are merged and their
    multiplicities summed. ``coeff_err`` optionally gives an absolute error
    bound per coefficient (ascending order) of a floating polynomial; roots
    that cannot be told apart under that perturbation are reported as one
    multiple root.
    """
    if p.degree < 1:
        raise BadParameters("poly_roots needs a polynomial of degree >= 1")
    if tol <= 0:
        raise BadParameters("tol must be positive")

    found: list[tuple[complex, int]] = []
    coeffs = list(p.coeffs)
    zeros = 0
    while coeffs[zeros] == 0:
        zeros += 1
    if zeros:
        found.append((0j, zeros))
    q = Polynomial(p.backend, coeffs[zeros:])

    if q.degree >= 1:
        if p.backend.exact:
            for factor, mult in _squarefree(q):
                for z in _solve_simple(factor, tol, max_iter):
                    found.append((z, mult))
        else:
            err = None
            if coeff_err is not None:
                if len(coeff_err) != len(coeffs):
                    raise BadParameters("coeff_err needs one bound per coefficient")
                err = np.array(list(coeff_err[zeros:])[::-1], dtype=float) / abs(complex(q.leading))
            found.extend(_solve_clustered(q, tol, max_iter, err))

    return merge_roots(found, tol)


def _squarefree(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's square-free decomposition over the rationals."""
    p = p.monic()
    dp = p.derivative()
    a = _gcd(p, dp)
    b, _ = p.divmod(a)
    c, _ = dp.divmod(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree >= 1:
        a = _gcd(b, d)
        if a.degree >= 1:
            out.append((a, i))
        b, _ = b.divmod(a)
        c, _ = d.divmod(a)
        d = c - b.derivative()
        i += 1
    return out


def _gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic()


def _to_desc(p: Polynomial) -> np.ndarray:
    c = np.array([complex(v) for v in p.coeffs[::-1]], dtype=complex)
    return c / c[0]


def _solve_simple(p: Polynomial, tol: float, max_iter: int) -> list[complex]:
    if p.degree == 1:
        c0, c1 = p.coeffs
        return [complex(Fraction(-c0) / Fraction(c1)) if p.backend.exact else -c0 / c1]
    desc = _to_desc(p)
    z = _aberth(desc, max_iter)
    _check_residual(desc, z, tol)
    return [complex(v) for v in z]


def _solve_clustered(p: Polynomial, tol: float, max_iter: int, err=None
                     ) -> list[tuple[complex, int]]:
    if p.degree == 1:
        c0, c1 = p.coeffs
        return [(complex(-c0 / c1), 1)]
    desc = _to_desc(p)
    z = _aberth(desc, max_iter)
    groups = _clusters(desc, z, err)
    out = []
    for members in groups:
        k = len(members)
        centre = complex(np.mean(z[members]))
        if k > 1:
            spread = float(np.max(np.abs(z[members] - centre)))
            centre = _polish_multiple(desc, centre, k, spread)
        out.append((centre, k))
    _check_residual(desc, np.array([c for c, _ in out]), tol, err)
    return out


def _polish_multiple(desc: np.ndarray, c: complex, k: int, spread: float) -> complex:
    """Newton on the (k-1)-th derivative, where a k-fold root is simple."""
    q = desc
    for _ in range(k - 1):
        q = np.polyder(q)
    dq = np.polyder(q)
    x = c
    for _ in range(50):
        d = np.polyval(dq, x)
        if d == 0:
            break
        step = np.polyval(q, x) / d
        x = x - step
        if abs(step) <= 4 * EPS * (1 + abs(x)):
            break
    # A polished point that wandered off the cluster is not trusted.
    return complex(x) if abs(x - c) <= max(spread, 1e-12) * 2 else c


def _rounding_bound(desc: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Floating error bound for Horner evaluation at each point of ``z``."""
    n = len(desc) - 1
    return 4 * n * EPS * np.polyval(np.abs(desc), np.abs(z))


def _uncertainty(desc: np.ndarray, z: np.ndarray, err) -> np.ndarray:
    """Rounding bound plus the effect of coefficient errors ``err`` (descending)."""
    bound = _rounding_bound(desc, z)
    if err is not None:
        bound = bound + np.polyval(err, np.abs(z))
    return bound


def _initial_guesses(desc: np.ndarray) -> np.ndarray:
    n = len(desc) - 1
    center = -desc[1] / n
    # Radius from the Fujiwara-type bound of the polynomial re-centred at `center`.
    taylor = _taylor_shift(desc, center)
    radius = 0.0
    for k in range(1, n + 1):
        radius = max(radius, abs(taylor[k]) ** (1.0 / k))
    radius = max(radius, 1e-3)
    angles = 2 * math.pi * np.arange(n) / n + 0.4
    return center + radius * np.exp(1j * angles)


def _taylor_shift(desc: np.ndarray, c: complex) -> np.ndarray:
    """Coefficients (descending) of p(x + c)."""
    a = desc.astype(complex).copy()
    n = len(a) - 1
    for i in range(n):
        for j in range(1, n - i + 1):
            a[j] += c * a[j - 1]
    return a


def _aberth(desc: np.ndarray, max_iter: int) -> np.ndarray:
    n = len(desc) - 1
    ddesc = np.polyder(desc)
    z = _initial_guesses(desc)
    for _ in range(max_iter):
        pz = np.polyval(desc, z)
        dpz = np.polyval(ddesc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dpz != 0, pz / dpz, pz)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            recip = 1.0 / diff
        np.fill_diagonal(recip, 0.0)
        s = recip.sum(axis=1)
        w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, 0.0)
        settled = (np.abs(pz) <= _rounding_bound(desc, z)) | (np.abs(w) <= 4 * EPS * (1 + np.abs(z)))
        if settled.all():
            break
        z = z - np.where(settled, 0.0, w)
    return z


def _cluster_radius(desc: np.ndarray, c: complex, k: int, err) -> float:
    """How far a perturbation of the size of the evaluation uncertainty can
    spread a k-fold root at ``c``: ``(k! U(c) / |p^(k)(c)|)^(1/k)``, doubled."""
    dk = abs(np.polyval(np.polyder(desc, k), c)) / math.factorial(k)
    if dk == 0:
        return math.inf
    u = float(_uncertainty(desc, np.array([c]), err)[0])
    return 2 * (u / dk) ** (1.0 / k)


def _clusters(desc: np.ndarray, z: np.ndarray, err=None) -> list[list[int]]:
    """Group approximations that one multiple root could explain.

    Groups are merged closest pair first; a merge is kept only when every
    member lies within the cluster radius of the merged centroid.
    """
    groups = [[i] for i in range(len(z))]
    rejected: set[tuple[int, ...]] = set()
    while True:
        best = None
        for a in range(len(groups)):
            for b in range(a + 1, len(groups)):
                key = tuple(sorted(groups[a] + groups[b]))
                if key in rejected:
                    continue
                d = abs(np.mean(z[groups[a]]) - np.mean(z[groups[b]]))
                if best is None or d < best[0]:
                    best = (d, a, b, key)
        if best is None:
            return groups
        _, a, b, key = best
        members = list(key)
        c = complex(np.mean(z[members]))
        spread = float(np.max(np.abs(z[members] - c)))
        if spread <= _cluster_radius(desc, c, len(members), err):
            groups = [g for i, g in enumerate(groups) if i not in (a, b)] + [members]
        else:
            rejected.add(key)


def _check_residual(desc: np.ndarray, z: np.ndarray, tol: float, err=None):
    n = len(desc) - 1
    res = np.abs(np.polyval(desc, z))
    allowed = np.maximum(tol * (1 + np.abs(z)) ** n, _uncertainty(desc, z, err))
    bad = res > allowed
    if bad.any():
        raise NonConvergence(
            f"Aberth iteration did not reach the residual bound for {int(bad.sum())} root(s)",
            float(res.max()),
        )


def merge_roots(found: list[tuple[complex, int]], tol: float) -> list[tuple[complex, int]]:
    items = sorted(found, key=lambda t: (t[0].real, t[0].imag))
    merged: list[list] = []
    for z, m in items:
        for entry in merged:
            c = entry[0]
            if abs(z - c) <= tol * (1 + max(abs(z), abs(c))):
                total = entry[1] + m
                entry[0] = (c * entry[1] + z * m) / total
                entry[1] = total
                break
        else:
            merged.append([z, m])
    return sorted(((complex(z), m) for z, m in merged), key=lambda t: (t[0].real, t[0].imag))
