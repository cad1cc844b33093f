"""Adjacency, Laplacian, g-Laplacian and incidence matrices of a skew gain graph.

Rows follow vertex order and incidence columns follow edge order.
"""
from __future__ import annotations

import enum
from collections import deque

from .algebra.backends import apply_f
from .algebra.matrix import GainMatrix
from .core import SkewGainGraph
from .errors import NotCompleteBipartite


class MatrixKind(enum.Enum):
    ADJACENCY = "adjacency"
    DEGREE = "degree"
    LAPLACIAN = "laplacian"
    G_DEGREE = "g_degree"
    G_LAPLACIAN = "g_laplacian"
    INCIDENCE = "incidence"
    INCIDENCE_SHARP = "incidence_sharp"


def adjacency_matrix(G: SkewGainGraph) -> GainMatrix:
    b = G.backend
    flat = [b.zero] * (G.n * G.n)
    for e in G.edges:
        flat[e.tail * G.n + e.head] = e.gain
        flat[e.head * G.n + e.tail] = b.f(e.gain)
    return GainMatrix(b, G.n, G.n, tuple(flat))


def degree_matrix(G: SkewGainGraph) -> GainMatrix:
    b = G.backend
    return GainMatrix.diagonal(b, [b.coerce(d) for d in G.degrees()])


def laplacian(G: SkewGainGraph) -> tuple[GainMatrix, GainMatrix]:
    """``(D, L)`` with ``L = D - A`` and D the underlying-graph degrees."""
    D = degree_matrix(G)
    return D, D - adjacency_matrix(G)


def g_degree_matrix(G: SkewGainGraph) -> GainMatrix:
    b = G.backend
    sums = [b.zero] * G.n
    for e in G.edges:
        s = b.sqrt_g(e.gain)
        sums[e.tail] = sums[e.tail] + s
        sums[e.head] = sums[e.head] + s
    return GainMatrix.diagonal(b, sums)


def g_laplacian(G: SkewGainGraph) -> tuple[GainMatrix, GainMatrix]:
    """``(D_g, L_g)`` where ``D_g`` sums ``sqrt(g(gain))`` over incident edges."""
    Dg = g_degree_matrix(G)
    return Dg, Dg - adjacency_matrix(G)


def incidence(G: SkewGainGraph) -> GainMatrix:
    """n x m matrix: ``g(w)`` at the tail row, ``-f(w) sqrt(g(w))`` at the head row."""
    b = G.backend
    flat = [b.zero] * (G.n * G.m)
    for j, e in enumerate(G.edges):
        flat[e.tail * G.m + j] = b.g(e.gain)
        flat[e.head * G.m + j] = -b.f(e.gain) * b.sqrt_g(e.gain)
    return GainMatrix(b, G.n, G.m, tuple(flat))


def incidence_sharp(G: SkewGainGraph) -> GainMatrix:
    """m x n companion of :func:`incidence` with ``L_g = H @ H#``.

    Each incidence column is rewritten by position: the tail entry becomes
    ``1/sqrt(g(w))`` and the head entry ``-1/f(w)``; the result is transposed.
    Matching by position rather than value matters because both entries can
    coincide (e.g. ``w = -1`` under the identity involution).
    """
    b = G.backend
    flat = [b.zero] * (G.m * G.n)
    for j, e in enumerate(G.edges):
        flat[j * G.n + e.tail] = b.one / b.sqrt_g(e.gain)
        flat[j * G.n + e.head] = -(b.one / b.f(e.gain))
    return GainMatrix(b, G.m, G.n, tuple(flat))


def f_entrywise(B: GainMatrix) -> GainMatrix:
    return B.map(lambda v: apply_f(B.backend, v))


def build(G: SkewGainGraph, kind: MatrixKind | str) -> GainMatrix:
    kind = MatrixKind(kind)
    if kind is MatrixKind.ADJACENCY:
        return adjacency_matrix(G)
    if kind is MatrixKind.DEGREE:
        return degree_matrix(G)
    if kind is MatrixKind.LAPLACIAN:
        return laplacian(G)[1]
    if kind is MatrixKind.G_DEGREE:
        return g_degree_matrix(G)
    if kind is MatrixKind.G_LAPLACIAN:
        return g_laplacian(G)[1]
    if kind is MatrixKind.INCIDENCE:
        return incidence(G)
    return incidence_sharp(G)


def bipartition(G: SkewGainGraph) -> tuple[list[int], list[int]] | None:
    """2-colouring of a connected graph with vertex 0 in the first part, or None."""
    if G.n == 0 or not G.is_connected():
        return None
    colour = [-1] * G.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in G.neighbors[v]:
            if colour[u] < 0:
                colour[u] = 1 - colour[v]
                queue.append(u)
            elif colour[u] == colour[v]:
                return None
    X = [v for v in range(G.n) if colour[v] == 0]
    Y = [v for v in range(G.n) if colour[v] == 1]
    return X, Y


def is_complete_bipartite(G: SkewGainGraph, X, Y) -> bool:
    X, Y = set(X), set(Y)
    if not X or not Y or X & Y or X | Y != set(range(G.n)):
        return False
    if G.m != len(X) * len(Y):
        return False
    return all(G.edge_between(x, y) is not None for x in X for y in Y)


def bipartite_block(G: SkewGainGraph, X=None, Y=None) -> GainMatrix:
    """Block ``B`` with ``B[x, y] = gain(x, y)`` for a complete bipartite graph.

    Parts default to the 2-colouring that puts vertex 0 in ``X``.
    """
    if X is None or Y is None:
        parts = bipartition(G)
        if parts is None:
            raise NotCompleteBipartite("graph is not connected and bipartite")
        X, Y = parts
    X, Y = sorted(X), sorted(Y)
    if not is_complete_bipartite(G, X, Y):
        raise NotCompleteBipartite(f"graph is not complete bipartite with parts {X} and {Y}")
    return GainMatrix(G.backend, len(X), len(Y), tuple(G.gain(x, y) for x in X for y in Y))
