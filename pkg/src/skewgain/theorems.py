"""Closed forms and combinatorial expansions, each checkable against a direct computation.

The left- and right-hand sides of every identity in :func:`verify_all` come
from disjoint code paths: elimination-based determinants and
Faddeev-LeVerrier on one side, enumeration-based sums on the other.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Callable

from .algebra.backends import DEFAULT_TOL
from .algebra.linalg import LEIBNIZ_MAX_ORDER, char_poly, det, det_leibniz
from .algebra.polynomial import Polynomial
from .algebra.roots import merge_roots
from .core import SkewGainGraph
from .enumeration import (
    DEFAULT_CAP,
    OneTree,
    cycle_gain,
    elementary_subgraphs,
    essential_spanning_subgraphs,
    forest_certificate,
    is_one_forest,
    matchings,
)
from .errors import CapExceeded, FamilyMismatch, NoClosedForm, NotAStar
from .matrices import (
    adjacency_matrix,
    bipartition,
    g_laplacian,
    incidence,
    incidence_sharp,
    is_complete_bipartite,
    laplacian,
)
from .spectral import (
    Spectrum,
    bipartite_spectrum_check,
    laplacian_spectrum,
    multiset_close,
    regular_degree,
    regular_shift_check,
)


def _x_minus(b, c) -> Polynomial:
    return Polynomial.linear_root(b, b.coerce(c))


def charpoly_combinatorial(G: SkewGainGraph, cap: int = DEFAULT_CAP) -> Polynomial:
    """``det(xI - L)`` as a signed sum over elementary subgraphs.

    The empty subgraph contributes ``prod (x - d(v))``; every other
    elementary subgraph contributes ``(-1)^(even components)`` times the g of
    each single-edge component, ``phi(C) + f(phi(C))`` of each cycle, and
    ``x - d(v)`` for each vertex it leaves uncovered.
    """
    b = G.backend
    degs = G.degrees()
    factors = [_x_minus(b, d) for d in degs]
    total = Polynomial(b, [b.one])
    for fac in factors:
        total = total * fac
    for sub in elementary_subgraphs(G, cap):
        weight = b.one
        for eid in sub.edge_components:
            weight = weight * b.g(G.edges[eid].gain)
        for cyc in sub.cycle_components:
            weight = weight * cycle_gain(G, cyc)[1]
        if sub.even_components % 2:
            weight = -weight
        term = Polynomial(b, [weight])
        for v in range(G.n):
            if v not in sub.covered_vertices:
                term = term * factors[v]
        total = total + term
    return total


# --- family recognition --------------------------------------------------------

def path_order(G: SkewGainGraph) -> list[int] | None:
    """Vertex sequence if the underlying graph is a path on >= 2 vertices."""
    if G.n < 2 or G.m != G.n - 1 or not G.is_connected():
        return None
    degs = G.degrees()
    if max(degs) > 2:
        return None
    start = min(v for v in range(G.n) if degs[v] == 1)
    order, prev = [start], None
    while len(order) < G.n:
        nxt = [u for u in G.neighbors[order[-1]] if u != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def cycle_order(G: SkewGainGraph) -> list[int] | None:
    """Vertex sequence starting at 0 if the underlying graph is a single cycle."""
    if G.n < 3 or G.m != G.n or not G.is_connected() or any(d != 2 for d in G.degrees()):
        return None
    order, prev = [0], None
    while len(order) < G.n:
        nxt = [u for u in G.neighbors[order[-1]] if u != prev]
        prev = order[-1]
        order.append(nxt[0] if nxt[0] not in order else nxt[-1])
    return order


def star_center(G: SkewGainGraph) -> int | None:
    """Centre of a star ``K_{1,n}`` (n >= 1); for ``K_{1,1}`` this is vertex 0."""
    if G.n < 2 or G.m != G.n - 1:
        return None
    for c in range(G.n):
        if G.degree(c) == G.n - 1:
            return c
    return None


def _matching_sum(G: SkewGainGraph, cap: int) -> Polynomial:
    b = G.backend
    degs = G.degrees()
    total = Polynomial(b, [])
    for M in matchings(G, cap):
        weight = b.one
        covered = set()
        for eid in M.edges:
            e = G.edges[eid]
            weight = weight * b.g(e.gain)
            covered |= {e.tail, e.head}
        if M.size % 2:
            weight = -weight
        term = Polynomial(b, [weight])
        for v in range(G.n):
            if v not in covered:
                term = term * _x_minus(b, degs[v])
        total = total + term
    return total


def charpoly_closed_form(G: SkewGainGraph, family: str, cap: int = DEFAULT_CAP) -> Polynomial:
    """Characteristic polynomial of L from the path, cycle or star formula."""
    b = G.backend
    n = G.n
    if family == "path":
        if path_order(G) is None:
            raise FamilyMismatch("underlying graph is not a path on at least 2 vertices")
        base = _x_minus(b, 2) ** (n - 2) * _x_minus(b, 1) ** 2
        return base + _matching_sum(G, cap)
    if family == "cycle":
        order = cycle_order(G)
        if order is None:
            raise FamilyMismatch("underlying graph is not a cycle")
        sym = cycle_gain(G, order)[1]
        sign = 1 if (n - 1) % 2 == 0 else -1
        return _x_minus(b, 2) ** n + Polynomial(b, [sign * sym]) + _matching_sum(G, cap)
    if family == "star":
        if star_center(G) is None:
            raise FamilyMismatch("underlying graph is not a star")
        leaves = n - 1
        sum_g = b.zero
        for e in G.edges:
            sum_g = sum_g + b.g(e.gain)
        return (_x_minus(b, 1) ** leaves * _x_minus(b, leaves)
                - _x_minus(b, 1) ** (leaves - 1) * Polynomial(b, [sum_g]))
    raise FamilyMismatch(f"no closed form for family {family!r}; use path, cycle or star")


def detect_family(G: SkewGainGraph) -> str | None:
    if path_order(G) is not None:
        return "path"
    if cycle_order(G) is not None:
        return "cycle"
    if star_center(G) is not None:
        return "star"
    return None


def star_closed_forms(G: SkewGainGraph, tol: float = DEFAULT_TOL):
    """``(det L, spectrum)`` of a star from the number of leaves and the sum of g."""
    if star_center(G) is None:
        raise NotAStar("underlying graph is not a star K_{1,n}")
    b = G.backend
    leaves = G.n - 1
    sum_g = b.zero
    for e in G.edges:
        sum_g = sum_g + b.g(e.gain)
    det_L = b.coerce(leaves) - sum_g
    disc = cmath.sqrt((leaves + 1) ** 2 - 4 * complex(det_L))
    roots = [((leaves + 1) + disc) / 2, ((leaves + 1) - disc) / 2]
    found = [(complex(r), 1) for r in roots]
    if leaves > 1:
        found.append((1 + 0j, leaves - 1))
    return det_L, Spectrum(tuple(merge_roots(found, tol)), "L")


# --- determinant of the g-Laplacian --------------------------------------------

@dataclass(frozen=True)
class ClosedFormValue:
    value: object
    rule: str


def one_tree_factor(G: SkewGainGraph, tree: OneTree):
    """``sqrt(prod g off the cycle) * (2 sqrt(prod g on the cycle) - (phi(C) + f(phi(C))))``."""
    b = G.backend
    on = b.one
    for eid in tree.cycle_edges:
        on = on * G.edges[eid].gain
    off = b.one
    for eid in tree.tree_edges:
        off = off * G.edges[eid].gain
    _, sym = cycle_gain(G, tree.cycle)
    return b.sqrt_g(off) * (2 * b.sqrt_g(on) - sym)


def classify(G: SkewGainGraph) -> str | None:
    connected = G.is_connected()
    if connected and G.m == G.n - 1:
        return "tree"
    if cycle_order(G) is not None:
        return "cycle"
    if connected and G.m == G.n and G.n >= 3:
        return "unicyclic"
    if G.n >= 3 and is_one_forest(G):
        return "one_forest"
    return None


def det_lg_closed_form(G: SkewGainGraph) -> ClosedFormValue:
    rule = classify(G)
    if rule is None:
        raise NoClosedForm("graph is not a tree, cycle, unicyclic graph or 1-forest")
    b = G.backend
    if rule == "tree":
        return ClosedFormValue(b.zero, rule)
    forest = forest_certificate(G, range(G.m))
    value = b.one
    for comp in forest.components:
        value = value * one_tree_factor(G, comp)
    return ClosedFormValue(value, rule)


def matrix_tree_sum(G: SkewGainGraph, cap: int = DEFAULT_CAP):
    """``det L_g`` as a sum over spanning 1-forests of products of 1-tree factors."""
    b = G.backend
    total = b.zero
    for forest in essential_spanning_subgraphs(G, cap):
        term = b.one
        for comp in forest.components:
            term = term * one_tree_factor(G, comp)
        total = total + term
    return total


# --- verification report -------------------------------------------------------

@dataclass
class IdentityResult:
    id: str
    applicable: bool
    lhs: str | None = None
    rhs: str | None = None
    passed: bool | None = None
    discrepancy: float | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.id, "applicable": self.applicable, "lhs": self.lhs, "rhs": self.rhs,
            "pass": self.passed, "discrepancy": self.discrepancy, "note": self.note,
        }


@dataclass
class VerificationReport:
    graph: SkewGainGraph
    tol: float
    entries: list[IdentityResult] = field(default_factory=list)

    @property
    def backend(self) -> str:
        return self.graph.backend.id

    @property
    def ok(self) -> bool:
        return not any(e.applicable and e.passed is False for e in self.entries)

    def get(self, identity: str) -> IdentityResult:
        for e in self.entries:
            if e.id == identity:
                return e
        raise KeyError(identity)

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_dict(),
            "identities": [e.to_json() for e in self.entries],
            "backend": self.backend,
            "tol": self.tol,
        }

    def lines(self) -> list[str]:
        width = max((len(e.id) for e in self.entries), default=0)
        out = []
        for e in self.entries:
            if not e.applicable:
                out.append(f"{e.id:<{width}}  n/a" + (f"  ({e.note})" if e.note else ""))
            else:
                verdict = "PASS" if e.passed else "FAIL"
                out.append(f"{e.id:<{width}}  {e.lhs} = {e.rhs} {verdict}")
        out.append(f"backend {self.backend}, tol {self.tol:g}: "
                   + ("all applicable identities pass" if self.ok else "FAILURES"))
        return out


def _fmt_scalar(G: SkewGainGraph, v) -> str:
    return G.backend.format(v)


def _fmt_spectrum(values) -> str:
    vals = sorted(values, key=lambda c: (c.real, c.imag))
    parts = []
    for z in vals:
        if abs(z.imag) <= 1e-12 * (1 + abs(z)):
            parts.append(f"{z.real:.10g}")
        else:
            parts.append(f"{z.real:.10g}{z.imag:+.10g}i")
    return "{" + ", ".join(parts) + "}"


def verify_all(G: SkewGainGraph, tol: float = DEFAULT_TOL, cap: int = DEFAULT_CAP
               ) -> VerificationReport:
    """Run every identity whose structural precondition holds on ``G``."""
    b = G.backend
    exact = b.exact
    report = VerificationReport(G, tol)

    def scalar_eq(x, y):
        return b.eq(x, y, None if exact else tol)

    def add(identity: str, run: Callable[[], IdentityResult | None], reason: str = ""):
        try:
            result = run()
        except CapExceeded as exc:
            result = IdentityResult(identity, False, note=str(exc))
        if result is None:
            result = IdentityResult(identity, False, note=reason)
        report.entries.append(result)

    def scalar_result(identity, lhs, rhs):
        return IdentityResult(identity, True, _fmt_scalar(G, lhs), _fmt_scalar(G, rhs),
                              scalar_eq(lhs, rhs), abs(complex(lhs) - complex(rhs)))

    def poly_result(identity, lhs: Polynomial, rhs: Polynomial):
        ok = lhs == rhs if exact else lhs.equals(rhs, tol)
        return IdentityResult(identity, True, lhs.format(), rhs.format(), ok,
                              lhs.max_coeff_diff(rhs))

    _, L = laplacian(G)
    _, Lg = g_laplacian(G)
    direct_cp = char_poly(L) if G.n else None
    det_lg = det(Lg)

    add("charpoly-combinatorial",
        lambda: poly_result("charpoly-combinatorial", charpoly_combinatorial(G, cap), direct_cp)
        if G.n else None, "empty graph")

    def factorization():
        HH = incidence(G) @ incidence_sharp(G)
        ok = Lg.equals(HH) if exact else Lg.max_abs_diff(HH) <= tol
        return IdentityResult("incidence-factorization", True, "L_g", "H H#", ok,
                              Lg.max_abs_diff(HH))
    add("incidence-factorization", factorization)

    add("det-lg-leibniz",
        lambda: scalar_result("det-lg-leibniz", det(Lg), det_leibniz(Lg))
        if 0 < G.n <= LEIBNIZ_MAX_ORDER else None,
        f"n must be between 1 and {LEIBNIZ_MAX_ORDER}")

    for fam in ("path", "cycle", "star"):
        def closed(fam=fam):
            try:
                rhs = charpoly_closed_form(G, fam, cap)
            except FamilyMismatch:
                return None
            return poly_result(f"{fam}-charpoly", direct_cp, rhs)
        add(f"{fam}-charpoly", closed, f"not a {fam}")

    is_star = star_center(G) is not None
    add("star-det",
        lambda: scalar_result("star-det", det(L), star_closed_forms(G, tol)[0]) if is_star else None,
        "not a star")

    def star_spectrum():
        if not is_star:
            return None
        _, closed = star_closed_forms(G, tol)
        direct = laplacian_spectrum(G, "L", tol)
        ones = direct.multiplicity(1.0, tol)
        ok = multiset_close(direct.expanded(), closed.expanded(), tol) and ones == G.n - 2
        return IdentityResult("star-spectrum", True, _fmt_spectrum(direct.expanded()),
                              _fmt_spectrum(closed.expanded()), ok)
    add("star-spectrum", star_spectrum, "not a star")

    def shift():
        if G.n == 0 or regular_degree(G) is None:
            return None
        rep = regular_shift_check(G, tol)
        return IdentityResult("regular-shift", True, _fmt_spectrum(rep.spectrum_L.expanded()),
                              _fmt_spectrum([p[1] for p in rep.pairs]), rep.passed)
    add("regular-shift", shift, "not regular")

    def bip():
        parts = bipartition(G)
        if parts is None or len(parts[0]) != len(parts[1]) or not is_complete_bipartite(G, *parts):
            return None
        rep = bipartite_spectrum_check(G, tol)
        return IdentityResult("bipartite-spectrum", True,
                              _fmt_spectrum(rep.spectrum_L.expanded()),
                              _fmt_spectrum(rep.expected), rep.passed)
    add("bipartite-spectrum", bip, "not K_{m,m}")

    def closed_det():
        try:
            cf = det_lg_closed_form(G)
        except NoClosedForm:
            return None
        res = scalar_result("det-lg-closed-form", cf.value, det_lg)
        res.note = cf.rule
        return res
    add("det-lg-closed-form", closed_det, "not a tree, cycle, unicyclic graph or 1-forest")

    add("matrix-tree", lambda: scalar_result("matrix-tree", matrix_tree_sum(G, cap), det_lg))
    return report
