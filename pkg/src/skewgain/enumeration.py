"""Enumerators for the index sets of the combinatorial expansions.

Everything here is exponential in the edge count, so each enumerator takes
a hard ``cap`` on ``m`` and raises :class:`CapExceeded` beyond it.

Cycles are stored as vertex tuples in canonical form: smallest vertex
first, then the smaller of its two cycle neighbours.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import SkewGainGraph
from .errors import CapExceeded, NotACycle

DEFAULT_CAP = 24


def _check_cap(G: SkewGainGraph, cap: int):
    if G.m > cap:
        raise CapExceeded(f"enumeration refused: m = {G.m} exceeds the cap of {cap} edges")


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    cyc = list(cycle)
    k = cyc.index(min(cyc))
    cyc = cyc[k:] + cyc[:k]
    if len(cyc) > 2 and cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    return tuple(cyc)


def cycle_edge_ids(G: SkewGainGraph, cycle: Sequence[int]) -> tuple[int, ...]:
    ids = []
    for i, v in enumerate(cycle):
        e = G.edge_between(v, cycle[(i + 1) % len(cycle)])
        if e is None:
            raise NotACycle(f"{tuple(cycle)} is not a cycle: {v} and "
                            f"{cycle[(i + 1) % len(cycle)]} are not adjacent")
        ids.append(e.id)
    return tuple(sorted(ids))


@dataclass(frozen=True)
class ElementarySubgraph:
    """Vertex-disjoint union of single edges and cycles."""

    edge_components: tuple[int, ...]
    cycle_components: tuple[tuple[int, ...], ...]
    covered_vertices: frozenset[int]
    edge_ids: tuple[int, ...]

    @property
    def even_components(self) -> int:
        return len(self.edge_components) + sum(1 for c in self.cycle_components if len(c) % 2 == 0)

    def sort_key(self):
        return (tuple(sorted(self.covered_vertices)), self.edge_ids)

    def describe(self) -> str:
        parts = [f"e{i}" for i in self.edge_components]
        parts += ["C(" + "-".join(map(str, c)) + ")" for c in self.cycle_components]
        return " ".join(parts)


@dataclass(frozen=True)
class Matching:
    edges: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def describe(self) -> str:
        return " ".join(f"e{i}" for i in self.edges)


@dataclass(frozen=True)
class OneTree:
    """Connected component with exactly one cycle."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    cycle: tuple[int, ...]
    cycle_edges: tuple[int, ...]

    @property
    def tree_edges(self) -> tuple[int, ...]:
        on_cycle = set(self.cycle_edges)
        return tuple(e for e in self.edges if e not in on_cycle)


@dataclass(frozen=True)
class Spanning1Forest:
    components: tuple[OneTree, ...]

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted(e for c in self.components for e in c.edges))

    def describe(self) -> str:
        return " | ".join(
            "{" + ",".join(f"e{e}" for e in c.edges) + "} C(" + "-".join(map(str, c.cycle)) + ")"
            for c in self.components
        )


def simple_cycles(G: SkewGainGraph) -> list[tuple[int, ...]]:
    """All cycles of length >= 3, each once, in canonical form."""
    out = []
    nbrs = G.neighbors

    def extend(start, path, on_path):
        v = path[-1]
        for u in nbrs[v]:
            if u == start and len(path) >= 3 and path[1] < path[-1]:
                out.append(tuple(path))
            elif u > start and u not in on_path:
                on_path.add(u)
                path.append(u)
                extend(start, path, on_path)
                path.pop()
                on_path.discard(u)

    for s in range(G.n):
        extend(s, [s], {s})
    return sorted(out)


def elementary_subgraphs(G: SkewGainGraph, cap: int = DEFAULT_CAP) -> Iterator[ElementarySubgraph]:
    """Nonempty elementary subgraphs, sorted by covered vertices then edge ids.

    Each component is chosen at its smallest vertex: that vertex is left
    uncovered, paired with a larger free neighbour, or is the minimum of a
    cycle through free vertices.
    """
    _check_cap(G, cap)
    by_start: dict[int, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}
    for c in simple_cycles(G):
        by_start.setdefault(c[0], []).append((c, cycle_edge_ids(G, c)))
    found: list[ElementarySubgraph] = []

    def rec(v, used, k2, cycles, eids):
        if v == G.n:
            if k2 or cycles:
                cov = frozenset(used)
                found.append(ElementarySubgraph(tuple(sorted(k2)), tuple(cycles), cov,
                                                tuple(sorted(eids))))
            return
        if v in used:
            rec(v + 1, used, k2, cycles, eids)
            return
        rec(v + 1, used, k2, cycles, eids)
        for e in G.incident[v]:
            u = e.other(v)
            if u > v and u not in used:
                rec(v + 1, used | {v, u}, k2 + [e.id], cycles, eids + [e.id])
        for c, cids in by_start.get(v, ()):
            if not used.intersection(c):
                rec(v + 1, used | set(c), k2, cycles + [c], eids + list(cids))

    rec(0, frozenset(), [], [], [])
    found.sort(key=ElementarySubgraph.sort_key)
    return iter(found)


def matchings(G: SkewGainGraph, cap: int = DEFAULT_CAP) -> Iterator[Matching]:
    """Nonempty matchings, sorted by size then edge ids."""
    _check_cap(G, cap)
    found: list[tuple[int, ...]] = []

    def rec(i, used, chosen):
        if i == G.m:
            if chosen:
                found.append(tuple(chosen))
            return
        rec(i + 1, used, chosen)
        e = G.edges[i]
        if e.tail not in used and e.head not in used:
            rec(i + 1, used | {e.tail, e.head}, chosen + [i])

    rec(0, frozenset(), [])
    found.sort(key=lambda t: (len(t), t))
    return (Matching(t) for t in found)


def _one_tree(G: SkewGainGraph, vertices: list[int], edge_ids: list[int]) -> OneTree:
    deg = {v: 0 for v in vertices}
    for i in edge_ids:
        e = G.edges[i]
        deg[e.tail] += 1
        deg[e.head] += 1
    alive = set(edge_ids)
    leaves = [v for v in vertices if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        for i in list(alive):
            e = G.edges[i]
            if v in (e.tail, e.head):
                alive.discard(i)
                u = e.other(v)
                deg[u] -= 1
                deg[v] -= 1
                if deg[u] == 1:
                    leaves.append(u)
                break
    # What survives leaf stripping is the cycle; walk it.
    on_cycle = {v for v in vertices if deg[v] == 2}
    start = min(on_cycle)
    walk = [start]
    prev = None
    while True:
        cur = walk[-1]
        nxt = next(G.edges[i].other(cur) for i in sorted(alive)
                   if cur in (G.edges[i].tail, G.edges[i].head) and G.edges[i].other(cur) != prev)
        if nxt == start:
            break
        prev = cur
        walk.append(nxt)
    cyc = canonical_cycle(walk)
    return OneTree(tuple(sorted(vertices)), tuple(sorted(edge_ids)), cyc, tuple(sorted(alive)))


def forest_certificate(G: SkewGainGraph, edge_ids: Sequence[int]) -> Spanning1Forest:
    """Decompose a spanning edge set known to be a 1-forest into its 1-trees."""
    comps = []
    for verts in G.components(edge_ids):
        vs = set(verts)
        own = [i for i in edge_ids if G.edges[i].tail in vs]
        comps.append(_one_tree(G, verts, own))
    return Spanning1Forest(tuple(comps))


def is_one_forest(G: SkewGainGraph, edge_ids: Sequence[int] | None = None) -> bool:
    """Every component has as many edges as vertices."""
    ids = range(G.m) if edge_ids is None else edge_ids
    comps = G.components(ids)
    where = {}
    for k, verts in enumerate(comps):
        for v in verts:
            where[v] = k
    count = [0] * len(comps)
    for i in ids:
        count[where[G.edges[i].tail]] += 1
    return all(count[k] == len(verts) for k, verts in enumerate(comps))


def essential_spanning_subgraphs(G: SkewGainGraph, cap: int = DEFAULT_CAP
                                 ) -> Iterator[Spanning1Forest]:
    """Spanning 1-forests of ``G``, in lexicographic order of edge-id sets.

    Edges are included or skipped in order while a union-find tracks each
    component's vertex and edge counts; a component never receives a second
    cycle. With ``n`` edges chosen and every component holding at most as
    many edges as vertices, every component is a 1-tree.
    """
    _check_cap(G, cap)
    n = G.n
    if G.m < n or n == 0:
        return iter(())
    found: list[tuple[int, ...]] = []

    def rec(i, parent, nv, ne, chosen):
        if len(chosen) == n:
            found.append(tuple(chosen))
            return
        if G.m - i < n - len(chosen):
            return
        e = G.edges[i]
        ru, rv = _find(parent, e.tail), _find(parent, e.head)
        if ru == rv:
            ok = ne[ru] < nv[ru]
        else:
            ok = ne[ru] + ne[rv] + 1 <= nv[ru] + nv[rv]
        if ok:
            p2, nv2, ne2 = list(parent), list(nv), list(ne)
            if ru == rv:
                ne2[ru] += 1
            else:
                p2[ru] = rv
                nv2[rv] += nv2[ru]
                ne2[rv] += ne2[ru] + 1
            rec(i + 1, p2, nv2, ne2, chosen + [i])
        rec(i + 1, parent, nv, ne, chosen)

    rec(0, list(range(n)), [1] * n, [0] * n, [])
    found.sort()
    return (forest_certificate(G, ids) for ids in found)


def _find(parent, i):
    while parent[i] != i:
        i = parent[i]
    return i


def cycle_gain(G: SkewGainGraph, cycle: Sequence[int]):
    """``(phi, phi + f(phi))`` for the closed walk ``cycle[0] -> ... -> cycle[0]``."""
    cyc = list(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise NotACycle(f"{tuple(cyc)} is not a cycle of length >= 3 without repeats")
    b = G.backend
    phi = b.one
    for i, v in enumerate(cyc):
        w = G.gain(v, cyc[(i + 1) % len(cyc)])
        if w is None:
            raise NotACycle(f"{tuple(cyc)} is not a cycle: {v} and "
                            f"{cyc[(i + 1) % len(cyc)]} are not adjacent")
        phi = phi * w
    return phi, phi + b.f(phi)
