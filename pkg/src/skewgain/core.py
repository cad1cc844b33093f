"""Skew gain graphs: oriented simple graphs whose edges carry field gains.

Only the gain of the stored orientation is kept; the gain of the reverse
direction is always computed as ``f(gain)``. Vertices are 0-based.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from .algebra.backends import FieldBackend, get_backend
from .errors import BadParameters, BadVertexIndex, DuplicateEdge, LoopEdge, ZeroGain


@dataclass(frozen=True)
class OrientedEdge:
    id: int
    tail: int
    head: int
    gain: object

    @property
    def ends(self) -> frozenset[int]:
        return frozenset((self.tail, self.head))

    def other(self, v: int) -> int:
        return self.head if v == self.tail else self.tail


@dataclass(frozen=True)
class SkewGainGraph:
    n: int
    edges: tuple[OrientedEdge, ...]
    backend: FieldBackend

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], OrientedEdge]:
        index = {}
        for e in self.edges:
            index[(e.tail, e.head)] = e
            index[(e.head, e.tail)] = e
        return index

    @cached_property
    def incident(self) -> tuple[tuple[OrientedEdge, ...], ...]:
        """Edges incident to each vertex, in edge order."""
        inc: list[list[OrientedEdge]] = [[] for _ in range(self.n)]
        for e in self.edges:
            inc[e.tail].append(e)
            inc[e.head].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(e.other(v) for e in self.incident[v])) for v in range(self.n))

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incident]

    def _check_vertex(self, v: int):
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise BadVertexIndex(f"vertex {v!r} is outside [0, {self.n})")

    def edge_between(self, u: int, v: int) -> OrientedEdge | None:
        self._check_vertex(u)
        self._check_vertex(v)
        return self._pair_index.get((u, v))

    def gain(self, u: int, v: int):
        """Gain of the direction ``u -> v``, or ``None`` when u, v are not adjacent."""
        if u == v:
            raise BadParameters("gain(u, v) needs two distinct vertices")
        e = self.edge_between(u, v)
        if e is None:
            return None
        return e.gain if e.tail == u else self.backend.f(e.gain)

    def components(self, edge_ids: Iterable[int] | None = None) -> list[list[int]]:
        """Vertex sets of connected components (of the spanning subgraph on ``edge_ids``)."""
        parent = list(range(self.n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        chosen = self.edges if edge_ids is None else (self.edges[i] for i in edge_ids)
        for e in chosen:
            parent[find(e.tail)] = find(e.head)
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def spanning_subgraph(self, edge_ids: Iterable[int]) -> "SkewGainGraph":
        """Same vertex set, only the listed edges (renumbered in the given order)."""
        chosen = [self.edges[i] for i in edge_ids]
        return SkewGainGraph(
            self.n,
            tuple(OrientedEdge(k, e.tail, e.head, e.gain) for k, e in enumerate(chosen)),
            self.backend,
        )

    def flip_edge(self, i: int) -> "SkewGainGraph":
        """Store edge ``i`` the other way round; the gain becomes ``f(gain)``."""
        edges = list(self.edges)
        e = edges[i]
        edges[i] = OrientedEdge(e.id, e.head, e.tail, self.backend.f(e.gain))
        return SkewGainGraph(self.n, tuple(edges), self.backend)

    def to_dict(self) -> dict:
        fmt = self.backend.format
        return {
            "backend": self.backend.id,
            "n": self.n,
            "edges": [{"tail": e.tail, "head": e.head, "gain": fmt(e.gain)} for e in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def save(self, path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")


def build_graph(n: int, edges: Sequence[tuple], backend="rational-id") -> SkewGainGraph:
    """Validate and assemble a skew gain graph.

    ``edges`` holds ``(tail, head, gain)`` triples; gains may be carrier
    elements, ints or gain strings. Edge order is kept: it fixes the column
    order of the incidence matrix.
    """
    b = get_backend(backend)
    if not isinstance(n, int) or n < 0:
        raise BadParameters(f"vertex count must be a non-negative integer, got {n!r}")
    seen: dict[frozenset, int] = {}
    out = []
    for k, triple in enumerate(edges):
        try:
            tail, head, raw = triple
        except (TypeError, ValueError):
            raise BadParameters(f"edge {k}: expected (tail, head, gain), got {triple!r}") from None
        for v in (tail, head):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise BadVertexIndex(f"edge {k}: vertex {v!r} is outside [0, {n})", edge=k)
        if tail == head:
            raise LoopEdge(f"edge {k}: loop at vertex {tail}", edge=k)
        gain = b.coerce(raw)
        if b.is_zero(gain):
            raise ZeroGain(f"edge {k}: gain is zero", edge=k)
        pair = frozenset((tail, head))
        if pair in seen:
            raise DuplicateEdge(
                f"edge {k}: vertices {tail} and {head} already joined by edge {seen[pair]}", edge=k
            )
        seen[pair] = k
        out.append(OrientedEdge(k, tail, head, gain))
    return SkewGainGraph(n, tuple(out), b)


def gain(graph: SkewGainGraph, u: int, v: int):
    return graph.gain(u, v)


def from_dict(data: dict) -> SkewGainGraph:
    if not isinstance(data, dict):
        raise BadParameters("graph document must be a JSON object")
    missing = {"backend", "n", "edges"} - set(data)
    if missing:
        raise BadParameters(f"graph document lacks {sorted(missing)}")
    edges = []
    for k, e in enumerate(data["edges"]):
        if not isinstance(e, dict) or not {"tail", "head", "gain"} <= set(e):
            raise BadParameters(f"edge {k}: expected an object with tail, head, gain")
        if not isinstance(e["gain"], str):
            raise BadParameters(f"edge {k}: gain must be a string")
        edges.append((e["tail"], e["head"], e["gain"]))
    return build_graph(data["n"], edges, data["backend"])


def loads(text: str) -> SkewGainGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadParameters(f"invalid JSON: {exc}") from None
    return from_dict(data)


def load(path) -> SkewGainGraph:
    return loads(Path(path).read_text(encoding="utf-8"))


# --- families and generators -------------------------------------------------

FAMILY_KINDS = ("path", "cycle", "star", "complete_bipartite", "unicyclic", "custom")


@dataclass(frozen=True)
class GraphFamily:
    """Generator selector.

    Parameters per kind: ``path``/``cycle`` take ``n`` (vertices), ``star``
    takes ``n`` (leaves), ``complete_bipartite`` takes ``p`` and ``q`` (part
    sizes), ``unicyclic`` takes ``n`` (vertices) and ``k`` (cycle length),
    ``custom`` takes ``n`` and ``m`` and draws a seeded random simple graph.
    """

    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise BadParameters(f"unknown family {self.kind!r}; expected one of {FAMILY_KINDS}")
        p = self.params
        need = {
            "path": ("n",), "cycle": ("n",), "star": ("n",),
            "complete_bipartite": ("p", "q"), "unicyclic": ("n", "k"), "custom": ("n", "m"),
        }[self.kind]
        for key in need:
            if not isinstance(p.get(key), int):
                raise BadParameters(f"{self.kind} needs integer parameter {key!r}")
        if self.kind == "custom":
            if p["n"] < 0 or p["m"] < 0 or p["m"] > p["n"] * (p["n"] - 1) // 2:
                raise BadParameters(f"no simple graph with n={p['n']}, m={p['m']}")
            return
        if any(p[key] < 1 for key in need):
            raise BadParameters(f"{self.kind} parameters must be positive: {p}")
        if self.kind == "path" and p["n"] < 1:
            raise BadParameters("path needs n >= 1")
        if self.kind == "cycle" and p["n"] < 3:
            raise BadParameters("cycle needs n >= 3")
        if self.kind == "unicyclic" and not 3 <= p["k"] <= p["n"]:
            raise BadParameters("unicyclic needs 3 <= k <= n")


def _family_pairs(family: GraphFamily, rng: random.Random) -> tuple[int, list[tuple[int, int]]]:
    p = family.params
    kind = family.kind
    if kind == "path":
        n = p["n"]
        return n, [(i, i + 1) for i in range(n - 1)]
    if kind == "cycle":
        n = p["n"]
        return n, [(i, (i + 1) % n) for i in range(n)]
    if kind == "star":
        return p["n"] + 1, [(0, leaf) for leaf in range(1, p["n"] + 1)]
    if kind == "complete_bipartite":
        a, b = p["p"], p["q"]
        return a + b, [(x, a + y) for x in range(a) for y in range(b)]
    if kind == "unicyclic":
        n, k = p["n"], p["k"]
        pairs = [(i, (i + 1) % k) for i in range(k)]
        pairs += [(rng.randrange(v), v) for v in range(k, n)]
        return n, pairs
    n, m = p["n"], p["m"]
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = sorted(rng.sample(all_pairs, m))
    return n, [(v, u) if rng.random() < 0.5 else (u, v) for u, v in chosen]


def generate(family: GraphFamily, gains="all-one", seed: int = 0,
             backend="rational-id") -> SkewGainGraph:
    """Deterministic instance of ``family``.

    ``gains`` is ``"all-one"``, ``"random"`` (seeded nonzero gains) or an
    explicit sequence with one gain per edge. Cycles are oriented
    ``0 -> 1 -> ... -> n-1 -> 0``; stars point from centre 0 to each leaf.
    """
    b = get_backend(backend)
    rng = random.Random(seed)
    n, pairs = _family_pairs(family, rng)
    if isinstance(gains, str):
        if gains == "all-one":
            values = [b.one] * len(pairs)
        elif gains == "random":
            values = [b.random_gain(rng) for _ in pairs]
        else:
            raise BadParameters(f"unknown gain rule {gains!r}")
    else:
        values = list(gains)
        if len(values) != len(pairs):
            raise BadParameters(
                f"{family.kind} has {len(pairs)} edges but {len(values)} gains were given"
            )
    return build_graph(n, [(t, h, w) for (t, h), w in zip(pairs, values)], b)


def random_graph(n: int, m: int, seed: int, backend="rational-id") -> SkewGainGraph:
    return generate(GraphFamily("custom", {"n": n, "m": m}), "random", seed, backend)


def disjoint_union(graphs: Sequence[SkewGainGraph]) -> SkewGainGraph:
    if not graphs:
        raise BadParameters("disjoint_union needs at least one graph")
    b = graphs[0].backend
    offset = 0
    triples = []
    for G in graphs:
        triples += [(e.tail + offset, e.head + offset, e.gain) for e in G.edges]
        offset += G.n
    return build_graph(offset, triples, b)


# --- fixtures ------------------------------------------------------------------

_C3 = [(0, 1, "2"), (1, 2, "-3"), (2, 0, "5")]

FIXTURE_SPECS: dict[str, tuple[int, list[tuple], str]] = {
    "FX-C3": (3, _C3, "rational-id"),
    "FX-1": (3, [(0, 1, "1"), (1, 2, "1"), (2, 0, "1")], "rational-id"),
    "FX-P3": (3, [(0, 1, "2"), (1, 2, "3")], "rational-id"),
    "FX-S3": (4, [(0, 1, "2"), (0, 2, "1"), (0, 3, "1")], "rational-id"),
    "FX-C4": (4, [(0, 1, "1"), (1, 2, "1"), (2, 3, "1"), (3, 0, "1")], "rational-id"),
    "FX-U4": (4, _C3 + [(2, 3, "1"), (3, 0, "1")], "rational-id"),
    "FX-C3P": (4, _C3 + [(2, 3, "7")], "rational-id"),
    "FX-Z": (2, [(0, 1, "i")], "complex-conj"),
}


def fixture(name: str) -> SkewGainGraph:
    try:
        n, edges, backend = FIXTURE_SPECS[name]
    except KeyError:
        raise BadParameters(f"unknown fixture {name!r}") from None
    return build_graph(n, edges, backend)


def fixtures() -> dict[str, SkewGainGraph]:
    return {name: fixture(name) for name in FIXTURE_SPECS}
