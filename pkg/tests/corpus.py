"""Seeded graph corpora shared by the property and acceptance tests."""
import random

from skewgain import GraphFamily, build_graph, generate, get_backend, random_graph
from skewgain.core import disjoint_union


def random_corpus(count, seed=2024, max_n=7, max_m=12, backend="rational-id"):
    """``count`` random simple graphs with n <= max_n and m <= max_m."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(1, max_n)
        m = rng.randint(0, min(max_m, n * (n - 1) // 2))
        out.append(random_graph(n, m, seed * 1000 + k, backend))
    return out


def random_tree(n, seed, backend="rational-id"):
    rng = random.Random(seed)
    b = get_backend(backend)
    triples = []
    for v in range(1, n):
        u = rng.randrange(v)
        ends = (u, v) if rng.random() < 0.5 else (v, u)
        triples.append((*ends, b.random_gain(rng)))
    return build_graph(n, triples, backend)


def matrix_tree_corpus(count=200, seed=7, backend="rational-id"):
    """Trees, connected unicyclic graphs, disconnected 1-forests and random graphs, m <= 12."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        s = seed * 1000 + k
        kind = k % 4
        if kind == 0:
            out.append(random_tree(rng.randint(1, 8), s, backend))
        elif kind == 1:
            n = rng.randint(3, 8)
            out.append(generate(GraphFamily("unicyclic", {"n": n, "k": rng.randint(3, n)}),
                                "random", s, backend))
        elif kind == 2:
            parts = []
            for j in range(rng.randint(2, 3)):
                n = rng.randint(3, 4)
                parts.append(generate(GraphFamily("unicyclic", {"n": n, "k": rng.randint(3, n)}),
                                      "random", s * 10 + j, backend))
            out.append(disjoint_union(parts))
        else:
            n = rng.randint(3, 7)
            m = rng.randint(n, min(12, n * (n - 1) // 2))
            out.append(random_graph(n, m, s, backend))
    return out
