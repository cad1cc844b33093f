import math

import numpy as np
import pytest

from skewgain import GraphFamily, build_graph, fixture, generate, laplacian_spectrum
from skewgain import bipartite_spectrum_check, regular_shift_check
from skewgain.errors import BadParameters, NotCompleteBipartiteBalanced, NotRegular
from skewgain.matrices import g_laplacian, laplacian
from skewgain.spectral import charpoly_with_error_estimate, format_real, multiset_close

from corpus import matrix_tree_corpus, random_corpus


def close(found, expected, tol=1e-9):
    return multiset_close(found, [complex(v) for v in expected], tol)


def test_cycle_spectrum():
    spec = laplacian_spectrum(fixture("FX-C4"), "L")
    assert close(spec.expanded(), [0, 2, 2, 4])
    assert spec.multiplicity(2) == 2
    assert spec.lines() == ["0 0 1", "2 0 2", "4 0 1"]


def test_unit_triangle_spectrum():
    assert close(laplacian_spectrum(fixture("FX-1"), "L").expanded(), [0, 3, 3])


def test_single_vertex():
    spec = laplacian_spectrum(build_graph(1, []), "L")
    assert spec.eigenvalues == ((0j, 1),)


def test_unknown_matrix():
    with pytest.raises(BadParameters):
        laplacian_spectrum(fixture("FX-C3"), "B")


def test_spectra_of_hermitian_matrices_are_real():
    for G in random_corpus(60, seed=41) + random_corpus(60, seed=42, backend="complex-conj"):
        for which in ("L", "Lg", "A"):
            spec = laplacian_spectrum(G, which)
            assert spec.order == G.n
            assert all(abs(z.imag) <= 1e-8 for z in spec.expanded())


def test_spectrum_sums_to_trace():
    for G in random_corpus(60, seed=43) + random_corpus(60, seed=44, backend="complex-conj"):
        L = laplacian(G)[1]
        total = sum(laplacian_spectrum(G).expanded())
        assert abs(total - complex(L.trace())) <= 1e-8 * (1 + abs(total))
        assert abs(total - 2 * G.m) <= 1e-8 * (1 + abs(total))


def test_regular_shift_examples():
    rep = regular_shift_check(fixture("FX-C4"))
    assert rep.passed and rep.degree == 2
    assert close(rep.spectrum_A.expanded(), [2, 0, 0, -2])
    assert regular_shift_check(fixture("FX-C3")).passed
    with pytest.raises(NotRegular):
        regular_shift_check(fixture("FX-S3"))


def test_regular_shift_on_k4_and_petersen_like():
    k4 = build_graph(4, [(u, v, "2/3") for u in range(4) for v in range(u + 1, 4)])
    assert regular_shift_check(k4).passed
    k33 = generate(GraphFamily("complete_bipartite", {"p": 3, "q": 3}), "random", 5, "complex-conj")
    assert regular_shift_check(k33).passed


def test_bipartite_examples():
    rep = bipartite_spectrum_check(build_graph(2, [(0, 1, "3")]))
    assert rep.passed
    assert rep.mu.eigenvalues == ((9 + 0j, 1),)
    assert close(rep.spectrum_L.expanded(), [-2, 4])
    k22 = bipartite_spectrum_check(generate(GraphFamily("complete_bipartite", {"p": 2, "q": 2})))
    assert k22.passed
    assert close(k22.mu.expanded(), [0, 4])
    assert close(k22.spectrum_L.expanded(), [0, 2, 2, 4])


def test_bipartite_unbalanced():
    with pytest.raises(NotCompleteBipartiteBalanced):
        bipartite_spectrum_check(generate(GraphFamily("complete_bipartite", {"p": 1, "q": 2})))
    with pytest.raises(NotCompleteBipartiteBalanced):
        bipartite_spectrum_check(fixture("FX-C3"))


def test_multiset_close():
    assert multiset_close([1, 2, 2], [2, 1, 2], 1e-9)
    assert not multiset_close([1, 1, 2], [1, 2, 2], 1e-9)
    assert not multiset_close([1], [1, 1], 1e-9)


@pytest.mark.parametrize("v,text", [
    (2.0000000000001, "2"), (-1e-12, "0"), (math.sqrt(7), "2.645751311"), (0.5, "0.5"),
])
def test_format_real(v, text):
    assert format_real(v, 1e-9) == text


def _eigvalsh(M):
    return np.linalg.eigvalsh(np.array([[complex(v) for v in row] for row in M.tolist()]))


def _distinct(ev, gap=1e-6):
    return 1 + int(np.sum(np.diff(np.sort(ev)) > gap))


def test_spectra_agree_with_hermitian_solver():
    graphs = random_corpus(100, seed=45, backend="complex-conj") \
        + matrix_tree_corpus(60, seed=46, backend="complex-conj") + random_corpus(60, seed=47)
    for G in graphs:
        for which, M in (("L", laplacian(G)[1]), ("Lg", g_laplacian(G)[1])):
            spec = laplacian_spectrum(G, which)
            ev = np.sort(_eigvalsh(M))
            mine = np.sort([z.real for z in spec.expanded()])
            assert np.max(np.abs(ev - mine) / (1 + np.abs(ev))) <= 1e-6
            assert len(spec.eigenvalues) == _distinct(ev)


def test_forest_zero_eigenvalue_multiplicity_complex():
    # Two K2 components and two isolated vertices: L_g has 0 four times.
    G = build_graph(6, [(1, 4, "-2.5-0.25i"), (3, 2, "-0.5+3i")], "complex-conj")
    spec = laplacian_spectrum(G, "Lg")
    assert spec.multiplicity(0) == 4
    assert spec.order == 6


def test_error_estimate_covers_actual_error():
    for G in matrix_tree_corpus(40, seed=48, backend="complex-conj"):
        M = g_laplacian(G)[1]
        p, err = charpoly_with_error_estimate(M)
        exact = np.poly(_eigvalsh(M))[::-1]
        scale = max(abs(complex(c)) for c in p.coeffs)
        for k in range(G.n + 1):
            assert abs(complex(p[k]) - exact[k]) <= err[k] + 1e-13 * scale
