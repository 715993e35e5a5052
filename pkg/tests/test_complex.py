from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncx.complex import (
    build_complex,
    check_pseudomanifold,
    check_pure,
    clique_counts,
    edge_count,
    enumerate_facets,
    euler_characteristic,
    f_vector,
    h_from_f,
    h_vector,
    maximal_cliques,
    multidim_catalan,
    narayana_by_peaks,
    reduced_complex,
)
from ncx.core import (
    all_vectors,
    complement,
    cyclic_intervals,
    is_noncrossing,
    is_nonnesting,
    is_weakly_separated,
    reflect,
)

from oracles import faces_from_facets, facets_networkx, hook_count, peaks_histogram

SHAPES = [(k, n) for n in range(2, 8) for k in range(1, min(3, n - 1) + 1)]
PRED = {"nc": is_noncrossing, "nn": is_nonnesting, "sep": is_weakly_separated}

H_FROZEN = {
    (2, 5): [1, 3, 1, 0, 0, 0, 0],
    (2, 6): [1, 6, 6, 1, 0, 0, 0, 0, 0],
    (3, 6): [1, 10, 20, 10, 1, 0, 0, 0, 0, 0],
    (3, 7): [1, 22, 113, 190, 113, 22, 1, 0, 0, 0, 0, 0, 0],
}


def test_build_validation():
    with pytest.raises(ValueError):
        build_complex(0, 5, "nc")
    with pytest.raises(ValueError):
        build_complex(2, 5, "xx")
    with pytest.raises(ValueError):
        reduced_complex(build_complex(2, 5, "nn"))
    with pytest.raises(ValueError):
        enumerate_facets(build_complex(2, 5, "nc"), "other")
    with pytest.raises(ValueError):
        enumerate_facets(build_complex(2, 5, "nn"), "flip")


def test_edge_count_36():
    cx = build_complex(3, 6, "nc")
    assert len(cx.vertices) == 20
    assert edge_count(cx) == 155 == len(cx.edges())
    assert 190 - edge_count(cx) == 35


def test_nn_k1_complete():
    for n in range(2, 8):
        cx = build_complex(1, n, "nn")
        assert edge_count(cx) == n * (n - 1) // 2


def test_sep_equals_nc_for_k2():
    assert build_complex(2, 5, "sep").adj == build_complex(2, 5, "nc").adj


def test_facets_25():
    facets = enumerate_facets(build_complex(2, 5, "nc"))
    intervals = cyclic_intervals(2, 5)
    rest = sorted(tuple(v for v in F if v not in intervals) for F in facets)
    assert rest == [((1, 3), (1, 4)), ((1, 3), (3, 5)), ((1, 4), (2, 4)),
                    ((2, 4), (2, 5)), ((2, 5), (3, 5))]


def test_crossing_diagonals_are_not_faces():
    cx = build_complex(2, 5, "nc")
    assert not cx.adjacent((1, 3), (2, 5))
    assert not cx.adjacent((1, 4), (3, 5))


def test_nn_25_join_base():
    facets = enumerate_facets(build_complex(2, 5, "nn"))
    assert len(facets) == 5
    base = {(1, 2), (1, 3), (3, 5), (4, 5)}
    assert all(base <= set(F) for F in facets)


@pytest.mark.parametrize("k,n,count", [(2, 5, 5), (2, 6, 14), (3, 6, 42), (3, 7, 462)])
def test_facet_counts(k, n, count):
    assert multidim_catalan(k, n) == count
    for kind in ("nc", "nn"):
        facets = enumerate_facets(build_complex(k, n, kind))
        assert len(facets) == count
        assert check_pure(build_complex(k, n, kind), facets)
    nc = build_complex(k, n, "nc")
    assert enumerate_facets(nc, "flip") == enumerate_facets(nc, "clique")


def test_flip_equals_clique_up_to_12():
    for n in range(2, 9):
        for k in range(1, n):
            if k * (n - k) <= 12:
                cx = build_complex(k, n, "nc")
                assert enumerate_facets(cx, "flip") == enumerate_facets(cx)


@pytest.mark.parametrize("kind", ["nc", "nn", "sep"])
@pytest.mark.parametrize("k,n", [(1, 5), (2, 5), (2, 6), (3, 6), (2, 7)])
def test_cliques_match_networkx(kind, k, n):
    assert enumerate_facets(build_complex(k, n, kind)) == facets_networkx(k, n, PRED[kind])


def test_multidim_catalan_matches_hooks():
    for n in range(2, 11):
        for k in range(1, n):
            assert multidim_catalan(k, n) == hook_count(k, n - k)
    assert multidim_catalan(1, 9) == 1


@pytest.mark.parametrize("k,n", [s for s in SHAPES if s[0] * (s[1] - s[0]) <= 10])
def test_narayana_matches_enumeration(k, n):
    assert narayana_by_peaks(k, n) == peaks_histogram(k, n)


def test_narayana_examples():
    assert narayana_by_peaks(2, 5) == [1, 3, 1]
    assert narayana_by_peaks(1, 6) == [1]


@pytest.mark.parametrize("k,n", [(2, 5), (2, 6), (3, 6)])
def test_f_vector_matches_face_listing(k, n):
    for kind in ("nc", "nn"):
        cx = build_complex(k, n, kind)
        assert f_vector(cx) == faces_from_facets(enumerate_facets(cx))


@pytest.mark.parametrize("k,n", SHAPES)
def test_h_vector_identities(k, n):
    h_nc = h_vector(build_complex(k, n, "nc"))
    h_nn = h_vector(build_complex(k, n, "nn"))
    assert h_nc == h_nn
    assert len(h_nc) == k * (n - k) + 1
    top = k * (n - k) - n + 1
    if top >= 0:
        assert h_nc[top] == 1 and not any(h_nc[top + 1 :])
        peaks = narayana_by_peaks(k, n)
        assert h_nc[: len(peaks)] == peaks and not any(h_nc[len(peaks) :])
    if k >= 2 and n - k >= 2:
        red = h_vector(reduced_complex(build_complex(k, n, "nc")))
        assert red == red[::-1]
        assert red[: top + 1] == h_nc[: top + 1]


@pytest.mark.parametrize("k,n", sorted(H_FROZEN))
def test_h_vector_frozen(k, n):
    assert h_vector(build_complex(k, n, "nc")) == H_FROZEN[(k, n)]


def test_h_from_f_simplex():
    # boundary of a triangle
    assert h_from_f([1, 3, 3], 2) == [1, 1, 1]


@pytest.mark.parametrize("k,n,chi", [(2, 5, 0), (2, 6, 2), (3, 6, 0), (3, 7, 0)])
def test_reduced_euler(k, n, chi):
    assert euler_characteristic(build_complex(k, n, "nc"), reduced=True) == chi


def test_reduced_25_is_pentagon():
    red = reduced_complex(build_complex(2, 5, "nc"))
    assert len(red.vertices) == 5
    assert all(bin(m).count("1") == 2 for m in red.adj)
    assert euler_characteristic(build_complex(2, 5, "nc")) == 1


@pytest.mark.parametrize("k,n", [s for s in SHAPES if s[0] >= 2 and s[1] - s[0] >= 2])
def test_pseudomanifold(k, n):
    rep = check_pseudomanifold(build_complex(k, n, "nc"))
    assert rep["ok"] and rep["reduced_closed"] and rep["boundary_matches_intervals"]


def test_pseudomanifold_37_counts():
    rep = check_pseudomanifold(build_complex(3, 7, "nc"))
    assert rep["reduced_ridges"] == 1386
    assert rep["boundary_ridges"] == 3234


def test_pseudomanifold_detects_missing_facet():
    cx = build_complex(2, 6, "nc")
    assert not check_pseudomanifold(cx, enumerate_facets(cx)[1:])["ok"]


@pytest.mark.parametrize("k,n", [(2, 5), (2, 6), (3, 6), (3, 7)])
def test_facets_contain_intervals_and_are_cliques(k, n):
    intervals = set(cyclic_intervals(k, n))
    for F in enumerate_facets(build_complex(k, n, "nc")):
        assert intervals <= set(F)
        assert all(is_noncrossing(I, J) for I, J in combinations(F, 2))


@pytest.mark.parametrize("k,n", [(2, 5), (2, 6), (3, 7)])
def test_complement_and_reflect_map_facets(k, n):
    facets = set(enumerate_facets(build_complex(k, n, "nc")))
    dual = set(enumerate_facets(build_complex(n - k, n, "nc")))
    assert {tuple(sorted(complement(I, n) for I in F)) for F in facets} == dual
    assert {tuple(sorted(reflect(I, n) for I in F)) for F in facets} == facets


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 9), st.data())
def test_clique_routines_on_random_graphs(size, data):
    import networkx as nx

    edges = data.draw(st.sets(st.tuples(st.integers(0, size - 1), st.integers(0, size - 1))))
    adj = [0] * size
    G = nx.Graph()
    G.add_nodes_from(range(size))
    for i, j in edges:
        if i != j:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            G.add_edge(i, j)
    ours = sorted(sorted(b for b in range(size) if m >> b & 1) for m in maximal_cliques(tuple(adj)))
    assert ours == sorted(sorted(c) for c in nx.find_cliques(G))
    counts = clique_counts(tuple(adj))
    every = [c for r in range(size + 1) for c in combinations(range(size), r)
             if all(G.has_edge(a, b) for a, b in combinations(c, 2))]
    assert counts == [sum(1 for c in every if len(c) == r) for r in range(len(counts))]
    assert sum(counts) == len(every)
