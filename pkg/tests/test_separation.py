import pytest

from ncx.complex import build_complex, enumerate_facets, euler_characteristic
from ncx.core import all_vectors, cyclic_shift, is_noncrossing, is_weakly_separated
from ncx.separation import (
    cyclic_intersection_counterexample,
    sep_dihedral_invariance,
    sep_equals_cyclic_intersection,
    sep_topology_probe,
)

from oracles import chords_separated, facets_networkx

UP_TO_8 = [(k, n) for n in range(2, 9) for k in range(1, min(3, n - 1) + 1)]


@pytest.mark.parametrize("k,n", UP_TO_8)
def test_sep_is_intersection_of_shifted_nc(k, n):
    assert sep_equals_cyclic_intersection(k, n)


def test_intersection_needs_every_shift():
    # without the shifts the noncrossing graph is strictly larger
    I, J = (1, 4, 5), (2, 3, 6)
    assert is_noncrossing(I, J) and not is_weakly_separated(I, J)
    assert not all(is_noncrossing(cyclic_shift(I, s, 6), cyclic_shift(J, s, 6)) for s in range(6))
    assert cyclic_intersection_counterexample(3, 6) is None


@pytest.mark.parametrize("k,n", [(3, 6), (3, 7), (4, 8)])
def test_dihedral_invariance(k, n):
    assert sep_dihedral_invariance(k, n)
    assert not sep_dihedral_invariance(k, n, kind="nc")


def test_k2_nc_is_already_dihedral():
    assert sep_dihedral_invariance(2, 6, kind="nc")


@pytest.mark.parametrize("k,n,facets,chi", [(2, 5, 5, 0), (2, 6, 14, 2), (3, 6, 34, 2), (3, 7, 259, 0)])
def test_topology_probe(k, n, facets, chi):
    probe = sep_topology_probe(k, n)
    assert probe["pure"]
    assert probe["facet_size"] == k * (n - k) + 1
    assert probe["euler_reduced"] == probe["euler_expected_sphere"] == chi
    assert len(enumerate_facets(build_complex(k, n, "sep"))) == facets


def test_sep_facets_match_networkx():
    assert enumerate_facets(build_complex(3, 7, "sep")) == facets_networkx(3, 7, chords_separated)


def test_sep_is_subcomplex_of_nc():
    for k, n in [(3, 6), (3, 7)]:
        sep, nc = build_complex(k, n, "sep"), build_complex(k, n, "nc")
        assert all(s & ~c == 0 for s, c in zip(sep.adj, nc.adj))
        assert euler_characteristic(nc, reduced=True) in (0, 2)


def test_weak_separation_matches_chords_exhaustively():
    for I in all_vectors(3, 7):
        for J in all_vectors(3, 7):
            assert is_weakly_separated(I, J) == chords_separated(I, J)
