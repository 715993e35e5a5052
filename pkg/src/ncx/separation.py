"""The weak-separation complex: comparison with the cyclically shifted
noncrossing graphs, dihedral symmetry and an Euler-characteristic probe."""
from __future__ import annotations

from .complex import build_complex, check_pure, enumerate_facets, euler_characteristic
from .core import all_vectors, cyclic_shift, is_noncrossing, is_weakly_separated, reflect


def cyclic_intersection_counterexample(k: int, n: int):
    """Lex-least pair where weak separation differs from "noncrossing after
    every cyclic shift", or None."""
    V = all_vectors(k, n)
    for i, I in enumerate(V):
        for J in V[i + 1 :]:
            always = all(
                is_noncrossing(cyclic_shift(I, s, n), cyclic_shift(J, s, n)) for s in range(n)
            )
            if always != is_weakly_separated(I, J):
                return I, J
    return None


def sep_equals_cyclic_intersection(k: int, n: int) -> bool:
    return cyclic_intersection_counterexample(k, n) is None


def sep_dihedral_invariance(k: int, n: int, kind: str = "sep") -> bool:
    """Is the compatibility graph preserved by the shift by one and by reflection?

    ``kind="nc"`` is the negative control: the noncrossing graph is not
    shift-invariant in general.
    """
    cx = build_complex(k, n, kind)
    edges = set(cx.edges())
    maps = (lambda v: cyclic_shift(v, 1, n), lambda v: reflect(v, n))
    for f in maps:
        image = {tuple(sorted((f(I), f(J)))) for I, J in edges}
        if image != edges:
            return False
    return True


def sep_topology_probe(k: int, n: int) -> dict:
    """Purity and reduced Euler characteristic of the weak-separation complex,
    next to the Euler characteristic of the (n-4)-sphere."""
    cx = build_complex(k, n, "sep")
    facets = enumerate_facets(cx)
    return {
        "pure": check_pure(cx, facets),
        "facet_size": max(len(F) for F in facets),
        "euler_reduced": euler_characteristic(cx, reduced=True),
        "euler_expected_sphere": 1 + (-1) ** (n - 4),
    }
