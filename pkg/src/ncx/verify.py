"""Invariant suites run by ``ncx verify``.

Each check yields a record {"suite", "name", "status", "detail"} with status
"pass", "fail" or "info".  "info" records report conjectural quantities and
never fail a run.
"""
from __future__ import annotations

import random
from collections import Counter
from itertools import combinations
from math import comb

from .complex import (
    build_complex,
    check_pseudomanifold,
    check_pure,
    edge_count,
    enumerate_facets,
    h_vector,
    multidim_catalan,
    narayana_by_peaks,
    reduced_complex,
)
from .core import (
    all_vectors,
    complement,
    cyclic_intervals,
    is_noncrossing,
    is_nonnesting,
    is_weakly_separated,
    max_vector,
    reflect,
)
from .geometry import (
    bending_vector,
    classify_cube_diagonal,
    cube_face,
    objective_point,
    pairing,
    ridge_certificate,
    row_profile,
    weight_regularity_counterexample,
)
from .separation import (
    cyclic_intersection_counterexample,
    sep_dihedral_invariance,
    sep_topology_probe,
)
from .tableaux import (
    marked_positions,
    phi_nc,
    phi_nn,
    push_first,
    push_last,
    random_tableau,
    summing_tableau,
)
from . import tamari

SUITES = ("core", "tableaux", "complex", "tamari", "geometry", "separation")


def _rec(suite, name, ok, detail=None):
    status = ok if isinstance(ok, str) else ("pass" if ok else "fail")
    return {"suite": suite, "name": name, "status": status, "detail": detail}


def _ok(witness):
    return witness is None, witness


def _first(pairs, bad):
    for p in pairs:
        if bad(*p):
            return [list(x) for x in p]
    return None


class _Cache:
    """Shares facet lists and digraphs between suites of one run."""

    def __init__(self, k, n):
        self.k, self.n = k, n
        self._cx, self._facets, self._tamari = {}, {}, {}

    def cx(self, kind):
        if kind not in self._cx:
            self._cx[kind] = build_complex(self.k, self.n, kind)
        return self._cx[kind]

    def facets(self, kind):
        if kind not in self._facets:
            self._facets[kind] = enumerate_facets(self.cx(kind))
        return self._facets[kind]

    def tamari(self, k=None):
        k = self.k if k is None else k
        if k not in self._tamari:
            self._tamari[k] = tamari.build_tamari(k, self.n)
        return self._tamari[k]

    def interior_ridges(self):
        boundary = set(cyclic_intervals(self.k, self.n))
        return sorted({
            tuple(u for u in F if u != v)
            for F in self.facets("nc") for v in F if v not in boundary
        })


def _chord_separated(I, J):
    A, B = set(I) - set(J), set(J) - set(I)
    for x, y in combinations(sorted(A), 2):
        for u, v in combinations(sorted(B), 2):
            if x < u < y < v or u < x < v < y:
                return False
    return True


def core_suite(c: _Cache):
    k, n = c.k, c.n
    V = all_vectors(k, n)
    pairs = list(combinations(V, 2))
    comparable = lambda I, J: all(x <= y for x, y in zip(I, J)) or all(x >= y for x, y in zip(I, J))
    yield _rec("core", "nonnesting_iff_comparable",
               *_ok(_first(pairs, lambda I, J: is_nonnesting(I, J) != comparable(I, J))))
    yield _rec("core", "noncrossing_complement_invariant", *_ok(_first(
        pairs, lambda I, J: is_noncrossing(I, J) != is_noncrossing(complement(I, n), complement(J, n)))))
    yield _rec("core", "noncrossing_reflect_invariant", *_ok(_first(
        pairs, lambda I, J: is_noncrossing(I, J) != is_noncrossing(reflect(I, n), reflect(J, n)))))
    ints = cyclic_intervals(k, n)
    yield _rec("core", "intervals_noncrossing_with_all", *_ok(_first(
        [(I, J) for I in ints for J in V], lambda I, J: not is_noncrossing(I, J))))
    yield _rec("core", "separated_implies_noncrossing", *_ok(_first(
        pairs, lambda I, J: is_weakly_separated(I, J) and not is_noncrossing(I, J))))
    yield _rec("core", "separated_matches_chord_test", *_ok(_first(
        pairs, lambda I, J: is_weakly_separated(I, J) != _chord_separated(I, J))))


def tableaux_suite(c: _Cache):
    k, n = c.k, c.n
    top = max_vector(k, n)
    bad = None
    for F in c.facets("nc"):
        T = summing_tableau(F, n)
        if list(phi_nc(T).columns) != [v for v in F if v != top]:
            bad = [list(v) for v in F]
            break
    yield _rec("tableaux", "facet_tableaux_decompose_back", bad is None, bad)

    rng = random.Random(0)
    tabs = [random_tableau(k, n, rng.randint(0, 4), rng) for _ in range(60)]
    tabs += [summing_tableau(F, n) for F in c.facets("nn")[:30]]
    rt = marks = sort = None
    for T in tabs:
        for mode, phi, good in (("nn", phi_nn, is_nonnesting), ("nc", phi_nc, is_noncrossing)):
            L = phi(T)
            if summing_tableau(L.columns, n, k) != T or not all(
                good(I, J) for I, J in combinations(L.columns, 2)
            ):
                rt = rt or [list(r) for r in T.rows]
            if marked_positions(L, mode, include_max=False) != L.marks:
                marks = marks or [mode, [list(r) for r in T.rows]]
            if list(L.columns) != sorted(L.columns):
                sort = sort or [mode, [list(r) for r in T.rows]]
    yield _rec("tableaux", "round_trip_and_compatibility", rt is None, rt)
    yield _rec("tableaux", "rule_marks_equal_insertion_marks", marks is None, marks)
    yield _rec("tableaux", "columns_lex_sorted", sort is None, sort)

    facets = set(c.facets("nc"))
    bad = None
    for R in c.interior_ridges():
        L = phi_nc(summing_tableau(R, n))
        got = []
        for push in (push_last, push_first):
            G = tuple(sorted(set(push(L).columns) | {top}))
            got.append(G)
        if got[0] == got[1] or not set(got) <= facets or not all(set(R) <= set(G) for G in got):
            bad = [list(v) for v in R]
            break
    yield _rec("tableaux", "pushes_reach_both_cofacets", bad is None, bad)


def complex_suite(c: _Cache):
    k, n = c.k, c.n
    cat = multidim_catalan(k, n)
    counts = {kind: len(c.facets(kind)) for kind in ("nc", "nn")}
    flip = enumerate_facets(c.cx("nc"), "flip")
    yield _rec("complex", "facet_counts_catalan",
               counts["nc"] == counts["nn"] == cat, {"catalan": cat, **counts})
    yield _rec("complex", "flip_equals_clique", flip == c.facets("nc"))
    for kind in ("nc", "nn", "sep"):
        yield _rec("complex", f"pure_{kind}", check_pure(c.cx(kind), c.facets(kind)))
    edges = edge_count(c.cx("nc"))
    total = comb(comb(n, k), 2)
    expect = 155 if (k, n) == (3, 6) else edges
    yield _rec("complex", "nc_edge_count", edges == expect,
               {"edges": edges, "non_edges": total - edges})
    h_nc, h_nn = h_vector(c.cx("nc")), h_vector(c.cx("nn"))
    nar = narayana_by_peaks(k, n)
    last = k * (n - k) - n + 1
    yield _rec("complex", "h_nc_equals_h_nn", h_nc == h_nn, {"nc": h_nc, "nn": h_nn})
    yield _rec("complex", "h_equals_narayana",
               h_nc[: len(nar)] == nar and not any(h_nc[len(nar):]), nar)
    yield _rec("complex", "h_last_one_then_zeros",
               last >= 0 and h_nc[last] == 1 and not any(h_nc[last + 1 :]))
    red = h_vector(reduced_complex(c.cx("nc")))
    yield _rec("complex", "reduced_h_symmetric", red == red[::-1], red)
    ints = set(cyclic_intervals(k, n))
    yield _rec("complex", "intervals_in_every_facet",
               all(ints <= set(F) for F in c.facets("nc")))
    yield _rec("complex", "pseudomanifold", check_pseudomanifold(c.cx("nc"), c.facets("nc"))["ok"])
    fs = set(c.facets("nc"))
    yield _rec("complex", "reflect_is_facet_automorphism",
               {tuple(sorted(reflect(v, n) for v in F)) for F in fs} == fs)
    other = enumerate_facets(build_complex(n - k, n, "nc"))
    yield _rec("complex", "complement_maps_facets",
               sorted(tuple(sorted(complement(v, n) for v in F)) for F in fs) == other)


def tamari_suite(c: _Cache):
    k, n = c.k, c.n
    D = c.tamari()
    yield _rec("tamari", "acyclic", *_ok(tamari.find_cycle(D)))
    yield _rec("tamari", "arcs_equal_interior_ridges", len(D.arcs) == len(c.interior_ridges()))
    orders = {
        "min": tamari.topological_order(D, "min"),
        "max": tamari.topological_order(D, "max"),
        **{f"random{s}": tamari.topological_order(D, "random", s) for s in range(3)},
    }
    bad = [name for name, o in orders.items()
           if not tamari.check_shelling([D.nodes[i] for i in o])]
    yield _rec("tamari", "topological_orders_shell", not bad, bad or None)
    hist = tamari.outdegree_histogram(D)
    h = h_vector(c.cx("nc"))
    yield _rec("tamari", "outdegree_histogram_equals_h",
               h[: len(hist)] == hist and not any(h[len(hist):]), hist)
    yield _rec("tamari", "lattice", tamari.is_lattice(D))
    yield _rec("tamari", "reflect_reverses_order", tamari.check_selfdual(D))
    yield _rec("tamari", "complement_anti_isomorphism",
               tamari.check_complement_antiiso(k, n, D, c.tamari(n - k)))
    yield _rec("tamari", "geometric_orientation", tamari.check_geom_orientation(D))
    prof = tamari.eccentricity_profile(D)
    yield _rec("tamari", "eccentricity", "info", prof)


def geometry_suite(c: _Cache):
    k, n = c.k, c.n
    for mirror, name in ((False, "weight_regularity_noncrossing"), (True, "weight_regularity_nonnesting")):
        w = weight_regularity_counterexample(k, n, mirror)
        yield _rec("geometry", name, w is None, w and [[list(v) for v in p] for p in w])
    bad = None
    for R in c.interior_ridges():
        if not ridge_certificate(R, n)["ok"]:
            bad = [list(v) for v in R]
            break
    yield _rec("geometry", "ridge_certificates", bad is None, bad)
    o = objective_point(k, n)
    bad = None
    for I in all_vectors(k, n):
        for a1, a2 in combinations(range(1, k + 1), 2):
            if I[a2 - 1] < a2 + n - k and pairing(bending_vector(I, a1, a2, n), o) <= 0:
                bad = bad or [list(I), a1, a2]
    yield _rec("geometry", "bending_positive_on_objective", bad is None, bad)
    known = {kind: c.facets(kind) for kind in ("nn", "nc")}
    prof_bad = []
    for a in range(1, k + 1):
        nn_rows, nc_rows = row_profile(k, n, a, known)
        if nn_rows != nc_rows:
            prof_bad.append(a)
    yield _rec("geometry", "row_profiles_coincide", not prof_bad, prof_bad or None)
    bad = None
    for I, J in combinations(all_vectors(k, n), 2):
        face = cube_face(I, J, n)
        cls = classify_cube_diagonal(face, I, J)
        nn, nc = is_nonnesting(I, J), is_noncrossing(I, J)
        want = "both" if nn and nc else "nonnesting" if nn else "noncrossing" if nc else "other"
        if cls != want or len(set(face.vertices())) != 2 ** face.dim:
            bad = [list(I), list(J)]
            break
    yield _rec("geometry", "cube_diagonals_match_predicates", bad is None, bad)


def separation_suite(c: _Cache):
    k, n = c.k, c.n
    w = cyclic_intersection_counterexample(k, n)
    yield _rec("separation", "sep_equals_cyclic_intersection", w is None, w and [list(v) for v in w])
    yield _rec("separation", "sep_dihedral_invariant", sep_dihedral_invariance(k, n))
    sep, nc = c.cx("sep"), c.cx("nc")
    yield _rec("separation", "sep_edges_within_nc", set(sep.edges()) <= set(nc.edges()))
    nc_faces = c.facets("nc")
    inside = all(any(set(F) <= set(G) for G in nc_faces) for F in c.facets("sep"))
    yield _rec("separation", "sep_facets_are_nc_faces", inside)
    probe = sep_topology_probe(k, n)
    yield _rec("separation", "sep_pure", probe["pure"] and probe["facet_size"] == k * (n - k) + 1)
    agree = probe["euler_reduced"] == probe["euler_expected_sphere"]
    yield _rec("separation", "sphere_euler_probe", "info", {**probe, "agrees": agree})


RUNNERS = {
    "core": core_suite,
    "tableaux": tableaux_suite,
    "complex": complex_suite,
    "tamari": tamari_suite,
    "geometry": geometry_suite,
    "separation": separation_suite,
}


def run(k: int, n: int, suite: str = "all") -> dict:
    names = SUITES if suite == "all" else (suite,)
    if any(s not in RUNNERS for s in names):
        raise ValueError(f"unknown suite {suite!r}")
    cache = _Cache(k, n)
    records = [r for s in names for r in RUNNERS[s](cache)]
    tally = Counter(r["status"] for r in records)
    return {
        "k": k,
        "n": n,
        "suite": suite,
        "ok": tally["fail"] == 0,
        "counts": {s: tally[s] for s in ("pass", "fail", "info")},
        "results": records,
    }
