"""Certificates tying the noncrossing complex to the order polytope: bending
vectors of ridges, the graded weight, cube faces spanned by two vertices,
cube triangulations and row profiles of facet tableaux.

Matrices are k x (n-k) tuples of rows, row 1 on top, as for char_vector.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .complex import build_complex, enumerate_facets, maximal_cliques
from .core import (
    Vector,
    all_vectors,
    char_vector,
    cyclic_intervals,
    is_noncrossing,
    is_nonnesting,
    vector_from_filter,
)
from .tableaux import doubly_marked_column, phi_nc, pushed_vectors, summing_tableau

Matrix = tuple[tuple[int, ...], ...]


def pairing(M, N) -> int:
    return sum(x * y for r, s in zip(M, N) for x, y in zip(r, s))


def objective_point(k: int, n: int) -> Matrix:
    return tuple(tuple(a * b for b in range(1, n - k + 1)) for a in range(1, k + 1))


def bending_vector(I: Vector, a1: int, a2: int, n: int) -> Matrix:
    """Bending vector of the segment of I's lattice path between rows a1 and a2.

    Walk the path: the first and last steps each contribute a +1/-1 pair, and
    every horizontal run between rows a and a+1 contributes a pair at its two
    corners.  Entries landing on the west boundary (column 0) are dropped.
    """
    k = len(I)
    w = n - k
    if not 1 <= a1 < a2 <= k:
        raise ValueError(f"need 1 <= a1 < a2 <= {k}, got {a1}, {a2}")
    if I[a2 - 1] >= a2 + w:
        raise ValueError(f"segment ends on the east boundary (i_{a2} = {I[a2 - 1]})")
    c = [None] + [I[a] - (a + 1) for a in range(k)]  # 1-based: c[a] = i_a - a
    M = [[0] * (w + 2) for _ in range(k + 1)]

    M[a1][c[a1]] += 1
    M[a1][c[a1] + 1] -= 1
    for a in range(a1, a2):
        if c[a + 1] > c[a]:
            M[a][c[a] + 1] += 1
            M[a + 1][c[a]] -= 1
            M[a][c[a + 1] + 1] -= 1
            M[a + 1][c[a + 1]] += 1
    M[a2][c[a2]] -= 1
    M[a2][c[a2] + 1] += 1
    return tuple(tuple(M[a][1 : w + 1]) for a in range(1, k + 1))


def orientation_sign(ridge, out: Vector, into: Vector, n: int) -> bool:
    """Whether the bending vector of ``ridge`` is positive on ``out`` and
    negative on ``into``."""
    L = phi_nc(summing_tableau(ridge, n))
    I, a1, a2 = doubly_marked_column(L)
    b = bending_vector(I, a1, a2, n)
    return pairing(b, char_vector(out, n)) > 0 > pairing(b, char_vector(into, n))


def ridge_certificate(ridge, n: int) -> dict:
    """Bending vector of an interior ridge and the signs it assigns."""
    ridge = sorted(set(ridge))
    k = len(ridge[0])
    if not set(cyclic_intervals(k, n)) <= set(ridge):
        raise ValueError("ridge misses a cyclic interval, so it is not interior")
    L = phi_nc(summing_tableau(ridge, n))
    I, a1, a2 = doubly_marked_column(L)
    b = bending_vector(I, a1, a2, n)
    lower, upper = pushed_vectors(L)
    values = {J: pairing(b, char_vector(J, n)) for J in ridge}
    pos = pairing(b, char_vector(lower, n))
    neg = pairing(b, char_vector(upper, n))
    obj = pairing(b, objective_point(k, n))
    orthogonal = all(v == 0 for v in values.values())
    return {
        "column": list(I),
        "rows": [a1, a2],
        "bending": [list(r) for r in b],
        "orthogonal": orthogonal,
        "positive": list(lower),
        "positive_value": pos,
        "negative": list(upper),
        "negative_value": neg,
        "objective": obj,
        "ok": orthogonal and pos > 0 > neg and obj > 0,
    }


# ---------------------------------------------------------------- weights

def graded_weight(I: Vector) -> tuple[int, ...]:
    """Component d (d = 1..k-1) sums i_a * i_b over b - a = d.

    Weights are compared as tuples, which makes each distance dominate all
    larger ones.
    """
    k = len(I)
    return tuple(sum(I[a] * I[a + d] for a in range(k - d)) for d in range(1, k))


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _swaps(I: Vector, J: Vector):
    """Other unordered pairs {X, Y} with {x_a, y_a} = {i_a, j_a} for all a."""
    diff = [a for a in range(len(I)) if I[a] != J[a]]
    seen = {frozenset((I, J))}
    for bits in product((0, 1), repeat=len(diff)):
        X, Y = list(I), list(J)
        for a, s in zip(diff, bits):
            if s:
                X[a], Y[a] = Y[a], X[a]
        X, Y = tuple(X), tuple(Y)
        if any(p >= q for p, q in zip(X, X[1:])) or any(p >= q for p, q in zip(Y, Y[1:])):
            continue
        key = frozenset((X, Y))
        if key not in seen:
            seen.add(key)
            yield X, Y


def weight_regularity_counterexample(k: int, n: int, mirror: bool = False):
    """Lex-least failure of the regularity condition, or None.

    Default: every noncrossing pair has strictly smaller total weight than any
    other pair with the same summed filters, and those other pairs cross.
    ``mirror``: nonnesting pairs are strictly larger and the others nest.
    """
    V = all_vectors(k, n)
    good = is_nonnesting if mirror else is_noncrossing
    for i, I in enumerate(V):
        for J in V[i + 1 :]:
            if not good(I, J):
                continue
            base = _add(graded_weight(I), graded_weight(J))
            for X, Y in _swaps(I, J):
                other = _add(graded_weight(X), graded_weight(Y))
                ok = (other < base) if mirror else (base < other)
                if not ok or good(X, Y):
                    return (I, J), (X, Y)
    return None


def weight_regularity_check(k: int, n: int, mirror: bool = False) -> bool:
    return weight_regularity_counterexample(k, n, mirror) is None


# ---------------------------------------------------------------- cubes

def _filter_cells(I: Vector, n: int) -> frozenset[tuple[int, int]]:
    return frozenset(
        (a + 1, b + 1) for a, row in enumerate(char_vector(I, n)) for b, x in enumerate(row) if x
    )


@dataclass(frozen=True)
class CubeFace:
    I: Vector
    J: Vector
    n: int
    base: frozenset
    components: tuple[frozenset, ...]

    @property
    def dim(self) -> int:
        return len(self.components)

    def alpha(self, X: Vector) -> tuple[int, ...]:
        cells = _filter_cells(X, self.n)
        if not self.base <= cells:
            raise ValueError(f"{X} is not a vertex of this cube face")
        rest = set(cells - self.base)
        alpha = []
        for comp in self.components:
            if comp <= rest:
                alpha.append(1)
                rest -= comp
            elif comp & rest:
                raise ValueError(f"{X} splits a component of the cube face")
            else:
                alpha.append(0)
        if rest:
            raise ValueError(f"{X} is not a vertex of this cube face")
        return tuple(alpha)

    def vertex(self, alpha) -> Vector:
        k = len(self.I)
        cells = set(self.base)
        for bit, comp in zip(alpha, self.components):
            if bit:
                cells |= comp
        rows = [[int((a, b) in cells) for b in range(1, self.n - k + 1)] for a in range(1, k + 1)]
        return vector_from_filter(rows)

    def vertices(self) -> list[Vector]:
        return [self.vertex(al) for al in product((0, 1), repeat=self.dim)]


def cube_face(I: Vector, J: Vector, n: int) -> CubeFace:
    """Smallest face of the unit cube containing chi_I and chi_J, with its
    free directions split into 4-connected regions of the symmetric
    difference, ordered left to right."""
    A, B = _filter_cells(I, n), _filter_cells(J, n)
    diff = set(A ^ B)
    comps = []
    while diff:
        start = min(diff, key=lambda c: (c[1], c[0]))
        comp = {start}
        queue = deque([start])
        diff.discard(start)
        while queue:
            a, b = queue.popleft()
            for cell in ((a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)):
                if cell in diff:
                    diff.discard(cell)
                    comp.add(cell)
                    queue.append(cell)
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: min((b, a) for a, b in c))
    return CubeFace(I, J, n, A & B, tuple(comps))


def classify_cube_diagonal(face: CubeFace, X: Vector, Y: Vector) -> str:
    """nonnesting, noncrossing, both or other, read off the alpha vectors of a
    diagonal X, Y of the face."""
    ax, ay = face.alpha(X), face.alpha(Y)
    if any(p + q != 1 for p, q in zip(ax, ay)):
        raise ValueError("X and Y are not opposite vertices of the face")
    nested = len(set(ax)) <= 1
    alternating = all(p != q for p, q in zip(ax, ax[1:]))
    if nested and alternating:
        return "both"
    if nested:
        return "nonnesting"
    if alternating:
        return "noncrossing"
    return "other"


def _cube_compatible(u, v, kind: str) -> bool:
    d = [(p, q) for p, q in zip(u, v) if p != q]
    if kind == "standard":
        return len({p for p, _ in d}) <= 1
    return all(x[0] != y[0] for x, y in zip(d, d[1:]))


def cube_triangulation(d: int, kind: str) -> list[tuple[tuple[int, ...], ...]]:
    """Simplices of the standard or noncrossing triangulation of {0,1}^d."""
    if kind not in ("standard", "noncrossing"):
        raise ValueError(f"kind must be standard or noncrossing, not {kind!r}")
    verts = list(product((0, 1), repeat=d))
    adj = tuple(
        sum(1 << j for j, v in enumerate(verts) if j != i and _cube_compatible(u, v, kind))
        for i, u in enumerate(verts)
    )
    return sorted(tuple(verts[i] for i in range(len(verts)) if m >> i & 1)
                  for m in maximal_cliques(adj))


def cube_triangulation_diameter(d: int, kind: str) -> int:
    """Diameter of the dual graph (simplices sharing a ridge) of the triangulation."""
    simplices = [frozenset(s) for s in cube_triangulation(d, kind)]
    by_ridge: dict = {}
    for i, s in enumerate(simplices):
        for v in s:
            by_ridge.setdefault(s - {v}, []).append(i)
    adj = [[] for _ in simplices]
    for group in by_ridge.values():
        for i in group:
            adj[i] += [j for j in group if j != i]
    best = 0
    for start in range(len(simplices)):
        dist = {start: 0}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        best = max(best, max(dist.values()))
    return best


# ---------------------------------------------------------------- rows

def row_profile(k: int, n: int, a: int, facets: dict | None = None):
    """Sorted multisets of the a-th rows of all facet tableaux, nonnesting
    then noncrossing.  Row a is counted from the bottom of the tableau."""
    if not 1 <= a <= k:
        raise ValueError(f"row must be in 1..{k}")
    facets = facets or {}
    out = []
    for kind in ("nn", "nc"):
        Fs = facets.get(kind) or enumerate_facets(build_complex(k, n, kind))
        out.append(sorted(summing_tableau(F, n).rows[k - a] for F in Fs))
    return tuple(out)
