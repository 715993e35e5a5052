"""Flag complexes on V_{k,n}: compatibility graphs, facets, face numbers.

A complex is stored as its compatibility graph with adjacency bitmasks; faces
are the cliques.  Facets are lex-sorted tuples of vectors and facet lists are
lex-sorted, so every result is canonical.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import comb, factorial, prod

from . import _pool
from .core import (
    Vector,
    all_vectors,
    check_params,
    cyclic_intervals,
    is_noncrossing,
    is_nonnesting,
    is_weakly_separated,
)
from .tableaux import ridge_cofacets

PREDICATES = {"nc": is_noncrossing, "nn": is_nonnesting, "sep": is_weakly_separated}

Facet = tuple[Vector, ...]


@dataclass(frozen=True)
class FlagComplex:
    k: int
    n: int
    kind: str
    vertices: tuple[Vector, ...]
    adj: tuple[int, ...]
    reduced: bool = False

    @cached_property
    def index(self) -> dict[Vector, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def facet_size(self) -> int:
        """Expected facet size: k(n-k)+1, minus n once the cone is removed."""
        size = self.k * (self.n - self.k) + 1
        return size - self.n if self.reduced else size

    def adjacent(self, I: Vector, J: Vector) -> bool:
        return bool(self.adj[self.index[I]] >> self.index[J] & 1)

    def edges(self) -> list[tuple[Vector, Vector]]:
        V = self.vertices
        return [
            (V[i], V[j])
            for i in range(len(V))
            for j in range(i + 1, len(V))
            if self.adj[i] >> j & 1
        ]

    def mask(self, vectors) -> int:
        return sum(1 << self.index[v] for v in vectors)

    def unmask(self, m: int) -> Facet:
        return tuple(v for i, v in enumerate(self.vertices) if m >> i & 1)


def _graph(vertices, pred) -> tuple[int, ...]:
    adj = [0] * len(vertices)
    for i, I in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if pred(I, vertices[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return tuple(adj)


def build_complex(k: int, n: int, kind: str) -> FlagComplex:
    check_params(k, n)
    if kind not in PREDICATES:
        raise ValueError(f"kind must be one of {sorted(PREDICATES)}, not {kind!r}")
    V = tuple(all_vectors(k, n))
    return FlagComplex(k, n, kind, V, _graph(V, PREDICATES[kind]))


def reduced_complex(cx: FlagComplex) -> FlagComplex:
    """Delete the n cyclic intervals (cone points of the nc and sep complexes)."""
    if cx.kind == "nn":
        raise ValueError("the cyclic intervals are not cone points of the nonnesting complex")
    drop = set(cyclic_intervals(cx.k, cx.n))
    keep = [i for i, v in enumerate(cx.vertices) if v not in drop]
    adj = tuple(
        sum(1 << new for new, old in enumerate(keep) if cx.adj[i] >> old & 1) for i in keep
    )
    return FlagComplex(cx.k, cx.n, cx.kind, tuple(cx.vertices[i] for i in keep), adj, True)


def edge_count(cx: FlagComplex) -> int:
    return sum(bin(m).count("1") for m in cx.adj) // 2


# ---------------------------------------------------------------- cliques

def _degeneracy_order(adj: tuple[int, ...]) -> list[int]:
    deg = {v: bin(m).count("1") for v, m in enumerate(adj)}
    left = set(deg)
    order = []
    while left:
        v = min(left, key=lambda u: (deg[u], u))
        order.append(v)
        left.remove(v)
        for u in _bits(adj[v]):
            if u in left:
                deg[u] -= 1
    return order


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def maximal_cliques(adj: tuple[int, ...]) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting, outer loop in degeneracy order."""
    out: list[int] = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        pivot = max(_bits(P | X), key=lambda u: bin(P & adj[u]).count("1"))
        for v in _bits(P & ~adj[pivot]):
            bit = 1 << v
            expand(R | bit, P & adj[v], X & adj[v])
            P &= ~bit
            X |= bit

    P, X = (1 << len(adj)) - 1, 0
    for v in _degeneracy_order(adj):
        bit = 1 << v
        expand(bit, P & adj[v], X & adj[v])
        P &= ~bit
        X |= bit
    return out


def clique_counts(adj: tuple[int, ...]) -> list[int]:
    """counts[i] = number of cliques with i vertices (counts[0] = 1).

    Vertices adjacent to everything are factored out as (1+t)^u.
    """
    full = (1 << len(adj)) - 1
    universal = [v for v, m in enumerate(adj) if m | (1 << v) == full]
    keep = full & ~sum(1 << v for v in universal)
    counts = Counter({0: 1})

    def walk(cand: int, size: int) -> None:
        while cand:
            low = cand & -cand
            cand ^= low
            counts[size + 1] += 1
            walk(cand & adj[low.bit_length() - 1], size + 1)

    walk(keep, 0)
    base = [counts[i] for i in range(max(counts) + 1)]
    u = len(universal)
    return [
        sum(base[j] * comb(u, i - j) for j in range(len(base)) if 0 <= i - j <= u)
        for i in range(len(base) + u)
    ]


# ---------------------------------------------------------------- facets

def _seed_facet(cx: FlagComplex) -> Facet:
    face = list(cyclic_intervals(cx.k, cx.n))
    for v in cx.vertices:
        if v not in face and all(cx.adjacent(v, u) for u in face):
            face.append(v)
    if len(face) != cx.facet_size:
        raise RuntimeError(f"greedy seed has {len(face)} vertices, expected {cx.facet_size}")
    return tuple(sorted(face))


def flip_partner(F: Facet, v: Vector, n: int) -> tuple[Vector, bool]:
    """(new vector, whether F is the lower-mark push) for the ridge F - v."""
    lower, upper = ridge_cofacets([u for u in F if u != v], n)
    if v == lower:
        return upper, True
    if v == upper:
        return lower, False
    raise AssertionError(f"{v} is not a cofacet vector of its own ridge")


def _neighbors(job: tuple[Facet, int, int]) -> list[Facet]:
    F, k, n = job
    boundary = set(cyclic_intervals(k, n))
    out = []
    for v in F:
        if v in boundary:
            continue
        new, _ = flip_partner(F, v, n)
        out.append(tuple(sorted([u for u in F if u != v] + [new])))
    return out


def _flip_facets(cx: FlagComplex, workers: int | None) -> list[Facet]:
    if cx.kind != "nc" or cx.reduced:
        raise ValueError("flip enumeration only applies to the full noncrossing complex")
    seed = _seed_facet(cx)
    seen = {seed}
    layer = [seed]
    while layer:
        found = _pool.map_ordered(_neighbors, [(F, cx.k, cx.n) for F in layer], workers)
        layer = []
        for group in found:
            for G in group:
                if G not in seen:
                    seen.add(G)
                    layer.append(G)
    return sorted(seen)


def enumerate_facets(cx: FlagComplex, method: str = "clique",
                     workers: int | None = None) -> list[Facet]:
    if method == "flip":
        return _flip_facets(cx, workers)
    if method != "clique":
        raise ValueError(f"method must be flip or clique, not {method!r}")
    return sorted(cx.unmask(m) for m in maximal_cliques(cx.adj))


# ---------------------------------------------------------------- counting

def f_vector(cx: FlagComplex) -> list[int]:
    """[f_{-1}, f_0, ..., f_{d-1}] with f_i the number of i-dimensional faces."""
    return clique_counts(cx.adj)


def h_from_f(f: list[int], d: int) -> list[int]:
    """h_0..h_d of a (d-1)-dimensional complex from [f_{-1}, ..., f_{d-1}]."""
    f = f + [0] * (d + 1 - len(f))
    return [
        sum((-1) ** (i - j) * comb(d - j, i - j) * f[j] for j in range(i + 1))
        for i in range(d + 1)
    ]


def h_vector(cx: FlagComplex) -> list[int]:
    """h-vector for facets of size d = cx.facet_size.

    The full complexes are cones, so h_d vanishes and is dropped, leaving
    k(n-k)+1 entries.  Reduced complexes keep all of h_0..h_d.
    """
    d = cx.facet_size
    h = h_from_f(f_vector(cx), d)
    if cx.reduced:
        return h
    if h[d] != 0:
        raise AssertionError(f"h_{d} = {h[d]} is nonzero")
    return h[:d]


def euler_characteristic(cx: FlagComplex, reduced: bool = False) -> int:
    """Sum of (-1)^i f_i over nonempty faces; ``reduced`` first removes the
    cyclic intervals."""
    if reduced and not cx.reduced:
        cx = reduced_complex(cx)
    f = f_vector(cx)
    return sum((-1) ** i * x for i, x in enumerate(f[1:]))


def multidim_catalan(k: int, n: int) -> int:
    check_params(k, n)
    num = prod(factorial(i) for i in range(k)) * factorial(k * (n - k))
    den = prod(factorial(n - i) for i in range(1, k + 1))
    return num // den


def narayana_by_peaks(k: int, n: int) -> list[int]:
    """Entry i counts standard tableaux of the k x (n-k) rectangle with i peaks,
    a peak being an a whose successor a+1 sits in a lower row."""
    check_params(k, n)
    m = n - k
    # rows indexed from the bottom, where 1 is placed: a row of larger index
    # is higher up, so a peak is a step to a smaller index
    states: dict[tuple[tuple[int, ...], int], Counter] = {
        ((1,) + (0,) * (k - 1), 0): Counter({0: 1})
    }
    for _ in range(k * m - 1):
        nxt: dict[tuple[tuple[int, ...], int], Counter] = {}
        for (shape, last), poly in states.items():
            for r in range(k):
                if shape[r] < m and (r == 0 or shape[r - 1] > shape[r]):
                    new = shape[:r] + (shape[r] + 1,) + shape[r + 1 :]
                    bump = int(r < last)
                    acc = nxt.setdefault((new, r), Counter())
                    for p, c in poly.items():
                        acc[p + bump] += c
        states = nxt
    total = Counter()
    for poly in states.values():
        total.update(poly)
    return [total[i] for i in range(max(total) + 1)]


def check_pure(cx: FlagComplex, facets: list[Facet] | None = None) -> bool:
    facets = enumerate_facets(cx) if facets is None else facets
    return all(len(F) == cx.facet_size for F in facets)


def ridge_degrees(facets: list[Facet]) -> Counter:
    """How many facets contain each codimension-one face."""
    deg: Counter = Counter()
    for F in facets:
        for i in range(len(F)):
            deg[F[:i] + F[i + 1 :]] += 1
    return deg


def check_pseudomanifold(cx: FlagComplex, facets: list[Facet] | None = None) -> dict:
    """Reduced complex: every ridge in exactly two facets.  Full complex:
    a ridge lies in one facet exactly when it misses a cyclic interval."""
    if cx.kind != "nc" or cx.reduced:
        raise ValueError("pseudomanifold check is for the full noncrossing complex")
    facets = enumerate_facets(cx) if facets is None else facets
    intervals = set(cyclic_intervals(cx.k, cx.n))
    reduced = [tuple(v for v in F if v not in intervals) for F in facets]
    red_deg = ridge_degrees(reduced)
    full_deg = ridge_degrees(facets)
    bad_boundary = [
        R for R, c in full_deg.items() if (c == 1) != (not intervals <= set(R))
    ]
    closed = all(c == 2 for c in red_deg.values())
    return {
        "reduced_ridges": len(red_deg),
        "reduced_closed": closed,
        "boundary_ridges": sum(1 for c in full_deg.values() if c == 1),
        "boundary_matches_intervals": not bad_boundary,
        "max_ridge_degree": max(full_deg.values(), default=0),
        "ok": closed and not bad_boundary and max(full_deg.values(), default=0) <= 2,
    }
