"""Flips of the noncrossing complex oriented by pushing, and the resulting
Grassmann-Tamari digraph and poset.

Nodes are the lex-sorted facets; arcs are stored as index pairs.  Each arc
(i, j) comes from the interior ridge F_i minus ``out``, and F_j = ridge + ``into``.
"""
from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass

from . import _pool
from .complex import Facet, build_complex, enumerate_facets, flip_partner
from .core import complement, cyclic_intervals, reflect


def flip(F: Facet, v, n: int) -> tuple[Facet, str]:
    """The other facet through the ridge F - v, and whether F is the arc
    "source" (obtained by pushing the lower mark) or the "target"."""
    F = tuple(sorted(F))
    if v not in F:
        raise ValueError(f"{v} is not in the facet")
    if v in cyclic_intervals(len(v), n):
        raise ValueError(f"{v} is a cyclic interval; F - v is a boundary ridge")
    new, is_source = flip_partner(F, v, n)
    G = tuple(sorted([u for u in F if u != v] + [new]))
    return G, "source" if is_source else "target"


@dataclass(frozen=True)
class Arc:
    source: int
    target: int
    out: tuple[int, ...]
    into: tuple[int, ...]


@dataclass(frozen=True)
class TamariDigraph:
    k: int
    n: int
    nodes: tuple[Facet, ...]
    arcs: tuple[Arc, ...]

    def successors(self) -> list[list[int]]:
        succ = [[] for _ in self.nodes]
        for a in self.arcs:
            succ[a.source].append(a.target)
        return succ

    def ridge(self, arc: Arc) -> Facet:
        return tuple(u for u in self.nodes[arc.source] if u != arc.out)


def digraph(size: int, pairs) -> TamariDigraph:
    """Bare digraph on nodes 0..size-1, for checks that only use the arcs."""
    return TamariDigraph(0, 0, tuple(() for _ in range(size)),
                         tuple(Arc(i, j, (), ()) for i, j in pairs))


def _source_arcs(job) -> list[tuple[tuple, tuple, tuple]]:
    F, n = job
    boundary = set(cyclic_intervals(len(F[0]), n))
    out = []
    for v in F:
        if v in boundary:
            continue
        new, is_source = flip_partner(F, v, n)
        if is_source:
            G = tuple(sorted([u for u in F if u != v] + [new]))
            out.append((G, v, new))
    return out


def build_tamari(k: int, n: int, workers: int | None = None) -> TamariDigraph:
    facets = enumerate_facets(build_complex(k, n, "nc"))
    rank = {F: i for i, F in enumerate(facets)}
    found = _pool.map_ordered(_source_arcs, [(F, n) for F in facets], workers)
    arcs = [
        Arc(i, rank[G], v, new) for i, group in enumerate(found) for G, v, new in group
    ]
    arcs.sort(key=lambda a: (a.source, a.target))
    return TamariDigraph(k, n, tuple(facets), tuple(arcs))


# ---------------------------------------------------------------- order

def find_cycle(D: TamariDigraph) -> list[int] | None:
    """A directed cycle as a node list (first node repeated at the end), or None."""
    succ = D.successors()
    state = [0] * len(D.nodes)  # 0 new, 1 on stack, 2 done
    for root in range(len(D.nodes)):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        path = [root]
        state[root] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if state[w] == 1:
                    return path[path.index(w):] + [w]
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(succ[w])))
                    path.append(w)
                    break
            else:
                state[v] = 2
                stack.pop()
                path.pop()
    return None


def check_acyclic(D: TamariDigraph) -> bool:
    return find_cycle(D) is None


def topological_order(D: TamariDigraph, order: str = "min", seed: int | None = None) -> list[int]:
    """Kahn's algorithm; among available nodes take the smallest index ("min"),
    the largest ("max") or a seeded random one ("random")."""
    indeg = [0] * len(D.nodes)
    for a in D.arcs:
        indeg[a.target] += 1
    succ = D.successors()
    if order not in ("min", "max", "random"):
        raise ValueError(f"order must be min, max or random, not {order!r}")
    rng = random.Random(seed)
    sign = -1 if order == "max" else 1
    ready = [sign * i for i, d in enumerate(indeg) if d == 0]
    heapq.heapify(ready)
    out = []
    while ready:
        if order == "random":
            pick = rng.randrange(len(ready))
            ready[pick], ready[-1] = ready[-1], ready[pick]
            v = ready.pop()
        else:
            v = sign * heapq.heappop(ready)
        out.append(v)
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                if order == "random":
                    ready.append(w)
                else:
                    heapq.heappush(ready, sign * w)
    if len(out) != len(D.nodes):
        raise ValueError(f"digraph has a cycle: {find_cycle(D)}")
    return out


def check_shelling(facets: list[Facet]) -> bool:
    """Each facet after the first meets the union of the earlier ones in a
    nonempty union of its own ridges."""
    index: dict = {}
    masks = []
    for F in facets:
        m = 0
        for v in F:
            m |= 1 << index.setdefault(v, len(index))
        masks.append(m)
    for j in range(1, len(masks)):
        Fj = masks[j]
        size = bin(Fj).count("1")
        restriction = 0
        for i in range(j):
            common = masks[i] & Fj
            if bin(common).count("1") == size - 1:
                restriction |= Fj & ~common
        if not restriction:
            return False
        if any(restriction & ~masks[i] == 0 for i in range(j)):
            return False
    return True


def upsets(D: TamariDigraph) -> list[int]:
    """Bitmask of all nodes reachable from each node, itself included."""
    succ = D.successors()
    up = [0] * len(D.nodes)
    for v in reversed(topological_order(D)):
        m = 1 << v
        for w in succ[v]:
            m |= up[w]
        up[v] = m
    return up


def downsets(D: TamariDigraph) -> list[int]:
    up = upsets(D)
    down = [0] * len(up)
    for v, m in enumerate(up):
        w = m
        while w:
            low = w & -w
            down[low.bit_length() - 1] |= 1 << v
            w ^= low
    return down


def is_lattice(D: TamariDigraph) -> bool:
    """Every pair has a join and a meet: the common upper (lower) bounds
    must be exactly the up-set (down-set) of a single node."""
    for sets in (upsets(D), downsets(D)):
        principal = set(sets)
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                if sets[i] & sets[j] not in principal:
                    return False
    return True


def _arc_keys(D: TamariDigraph) -> set[tuple[Facet, Facet]]:
    return {(D.nodes[a.source], D.nodes[a.target]) for a in D.arcs}


def check_selfdual(D: TamariDigraph) -> bool:
    """Reflection a -> n+1-a maps every arc F -> G to reflect(G) -> reflect(F)."""
    def ref(F):
        return tuple(sorted(reflect(v, D.n) for v in F))

    arcs = _arc_keys(D)
    return {(ref(G), ref(F)) for F, G in arcs} == arcs


def check_complement_antiiso(k: int, n: int, D: TamariDigraph | None = None,
                             E: TamariDigraph | None = None) -> bool:
    """Complementation maps the (k,n) digraph onto the (n-k,n) one with every
    arc reversed."""
    D = build_tamari(k, n) if D is None else D
    E = build_tamari(n - k, n) if E is None else E

    def comp(F):
        return tuple(sorted(complement(v, n) for v in F))

    if sorted(comp(F) for F in D.nodes) != list(E.nodes):
        return False
    return {(comp(G), comp(F)) for F, G in _arc_keys(D)} == _arc_keys(E)


def minimum(D: TamariDigraph) -> int:
    sources = set(range(len(D.nodes))) - {a.target for a in D.arcs}
    if len(sources) != 1:
        raise ValueError(f"expected a unique minimum, found {len(sources)} sources")
    return sources.pop()


def _distances(adj: list[list[int]], start: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def eccentricity_profile(D: TamariDigraph, threshold: int = 4) -> dict:
    """Undirected flip distances: from the minimum, and every node's eccentricity."""
    adj = [[] for _ in D.nodes]
    for a in D.arcs:
        adj[a.source].append(a.target)
        adj[a.target].append(a.source)
    bottom = minimum(D)
    ecc = [max(_distances(adj, v)) for v in range(len(adj))]
    return {
        "minimum": bottom,
        "max_distance_from_minimum": ecc[bottom],
        "radius": min(ecc),
        "diameter": max(ecc),
        "within_threshold": sum(1 for e in ecc if e <= threshold),
        "threshold": threshold,
    }


def outdegree_histogram(D: TamariDigraph) -> list[int]:
    out = [0] * len(D.nodes)
    for a in D.arcs:
        out[a.source] += 1
    hist = [0] * (max(out, default=0) + 1)
    for d in out:
        hist[d] += 1
    return hist


def check_geom_orientation(D: TamariDigraph) -> bool:
    """The bending vector of each arc's ridge is positive on the source's
    extra vector and negative on the target's."""
    from .geometry import orientation_sign

    return all(orientation_sign(D.ridge(a), a.out, a.into, D.n) for a in D.arcs)


# ---------------------------------------------------------------- export

def _label(v, n: int) -> str:
    return "".join(map(str, v)) if n < 10 else "-".join(map(str, v))


def to_dot(D: TamariDigraph) -> str:
    intervals = set(cyclic_intervals(D.k, D.n))
    lines = [f"digraph tamari_{D.k}_{D.n} {{"]
    for i, F in enumerate(D.nodes):
        label = " ".join(_label(v, D.n) for v in F if v not in intervals)
        lines.append(f'  {i} [label="{label}"];')
    lines += [f"  {a.source} -> {a.target};" for a in D.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(D: TamariDigraph) -> dict:
    return {
        "k": D.k,
        "n": D.n,
        "nodes": [[list(v) for v in F] for F in D.nodes],
        "arcs": [[a.source, a.target] for a in D.arcs],
    }
