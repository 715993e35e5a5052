"""Increasing k-tuples in [n], their order filters in the k x (n-k) grid, and
the pairwise relations (nonnesting, noncrossing, weakly separated) between them.

Vectors are plain tuples of ints.  Operations that need the ambient ``n`` take
it explicitly; ``k`` is always ``len(I)``.
"""
from __future__ import annotations

import json
from itertools import combinations
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def check_params(k: int, n: int) -> None:
    if not (isinstance(k, int) and isinstance(n, int)) or not 1 <= k <= n - 1:
        raise ValueError(f"need integers 1 <= k <= n-1, got k={k}, n={n}")


def make_vector(entries: Iterable[int], n: int) -> Vector:
    """Validate and return ``entries`` as a Vector of [n]."""
    v = tuple(int(x) for x in entries)
    if not v:
        raise ValueError("empty vector")
    if any(a >= b for a, b in zip(v, v[1:])):
        raise ValueError(f"{v} is not strictly increasing")
    if v[0] < 1 or v[-1] > n:
        raise ValueError(f"{v} has entries outside 1..{n}")
    if len(v) >= n:
        raise ValueError(f"{v} needs k <= n-1")
    return v


def all_vectors(k: int, n: int) -> list[Vector]:
    """V_{k,n} in lex order."""
    check_params(k, n)
    return list(combinations(range(1, n + 1), k))


def max_vector(k: int, n: int) -> Vector:
    return tuple(range(n - k + 1, n + 1))


def cyclic_intervals(k: int, n: int) -> list[Vector]:
    """The n cyclic rotations of (1,...,k), lex-sorted."""
    return sorted({cyclic_shift(tuple(range(1, k + 1)), s, n) for s in range(n)})


def _same_k(I: Sequence[int], J: Sequence[int]) -> None:
    if len(I) != len(J):
        raise ValueError(f"vectors of different length: {tuple(I)} vs {tuple(J)}")


def is_nonnesting(I: Vector, J: Vector) -> bool:
    """No pair of positions a < b gives strictly nested arcs."""
    _same_k(I, J)
    k = len(I)
    for a in range(k):
        for b in range(a + 1, k):
            if I[a] < J[a] and J[b] < I[b]:
                return False
            if J[a] < I[a] and I[b] < J[b]:
                return False
    return True


def is_noncrossing(I: Vector, J: Vector) -> bool:
    """Arcs (i_a, i_b) and (j_a, j_b) never cross strictly, where only pairs
    a < b whose in-between entries agree are compared."""
    _same_k(I, J)
    k = len(I)
    for a in range(k):
        for b in range(a + 1, k):
            x, y, u, v = I[a], I[b], J[a], J[b]
            if x < u < y < v or u < x < v < y:
                return False
            if I[b] != J[b]:
                # every longer pair starting at a has a disagreeing middle entry
                break
    return True


def is_weakly_separated(I: Vector, J: Vector) -> bool:
    """I minus J and J minus I do not interleave around the circle."""
    _same_k(I, J)
    A, B = set(I) - set(J), set(J) - set(I)
    labels = [x in A for x in sorted(A | B)]
    changes = sum(p != q for p, q in zip(labels, labels[1:] + labels[:1]))
    return changes <= 2


def complement(I: Vector, n: int) -> Vector:
    return tuple(x for x in range(1, n + 1) if x not in set(I))


def reflect(I: Vector, n: int) -> Vector:
    return tuple(sorted(n + 1 - x for x in I))


def cyclic_shift(I: Vector, s: int, n: int) -> Vector:
    return tuple(sorted((x - 1 + s) % n + 1 for x in I))


def char_vector(I: Vector, n: int) -> tuple[tuple[int, ...], ...]:
    """0/1 matrix of the order filter of I: row a has i_a - a zeros then ones."""
    k = len(I)
    width = n - k
    return tuple(
        tuple(0 if b < I[a] - (a + 1) else 1 for b in range(width)) for a in range(k)
    )


def vector_from_filter(rows: Sequence[Sequence[int]]) -> Vector:
    """Inverse of char_vector; raises ValueError if rows are not a filter."""
    k = len(rows)
    for a, row in enumerate(rows):
        if any(x not in (0, 1) for x in row) or list(row) != sorted(row):
            raise ValueError(f"row {a + 1} is not a 0/1 step")
        if a and any(p < q for p, q in zip(rows[a - 1], row)):
            raise ValueError(f"rows {a} and {a + 1} are not nested")
    return tuple(a + 1 + sum(1 for x in row if x == 0) for a, row in enumerate(rows))


def grid_covers(k: int, n: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Cover relations of P_{k,n} = [k] x [n-k] (1-based cells).

    Grid rows are counted from the bottom, so cell (a, b) corresponds to row
    k+1-a of char_vector, and order filters are upward closed.
    """
    w = n - k
    out = []
    for a in range(1, k + 1):
        for b in range(1, w + 1):
            if b < w:
                out.append(((a, b), (a, b + 1)))
            if a < k:
                out.append(((a, b), (a + 1, b)))
    return out


def dumps(obj) -> str:
    """Canonical compact JSON used for every machine-readable output."""
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def matrix_json(rows, n: int) -> dict:
    rows = [list(r) for r in rows]
    return {"k": len(rows), "n": n, "rows": rows}
