"""Tableaux of shape k x (n-k), the two decomposition procedures, marked
positions and the pushing moves that realise flips.

Rows are numbered from the top (row 1) and columns from the left.  A tableau
has weakly increasing rows and weakly decreasing columns (top to bottom), so
its maximum sits in the top-right corner.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Vector, char_vector, max_vector, reflect


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise ValueError("tableau must have at least one row and one column")
        width = len(rows[0])
        for a, row in enumerate(rows, 1):
            if len(row) != width:
                raise ValueError(f"row {a} has length {len(row)}, expected {width}")
            if any(x < 0 for x in row):
                raise ValueError(f"row {a} has a negative entry")
            for b in range(width - 1):
                if row[b] > row[b + 1]:
                    raise ValueError(
                        f"row {a} decreases between columns {b + 1} and {b + 2}"
                    )
        for a in range(len(rows) - 1):
            for b in range(width):
                if rows[a][b] < rows[a + 1][b]:
                    raise ValueError(
                        f"column {b + 1} increases from row {a + 1} to row {a + 2}"
                    )

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows) + len(self.rows[0])

    @property
    def max(self) -> int:
        return self.rows[0][-1]

    def __add__(self, other: "Tableau") -> "Tableau":
        return Tableau(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def rotate(self) -> "Tableau":
        """Tableau of the reflected multiset, counting one implicit copy of the
        maximal vector: (max + 1) minus the 180-degree rotation."""
        m = self.max + 1
        return Tableau(tuple(tuple(m - x for x in reversed(r)) for r in reversed(self.rows)))

    def is_strict(self) -> bool:
        """Strictly increasing rows, strictly decreasing columns, t_{k,1} > 0."""
        r = self.rows
        return (
            r[-1][0] > 0
            and all(x < y for row in r for x, y in zip(row, row[1:]))
            and all(x > y for up, lo in zip(r, r[1:]) for x, y in zip(up, lo))
        )

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        t = cls(tuple(tuple(r) for r in data["rows"]))
        if "k" in data and data["k"] != t.k:
            raise ValueError(f"k={data['k']} does not match {t.k} rows")
        if "n" in data and data["n"] != t.n:
            raise ValueError(f"n={data['n']} does not match shape {t.k}x{t.n - t.k}")
        return t


def zero_tableau(k: int, n: int) -> Tableau:
    return Tableau(tuple((0,) * (n - k) for _ in range(k)))


def random_tableau(k: int, n: int, top: int, rng) -> Tableau:
    """Tableau with entries in 0..top, filled bottom row first, each cell
    drawn uniformly above its left and lower neighbours."""
    w = n - k
    rows = [[0] * w for _ in range(k)]
    for a in reversed(range(k)):
        for b in range(w):
            lo = max(rows[a][b - 1] if b else 0, rows[a + 1][b] if a < k - 1 else 0)
            rows[a][b] = rng.randint(lo, top)
    return Tableau(tuple(map(tuple, rows)))


def summing_tableau(L: Iterable[Vector], n: int, k: int | None = None) -> Tableau:
    """Entrywise sum of the characteristic vectors of the multiset L."""
    L = list(L)
    if k is None:
        if not L:
            raise ValueError("k is required for an empty multiset")
        k = len(L[0])
    if any(len(I) != k for I in L):
        raise ValueError("vectors of mixed length")
    sums = [[0] * (n - k) for _ in range(k)]
    for I in L:
        for a, row in enumerate(char_vector(I, n)):
            for b, x in enumerate(row):
                sums[a][b] += x
    return Tableau(tuple(map(tuple, sums)))


@dataclass(frozen=True)
class VectorTable:
    """Lex-sorted columns together with their marked positions.

    ``all_marks`` holds 1-based (row, column) pairs including the marks on the
    maximal integer of each row; ``marks`` drops those.
    """

    n: int
    columns: tuple[Vector, ...]
    all_marks: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @property
    def k(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    @property
    def marks(self) -> tuple[tuple[int, int], ...]:
        w = self.n - self.k
        return tuple(
            sorted((a, j) for a, j in self.all_marks if self.columns[j - 1][a - 1] != a + w)
        )

    def marks_by_column(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for a, j in self.marks:
            out.setdefault(j, []).append(a)
        return out

    def to_json(self, marks: bool = True) -> dict:
        d = {"columns": [list(c) for c in self.columns]}
        if marks:
            d["marks"] = [list(m) for m in self.marks]
        return d


def _row_values(T: Tableau, a: int) -> list[int]:
    """Values to insert into row a (0-based), ascending with multiplicity."""
    row = T.rows[a]
    bounds = [0, *row, T.max]
    out = []
    for b in range(len(row) + 1):
        out += [a + 1 + b] * (bounds[b + 1] - bounds[b])
    return out


def _decompose(T: Tableau, noncrossing: bool) -> VectorTable:
    ell = T.max
    cols: list[list[int]] = [[] for _ in range(ell)]
    marks = {}
    for a in range(T.k):
        free = set(range(ell))
        for v in _row_values(T, a):
            best = None
            for j in sorted(free):
                if a and cols[j][a - 1] >= v:
                    continue
                if not noncrossing:
                    best = j
                    break
                if best is None or cols[j][::-1] > cols[best][::-1]:
                    best = j
            if best is None:
                raise AssertionError(f"no admissible box for {v} in row {a + 1}")
            cols[best].append(v)
            free.discard(best)
            marks[(a, v)] = (a + 1, best + 1)
    columns = tuple(map(tuple, cols))
    if list(columns) != sorted(columns):
        raise AssertionError("decomposition produced unsorted columns")
    return VectorTable(T.n, columns, frozenset(marks.values()))


def phi_nn(T: Tableau) -> VectorTable:
    """The unique pairwise nonnesting multiset with summing tableau T."""
    return _decompose(T, noncrossing=False)


def phi_nc(T: Tableau) -> VectorTable:
    """The unique pairwise noncrossing multiset with summing tableau T."""
    return _decompose(T, noncrossing=True)


def marked_positions(L: VectorTable | Sequence[Vector], mode: str, n: int | None = None,
                     include_max: bool = True) -> tuple[tuple[int, int], ...]:
    """Marks read off the finished table, without replaying the insertion.

    For each row a and value a+b-1 the mark goes to the column whose prefix
    (i_1..i_a) is revlex-smallest and suffix lex-largest (noncrossing), or to
    the largest column (nonnesting).  Of several equal columns the right-most
    one is marked.
    """
    if isinstance(L, VectorTable):
        columns, n = L.columns, L.n
    else:
        columns = tuple(sorted(L))
    if mode not in ("nn", "nc"):
        raise ValueError(f"mode must be nn or nc, not {mode!r}")
    if not columns:
        return ()
    k = len(columns[0])
    w = n - k
    out = []
    for a in range(k):
        for b in range(w + 1 if include_max else w):
            hits = [j for j, c in enumerate(columns) if c[a] == a + 1 + b]
            if not hits:
                continue
            if mode == "nn":
                j = max(hits, key=lambda j: (columns[j], j))
            else:
                j = min(
                    hits,
                    key=lambda j: (
                        columns[j][a::-1],
                        tuple(-x for x in columns[j][a + 1 :]),
                        -j,
                    ),
                )
            out.append((a + 1, j + 1))
    return tuple(sorted(out))


def _doubly_marked(L: VectorTable) -> tuple[int, list[int]]:
    doubles = [(j, rows) for j, rows in L.marks_by_column().items() if len(rows) >= 2]
    if len(doubles) != 1:
        raise ValueError(f"expected exactly one doubly-marked column, found {len(doubles)}")
    j, rows = doubles[0]
    if len(rows) != 2:
        raise ValueError(f"column {j} carries {len(rows)} marks")
    return j, sorted(rows)


def doubly_marked_column(L: VectorTable) -> tuple[Vector, int, int]:
    """(column, upper mark row, lower mark row) of a ridge table."""
    j, (a1, a2) = _doubly_marked(L)
    return L.columns[j - 1], a1, a2


def _check_ridge_table(L: VectorTable) -> Tableau:
    T = summing_tableau(L.columns, L.n, L.k or None)
    if not T.is_strict():
        raise ValueError("pushing needs a strictly increasing summing tableau with t_{k,1} > 0")
    return T


def _push_lower(L: VectorTable) -> Vector:
    j, (_, a) = _doubly_marked(L)
    col = L.columns[j - 1]
    x = col[a - 1]
    best = None
    for c in L.columns:
        if c[a - 1] <= x or (a > 1 and c[a - 2] >= x):
            continue
        if best is None or c[: a - 1][::-1] > best[: a - 1][::-1]:
            best = c
    if best is None:
        raise ValueError("no admissible box for the pushed value")
    return best[: a - 1] + col[a - 1 :]


def pushed_vectors(L: VectorTable) -> tuple[Vector, Vector]:
    """New vectors obtained by pushing the lower and the upper mark of the
    doubly-marked column of the noncrossing table L."""
    T = _check_ridge_table(L)
    lower = _push_lower(L)
    upper = reflect(_push_lower(phi_nc(T.rotate())), L.n)
    return lower, upper


def push_last(L: VectorTable) -> VectorTable:
    """Push the mark of the doubly-marked column that sits in the lower row."""
    T = _check_ridge_table(L)
    J = _push_lower(L)
    return phi_nc(T + summing_tableau([J], L.n))


def push_first(L: VectorTable) -> VectorTable:
    """Push the upper mark; same as push_last conjugated by reflection."""
    T = _check_ridge_table(L)
    J = reflect(_push_lower(phi_nc(T.rotate())), L.n)
    return phi_nc(T + summing_tableau([J], L.n))


def ridge_cofacets(ridge: Iterable[Vector], n: int) -> tuple[Vector, Vector]:
    """The two vectors completing an interior ridge of the noncrossing
    complex: (lower-mark push, upper-mark push)."""
    ridge = list(ridge)
    k = len(ridge[0])
    top = max_vector(k, n)
    L = phi_nc(summing_tableau(ridge, n))
    if sorted(set(ridge) - {top}) != list(L.columns):
        raise ValueError("not a noncrossing face without repeats")
    return pushed_vectors(L)


def table_from_json(data: dict, n: int) -> VectorTable:
    columns = tuple(tuple(c) for c in data["columns"])
    marks = frozenset(tuple(m) for m in data.get("marks", ()))
    return VectorTable(n, columns, marks)
