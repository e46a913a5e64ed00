"""Monotone and geometric grid classes over 0/±1 matrices: cell graphs,
membership deciders, bounded enumeration, and finite-griddability evidence.

Matrices use Cartesian indexing: ``entry(k, l)`` is column ``k`` from the
left, row ``l`` from the bottom.  The JSON form lists rows top-first (the
usual way a matrix is displayed), so serialization flips row order.

A permutation lies in the monotone grid class when vertical and horizontal
lines can divide its plot so every cell's points are increasing (+1) or
decreasing (−1); it lies in the geometric class when the points can actually
be placed on the standard figure — the union of the increasing segment
from ``(k−1, l−1)`` to ``(k, l)`` for each +1 cell and the decreasing
segment from ``(k−1, l)`` to ``(k, l−1)`` for each −1 cell.  Geometric
membership is decided per gridding by exact rational feasibility of the
induced strict linear system in one parameter per point.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .classes import PermClass
from .feasibility import check_strict, solve_strict
from .guards import check_size
from .invgraph import Graph
from .perm import Perm, all_perms, direct_sum, skew_sum

VALID_ENTRIES = (-1, 0, 1)


@dataclass(frozen=True)
class ZeroPmOneMatrix:
    """A 0/±1 matrix in Cartesian indexing: ``signs[k-1][l-1]`` is the entry
    in column ``k`` (from the left), row ``l`` (from the bottom)."""

    cols: int
    rows: int
    signs: tuple

    def __post_init__(self):
        if self.cols < 1 or self.rows < 1:
            raise ValueError("need at least one column and one row")
        signs = tuple(tuple(col) for col in self.signs)
        if len(signs) != self.cols or any(len(col) != self.rows for col in signs):
            raise ValueError("signs shape must be cols x rows")
        for col in signs:
            for e in col:
                if e not in VALID_ENTRIES:
                    raise ValueError(f"matrix entries must be -1, 0, or 1; got {e!r}")
        object.__setattr__(self, "signs", signs)

    def entry(self, k: int, l: int) -> int:
        if not (1 <= k <= self.cols and 1 <= l <= self.rows):
            raise IndexError(f"cell ({k}, {l}) outside {self.cols}x{self.rows}")
        return self.signs[k - 1][l - 1]

    def nonzero_cells(self) -> tuple:
        return tuple(
            (k, l)
            for k in range(1, self.cols + 1)
            for l in range(1, self.rows + 1)
            if self.entry(k, l) != 0
        )


def matrix_from_rows_top_first(rows: Iterable[Iterable[int]]) -> ZeroPmOneMatrix:
    """Build from display order (top row first), e.g. the 2x2 X-shape
    ``[[-1, 1], [1, -1]]``."""
    grid = [list(r) for r in rows]
    if not grid or not grid[0]:
        raise ValueError("need at least one row and one column")
    u = len(grid)
    t = len(grid[0])
    if any(len(r) != t for r in grid):
        raise ValueError("ragged rows")
    signs = tuple(
        tuple(grid[u - l][k - 1] for l in range(1, u + 1)) for k in range(1, t + 1)
    )
    return ZeroPmOneMatrix(t, u, signs)


def matrix_to_json(m: ZeroPmOneMatrix) -> dict:
    entries = [
        [m.entry(k, l) for k in range(1, m.cols + 1)]
        for l in range(m.rows, 0, -1)
    ]
    return {"cols": m.cols, "rows": m.rows, "entries": entries}


def matrix_from_json(data) -> ZeroPmOneMatrix:
    if isinstance(data, str):
        data = json.loads(data)
    m = matrix_from_rows_top_first(data["entries"])
    if m.cols != data["cols"] or m.rows != data["rows"]:
        raise ValueError("declared cols/rows disagree with entries shape")
    return m


#: Four nonzero cells whose cell graph is the 4-cycle: +1 at bottom-left and
#: top-right, −1 at the other two corners.
X_MATRIX = matrix_from_rows_top_first([[-1, 1], [1, -1]])


def all_matrices(max_cols: int, max_rows: int) -> Iterator[ZeroPmOneMatrix]:
    """Every 0/±1 matrix with dimensions up to the given bounds."""
    for t in range(1, max_cols + 1):
        for u in range(1, max_rows + 1):
            for flat in itertools.product(VALID_ENTRIES, repeat=t * u):
                signs = tuple(
                    tuple(flat[(k - 1) * u + (l - 1)] for l in range(1, u + 1))
                    for k in range(1, t + 1)
                )
                yield ZeroPmOneMatrix(t, u, signs)


def cell_graph(m: ZeroPmOneMatrix) -> Graph:
    """Vertices are the nonzero cells (sorted by column then row, labeled
    with their (column, row) pair); edges join two cells of a common row or
    column with no nonzero cell strictly between them.

    >>> sorted(cell_graph(X_MATRIX).edges)
    [(1, 2), (1, 3), (2, 4), (3, 4)]
    """
    cells = m.nonzero_cells()
    index = {cell: i + 1 for i, cell in enumerate(cells)}
    edges = set()
    for (k1, l1) in cells:
        for (k2, l2) in cells:
            if (k1, l1) >= (k2, l2):
                continue
            if k1 == k2 and all(
                m.entry(k1, l) == 0 for l in range(min(l1, l2) + 1, max(l1, l2))
            ):
                edges.add((index[(k1, l1)], index[(k2, l2)]))
            elif l1 == l2 and all(
                m.entry(k, l1) == 0 for k in range(min(k1, k2) + 1, max(k1, k2))
            ):
                edges.add((index[(k1, l1)], index[(k2, l2)]))
    return Graph(len(cells), frozenset(edges), labels=cells if cells else None)


@dataclass(frozen=True)
class GriddedPermutation:
    """A permutation with one (column, row) cell per index."""

    perm: Perm
    cells: tuple

    def __post_init__(self):
        if len(self.cells) != len(self.perm):
            raise ValueError("one cell per permutation entry required")
        object.__setattr__(self, "cells", tuple(tuple(c) for c in self.cells))


def validate_gridded(gp: GriddedPermutation, m: ZeroPmOneMatrix) -> bool:
    """Independent re-check of every gridding invariant: cells nonzero,
    column assignment weakly increasing in position, row assignment weakly
    increasing in value, and each cell's content monotone per its sign."""
    pi = gp.perm
    n = len(pi)
    for k, l in gp.cells:
        if m.entry(k, l) == 0:
            return False
    for i in range(n - 1):
        if gp.cells[i][0] > gp.cells[i + 1][0]:
            return False
    row_of_value = {pi[i]: gp.cells[i][1] for i in range(n)}
    for v in range(1, n):
        if row_of_value[v] > row_of_value[v + 1]:
            return False
    for cell in set(gp.cells):
        content = [pi[i] for i in range(n) if gp.cells[i] == cell]
        sign = m.entry(*cell)
        ordered = sorted(content) if sign == 1 else sorted(content, reverse=True)
        if content != ordered:
            return False
    return True


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    """Weak compositions in lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _griddings(pi: Perm, m: ZeroPmOneMatrix) -> Iterator[GriddedPermutation]:
    """All legal griddings, column cuts outer, value cuts inner, both
    lexicographic."""
    n = len(pi)
    for col_sizes in _compositions(n, m.cols):
        col_of_pos = []
        for k, size in enumerate(col_sizes, start=1):
            col_of_pos.extend([k] * size)
        for row_sizes in _compositions(n, m.rows):
            row_of_value = []
            for l, size in enumerate(row_sizes, start=1):
                row_of_value.extend([l] * size)
            cells = tuple(
                (col_of_pos[i], row_of_value[pi[i] - 1]) for i in range(n)
            )
            gp = GriddedPermutation(pi, cells)
            if validate_gridded(gp, m):
                yield gp


def grid_member(
    pi: Perm, m: ZeroPmOneMatrix, max_n: Optional[int] = None
) -> Optional[GriddedPermutation]:
    """The first legal gridding (search order: column cuts outer, value cuts
    inner, lexicographic), or None when no lines divide the plot into
    correctly monotone cells.

    >>> grid_member((3, 1, 4, 2), X_MATRIX) is not None
    True
    >>> grid_member((2, 1, 4, 3), X_MATRIX) is None
    True
    """
    check_size("grid_member", len(pi), 12, max_n)
    return next(_griddings(pi, m), None)


def _geometric_system(gp: GriddedPermutation, m: ZeroPmOneMatrix) -> list:
    """Strict constraints on one parameter per point placing the gridded
    permutation on the standard figure.  Point i in cell (k, l) sits at
    x = k−1+t_i and y = l−1+t_i (+1 cells) or y = l−t_i (−1 cells)."""
    pi = gp.perm
    n = len(pi)
    constraints = []

    def row(*pairs, rhs):
        coeffs = [0] * n
        for idx, c in pairs:
            coeffs[idx] += c
        return (tuple(coeffs), rhs)

    for i in range(n):
        constraints.append(row((i, 1), rhs=1))   # t_i < 1
        constraints.append(row((i, -1), rhs=0))  # -t_i < 0
    for i in range(n):
        for j in range(i + 1, n):
            ki, li = gp.cells[i]
            kj, lj = gp.cells[j]
            if ki == kj:
                # x increases with position: t_i < t_j
                constraints.append(row((i, 1), (j, -1), rhs=0))
            if li == lj:
                lo, hi = (i, j) if pi[i] < pi[j] else (j, i)
                slo = m.entry(*gp.cells[lo])
                shi = m.entry(*gp.cells[hi])
                if slo == 1 and shi == 1:
                    constraints.append(row((lo, 1), (hi, -1), rhs=0))
                elif slo == -1 and shi == -1:
                    constraints.append(row((hi, 1), (lo, -1), rhs=0))
                elif slo == 1 and shi == -1:
                    constraints.append(row((lo, 1), (hi, 1), rhs=1))
                else:  # slo == -1, shi == 1: y_lo = l - t_lo < l - 1 + t_hi
                    constraints.append(row((lo, -1), (hi, -1), rhs=-1))
    return constraints


def geom_member(
    pi: Perm, m: ZeroPmOneMatrix, max_n: Optional[int] = None
) -> Optional[tuple]:
    """A drawing of ``pi`` on the standard figure, as ``(gridding, params)``
    with one exact rational parameter per point, or None.  Every legal
    gridding is tried; for each, the strict linear system of same-column and
    same-row order constraints is solved exactly.

    >>> geom_member((3, 1, 4, 2), X_MATRIX) is None
    True
    >>> gp, params = geom_member((3, 2, 1), matrix_from_rows_top_first([[-1]]))
    >>> gp.cells
    ((1, 1), (1, 1), (1, 1))
    """
    check_size("geom_member", len(pi), 10, max_n)
    for gp in _griddings(pi, m):
        constraints = _geometric_system(gp, m)
        witness = solve_strict(len(pi), constraints)
        if witness is not None:
            assert check_strict(witness, constraints)
            return gp, witness
    return None


def drawing_coordinates(
    gp: GriddedPermutation, m: ZeroPmOneMatrix, params
) -> tuple:
    """The (x, y) point of each index for a parameter witness."""
    out = []
    for i, (k, l) in enumerate(gp.cells):
        t = Fraction(params[i])
        x = k - 1 + t
        y = (l - 1 + t) if m.entry(k, l) == 1 else (l - t)
        out.append((x, y))
    return tuple(out)


GRID_KINDS = ("monotone", "geometric")


def enumerate_grid(
    m: ZeroPmOneMatrix, n: int, kind: str, max_n: Optional[int] = None
) -> tuple:
    """All length-n members of the monotone or geometric class, sorted.

    >>> len(enumerate_grid(X_MATRIX, 4, "monotone"))
    22
    >>> len(enumerate_grid(X_MATRIX, 4, "geometric"))
    20
    """
    if kind not in GRID_KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {GRID_KINDS}")
    check_size("enumerate_grid", n, 7, max_n)
    out = []
    for pi in all_perms(n):
        if kind == "monotone":
            hit = grid_member(pi, m, max_n=max_n)
        else:
            hit = geom_member(pi, m, max_n=max_n)
        if hit is not None:
            out.append(pi)
    return tuple(out)


@dataclass(frozen=True)
class GriddabilityEvidence:
    """Chain-membership report backing a finite-griddability check; takes no
    verdict (see ``note``)."""

    depth: int
    sum_chain: tuple    # sum_chain[j-1]: is the j-fold direct sum of 21 a member
    skew_chain: tuple   # skew_chain[j-1]: is the j-fold skew sum of 12 a member
    note: str


GRIDDABILITY_NOTE = (
    "No verdict is taken: the finite-griddability criterion is stated as the "
    "class not containing 'both' of two closures (the sum closure of {1, 21} "
    "and the skew closure of {1, 12}), which is ambiguous between forbidding "
    "their conjunction and forbidding each separately. This report gives both "
    "chain statuses and leaves the reading to the caller."
)


def griddability_evidence(
    c: PermClass, depth: int, max_n: Optional[int] = None
) -> GriddabilityEvidence:
    """For each j ≤ depth, whether the j-fold direct sum of 21 and the
    j-fold skew sum of 12 are members of C.  These chains are cofinal in the
    two closures named in the note, so their statuses are the canonical
    containment evidence.

    >>> ev = griddability_evidence(PermClass(((3, 2, 1),)), 3)
    >>> (ev.sum_chain, ev.skew_chain)
    ((True, True, True), (True, True, False))
    """
    check_size("griddability_evidence", 2 * depth, 9, max_n)
    sum_chain = []
    skew_chain = []
    sum_perm: Perm = ()
    skew_perm: Perm = ()
    for _ in range(depth):
        sum_perm = direct_sum(sum_perm, (2, 1))
        skew_perm = skew_sum(skew_perm, (1, 2))
        sum_chain.append(c.member(sum_perm))
        skew_chain.append(c.member(skew_perm))
    return GriddabilityEvidence(
        depth, tuple(sum_chain), tuple(skew_chain), GRIDDABILITY_NOTE
    )
