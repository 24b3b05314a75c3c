"""Simplicial subdivisions of the unit simplex: construction, validation, point location."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence

from .geometry import (
    BPoint,
    CellFrame,
    DegenerateSimplexError,
    affinely_independent,
    basis,
    bpoint,
    centroid,
    integer_form,
    normalized_volume,
    point_str,
)
from .lp import feasible

Cell = tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    kind: str
    cells: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    mode: str
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "passed": self.passed,
            "violations": [
                {"kind": v.kind, "cells": list(v.cells), "detail": v.detail}
                for v in self.violations
            ],
        }


class Subdivision:
    """A finite set of ``(n-1)``-cells over a table of distinct vertex points.

    Cells are stored canonically (ascending vertex ids, cells sorted), but
    nothing beyond that is enforced here; call :func:`validate` for the
    geometric conditions.
    """

    def __init__(self, n: int, vertices: Iterable, cells: Iterable[Iterable[int]]):
        if n < 1:
            raise ValueError("dimension must be at least 1")
        verts = tuple(bpoint(v) for v in vertices)
        index = {}
        for vid, p in enumerate(verts):
            if len(p) != n:
                raise ValueError(f"vertex {vid} has {len(p)} coordinates, expected {n}")
            if p in index:
                raise ValueError(f"vertices {index[p]} and {vid} coincide at {point_str(p)}")
            index[p] = vid
        canon = []
        for cell in cells:
            c = tuple(sorted(int(v) for v in cell))
            for v in c:
                if not 0 <= v < len(verts):
                    raise ValueError(f"cell references unknown vertex id {v}")
            canon.append(c)
        self.n = n
        self.vertices: tuple[BPoint, ...] = verts
        self.cells: tuple[Cell, ...] = tuple(sorted(canon))
        self._index = index

    def __repr__(self):
        return f"Subdivision(n={self.n}, vertices={len(self.vertices)}, cells={len(self.cells)})"

    def __eq__(self, other):
        if not isinstance(other, Subdivision):
            return NotImplemented
        return (self.n, self.vertices, self.cells) == (other.n, other.vertices, other.cells)

    def __hash__(self):
        return hash((self.n, self.vertices, self.cells))

    def vertex_id(self, point: Sequence) -> int:
        return self._index[bpoint(point)]

    def points(self, cell: Cell) -> list[BPoint]:
        return [self.vertices[v] for v in cell]

    @cached_property
    def _frames(self) -> tuple[CellFrame | None, ...]:
        frames = []
        for cell in self.cells:
            try:
                frames.append(CellFrame(self.points(cell)) if len(cell) == self.n else None)
            except DegenerateSimplexError:
                frames.append(None)
        return tuple(frames)

    @cached_property
    def _boxes(self) -> tuple[tuple[tuple[Fraction, ...], tuple[Fraction, ...]], ...]:
        out = []
        for cell in self.cells:
            pts = self.points(cell)
            out.append((tuple(map(min, zip(*pts))), tuple(map(max, zip(*pts)))))
        return tuple(out)

    @cached_property
    def _int_boxes(self) -> tuple[int, tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]]:
        """Bounding boxes scaled by the common denominator of all vertex coordinates."""
        scale = lcm(*(c.denominator for p in self.vertices for c in p))
        boxes = tuple(
            (tuple(int(c * scale) for c in lo), tuple(int(c * scale) for c in hi))
            for lo, hi in self._boxes
        )
        return scale, boxes


def _canonical_subdivision(n: int, cells_as_points: Iterable[Sequence[BPoint]]) -> Subdivision:
    """Number distinct points (descending lexicographic order, so ``e_1`` gets id 0)."""
    cells_as_points = [list(c) for c in cells_as_points]
    pts = sorted({p for c in cells_as_points for p in c}, reverse=True)
    ids = {p: i for i, p in enumerate(pts)}
    cells = {tuple(sorted(ids[p] for p in c)) for c in cells_as_points}
    return Subdivision(n, pts, cells)


def trivial_subdivision(n: int) -> Subdivision:
    return Subdivision(n, [basis(n, i) for i in range(1, n + 1)], [range(n)])


def edgewise_subdivision(n: int, m: int) -> Subdivision:
    """Freudenthal (Kuhn) triangulation of the unit simplex at resolution ``m``.

    A point ``x`` with grid coordinates is mapped to its partial sums
    ``z_k = m * (x_1 + ... + x_k)``, ``k < n``, which fill the staircase
    ``0 <= z_1 <= ... <= z_{n-1} <= m``.  Cells are the Kuhn simplices
    ``b, b + u_{p(1)}, b + u_{p(1)} + u_{p(2)}, ...`` (``b`` an integer base
    point, ``p`` a permutation, ``u_k`` unit vectors) that lie inside the
    staircase; there are exactly ``m**(n-1)`` of them.
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if n == 1:
        return trivial_subdivision(1)
    d = n - 1

    def inside(z):
        return 0 <= z[0] and all(z[k] <= z[k + 1] for k in range(d - 1)) and z[-1] <= m

    def to_point(z):
        parts = (0,) + tuple(z) + (m,)
        return tuple(Fraction(parts[k + 1] - parts[k], m) for k in range(n))

    cells = []
    for base in itertools.product(range(m), repeat=d):
        for perm in itertools.permutations(range(d)):
            z = list(base)
            chain = [tuple(z)]
            for k in perm:
                z[k] += 1
                chain.append(tuple(z))
            if all(inside(v) for v in chain):
                cells.append([to_point(v) for v in chain])
    return _canonical_subdivision(n, cells)


def barycentric_refine(sub: Subdivision) -> Subdivision:
    """Replace each cell by the ``n!`` cells spanned by barycenters of its face chains."""
    report = validate(sub, "fast")
    if not report.passed:
        raise ValueError(f"cannot refine an invalid subdivision: {report.violations[0].detail}")
    cells = []
    for cell in sub.cells:
        pts = sub.points(cell)
        for perm in itertools.permutations(range(sub.n)):
            cells.append([centroid([pts[j] for j in perm[: k + 1]]) for k in range(sub.n)])
    return _canonical_subdivision(sub.n, cells)


def _face_violation(sub: Subdivision, i: int, j: int) -> bool:
    """Exactly decide whether cells ``i`` and ``j`` meet outside the hull of their shared vertices."""
    s, t = sub.cells[i], sub.cells[j]
    shared = set(s) & set(t)
    own = [v for v in s if v not in shared]
    if not own:
        return False
    n = sub.n
    # cheap exact certificate (Farkas): the weight on a's own vertices, an
    # affine function vanishing on the shared face, is <= 0 at every vertex of b
    for a, b, frame in ((s, t, sub._frames[i]), (t, s, sub._frames[j])):
        own_pos = [k for k, v in enumerate(a) if v not in shared]
        if not own_pos:
            continue
        ok = True
        for v in b:
            if v in shared:
                continue
            z, denom = integer_form(sub.vertices[v])
            nums = [sum(x * y for x, y in zip(frame.rows[k], z)) for k in own_pos]
            if sum(nums) > 0:
                ok = False
                break
        if ok:
            return False
    # exact LP: lam, mu >= 0 with S lam = T mu and total weight 1 on s's own vertices
    ps, pt = sub.points(s), sub.points(t)
    A = [[ps[c][r] for c in range(n)] + [-pt[c][r] for c in range(n)] for r in range(n)]
    A.append([Fraction(int(v not in shared)) for v in s] + [Fraction(0)] * n)
    b = [Fraction(0)] * n + [Fraction(1)]
    return feasible(A, b) is not None


def _boxes_disjoint(box1, box2) -> bool:
    (lo1, hi1), (lo2, hi2) = box1, box2
    return any(h1 < l2 or h2 < l1 for l1, h1, l2, h2 in zip(lo1, hi1, lo2, hi2))


def validate(sub: Subdivision, mode: str = "full") -> ValidationReport:
    """Check the subdivision conditions, reporting every problem found.

    ``fast`` checks cell sizes, affine independence, canonical form, presence
    of the corners and that the cell volumes sum to exactly 1.  ``full`` also
    checks, for every pair of cells, that they intersect in the convex hull of
    their shared vertices.
    """
    if mode not in ("fast", "full"):
        raise ValueError(f"unknown validation mode {mode!r}")
    out: list[Violation] = []
    n = sub.n
    for i in range(1, n + 1):
        if basis(n, i) not in sub._index:
            out.append(Violation("missing-corner", (), f"corner e{i} is not a vertex"))
    if not sub.cells:
        out.append(Violation("empty", (), "no cells"))
    total = Fraction(0)
    good = []
    for ci, cell in enumerate(sub.cells):
        if len(cell) != n or len(set(cell)) != n:
            out.append(Violation("cell-size", (ci,), f"cell {list(cell)} does not have {n} distinct vertices"))
            continue
        if not affinely_independent(sub.points(cell)):
            out.append(Violation("degenerate", (ci,), f"cell {list(cell)} is affinely dependent"))
            continue
        total += normalized_volume(sub.points(cell))
        good.append(ci)
    for ci in range(1, len(sub.cells)):
        if sub.cells[ci] == sub.cells[ci - 1]:
            out.append(Violation("duplicate-cell", (ci - 1, ci), f"cell {list(sub.cells[ci])} repeated"))
    if total != 1:
        out.append(Violation("volume", (), f"cell volumes sum to {total}, not 1"))

    if mode == "full":
        boxes = sub._boxes
        for i, j in itertools.combinations(good, 2):
            s, t = sub.cells[i], sub.cells[j]
            if s == t or _boxes_disjoint(boxes[i], boxes[j]):
                continue
            if _face_violation(sub, i, j):
                out.append(Violation(
                    "face", (i, j),
                    f"cells {list(s)} and {list(t)} meet outside the hull of their shared vertices",
                ))
    return ValidationReport(mode, tuple(out))


def locate(sub: Subdivision, x: Sequence) -> list[tuple[Cell, tuple[Fraction, ...]]]:
    """All cells containing ``x`` with the exact weights of ``x`` in each, in cell order."""
    x = bpoint(x)
    if len(x) != sub.n:
        raise ValueError(f"point has {len(x)} coordinates, expected {sub.n}")
    z, denom = integer_form(x)
    scale, boxes = sub._int_boxes
    # compare x against box corners over the common denominator scale * denom
    zs = [v * scale for v in z]
    hits = []
    for cell, frame, (lo, hi) in zip(sub.cells, sub._frames, boxes):
        if frame is None:
            continue
        if any(v < a * denom or v > b * denom for v, a, b in zip(zs, lo, hi)):
            continue
        w = frame.weights(z, denom)
        if w is not None:
            hits.append((cell, w))
    return hits
