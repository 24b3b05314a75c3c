"""Exact geometry on the unit simplex.

Points are tuples of :class:`fractions.Fraction` in ambient coordinates, so a
point of the unit simplex doubles as its own barycentric representation with
respect to the standard basis vectors.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

BPoint = tuple[Fraction, ...]


class DegenerateSimplexError(ValueError):
    """Raised when a vertex set is affinely dependent."""


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    """Render ``q`` as ``"p/q"`` in lowest terms (integers become ``"p/1"``)."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def bpoint(coords: Iterable) -> BPoint:
    """Build a point of the unit simplex, checking nonnegativity and unit sum."""
    point = tuple(to_fraction(c) for c in coords)
    if not point:
        raise ValueError("a point needs at least one coordinate")
    if any(c < 0 for c in point):
        raise ValueError(f"negative coordinate in {point_str(point)}")
    if sum(point) != 1:
        raise ValueError(f"coordinates of {point_str(point)} do not sum to 1")
    return point


def basis(n: int, i: int) -> BPoint:
    """The corner ``e_i`` of the simplex (``i`` is 1-based)."""
    return tuple(Fraction(int(k == i - 1)) for k in range(n))


def centroid(points: Sequence[BPoint]) -> BPoint:
    k = len(points)
    return tuple(sum(col, Fraction(0)) / k for col in zip(*points))


def point_str(point: Sequence[Fraction]) -> str:
    return "(" + ", ".join(str(c) for c in point) + ")"


def support(x: Sequence[Fraction]) -> frozenset[int]:
    """1-based indices of the strictly positive coordinates of ``x``."""
    return frozenset(k + 1 for k, c in enumerate(x) if c > 0)


def _check_dims(points: Sequence[Sequence[Fraction]]) -> int:
    if not points:
        raise ValueError("empty point list")
    n = len(points[0])
    for p in points:
        if len(p) != n:
            raise ValueError(f"dimension mismatch: {len(p)} != {n}")
    return n


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a matrix by exact Gaussian elimination."""
    m = [list(r) for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, len(m)):
            if m[i][col] != 0:
                f = m[i][col] / m[r][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    m = [list(map(to_fraction, r)) for r in rows]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((i for i in range(col, size) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for i in range(col + 1, size):
            if m[i][col] != 0:
                f = m[i][col] / m[col][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det


def affinely_independent(points: Sequence[BPoint]) -> bool:
    """True iff no nontrivial zero-sum combination of ``points`` vanishes.

    All points lie on the hyperplane ``sum(x) = 1`` which misses the origin,
    so affine independence coincides with linear independence here.
    """
    n = _check_dims(points)
    if len(points) > n:
        return False
    return rank(points) == len(points)


def normalized_volume(cell_points: Sequence[BPoint]) -> Fraction:
    """Absolute determinant of the square matrix whose columns are the points.

    The unit simplex itself has volume 1 under this normalization.
    """
    n = _check_dims(cell_points)
    if len(cell_points) != n:
        raise ValueError(f"need exactly {n} points, got {len(cell_points)}")
    return abs(determinant(cell_points))


def inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination."""
    size = len(rows)
    aug = [list(map(to_fraction, r)) + [Fraction(int(i == j)) for j in range(size)]
           for i, r in enumerate(rows)]
    for col in range(size):
        pivot = next((i for i in range(col, size) if aug[i][col] != 0), None)
        if pivot is None:
            raise DegenerateSimplexError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [a / p for a in aug[col]]
        for i in range(size):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[size:] for row in aug]


def affine_weights(cell_points: Sequence[BPoint], x: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Unique affine weights of ``x`` with respect to ``cell_points``; may be negative."""
    n = _check_dims(list(cell_points) + [tuple(x)])
    if len(cell_points) != n:
        raise ValueError(f"need exactly {n} points, got {len(cell_points)}")
    # columns are the points: solve A lam = x
    cols = [[cell_points[j][i] for j in range(n)] for i in range(n)]
    try:
        inv = inverse(cols)
    except DegenerateSimplexError:
        raise DegenerateSimplexError("cell vertices are affinely dependent") from None
    return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in inv)


def solve_barycentric(cell_points: Sequence[BPoint], x: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """Barycentric weights of ``x`` in the cell, or ``None`` when ``x`` is outside.

    Summing the coordinate rows shows the weights of the linear solve add up to
    one automatically, since every point involved has unit coordinate sum.
    """
    weights = affine_weights(cell_points, x)
    if any(w < 0 for w in weights):
        return None
    return weights


def combine(cell_points: Sequence[BPoint], weights: Sequence[Fraction]) -> BPoint:
    """The point ``sum_j weights[j] * cell_points[j]``."""
    n = len(cell_points[0])
    return tuple(sum((w * p[i] for w, p in zip(weights, cell_points)), Fraction(0))
                 for i in range(n))


class CellFrame:
    """Integer-scaled inverse of a cell's vertex matrix for repeated point location.

    Weights are ``(rows @ z) / (scale * L)`` where ``z = L * x`` is integral, so
    sign tests run on plain ints and Fractions are only built for hits.
    """

    __slots__ = ("rows", "scale")

    def __init__(self, cell_points: Sequence[BPoint]):
        n = len(cell_points)
        cols = [[cell_points[j][i] for j in range(n)] for i in range(n)]
        inv = inverse(cols)
        scale = lcm(*(q.denominator for row in inv for q in row))
        self.rows = tuple(tuple(int(q * scale) for q in row) for row in inv)
        self.scale = scale

    def weights(self, z: Sequence[int], denom: int) -> tuple[Fraction, ...] | None:
        nums = [sum(a * b for a, b in zip(row, z)) for row in self.rows]
        if any(v < 0 for v in nums):
            return None
        d = self.scale * denom
        return tuple(Fraction(v, d) for v in nums)


def integer_form(x: Sequence[Fraction]) -> tuple[tuple[int, ...], int]:
    """Write ``x`` as ``z / L`` with integer ``z`` and common denominator ``L``."""
    denom = lcm(*(c.denominator for c in x))
    return tuple(int(c * denom) for c in x), denom
