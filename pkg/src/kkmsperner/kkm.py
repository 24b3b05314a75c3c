"""KKM cover sets built from a labeled subdivision.

For a label ``i``, ``C_i`` is the union over cells ``S`` of the points of
``S`` that put weight at least ``1/n`` on some ``i``-labeled vertex of ``S``.
The sets are never materialized; membership is decided pointwise with an
explicit witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .geometry import BPoint, bpoint, centroid, format_rational, point_str
from .labeling import validate_labeling
from .sperner import SpernerViolation, check_instance, find_completely_labeled, is_completely_labeled
from .subdivision import Cell, Subdivision, ValidationReport, Violation, locate, validate


class NotInIntersection(ValueError):
    def __init__(self, label: int, point):
        self.label = label
        super().__init__(f"point {point_str(point)} is not in C_{label}")


@dataclass(frozen=True)
class CoverPiece:
    cell: Cell
    positions: tuple[int, ...]


@dataclass(frozen=True)
class KKMCover:
    n: int
    threshold: Fraction
    pieces: dict[int, tuple[CoverPiece, ...]]
    _by_cell: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {i: {p.cell: p.positions for p in ps} for i, ps in self.pieces.items()}
        object.__setattr__(self, "_by_cell", index)

    def positions(self, label: int) -> dict[Cell, tuple[int, ...]]:
        return self._by_cell.get(label, {})

    def empty_labels(self) -> list[int]:
        return [i for i in range(1, self.n + 1) if not self.pieces.get(i)]

    def to_dict(self) -> dict:
        return {
            "threshold": format_rational(self.threshold),
            "pieces": {
                str(i): [{"cell": list(p.cell), "positions": list(p.positions)} for p in self.pieces.get(i, ())]
                for i in range(1, self.n + 1)
            },
        }


@dataclass(frozen=True)
class Witness:
    label: int
    cell: Cell
    vertex: int
    weight: Fraction
    coords: tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "cell": list(self.cell),
            "vertex": self.vertex,
            "weight": format_rational(self.weight),
            "coords": [format_rational(c) for c in self.coords],
        }


def build_cover(sub: Subdivision, labels: Sequence[int], threshold: Fraction | None = None,
                check: bool = True) -> KKMCover:
    """One piece per (label, cell) pair where the cell has a vertex with that label.

    ``threshold`` defaults to ``1/n``; any value in ``(0, 1/n]`` keeps the
    covering property, since some weight in every cell is at least ``1/n``.
    """
    if check:
        check_instance(sub, labels)
    n = sub.n
    t = Fraction(1, n) if threshold is None else Fraction(threshold)
    if not 0 < t <= 1:
        raise ValueError(f"threshold {t} outside (0, 1]")
    pieces: dict[int, list[CoverPiece]] = {i: [] for i in range(1, n + 1)}
    for cell in sub.cells:
        for i in range(1, n + 1):
            pos = tuple(k for k, v in enumerate(cell) if labels[v] == i)
            if pos:
                pieces[i].append(CoverPiece(cell, pos))
    return KKMCover(n, t, {i: tuple(p) for i, p in pieces.items()})


def _witness(cover: KKMCover, sub: Subdivision, hits, label: int) -> Witness | None:
    owned = cover.positions(label)
    for cell, weights in hits:
        for k in owned.get(cell, ()):
            if weights[k] >= cover.threshold:
                return Witness(label, cell, cell[k], weights[k], weights)
    return None


def member(cover: KKMCover, sub: Subdivision, label: int, x: Iterable) -> Witness | None:
    """Witness for ``x`` in ``C_label``, or ``None`` if ``x`` is not a member.

    Among qualifying (cell, vertex) pairs the lexicographically smallest wins.
    """
    if not 1 <= label <= cover.n:
        raise ValueError(f"label {label} not in 1..{cover.n}")
    return _witness(cover, sub, locate(sub, tuple(x)), label)


def face_grid(n: int, J: Iterable[int], denom: int):
    """Points of the face spanned by ``e_j, j in J`` with coordinates in ``(1/denom) Z``."""
    J = sorted(set(J))
    if not J or not all(1 <= j <= n for j in J):
        raise ValueError(f"index set {J} must be a nonempty subset of 1..{n}")
    if denom < 1:
        raise ValueError("denominator must be positive")
    k = len(J)
    # stars and bars: cut points in 0..denom
    for cuts in itertools.combinations_with_replacement(range(denom + 1), k - 1):
        parts = [b - a for a, b in zip((0,) + cuts, cuts + (denom,))]
        x = [Fraction(0)] * n
        for j, p in zip(J, parts):
            x[j - 1] = Fraction(p, denom)
        yield tuple(x)


def verify_covering_sampled(cover: KKMCover, sub: Subdivision, J: Iterable[int], denom: int) -> ValidationReport:
    """Check every grid point of the face for ``J`` against the union of ``C_j, j in J``."""
    J = sorted(set(J))
    out = []
    for x in face_grid(sub.n, J, denom):
        hits = locate(sub, x)
        if not any(_witness(cover, sub, hits, j) for j in J):
            out.append(Violation("uncovered", (), f"{point_str(x)} is in no C_j for j in {J}"))
    return ValidationReport("sampled", tuple(out))


def verify_covering_certificate(cover: KKMCover, sub: Subdivision, labels: Sequence[int],
                                mode: str = "full") -> ValidationReport:
    """Check the premises under which every face is covered by its sets ``C_j``.

    If the labeling is Sperner, the subdivision is valid and the cover is the
    one built from them, then any ``x`` on the face for ``J`` lies in a cell
    with some vertex weight ``>= 1/n``; that vertex only has positive
    coordinates inside ``J``, so its label is in ``J``.
    """
    out = list(validate_labeling(sub, labels).violations)
    out += validate(sub, mode).violations
    if not out:
        expected = build_cover(sub, labels, check=False)
        if cover != expected:
            detail = "cover differs from the one built from this labeled subdivision"
            if cover.threshold != expected.threshold:
                detail = f"cover threshold {cover.threshold} is not 1/{sub.n}"
            out.append(Violation("cover", (), detail))
    return ValidationReport("certificate", tuple(out))


def intersection_point(sub: Subdivision, labels: Sequence[int]) -> tuple[BPoint, list[Witness]]:
    """The barycenter of the first completely labeled cell with one witness per label."""
    report = find_completely_labeled(sub, labels)
    x = centroid(sub.points(report.cells[0]))
    cover = build_cover(sub, labels, check=False)
    hits = locate(sub, x)
    witnesses = [_witness(cover, sub, hits, i) for i in range(1, sub.n + 1)]
    if not all(w is not None and w.weight == Fraction(1, sub.n) for w in witnesses):
        raise SpernerViolation(f"barycenter {point_str(x)} lacks a weight-1/n witness for some label")
    return x, witnesses


def extract_cl_simplex(cover: KKMCover, sub: Subdivision, labels: Sequence[int], x: Iterable) -> Cell:
    """Recover a completely labeled cell from a point of every ``C_i``.

    Returns the witness cell for label 1.  Each label-``p`` witness vertex has
    positive weight in its own cell, so it spans the face shared with that
    cell and is therefore a vertex of the returned cell too.
    """
    x = bpoint(x)
    hits = locate(sub, x)
    witnesses = []
    for i in range(1, sub.n + 1):
        w = _witness(cover, sub, hits, i)
        if w is None:
            raise NotInIntersection(i, x)
        witnesses.append(w)
    cell = witnesses[0].cell
    if not all(w.vertex in cell for w in witnesses) or not is_completely_labeled(cell, labels, sub.n):
        raise AssertionError(f"witness cell {list(cell)} is not completely labeled")
    return cell


@dataclass(frozen=True)
class NaiveReport:
    """Vertices lying in every naive set ``D_i`` but in no completely labeled cell."""

    flagged: tuple[int, ...]
    carriers: dict[int, dict[int, Cell]]

    def to_dict(self) -> dict:
        return {
            "flagged": list(self.flagged),
            "carriers": {
                str(v): {str(i): list(c) for i, c in d.items()} for v, d in self.carriers.items()
            },
        }


def naive_cover_check(sub: Subdivision, labels: Sequence[int]) -> NaiveReport:
    """Test the naive sets ``D_i`` (all cells with an ``i``-labeled vertex) at the vertices."""
    check_instance(sub, labels)
    n = sub.n
    flagged, carriers = [], {}
    for vid, point in enumerate(sub.vertices):
        cells = [cell for cell, _ in locate(sub, point)]
        if any(is_completely_labeled(c, labels, n) for c in cells):
            continue
        via = {}
        for i in range(1, n + 1):
            c = next((c for c in cells if any(labels[v] == i for v in c)), None)
            if c is None:
                break
            via[i] = c
        else:
            flagged.append(vid)
            carriers[vid] = via
    return NaiveReport(tuple(flagged), carriers)
