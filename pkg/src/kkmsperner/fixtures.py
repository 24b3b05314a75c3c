"""The worked example: seven cells, one completely labeled cell, one misleading vertex."""

from __future__ import annotations

from fractions import Fraction as F

from .subdivision import Subdivision

FIG1_POINTS = {
    "e1": (F(1), F(0), F(0)),
    "e2": (F(0), F(1), F(0)),
    "e3": (F(0), F(0), F(1)),
    "a": (F(2, 3), F(1, 3), F(0)),
    "b": (F(1, 3), F(2, 3), F(0)),
    "c": (F(0), F(3, 5), F(2, 5)),
    "d": (F(1, 2), F(0), F(1, 2)),
    "e": (F(1, 3), F(1, 3), F(1, 3)),
}
FIG1_LABELS = {"e1": 1, "e2": 2, "e3": 3, "a": 2, "b": 1, "c": 2, "d": 1, "e": 2}
FIG1_CELLS = [
    ("e1", "a", "d"), ("a", "d", "e"), ("a", "b", "e"), ("b", "c", "e"),
    ("b", "e2", "c"), ("c", "e3", "e"), ("d", "e", "e3"),
]
# vertex id of each named point
FIG1_IDS = {name: i for i, name in enumerate(FIG1_POINTS)}


def fig1() -> tuple[Subdivision, tuple[int, ...]]:
    sub = Subdivision(3, FIG1_POINTS.values(), [[FIG1_IDS[v] for v in c] for c in FIG1_CELLS])
    labels = tuple(FIG1_LABELS[name] for name in FIG1_POINTS)
    return sub, labels


def fig1_cell(*names: str) -> tuple[int, ...]:
    return tuple(sorted(FIG1_IDS[v] for v in names))
