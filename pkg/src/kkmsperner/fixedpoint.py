"""Approximate fixed points of maps of the simplex through Sperner search."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .geometry import BPoint, basis, centroid, format_rational
from .labeling import check_on_simplex, labeling_from_map, validate_labeling
from .sperner import InvalidInstanceError, find_completely_labeled
from .subdivision import edgewise_subdivision


@dataclass(frozen=True)
class MapSpec:
    name: str
    func: Callable[[BPoint], BPoint]

    def __call__(self, x: BPoint) -> BPoint:
        image = tuple(Fraction(c) for c in self.func(x))
        check_on_simplex(image, len(x))
        return image


def _rotate(x):
    return (x[-1],) + tuple(x[:-1])


def _const_e1(x):
    return basis(len(x), 1)


MAPS = {
    "identity": MapSpec("identity", tuple),
    "rotate": MapSpec("rotate", _rotate),
    "const-e1": MapSpec("const-e1", _const_e1),
}


def rationalize(values: Sequence[float], denom: int) -> BPoint:
    """Round a floating map output to multiples of ``1/denom`` and rescale to unit sum."""
    rounded = [Fraction(max(round(v * denom), 0), denom) for v in values]
    total = sum(rounded)
    if total == 0:
        raise ValueError("all coordinates rounded to zero")
    return tuple(c / total for c in rounded)


@dataclass(frozen=True)
class TraceStep:
    m: int
    point: BPoint
    residual: Fraction

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "coords": [format_rational(c) for c in self.point],
            "residual": format_rational(self.residual),
        }


def residual(f: Callable[[BPoint], BPoint], x: BPoint) -> Fraction:
    return max(abs(a - b) for a, b in zip(f(x), x))


def approximate_fixed_point(f: Callable[[BPoint], BPoint], n: int, schedule: Sequence[int]) -> list[TraceStep]:
    """For each resolution, the barycenter of the first completely labeled cell of the map labeling."""
    schedule = list(schedule)
    if not schedule:
        raise ValueError("empty schedule")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly increasing")
    trace = []
    for m in schedule:
        sub = edgewise_subdivision(n, m)
        labels = labeling_from_map(sub, f)
        report = validate_labeling(sub, labels)
        if not report.passed:
            raise InvalidInstanceError(report)
        cells = find_completely_labeled(sub, labels, check=False).cells
        x = centroid(sub.points(cells[0]))
        trace.append(TraceStep(m, x, residual(f, x)))
    return trace
