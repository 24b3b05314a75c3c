"""Sperner labelings: checking and generating them."""

from __future__ import annotations

import random
from typing import Callable, Sequence

from .geometry import BPoint, point_str, support
from .subdivision import Subdivision, ValidationReport, Violation

Labeling = tuple[int, ...]


class OffSimplexError(ValueError):
    """A map returned a point that is not on the unit simplex."""


def validate_labeling(sub: Subdivision, labels: Sequence) -> ValidationReport:
    """Check that every vertex carries a label among its positive coordinates.

    Violation ``cells`` hold the offending vertex id, not a cell index.
    """
    out = []
    if len(labels) != len(sub.vertices):
        out.append(Violation(
            "label-count", (),
            f"{len(labels)} labels for {len(sub.vertices)} vertices",
        ))
    for vid, point in enumerate(sub.vertices):
        label = labels[vid] if vid < len(labels) else None
        if label is None:
            out.append(Violation("missing-label", (vid,), f"vertex {vid} has no label"))
        elif not isinstance(label, int) or not 1 <= label <= sub.n:
            out.append(Violation("label-range", (vid,), f"vertex {vid} label {label!r} not in 1..{sub.n}"))
        elif label not in support(point):
            out.append(Violation(
                "sperner", (vid,),
                f"vertex {vid} at {point_str(point)} labeled {label}, "
                f"not in positive coordinates {sorted(support(point))}",
            ))
    return ValidationReport("labeling", tuple(out))


def random_sperner_labeling(sub: Subdivision, seed: int) -> Labeling:
    """Each vertex draws its label uniformly from its support; reproducible per seed."""
    rng = random.Random(seed)
    return tuple(rng.choice(sorted(support(p))) for p in sub.vertices)


def check_on_simplex(image: Sequence, n: int) -> None:
    if len(image) != n or any(c < 0 for c in image) or sum(image) != 1:
        raise OffSimplexError(f"map output {point_str(image)} is not on the unit simplex")


def label_from_map(v: BPoint, image: BPoint) -> int:
    # both sides sum to 1, so some positive coordinate of v does not grow
    return next(i + 1 for i, (a, b) in enumerate(zip(v, image)) if a > 0 and b <= a)


def labeling_from_map(sub: Subdivision, f: Callable[[BPoint], BPoint]) -> Labeling:
    """Label each vertex by the smallest positive coordinate that ``f`` does not increase."""
    labels = []
    for v in sub.vertices:
        image = tuple(f(v))
        check_on_simplex(image, sub.n)
        labels.append(label_from_map(v, image))
    return tuple(labels)
