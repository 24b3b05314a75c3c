"""Search for completely labeled cells."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .labeling import validate_labeling
from .subdivision import Cell, Subdivision, validate


class InvalidInstanceError(ValueError):
    def __init__(self, report):
        self.report = report
        first = report.violations[0].detail if report.violations else ""
        super().__init__(f"{report.mode} validation failed: {first}")


class SpernerViolation(AssertionError):
    """A valid instance produced no completely labeled cell (a bug, never an outcome)."""


@dataclass(frozen=True)
class CLReport:
    cells: tuple[Cell, ...]

    @property
    def count(self) -> int:
        return len(self.cells)

    def to_dict(self) -> dict:
        return {"count": self.count, "cells": [list(c) for c in self.cells]}


def check_instance(sub: Subdivision, labels: Sequence[int], mode: str = "fast") -> None:
    for report in (validate(sub, mode), validate_labeling(sub, labels)):
        if not report.passed:
            raise InvalidInstanceError(report)


def is_completely_labeled(cell: Cell, labels: Sequence[int], n: int) -> bool:
    return sorted(labels[v] for v in cell) == list(range(1, n + 1))


def find_completely_labeled(sub: Subdivision, labels: Sequence[int], check: bool = True) -> CLReport:
    """All cells whose vertices carry the labels ``1..n`` exactly once, in canonical order."""
    if check:
        check_instance(sub, labels)
    found = tuple(c for c in sub.cells if is_completely_labeled(c, labels, sub.n))
    if not found:
        raise SpernerViolation("no completely labeled cell in a valid labeled subdivision")
    return CLReport(found)
