"""Exact feasibility test for ``A y = b, y >= 0`` (phase one of the simplex method).

Rational tableau with Bland's rule, so it terminates and never rounds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from gmpy2 import mpq


def _q(v) -> mpq:
    v = Fraction(v)
    return mpq(v.numerator, v.denominator)


def feasible(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """Return a nonnegative solution of ``A y = b`` or ``None`` if there is none."""
    m = len(A)
    nvars = len(A[0]) if m else 0
    rows = []
    for row, rhs in zip(A, b):
        row = [_q(v) for v in row]
        rhs = _q(rhs)
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append(row + [mpq(int(i == len(rows))) for i in range(m)] + [rhs])
    total = nvars + m
    basis = [nvars + i for i in range(m)]
    # reduced costs of the phase-one objective (sum of artificials)
    cost = [mpq(0)] * (total + 1)
    for row in rows:
        for j in range(nvars):
            cost[j] -= row[j]
        cost[total] -= row[total]

    while True:
        entering = next((j for j in range(total) if cost[j] < 0), None)
        if entering is None:
            break
        leave, best = None, None
        for i, row in enumerate(rows):
            if row[entering] > 0:
                ratio = row[total] / row[entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            # cannot happen: the phase-one objective is bounded below by zero
            raise RuntimeError("unbounded phase-one problem")
        piv = rows[leave][entering]
        rows[leave] = [v / piv for v in rows[leave]]
        for i, row in enumerate(rows):
            if i != leave and row[entering] != 0:
                f = row[entering]
                rows[i] = [v - f * w if w else v for v, w in zip(row, rows[leave])]
        f = cost[entering]
        cost = [v - f * w if w else v for v, w in zip(cost, rows[leave])]
        basis[leave] = entering

    if cost[total] != 0:
        return None
    y = [Fraction(0)] * nvars
    for i, var in enumerate(basis):
        if var < nvars:
            q = rows[i][total]
            y[var] = Fraction(int(q.numerator), int(q.denominator))
    return y
