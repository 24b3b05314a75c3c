"""Brute-force reference computations, deliberately independent of the library code paths."""

from fractions import Fraction
from itertools import permutations, product


def perm_sign(p):
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def leibniz_det(rows):
    n = len(rows)
    total = Fraction(0)
    for p in permutations(range(n)):
        term = Fraction(perm_sign(p))
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


def columns(points):
    return [[p[i] for p in points] for i in range(len(points[0]))]


def cramer_weights(points, x):
    A = columns(points)
    D = leibniz_det(A)
    out = []
    for j in range(len(points)):
        B = [row[:] for row in A]
        for i in range(len(x)):
            B[i][j] = x[i]
        out.append(leibniz_det(B) / D)
    return out


def count_completely_labeled(n, cells, labels):
    """Recount from raw label lists: a cell counts iff every label 1..n occurs in it."""
    count = 0
    for cell in cells:
        seen = [False] * (n + 1)
        for v in cell:
            seen[labels[v]] = True
        if all(seen[1:]):
            count += 1
    return count


def simplex_grid(n, denom):
    """All points of the simplex with coordinates in (1/denom)Z, by nested enumeration."""
    for head in product(range(denom + 1), repeat=n - 1):
        if sum(head) <= denom:
            yield tuple(Fraction(k, denom) for k in head + (denom - sum(head),))
