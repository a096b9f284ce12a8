"""Fraction-free exact linear algebra over Q.

Vectors are lists of Python ints (rational input is cleared of
denominators row by row, which preserves row spaces and kernels).  Rows are
kept primitive, so entries stay small.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce


def integral_row(row):
    """Scale a rational row to a primitive integer row with the same span."""
    if all(type(x) is int for x in row):
        return primitive(row)
    row = [Fraction(x) for x in row]
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (x.denominator for x in row), 1)
    ints = [int(x * den) for x in row]
    return primitive(ints)


def primitive(v):
    g = reduce(math.gcd, v, 0)
    if g <= 1:
        first = next((x for x in v if x), 0)
        return [-x for x in v] if first < 0 else list(v)
    first = next(x for x in v if x)
    sign = -1 if first < 0 else 1
    return [sign * (x // g) for x in v]


class Span:
    """Incrementally grown row space, stored in echelon form."""

    def __init__(self, width):
        self.width = width
        self._rows = {}  # pivot column -> primitive row, zero left of the pivot

    @property
    def rank(self):
        return len(self._rows)

    def reduce(self, v):
        v = list(v)
        for col in sorted(self._rows):
            if v[col]:
                row = self._rows[col]
                p, q = row[col], v[col]
                v = [p * a - q * b for a, b in zip(v, row)]
                v = primitive(v)
        return v

    def add(self, v):
        """Insert v; return True when the rank went up."""
        v = self.reduce(v)
        for col, x in enumerate(v):
            if x:
                self._rows[col] = v
                return True
        return False

    def __contains__(self, v):
        return not any(self.reduce(v))

    def basis(self):
        return [self._rows[c] for c in sorted(self._rows)]


def rref(rows, width):
    """Fraction-free reduced echelon form: list of (pivot, row) with each pivot
    column zero in every other row."""
    span = Span(width)
    for r in rows:
        span.add(integral_row(r) if any(not isinstance(x, int) for x in r) else r)
    pivots = sorted(span._rows)
    reduced = {c: span._rows[c] for c in pivots}
    for c in reversed(pivots):
        pivot_row = reduced[c]
        for c2 in pivots:
            if c2 < c and reduced[c2][c]:
                row = reduced[c2]
                p, q = pivot_row[c], row[c]
                reduced[c2] = primitive([p * a - q * b for a, b in zip(row, pivot_row)])
    return [(c, reduced[c]) for c in pivots]


def rank(rows, width):
    span = Span(width)
    for r in rows:
        span.add(r)
    return span.rank


def nullspace(rows, width):
    """Basis of {x : A x = 0} for the matrix with the given rows, one vector per
    free column, in increasing order of the free column."""
    echelon = rref(rows, width)
    pivot_cols = {c for c, _ in echelon}
    basis = []
    for free in range(width):
        if free in pivot_cols:
            continue
        denom = reduce(lambda a, b: a * b // math.gcd(a, b),
                       (abs(row[c]) for c, row in echelon if row[free]), 1)
        v = [0] * width
        v[free] = denom
        for c, row in echelon:
            if row[free]:
                v[c] = -row[free] * denom // row[c]
        basis.append(primitive(v))
    return basis


def as_fraction(x):
    return x if isinstance(x, Fraction) else Fraction(x)
