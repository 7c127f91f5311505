"""Falling factorials, complete shifted symmetric functions and shifted Schur
polynomials evaluated at integer points.

Everything here is exact: integers throughout, with ``Fraction`` only as the
return type of the determinant ratio.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb
from typing import Sequence

from .partitions import Partition, contains

Point = Sequence[int]

SKEW_CELL_CAP = 12


class DenominatorZero(ZeroDivisionError):
    pass


class ShapeTooLarge(ValueError):
    pass


class InnerNotContained(ValueError):
    pass


def falling(x: int, k: int) -> int:
    """x(x-1)...(x-k+1); 1 when k == 0.  ``x`` may be negative."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = 1
    for i in range(k):
        out *= x - i
    return out


def h_star(k: int, pt: Point) -> int:
    """Complete shifted symmetric function h*_k at ``pt``.

    Sums (x_{i1}-k+1)(x_{i2}-k+2)...x_{ik} over 1 <= i1 <= ... <= ik <= m.
    ``acc[t]`` holds the sum over the length-t prefixes whose indices stay
    within the variables seen so far; the t-th factor carries shift k - t.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    acc = [1] + [0] * k
    for x in pt:
        for t in range(1, k + 1):
            acc[t] += (x - (k - t)) * acc[t - 1]
    return acc[k]


@cache
def _h_star_rec(k: int, pt: tuple[int, ...]) -> int:
    if k == 0:
        return 1
    if not pt:
        return 0
    shifted = tuple(x - 1 for x in pt)
    return pt[-1] * _h_star_rec(k - 1, shifted) + _h_star_rec(k, pt[:-1])


def h_star_rec(k: int, pt: Point) -> int:
    """h*_k via peeling off the last variable:

        h*_k(x_1..x_n) = x_n h*_{k-1}(x_1-1..x_n-1) + h*_k(x_1..x_{n-1})
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    return _h_star_rec(k, tuple(pt))


def h_star_banded(k: int, x: int, lam: int, l: int, y: int) -> int:
    """h*_k at the point (x, lam repeated l times, y), by the closed double sum."""
    if l < 1:
        raise ValueError("l must be at least 1")
    total = 0
    for j in range(k + 1):
        for r in range(k - j + 1):
            total += (comb(r + l - 1, l - 1)
                      * falling(x - j - r, k - j - r)
                      * falling(lam - j, r)
                      * falling(y, j))
    return total


def _bareiss_det(m: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def s_star(mu: Partition, pt: Point) -> Fraction:
    """Shifted Schur polynomial s*_mu at ``pt`` as a ratio of determinants.

    ``pt`` is padded with zeros up to the length of ``mu``.
    """
    xs = list(pt) + [0] * max(0, len(mu) - len(pt))
    n = len(xs)
    m = list(mu) + [0] * (n - len(mu))
    shifted = [xs[i] + n - 1 - i for i in range(n)]
    num = [[falling(s, m[j] + n - 1 - j) for j in range(n)] for s in shifted]
    den = [[falling(s, n - 1 - j) for j in range(n)] for s in shifted]
    d = _bareiss_det(den)
    if d == 0:
        raise DenominatorZero(f"shifted arguments {shifted} are not distinct")
    return Fraction(_bareiss_det(num), d)


def skew_syt_count(outer: Partition, inner: Partition = (), cap: int = SKEW_CELL_CAP) -> int:
    """Count standard tableaux of shape outer/inner by removing corners one at a time."""
    if not contains(outer, inner):
        raise InnerNotContained(f"{inner} is not contained in {outer}")
    cells = sum(outer) - sum(inner)
    if cells > cap:
        raise ShapeTooLarge(f"{cells} cells exceeds the cap of {cap}")
    return _skew_count(tuple(outer), tuple(inner))


@cache
def _skew_count(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    if outer == inner:
        return 1
    total = 0
    for i, row in enumerate(outer):
        below = outer[i + 1] if i + 1 < len(outer) else 0
        floor = inner[i] if i < len(inner) else 0
        # the largest entry sits at an outer corner lying outside inner
        if row > below and row > floor:
            smaller = outer[:i] + (row - 1,) + outer[i + 1:]
            if smaller[-1] == 0:
                smaller = smaller[:-1]
            total += _skew_count(smaller, inner)
    return total
