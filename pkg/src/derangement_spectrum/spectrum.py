"""Eigenvalues of the derangement graph.

The eigenvalue attached to the irreducible character indexed by a partition
``lam`` is computed four ways:

* ``eta_new``: recurrence on the first column and the last row,
* ``eta_renteln``: recurrence on the hook and the first column,
* ``eta_schur_sum``: alternating sum of complete shifted symmetric functions,
* ``eta_character``: character sum over derangement classes (test oracle).

Each recurrence keeps its own memo table so that the routes stay independent
when cross-checked.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cache
from math import factorial

from .characters import character, derangement_classes
from .partitions import (
    Partition,
    dim,
    enumerate_partitions,
    remove_first_column,
    remove_hook,
    remove_last_row,
    strip_zeros,
)
from .shifted import h_star

ORACLE_CAP = 12


class TooLarge(ValueError):
    """The character oracle was asked for a partition above its size cap."""


class BadIndex(ValueError):
    pass


class TooSmall(ValueError):
    pass


@dataclass(frozen=True)
class SpectrumEntry:
    partition: Partition
    eta: int
    sign: int
    multiplicity: int


@cache
def derangement_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = 1, 0
    for m in range(2, n + 1):
        a, b = b, (m - 1) * (a + b)
    return a if n == 0 else b


@cache
def eta_new(lam: Partition) -> int:
    if not lam:
        return 1
    r, last = len(lam), lam[-1]
    col = eta_new(remove_first_column(lam))
    row = eta_new(remove_last_row(lam))
    return (-1) ** (r - 1) * last * col + (-1) ** last * row


@cache
def eta_renteln(lam: Partition) -> int:
    if not lam:
        return 1
    h = lam[0] + len(lam) - 1
    return ((-1) ** h * eta_renteln(remove_hook(lam))
            + (-1) ** (h + lam[0]) * h * eta_renteln(remove_first_column(lam)))


def eta_schur_sum(lam: Partition) -> int:
    n = sum(lam)
    return sum((-1) ** (n - k) * h_star(k, lam) for k in range(n + 1))


def eta_character(lam: Partition, cap: int = ORACLE_CAP) -> int:
    """Eigenvalue from the character formula: sum of chi over derangements / dim."""
    n = sum(lam)
    if n > cap:
        raise TooLarge(f"|lambda| = {n} exceeds the oracle cap {cap}")
    total = sum(c.class_size * character(lam, c.shape) for c in derangement_classes(n))
    q, r = divmod(total, dim(lam))
    if r:
        raise AssertionError(f"character sum for {lam} is not divisible by its dimension")
    return q


ROUTES = {
    "new": eta_new,
    "renteln": eta_renteln,
    "schur": eta_schur_sum,
    "character": eta_character,
}


@cache
def _abs_eta(lam: Partition) -> int:
    if not lam:
        return 1
    if len(lam) == 1:
        return derangement_number(lam[0])
    return lam[-1] * _abs_eta(remove_first_column(lam)) + _abs_eta(remove_last_row(lam))


def abs_eta(lam) -> int:
    """|eta_lam| through the all-positive recurrence

        f(l_1..l_r) = l_r f(l_1-1..l_r-1) + f(l_1..l_{r-1}),  r >= 2,

    with f(m) = D_m for a single row (the two terms of the signed recurrence
    disagree in sign there when m is odd).  Trailing zeros are ignored.
    """
    return _abs_eta(strip_zeros(lam))


def abs_eta_expanded(lam: Partition, m: int) -> int:
    """|eta_lam| by splitting the rows at ``m`` (1-based, 2 <= m <= r):

        sum_k h*_k(l_m..l_r) * f(l_1-k..l_{m-1}-k),  k = 0..l_m.
    """
    if not 2 <= m <= len(lam):
        raise BadIndex(f"m={m} outside 2..{len(lam)}")
    head, tail = lam[:m - 1], lam[m - 1:]
    return sum(h_star(k, tail) * abs_eta(tuple(x - k for x in head))
               for k in range(lam[m - 1] + 1))


def asp_sign(lam: Partition) -> int:
    """(-1)^(number of cells below the first row); defined for |lam| >= 2."""
    n = sum(lam)
    if n < 2:
        raise TooSmall("the sign rule is only asserted for n > 1")
    return -1 if (n - lam[0]) % 2 else 1


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def spectrum_entry(lam: Partition) -> SpectrumEntry:
    eta = eta_new(lam)
    return SpectrumEntry(lam, eta, sign(eta), dim(lam) ** 2)


def spectrum_table(n: int, min_first_part: int | None = None, jobs: int = 1) -> list[SpectrumEntry]:
    """One entry per partition of ``n``, in decreasing lexicographic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    parts = enumerate_partitions(n, min_first_part)
    if jobs > 1 and len(parts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(spectrum_entry, parts, chunksize=16))
    return [spectrum_entry(p) for p in parts]


def trace_moments(n: int) -> tuple[int, int, int]:
    """(sum dim^2, sum dim^2 eta, sum dim^2 eta^2) over partitions of n.

    These are the traces of I, A and A^2 for the adjacency matrix A, so they
    must equal (n!, 0, n! D_n).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    s0 = s1 = s2 = 0
    for lam in enumerate_partitions(n):
        d2 = dim(lam) ** 2
        e = eta_new(lam)
        s0 += d2
        s1 += d2 * e
        s2 += d2 * e * e
    return s0, s1, s2


def expected_trace_moments(n: int) -> tuple[int, int, int]:
    return factorial(n), 0, factorial(n) * derangement_number(n)
