"""Irreducible characters of S_n by the Murnaghan-Nakayama rule, and the
conjugacy classes of derangements.

Border strips are removed on the beta-set (first-column hook lengths) of the
shape: removing a strip of length k is moving a bead from position b to an
empty position b - k, and the strip's height is the number of beads jumped.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import factorial, prod

from .partitions import Partition, enumerate_partitions


@dataclass(frozen=True)
class CycleType:
    shape: Partition
    class_size: int


def class_size(shape: Partition) -> int:
    """Number of permutations of |shape| points with cycle type ``shape``."""
    n = sum(shape)
    return factorial(n) // prod(i ** m * factorial(m) for i, m in Counter(shape).items())


def derangement_classes(n: int) -> list[CycleType]:
    """Cycle types of S_n with no fixed point, with their class sizes."""
    return [CycleType(p, class_size(p))
            for p in enumerate_partitions(n) if not p or p[-1] > 1]


def _beta(shape: Partition) -> frozenset[int]:
    r = len(shape)
    return frozenset(part + r - 1 - i for i, part in enumerate(shape))


def _shape(beta: frozenset[int]) -> Partition:
    ordered = sorted(beta, reverse=True)
    r = len(ordered)
    return tuple(x for x in (b - (r - 1 - i) for i, b in enumerate(ordered)) if x > 0)


@cache
def _mn(shape: Partition, cycles: Partition) -> int:
    if not cycles:
        return 1 if not shape else 0
    k, rest = cycles[0], cycles[1:]
    beta = _beta(shape)
    total = 0
    for b in beta:
        if b - k < 0 or (b - k) in beta:
            continue
        height = sum(1 for c in beta if b - k < c < b)
        smaller = _shape((beta - {b}) | {b - k})
        value = _mn(smaller, rest)
        total += -value if height % 2 else value
    return total


def character(shape: Partition, cycle_type: Partition) -> int:
    """chi_shape evaluated on the class of cycle type ``cycle_type``."""
    if sum(shape) != sum(cycle_type):
        raise ValueError(f"{shape} and {cycle_type} have different sizes")
    return _mn(tuple(shape), tuple(sorted(cycle_type, reverse=True)))
