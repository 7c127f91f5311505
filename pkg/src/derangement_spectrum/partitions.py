"""Integer partitions as canonical tuples.

A partition is stored as a plain ``tuple[int, ...]`` of positive, weakly
decreasing parts; the empty tuple is the unique partition of 0.  Parts beyond
the length of a partition are read as 0 by every comparison in this module.
"""

from __future__ import annotations

import re
from functools import cache
from itertools import accumulate, groupby, zip_longest
from math import factorial, prod
from typing import Iterable, NamedTuple

Partition = tuple[int, ...]

EMPTY: Partition = ()


class PartitionError(ValueError):
    """Base class for every partition-level error."""


class MalformedText(PartitionError):
    pass


class NotWeaklyDecreasing(PartitionError):
    pass


class ZeroPart(PartitionError):
    pass


class EmptyPartition(PartitionError):
    pass


class SizeMismatch(PartitionError):
    pass


class NotComparable(PartitionError):
    pass


class HookData(NamedTuple):
    hook_size: int
    column_size: int
    last_row_size: int


def make(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return them as a canonical partition tuple."""
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ZeroPart(f"parts must be positive: {p}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise NotWeaklyDecreasing(f"parts must be weakly decreasing: {p}")
    return p


def strip_zeros(parts: Iterable[int]) -> Partition:
    """Drop zero parts from a weakly decreasing non-negative sequence."""
    return tuple(x for x in parts if x > 0)


# ---------------------------------------------------------------------------
# text form

_ITEM = re.compile(r"(\d+)(?:\^(\d+))?\Z")


def parse(text: str) -> Partition:
    """Parse ``"5^2,4^2,2^3,1"``-style text into a partition.

    Grammar: ``partition := "(" ")" | ["("] item ("," item)* [")"]`` with
    ``item := INT | INT "^" INT``.  Spaces and tabs are ignored anywhere.
    """
    s = text.replace(" ", "").replace("\t", "")
    if s == "()":
        return EMPTY
    if s.startswith("("):
        s = s[1:]
    if s.endswith(")"):
        s = s[:-1]
    if not s:
        raise MalformedText(f"partition: expected '()' or at least one item in {text!r}")
    if "(" in s or ")" in s:
        raise MalformedText(f"partition: parentheses only allowed at the ends of {text!r}")
    parts: list[int] = []
    for item in s.split(","):
        m = _ITEM.match(item)
        if m is None:
            raise MalformedText(f"item: expected INT or INT^INT, got {item!r}")
        base = int(m.group(1))
        exponent = 1 if m.group(2) is None else int(m.group(2))
        if base == 0:
            raise ZeroPart(f"item: part must be >= 1, got {item!r}")
        if exponent == 0:
            raise MalformedText(f"item: exponent must be >= 1, got {item!r}")
        parts.extend([base] * exponent)
    return make(parts)


def format(p: Partition, style: str = "plain") -> str:  # noqa: A001
    """Render ``p`` as ``"4,3,1,1"`` (plain) or ``"4,3,1^2"`` (exponent)."""
    if not p:
        return "()"
    if style == "plain":
        return ",".join(map(str, p))
    if style == "exponent":
        items = []
        for part, run in groupby(p):
            k = len(list(run))
            items.append(str(part) if k == 1 else f"{part}^{k}")
        return ",".join(items)
    raise ValueError(f"unknown style {style!r}")


# ---------------------------------------------------------------------------
# diagram surgery

def hook_data(p: Partition) -> HookData:
    if not p:
        raise EmptyPartition("hook data of the empty partition")
    return HookData(p[0] + len(p) - 1, len(p), p[-1])


def remove_hook(p: Partition) -> Partition:
    """Remove the first row and first column together."""
    if not p:
        raise EmptyPartition("cannot remove the hook of the empty partition")
    return tuple(x - 1 for x in p[1:] if x > 1)


def remove_first_column(p: Partition) -> Partition:
    if not p:
        raise EmptyPartition("cannot remove the first column of the empty partition")
    return tuple(x - 1 for x in p if x > 1)


def remove_last_row(p: Partition) -> Partition:
    if not p:
        raise EmptyPartition("cannot remove the last row of the empty partition")
    return p[:-1]


def contains(outer: Partition, inner: Partition) -> bool:
    """True iff the diagram of ``inner`` fits inside ``outer``."""
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


# ---------------------------------------------------------------------------
# orders

def _check_sizes(a: Partition, b: Partition) -> None:
    if sum(a) != sum(b):
        raise SizeMismatch(f"{a} and {b} have different sizes")


def dominates(a: Partition, b: Partition) -> bool:
    """True iff ``b`` is dominated by ``a`` (prefix sums of b never exceed a's)."""
    _check_sizes(a, b)
    pa = accumulate(x for x, _ in zip_longest(a, b, fillvalue=0))
    pb = accumulate(y for _, y in zip_longest(a, b, fillvalue=0))
    return all(y <= x for x, y in zip(pa, pb))


def lex_less(a: Partition, b: Partition) -> bool:
    _check_sizes(a, b)
    for x, y in zip_longest(a, b, fillvalue=0):
        if x != y:
            return x < y
    return False


def one_move(a: Partition, b: Partition) -> tuple[int, int] | None:
    """Return the 1-based rows ``(m1, m2)`` of a corner slide taking ``a`` to ``b``.

    ``b`` must equal ``a`` with row ``m1`` lengthened by one box and a lower
    row ``m2`` shortened by one.  Returns None when no such move exists.
    """
    _check_sizes(a, b)
    if len(b) > len(a):
        return None
    diff = [y - x for x, y in zip_longest(a, b, fillvalue=0)]
    nonzero = [(i, d) for i, d in enumerate(diff) if d]
    if len(nonzero) != 2:
        return None
    (i, di), (j, dj) = nonzero
    if (di, dj) != (1, -1):
        return None
    return i + 1, j + 1


def covers_one_move(a: Partition, b: Partition) -> bool:
    """True iff ``a <_1 b``: b is a with one outside corner slid upwards."""
    return one_move(a, b) is not None


def dominance_chain(start: Partition, end: Partition) -> list[Partition]:
    """Build ``[start, ..., end]`` where each step is a single corner slide.

    Each step lengthens the first row where ``start`` and ``end`` differ and
    shortens the first lower row at which the prefix sums meet again.  That
    row is strictly longer in the current partition than in ``end`` and
    strictly longer than its successor, so the result is again a partition
    dominated by ``end``.
    """
    _check_sizes(start, end)
    if not dominates(end, start):
        raise NotComparable(f"{format(end)} does not dominate {format(start)}")
    chain = [start]
    cur = list(start)
    target = list(end)
    while cur != target:
        width = max(len(cur), len(target))
        c = cur + [0] * (width - len(cur))
        t = target + [0] * (width - len(target))
        i = next(k for k in range(width) if c[k] != t[k])
        gap = 0
        for j in range(i, width):
            gap += t[j] - c[j]
            if gap == 0:
                break
        c[i] += 1
        c[j] -= 1
        cur = [x for x in c if x > 0]
        chain.append(tuple(cur))
    return chain


# ---------------------------------------------------------------------------
# enumeration

@cache
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out: list[Partition] = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def enumerate_partitions(n: int, min_first_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    ps = _partitions(n, n)
    if min_first_part is not None:
        ps = tuple(p for p in ps if p and p[0] >= min_first_part)
    return list(ps)


def lex_max_with_first_part(n: int, first: int) -> Partition:
    """Largest partition of ``n`` in lex order whose first part is ``first``."""
    if not 1 <= first <= n:
        raise ValueError(f"first part {first} out of range for n={n}")
    q, r = divmod(n, first)
    return (first,) * q + ((r,) if r else ())


def hook_with_tail(n: int, first: int) -> Partition:
    """The partition ``(first, 1^(n - first))``."""
    if not 1 <= first <= n:
        raise ValueError(f"first part {first} out of range for n={n}")
    return (first,) + (1,) * (n - first)


# ---------------------------------------------------------------------------
# hooks and dimensions

def conjugate_lengths(p: Partition) -> list[int]:
    """Column lengths of the diagram of ``p``."""
    return [sum(1 for x in p if x > j) for j in range(p[0])] if p else []


def hook_product(p: Partition) -> int:
    cols = conjugate_lengths(p)
    return prod((row - j - 1) + (cols[j] - i - 1) + 1
                for i, row in enumerate(p) for j in range(row))


def dim(p: Partition) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook length formula)."""
    n = sum(p)
    q, r = divmod(factorial(n), hook_product(p))
    assert r == 0, f"hook product of {p} does not divide {n}!"
    return q
