"""Deterministic enumeration of divisor candidate spaces.

Compositions (chip-count tuples) stream in lexicographic order; fixed-size
chip supports stream in colexicographic order, with exact ranking and
unranking so the space can be split into contiguous index ranges for
worker pools.
"""

from __future__ import annotations

from math import comb
from typing import Iterator


def composition_count(total: int, parts: int) -> int:
    """Number of tuples of ``parts`` non-negative ints summing to ``total``."""
    return comb(total + parts - 1, parts - 1)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` non-negative ints summing to ``total``,
    in ascending lexicographic order."""
    if parts < 1:
        raise ValueError("parts must be positive")
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def compositions_first_positive(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions whose first entry is at least 1, lex ascending."""
    if total < 1:
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def compositions_first_positive_count(total: int, parts: int) -> int:
    if total < 1:
        return 0
    return composition_count(total - 1, parts)


def colex_rank(subset: tuple[int, ...]) -> int:
    """Position of an ascending index tuple in colexicographic order."""
    return sum(comb(c, i + 1) for i, c in enumerate(subset))


def colex_unrank(index: int, size: int) -> tuple[int, ...]:
    """Inverse of :func:`colex_rank` for subsets of the given size."""
    result = [0] * size
    remaining = index
    for i in range(size, 0, -1):
        # largest c with comb(c, i) <= remaining; at least i - 1
        c = i - 1
        while comb(c + 1, i) <= remaining:
            c += 1
        result[i - 1] = c
        remaining -= comb(c, i)
    if remaining:
        raise ValueError(f"index {index} out of range for size {size}")
    return tuple(result)


def subsets_colex(
    n: int, size: int, start: int = 0, stop: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Size-``size`` subsets of range(n) in colexicographic order.

    ``start``/``stop`` select a contiguous slice of colex indices, which
    is how the search splits work between processes.
    """
    total = comb(n, size)
    if stop is None or stop > total:
        stop = total
    if start >= stop or size == 0:
        if size == 0 and start == 0 and stop > 0:
            yield ()
        return
    current = list(colex_unrank(start, size))
    for _ in range(stop - start):
        yield tuple(current)
        # successor: bump the lowest entry with free room, reset below it
        for i in range(size):
            ceiling = current[i + 1] if i + 1 < size else n
            if current[i] + 1 < ceiling:
                current[i] += 1
                for j in range(i):
                    current[j] = j
                break
