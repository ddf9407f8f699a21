"""Divisor rank: positive-rank testing, exact rank, and the duality
identity r(D) - r(K - D) = deg(D) + 1 - g used as an engine self-check.

Rank is -1 when the divisor cannot reach an effective one, and otherwise
the largest r such that subtracting any effective divisor of degree r
still leaves a class with an effective representative. The production
algorithm is the recursion r(D) = 1 + min_v r(D - (v)), memoized on the
canonical 0-reduced form of each sub-divisor; the enumerate-everything
definition is kept in the test suite as an oracle.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

from .divisors import Divisor, canonical_divisor
from .enumeration import compositions
from .graphs import Multigraph
from .reduction import _reduce_values


@dataclass(frozen=True)
class RankResult:
    """Exact rank with a machine-checkable boundary witness.

    For ``value`` = -1, ``debt_vertex`` is the base vertex at which the
    reduced form stays negative. For ``value`` = r >= 0, ``witness`` is an
    effective divisor of degree r + 1 that the divisor cannot absorb
    (D - witness is not equivalent to an effective divisor).
    """

    value: int
    witness: Divisor | None = None
    debt_vertex: int | None = None


# rank memo per graph: 0-reduced values -> (rank, vertex minimizing the child rank)
_caches: "weakref.WeakKeyDictionary[Multigraph, dict]" = weakref.WeakKeyDictionary()


def _cache_for(graph: Multigraph) -> dict:
    cache = _caches.get(graph)
    if cache is None:
        cache = {}
        _caches[graph] = cache
    return cache


def has_positive_rank(divisor: Divisor) -> bool:
    """True iff D - (v) can reach an effective divisor for every vertex v.

    This is the hot probe of the gonality search: it reduces once at base
    0 and then runs one cheap reduction per chipless vertex,
    short-circuiting on the first vertex that cannot be paid off.
    """
    graph = divisor.graph
    red = _reduce_values(graph, divisor.values, 0)
    return _positive_rank_of_reduced(graph, red)


def _positive_rank_of_reduced(graph: Multigraph, red: list[int]) -> bool:
    # red must be the 0-reduced form. A chip at the base is necessary:
    # debt placed there can never be cleared otherwise, since the form is
    # already 0-reduced.
    if red[0] < 1:
        return False
    n = graph.vertex_count
    for v in range(1, n):
        if red[v] == 0:
            probe = list(red)
            probe[v] = -1
            # effective away from v, so the debt-clearing phase is a no-op
            if _reduce_values(graph, probe, v)[v] < 0:
                return False
    return True


def rank_at_least(divisor: Divisor, r: int) -> bool:
    """Decide rank(D) >= r without computing the exact value."""
    if r <= -1:
        return True
    graph = divisor.graph
    if divisor.degree < r:
        return False
    red = _reduce_values(graph, divisor.values, 0)
    if red[0] < 0:
        return False
    if r == 0:
        return True
    if r == 1:
        return _positive_rank_of_reduced(graph, red)
    n = graph.vertex_count
    for e in compositions(r, n):
        probe = [a - b for a, b in zip(red, e)]
        if min(probe) >= 0:
            continue
        if _reduce_values(graph, probe, 0)[0] < 0:
            return False
    return True


def rank(divisor: Divisor) -> RankResult:
    """Exact rank via the memoized removal recursion.

    r(D) = -1 when the 0-reduced form is negative at the base, else
    1 + min over vertices v of r(D - (v)). Arg-min vertices are recorded
    so a degree r+1 breaking divisor can be reconstructed as the witness.
    """
    graph = divisor.graph
    n = graph.vertex_count
    cache = _cache_for(graph)

    def solve(red: tuple[int, ...]) -> int:
        hit = cache.get(red)
        if hit is not None:
            return hit[0]
        if sum(red) < 0 or red[0] < 0:
            cache[red] = (-1, None)
            return -1
        best = None
        best_v = None
        for v in range(n):
            child = list(red)
            child[v] -= 1
            child_rank = solve(tuple(_reduce_values(graph, child, 0)))
            if best is None or child_rank < best:
                best = child_rank
                best_v = v
                if best == -1:
                    break
        cache[red] = (best + 1, best_v)
        return best + 1

    red0 = tuple(_reduce_values(graph, divisor.values, 0))
    value = solve(red0)
    if value == -1:
        return RankResult(value=-1, debt_vertex=0)
    chain = [0] * n
    current = red0
    for _ in range(value + 1):
        v = cache[current][1]
        chain[v] += 1
        nxt = list(current)
        nxt[v] -= 1
        current = tuple(_reduce_values(graph, nxt, 0))
    return RankResult(value=value, witness=Divisor(graph, chain))


def riemann_roch_check(divisor: Divisor) -> bool:
    """Evaluate both sides of r(D) - r(K - D) = deg(D) + 1 - g exactly.

    Always true for a correct engine; a False return signals a bug.
    """
    graph = divisor.graph
    k = canonical_divisor(graph)
    lhs = rank(divisor).value - rank(k - divisor).value
    rhs = divisor.degree + 1 - graph.genus()
    return lhs == rhs
