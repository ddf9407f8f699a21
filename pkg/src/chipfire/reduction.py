"""Dhar's burning algorithm and two-phase reduction to the unique
q-reduced representative of a divisor class.

A divisor is q-reduced when it is effective away from q and no subset of
V - {q} can fire legally. Burning certifies the second condition: a fire
started at q spreads along edges, a vertex burning once more edges burn
around it than it has chips; whatever survives is a legal firing set.

Reduction runs in two phases. Phase 1 clears debt away from q by firing
breadth-first-layer prefixes (closed-form repetition counts, recorded in
the script). Phase 2 repeatedly burns from q and fires the surviving set
once per pass until everything burns.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .divisors import Divisor
from .graphs import Multigraph

Adjacency = tuple[tuple[tuple[int, int], ...], ...]


# -- burning kernels -------------------------------------------------------
#
# The final burned set is a closure and does not depend on propagation
# order, so the hot-path kernels use a plain stack. Only the public
# BurnReport needs a deterministic order (lowest ready vertex first).


def _burned_flags(adjacency: Adjacency, chips, source: int) -> bytearray:
    """Burned-vertex flags after one full burning pass from ``source``.

    ``chips`` may be any indexable of ints; chips at the source are
    irrelevant (it burns unconditionally). Debt off the source makes a
    vertex burn immediately once any incident edge burns, which is the
    desired semantics for phase-2 passes (no debt off source there).
    """
    n = len(adjacency)
    count = [0] * n
    burned = bytearray(n)
    burned[source] = 1
    stack = [source]
    push = stack.append
    while stack:
        v = stack.pop()
        for u, m in adjacency[v]:
            if not burned[u]:
                c = count[u] + m
                count[u] = c
                if c > chips[u]:
                    burned[u] = 1
                    push(u)
    return burned


def _burns_all(adjacency: Adjacency, chips, source: int) -> bool:
    n = len(adjacency)
    count = [0] * n
    burned = bytearray(n)
    burned[source] = 1
    remaining = n - 1
    stack = [source]
    push = stack.append
    while stack:
        v = stack.pop()
        for u, m in adjacency[v]:
            if not burned[u]:
                c = count[u] + m
                count[u] = c
                if c > chips[u]:
                    burned[u] = 1
                    remaining -= 1
                    push(u)
    return remaining == 0


@dataclass(frozen=True)
class BurnReport:
    """Outcome of one burning pass.

    ``burned_order`` starts at the source; together with ``unburned`` it
    partitions the vertex set. A non-empty unburned set is a legal firing
    move for the divisor (restricted away from the source).
    """

    source: int
    burned_order: tuple[int, ...]
    unburned: frozenset[int]

    @property
    def everything_burned(self) -> bool:
        return not self.unburned


def dhar(divisor: Divisor, q: int) -> BurnReport:
    """Run one burning pass from ``q``.

    Requires the divisor to be effective away from q (chips at q are
    unconstrained). Ties among simultaneously ready vertices break by
    ascending index, so reports are reproducible.
    """
    graph = divisor.graph
    n = graph.vertex_count
    if not (0 <= q < n):
        raise ValueError(f"vertex {q} out of range")
    chips = divisor.values
    for v in range(n):
        if v != q and chips[v] < 0:
            raise ValueError(f"vertex {v} is in debt; burning requires debt only at {q}")
    adjacency = graph.adjacency
    count = [0] * n
    burned = bytearray(n)
    burned[q] = 1
    order = [q]
    ready: list[int] = []
    for u, m in adjacency[q]:
        count[u] = m
        if m > chips[u]:
            heapq.heappush(ready, u)
    while ready:
        v = heapq.heappop(ready)
        if burned[v]:
            continue
        burned[v] = 1
        order.append(v)
        for u, m in adjacency[v]:
            if not burned[u]:
                count[u] += m
                if count[u] > chips[u]:
                    heapq.heappush(ready, u)
    unburned = frozenset(v for v in range(n) if not burned[v])
    return BurnReport(source=q, burned_order=tuple(order), unburned=unburned)


# -- reduction ---------------------------------------------------------------


def _apply_firing(adjacency: Adjacency, values: list[int], members: frozenset[int], times: int) -> None:
    for v in members:
        for u, m in adjacency[v]:
            if u not in members:
                step = m * times
                values[v] -= step
                values[u] += step


def _bfs_layers(adjacency: Adjacency, q: int) -> list[list[int]]:
    n = len(adjacency)
    dist = [-1] * n
    dist[q] = 0
    layers = [[q]]
    frontier = [q]
    while frontier:
        nxt = []
        for v in frontier:
            for u, _ in adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        if nxt:
            layers.append(sorted(nxt))
        frontier = nxt
    return layers


def _clear_debt(
    adjacency: Adjacency, values: list[int], q: int
) -> list[tuple[frozenset[int], int]]:
    """Phase 1: make values non-negative away from q.

    Vertices are layered by BFS distance from q. Working from the
    outermost layer inward, fire the prefix T = L_0 | ... | L_{i-1} just
    enough times to lift layer i out of debt; edges leave T only into
    layer i, so layers already fixed stay non-negative and all residual
    debt drains to q.
    """
    script: list[tuple[frozenset[int], int]] = []
    if all(values[v] >= 0 for v in range(len(values)) if v != q):
        return script
    layers = _bfs_layers(adjacency, q)
    prefix: set[int] = set()
    prefixes: list[frozenset[int]] = []
    for layer in layers:
        prefix |= set(layer)
        prefixes.append(frozenset(prefix))
    for i in range(len(layers) - 1, 0, -1):
        inner = prefixes[i - 1]
        times = 0
        for v in layers[i]:
            debt = -values[v]
            if debt > 0:
                feed = sum(m for u, m in adjacency[v] if u in inner)
                times = max(times, -(-debt // feed))
        if times:
            _apply_firing(adjacency, values, inner, times)
            script.append((inner, times))
    return script


def _reduce_values(graph: Multigraph, values, q: int) -> list[int]:
    """Fast reduction without script bookkeeping."""
    adjacency = graph.adjacency
    vals = list(values)
    _clear_debt(adjacency, vals, q)
    n = graph.vertex_count
    while True:
        burned = _burned_flags(adjacency, vals, q)
        unburned = [v for v in range(n) if not burned[v]]
        if not unburned:
            return vals
        members = frozenset(unburned)
        _apply_firing(adjacency, vals, members, 1)


@dataclass(frozen=True)
class ReductionResult:
    """The unique q-reduced representative plus an auditable firing script.

    ``script`` lists (vertex set, repetition count) firings, phase-1 layer
    firings first, then one entry per phase-2 pass (consecutive repeats of
    the same set are merged). Replaying the script on the input divisor
    reproduces ``reduced`` exactly.
    """

    reduced: Divisor
    script: tuple[tuple[frozenset[int], int], ...]
    dhar_passes: int

    def replay(self, start: Divisor) -> Divisor:
        vals = list(start.values)
        adjacency = start.graph.adjacency
        for members, times in self.script:
            _apply_firing(adjacency, vals, members, times)
        return Divisor(start.graph, vals)


def q_reduce(divisor: Divisor, q: int) -> ReductionResult:
    """Reduce a divisor to the unique q-reduced representative of its class.

    Total on all divisors, idempotent, and independent of any chip-firing
    applied to the input beforehand.
    """
    graph = divisor.graph
    n = graph.vertex_count
    if not (0 <= q < n):
        raise ValueError(f"vertex {q} out of range")
    adjacency = graph.adjacency
    vals = list(divisor.values)
    script = _clear_debt(adjacency, vals, q)
    passes = 0
    while True:
        burned = _burned_flags(adjacency, vals, q)
        unburned = frozenset(v for v in range(n) if not burned[v])
        if not unburned:
            break
        passes += 1
        _apply_firing(adjacency, vals, unburned, 1)
        if script and script[-1][0] == unburned:
            script[-1] = (unburned, script[-1][1] + 1)
        else:
            script.append((unburned, 1))
    return ReductionResult(
        reduced=Divisor(graph, vals), script=tuple(script), dhar_passes=passes
    )


def reduced_form(divisor: Divisor, q: int) -> tuple[int, ...]:
    """Values of the q-reduced representative (no script)."""
    if not (0 <= q < divisor.graph.vertex_count):
        raise ValueError(f"vertex {q} out of range")
    return tuple(_reduce_values(divisor.graph, divisor.values, q))


def is_q_reduced(divisor: Divisor, q: int) -> bool:
    """Effective away from q, and a burn from q consumes the whole graph."""
    values = divisor.values
    if any(values[v] < 0 for v in range(len(values)) if v != q):
        return False
    return _burns_all(divisor.graph.adjacency, values, q)


def rank_zero_by_burning(divisor: Divisor) -> bool:
    """Try a full burn from each chipless vertex in ascending order.

    Returns True as soon as one pass consumes the whole graph: the
    divisor is then reduced at a chipless vertex, which certifies rank
    exactly 0. Works on any effective divisor (no reduction required),
    which makes it the refuter of choice for multiplicity-free
    candidates. False is inconclusive.
    """
    if not divisor.is_effective():
        raise ValueError("burning refutation requires an effective divisor")
    adjacency = divisor.graph.adjacency
    values = divisor.values
    for v, chips in enumerate(values):
        if chips == 0 and _burns_all(adjacency, values, v):
            return True
    return False


def rank_zero_certificate(divisor: Divisor, q: int, v: int) -> bool:
    """Sound certificate that an effective q-reduced divisor has rank 0.

    Requires D effective, q-reduced, v distinct from q and chipless. Runs
    one burning pass from v and returns True iff q burned; in that case
    the whole graph burned, D is also v-reduced, and D(v) = 0 pins the
    rank at zero. A False return is inconclusive.
    """
    if v == q:
        raise ValueError("certificate vertex must differ from the base vertex")
    if not divisor.is_effective():
        raise ValueError("certificate requires an effective divisor")
    if divisor[v] != 0:
        raise ValueError(f"certificate vertex {v} must be chipless")
    if not is_q_reduced(divisor, q):
        raise ValueError(f"divisor is not {q}-reduced")
    burned = _burned_flags(divisor.graph.adjacency, divisor.values, v)
    return bool(burned[q])
