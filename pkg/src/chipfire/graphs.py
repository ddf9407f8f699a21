"""Immutable finite multigraphs and their structural invariants.

Vertices are dense 0-based indices; optional labels are cosmetic only.
Edges carry integer multiplicities, loops are forbidden, and every graph
is required to be connected at construction time (divisor dynamics are
undefined on disconnected graphs, so we fail fast instead).
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid multigraph data."""


class DisconnectedGraphError(GraphError):
    """Raised when a multigraph is not connected.

    Carries ``component``, the vertex set of the connected component
    containing vertex 0, so callers can report what got separated.
    """

    def __init__(self, component: frozenset[int]):
        self.component = component
        comp = " ".join(str(v) for v in sorted(component))
        super().__init__(f"graph is not connected; component of vertex 0: {{{comp}}}")


class Multigraph:
    """A finite connected loopless multigraph with integer edge multiplicities.

    Instances are immutable and hashable, and therefore safe to share
    between concurrent workers. All derived quantities are pure functions
    of the multiplicity table.
    """

    __slots__ = ("_mult", "_labels", "_adjacency", "_valences", "_hash", "__weakref__")

    def __init__(
        self,
        multiplicities: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
    ):
        rows = tuple(tuple(int(x) for x in row) for row in multiplicities)
        n = len(rows)
        if n == 0:
            raise GraphError("graph needs at least one vertex")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise GraphError(f"multiplicity row {i} has length {len(row)}, expected {n}")
            if row[i] != 0:
                raise GraphError(f"loop at vertex {i} (diagonal entry {row[i]})")
            for j, m in enumerate(row):
                if m < 0:
                    raise GraphError(f"negative multiplicity {m} between {i} and {j}")
                if rows[j][i] != m:
                    raise GraphError(f"asymmetric multiplicities between {i} and {j}")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise GraphError("label count does not match vertex count")
        self._mult = rows
        self._labels = labels
        self._adjacency = tuple(
            tuple((j, m) for j, m in enumerate(row) if m) for row in rows
        )
        self._valences = tuple(sum(m for _, m in nbrs) for nbrs in self._adjacency)
        self._hash = hash(rows)
        component = self._component_of(0)
        if len(component) != n:
            raise DisconnectedGraphError(frozenset(component))

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int] | tuple[int, int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Multigraph":
        """Build a graph from (u, v) or (u, v, multiplicity) entries.

        Repeated (u, v) entries accumulate multiplicity.
        """
        n = int(vertex_count)
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        table = [[0] * n for _ in range(n)]
        for edge in edges:
            if len(edge) == 2:
                u, v = edge  # type: ignore[misc]
                m = 1
            else:
                u, v, m = edge  # type: ignore[misc]
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if m < 1:
                raise GraphError(f"edge ({u}, {v}) has multiplicity {m} < 1")
            table[u][v] += m
            table[v][u] += m
        return cls(table, labels)

    # -- basic structure ---------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._mult)

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    @property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of (neighbor, multiplicity) pairs."""
        return self._adjacency

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult[u][v]

    def valence(self, v: int) -> int:
        return self._valences[v]

    @property
    def valences(self) -> tuple[int, ...]:
        return self._valences

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(u for u, _ in self._adjacency[v])

    def edges(self) -> list[tuple[int, int, int]]:
        """Sorted (u, v, multiplicity) triples with u < v."""
        n = self.vertex_count
        return [
            (u, v, self._mult[u][v])
            for u in range(n)
            for v in range(u + 1, n)
            if self._mult[u][v]
        ]

    @property
    def edge_count(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(self._valences) // 2

    def is_simple(self) -> bool:
        return all(m <= 1 for row in self._mult for m in row)

    def underlying_simple_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges()]

    def _component_of(self, start: int) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u, _ in self._adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return seen

    # -- derived quantities ------------------------------------------------

    def laplacian(self) -> np.ndarray:
        """Integer Laplacian: valences on the diagonal, minus multiplicities off it."""
        lap = -np.array(self._mult, dtype=np.int64)
        np.fill_diagonal(lap, self._valences)
        return lap

    def genus(self) -> int:
        """First Betti number |E| - |V| + 1, edges counted with multiplicity."""
        return self.edge_count - self.vertex_count + 1

    def outdegree(self, subset: Iterable[int]) -> int:
        """Total multiplicity of edges leaving ``subset``.

        The subset must be a non-empty proper subset of the vertices.
        """
        members = self._check_proper_subset(subset)
        return sum(
            m for v in members for u, m in self._adjacency[v] if u not in members
        )

    def _check_proper_subset(self, subset: Iterable[int]) -> frozenset[int]:
        members = frozenset(subset)
        n = self.vertex_count
        for v in members:
            if not (0 <= v < n):
                raise GraphError(f"vertex {v} out of range")
        if not members:
            raise GraphError("subset is empty")
        if len(members) == n:
            raise GraphError("subset is the whole vertex set")
        return members

    def vertex_connectivity(self) -> int:
        """Minimum size of a vertex set whose removal disconnects the graph
        (or leaves a single vertex).

        Brute force over candidate cuts up to 16 vertices, max-flow via
        networkx beyond that; the two methods are required to agree on
        their overlap (exercised by the test suite).
        """
        if self.vertex_count <= 16:
            return self._connectivity_bruteforce()
        return self._connectivity_flow()

    def _connectivity_bruteforce(self) -> int:
        n = self.vertex_count
        if n == 1:
            return 0
        for k in range(n):
            for cut in itertools.combinations(range(n), k):
                removed = set(cut)
                rest = [v for v in range(n) if v not in removed]
                if len(rest) == 1:
                    return k
                start = rest[0]
                seen = {start}
                stack = [start]
                while stack:
                    v = stack.pop()
                    for u, _ in self._adjacency[v]:
                        if u not in removed and u not in seen:
                            seen.add(u)
                            stack.append(u)
                if len(seen) != len(rest):
                    return k
        return n - 1

    def _connectivity_flow(self) -> int:
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.underlying_simple_edges())
        return nx.node_connectivity(g)

    def independence_number(self) -> int:
        """Size of a maximum independent set (exact branch and bound).

        Parallel edges are irrelevant; only adjacency matters.
        """
        n = self.vertex_count
        adj_mask = [0] * n
        for u, v in self.underlying_simple_edges():
            adj_mask[u] |= 1 << v
            adj_mask[v] |= 1 << u
        best = 0

        def extend(candidates: int, size: int) -> None:
            nonlocal best
            if candidates == 0:
                if size > best:
                    best = size
                return
            if size + candidates.bit_count() <= best:
                return
            v = candidates.bit_length() - 1
            bit = 1 << v
            extend(candidates & ~bit & ~adj_mask[v], size + 1)
            extend(candidates & ~bit, size)

        extend((1 << n) - 1, 0)
        return best

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        # explicit support: __slots__ + __weakref__ defeat default pickling
        return (Multigraph, (self._mult, self._labels))

    def __repr__(self) -> str:
        return f"Multigraph({self.vertex_count} vertices, {self.edge_count} edges)"


def cartesian_product(g: Multigraph, h: Multigraph) -> Multigraph:
    """Cartesian product of two simple graphs.

    Vertex (a, b) maps to index a * |V(h)| + b. (a1, b1) ~ (a2, b2) iff
    a1 = a2 and b1 ~ b2, or b1 = b2 and a1 ~ a2.
    """
    if not g.is_simple() or not h.is_simple():
        raise GraphError("cartesian product is defined for simple graphs only")
    hn = h.vertex_count
    edges = []
    for a in range(g.vertex_count):
        for b1, b2 in h.underlying_simple_edges():
            edges.append((a * hn + b1, a * hn + b2))
    for a1, a2 in g.underlying_simple_edges():
        for b in range(hn):
            edges.append((a1 * hn + b, a2 * hn + b))
    return Multigraph.from_edges(g.vertex_count * hn, edges)


def cone(base: Multigraph, apex_count: int) -> Multigraph:
    """Extend a simple graph by ``apex_count`` universal vertices.

    Each new vertex is adjacent to every other vertex, the new ones
    included, so the result is simple.
    """
    if apex_count < 1:
        raise GraphError("apex_count must be positive")
    if not base.is_simple():
        raise GraphError("cone is defined over simple graphs only")
    n = base.vertex_count
    total = n + apex_count
    edges: list[tuple[int, int]] = list(base.underlying_simple_edges())
    for a in range(n, total):
        for v in range(total):
            if v < a:
                edges.append((v, a))
    return Multigraph.from_edges(total, edges)
