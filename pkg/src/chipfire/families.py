"""Constructors for the graph families the toolkit analyzes, plus a
small spec type so families can be named on the command line.

Vertex numbering conventions are fixed and documented per constructor so
divisors written against them are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .graphs import GraphError, Multigraph, cartesian_product, cone


def path(n: int) -> Multigraph:
    """Path on n vertices, 0 - 1 - ... - (n-1)."""
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Multigraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Multigraph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Multigraph:
    """Star with center 0 and n - 1 leaves."""
    if n < 1:
        raise GraphError("star needs at least one vertex")
    return Multigraph.from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Multigraph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Multigraph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n)]
    )


def complete_multipartite(*part_sizes: int) -> Multigraph:
    """Complete multipartite graph; parts occupy consecutive index blocks."""
    if not part_sizes or any(p < 1 for p in part_sizes):
        raise GraphError("part sizes must be positive")
    if len(part_sizes) == 1 and part_sizes[0] > 1:
        raise GraphError("a single part of size > 1 has no edges")
    starts = [0]
    for p in part_sizes:
        starts.append(starts[-1] + p)
    n = starts[-1]
    edges = []
    for a in range(len(part_sizes)):
        for b in range(a + 1, len(part_sizes)):
            for u in range(starts[a], starts[a + 1]):
                for v in range(starts[b], starts[b + 1]):
                    edges.append((u, v))
    return Multigraph.from_edges(n, edges)


def tree_from_pruefer(sequence: tuple[int, ...] | list[int]) -> Multigraph:
    """Labeled tree on len(sequence) + 2 vertices from its Pruefer sequence."""
    seq = list(sequence)
    n = len(seq) + 2
    if any(not 0 <= x < n for x in seq):
        raise GraphError("Pruefer entries must be vertices of the tree")
    remaining = list(seq)
    degree = [1] * n
    for x in remaining:
        degree[x] += 1
    edges = []
    for x in remaining:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(n) if degree[v] == 1]
    edges.append((u, v))
    return Multigraph.from_edges(n, edges)


def multipath(vertices: int, multiplicity: int) -> Multigraph:
    """Path on ``vertices`` vertices with ``multiplicity`` parallel edges
    between each adjacent pair."""
    if vertices < 1:
        raise GraphError("multipath needs at least one vertex")
    if multiplicity < 1:
        raise GraphError("edge multiplicity must be positive")
    return Multigraph.from_edges(
        vertices, [(i, i + 1, multiplicity) for i in range(vertices - 1)]
    )


def slashed_ladder(m: int) -> Multigraph:
    """The 2 x m slashed ladder.

    Vertices: u_i at index i-1 (i = 1..m), v_i at index m+i-1. Edges:
    rails u_i-u_{i+1} and v_i-v_{i+1}, rungs u_i-v_i, and one diagonal
    per cell with alternating orientation (cell i joins u_i-v_{i+1} for
    odd i, v_i-u_{i+1} for even i).

    The orientation is pinned by the divisor arithmetic the family must
    support. Cell 1 must satisfy val(v_1) = 2 with neighbors {u_1, v_2},
    so that firing {v_1} on 2(u_1)+(v_1) yields 3(u_1)-(v_1)+(v_2) and
    then firing {u_1} yields (u_2)+2(v_2); that forces the u_1-v_2
    diagonal. Alternating the remaining cells gives the strip a
    glide symmetry (u_i -> v_{i+1}, v_i -> u_{i+1}), which is what makes
    2(u_1)+(v_1) equivalent to (u_2)+2(v_2), 2(u_3)+(v_3), ... and makes
    the complement of the zigzag diagonal an independent set of size m.
    With all diagonals parallel, both properties fail.
    """
    if m < 2:
        raise GraphError("slashed ladder needs at least two columns")
    edges = []
    for i in range(m - 1):
        edges.append((i, i + 1))            # rail u_i - u_{i+1}
        edges.append((m + i, m + i + 1))    # rail v_i - v_{i+1}
    for i in range(m):
        edges.append((i, m + i))            # rung u_i - v_i
    for i in range(m - 1):                  # cell i+1, 1-based
        if i % 2 == 0:
            edges.append((i, m + i + 1))    # u_i - v_{i+1}
        else:
            edges.append((m + i, i + 1))    # v_i - u_{i+1}
    return Multigraph.from_edges(2 * m, edges)


def complete_slashed_ladder(m: int, n: int) -> Multigraph:
    """Slashed ladder with a complete graph on n vertices glued onto its
    last column, overlapping on the two column-m vertices.

    Indices 0..2m-1 are the ladder (as in :func:`slashed_ladder`); the
    n - 2 new clique vertices follow. The rung u_m-v_m and the clique
    edge coincide as a single edge, so the result is simple.
    """
    if m < 2:
        raise GraphError("need at least two ladder columns")
    if n < 3:
        raise GraphError("the attached complete graph needs at least three vertices")
    ladder = slashed_ladder(m)
    total = 2 * m + n - 2
    clique = [m - 1, 2 * m - 1] + list(range(2 * m, total))
    edges = [(u, v, mult) for u, v, mult in ladder.edges()]
    for a in range(len(clique)):
        for b in range(a + 1, len(clique)):
            u, v = sorted((clique[a], clique[b]))
            if ladder.vertex_count <= v or ladder.multiplicity(u, v) == 0:
                edges.append((u, v, 1))
    return Multigraph.from_edges(total, edges)


def antiprism(n: int, augmented: bool = False) -> Multigraph:
    """Two n-cycles u_0..u_{n-1} (indices 0..n-1) and v_0..v_{n-1}
    (indices n..2n-1), with u_i joined to v_i and v_{i+1}, indices mod n.

    4-regular; the augmented variant also joins u_i to v_{i-1} and is
    5-regular.
    """
    if n < 3:
        raise GraphError("antiprism needs cycles of length at least three")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
        edges.append((i, n + (i + 1) % n))
        if augmented:
            edges.append((i, n + (i - 1) % n))
    return Multigraph.from_edges(2 * n, edges)


def wheel(n: int) -> Multigraph:
    """Cycle on n vertices (indices 0..n-1) plus a universal hub (index n)."""
    return cone(cycle(n), 1)


def rook(*dims: int) -> Multigraph:
    """Cartesian product of complete graphs K_{dims[0]} x ... x K_{dims[-1]}."""
    if not dims:
        raise GraphError("rook graph needs at least one dimension")
    if any(d < 2 for d in dims):
        raise GraphError("rook dimensions must be at least 2")
    return reduce(cartesian_product, (complete(d) for d in dims))


def regular_gap_multi(r: int) -> Multigraph:
    """r-regular multigraph whose gonality sits strictly below its
    multiplicity-free gonality.

    Even r: a cycle on r + 1 vertices with r/2 parallel edges per cycle
    edge. Odd r = 2s + 1: a cycle on 2s(s+1) + 2 vertices whose edge
    multiplicities alternate s, s+1 around the cycle (edge (0, 1) gets s).
    """
    if r < 4:
        raise GraphError("construction needs regularity at least 4")
    if r % 2 == 0:
        n = r + 1
        return Multigraph.from_edges(n, [(i, (i + 1) % n, r // 2) for i in range(n)])
    s = (r - 1) // 2
    n = 2 * s * (s + 1) + 2
    return Multigraph.from_edges(
        n, [(i, (i + 1) % n, s if i % 2 == 0 else s + 1) for i in range(n)]
    )


def regular_gap_simple(r: int, copies: int | None = None) -> Multigraph:
    """Simple r-regular graph (r >= 6) with a gonality gap: ``copies``
    cliques K_{r-3} arranged in a ring.

    Copy i holds vertices i*(r-3) + j. Vertex j of copy i is joined to
    vertices j and j+1 (mod r-3) of copy i+1 (mod copies), adding 4 to
    the clique valence r - 4. ``copies`` must exceed (4r-3)/(r-4);
    the default is the least such integer.
    """
    if r < 6:
        raise GraphError("construction needs regularity at least 6")
    if copies is None:
        copies = (4 * r - 3) // (r - 4) + 1
    if copies * (r - 4) <= 4 * r - 3:
        raise GraphError(f"{copies} copies is too few for regularity {r}")
    k = r - 3
    edges = []
    for i in range(copies):
        base = i * k
        for a in range(k):
            for b in range(a + 1, k):
                edges.append((base + a, base + b))
        nxt = ((i + 1) % copies) * k
        for j in range(k):
            edges.append((base + j, nxt + j))
            edges.append((base + j, nxt + (j + 1) % k))
    return Multigraph.from_edges(copies * k, edges)


def necklace(beads: int) -> Multigraph:
    """Ring of ``beads`` two-vertex loops: bead i has vertices a_i = 2i
    and b_i = 2i+1 joined by a double edge, and b_i is joined to a_{i+1}
    (mod beads) by a single edge.

    3-regular with genus beads + 1. The 4-bead instance is the genus-5
    trivalent graph whose degree-4 positive-rank class has exactly six
    effective representatives, none of them multiplicity-free.
    """
    if beads < 2:
        raise GraphError("necklace needs at least two beads")
    n = 2 * beads
    edges = []
    for i in range(beads):
        edges.append((2 * i, 2 * i + 1, 2))
        edges.append((2 * i + 1, (2 * i + 2) % n, 1))
    return Multigraph.from_edges(n, edges)


def loop_of_loops() -> Multigraph:
    """The genus-5 trivalent necklace (4 beads)."""
    return necklace(4)


# -- named family specs ----------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus integer parameters, as accepted on the CLI."""

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))

    def build(self, base: Multigraph | None = None) -> Multigraph:
        return build_family(self.kind, self.params, base=base)


def _need(params: tuple[int, ...], count: int, kind: str) -> tuple[int, ...]:
    if len(params) != count:
        raise GraphError(f"family {kind!r} takes {count} parameter(s), got {len(params)}")
    return params


FAMILY_KINDS = (
    "path",
    "cycle",
    "tree",
    "complete",
    "complete_multipartite",
    "multipath",
    "slashed_ladder",
    "complete_slashed_ladder",
    "antiprism",
    "augmented_antiprism",
    "wheel",
    "rook",
    "regular_gap_multi",
    "regular_gap_simple",
    "cone",
    "necklace",
)


def build_family(
    kind: str, params: tuple[int, ...] | list[int], base: Multigraph | None = None
) -> Multigraph:
    """Build a family member by name.

    ``tree`` takes a Pruefer sequence (empty sequence = the 2-vertex
    tree). ``cone`` takes the apex count as its parameter and the base
    graph via ``base``. ``regular_gap_simple`` takes the regularity and
    optionally the number of clique copies.
    """
    params = tuple(int(p) for p in params)
    if kind == "path":
        return path(*_need(params, 1, kind))
    if kind == "cycle":
        return cycle(*_need(params, 1, kind))
    if kind == "tree":
        return tree_from_pruefer(params)
    if kind == "complete":
        return complete(*_need(params, 1, kind))
    if kind == "complete_multipartite":
        return complete_multipartite(*params)
    if kind == "multipath":
        return multipath(*_need(params, 2, kind))
    if kind == "slashed_ladder":
        return slashed_ladder(*_need(params, 1, kind))
    if kind == "complete_slashed_ladder":
        return complete_slashed_ladder(*_need(params, 2, kind))
    if kind == "antiprism":
        return antiprism(*_need(params, 1, kind))
    if kind == "augmented_antiprism":
        return antiprism(*_need(params, 1, kind), augmented=True)
    if kind == "wheel":
        return wheel(*_need(params, 1, kind))
    if kind == "rook":
        return rook(*params)
    if kind == "regular_gap_multi":
        return regular_gap_multi(*_need(params, 1, kind))
    if kind == "regular_gap_simple":
        if len(params) == 1:
            return regular_gap_simple(params[0])
        return regular_gap_simple(*_need(params, 2, kind))
    if kind == "necklace":
        return necklace(*_need(params, 1, kind))
    if kind == "cone":
        (apexes,) = _need(params, 1, kind)
        if base is None:
            raise GraphError("cone needs a base graph")
        return cone(base, apexes)
    raise GraphError(f"unknown family kind {kind!r}")
