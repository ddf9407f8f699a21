"""Independent oracles for the test suite.

These deliberately avoid the production algorithms: equivalence is decided
by exact rational linear algebra on the base-deleted Laplacian, and
q-reducedness by brute force over every candidate firing set.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from chipfire.divisors import Divisor
from chipfire.graphs import Multigraph


def lattice_equivalent(d1: Divisor, d2: Divisor) -> bool:
    """Integer-lattice membership test: d1 - d2 lies in the Laplacian's
    integer column space iff the degrees agree and the base-deleted system
    solves integrally (exact fractions, no rounding)."""
    graph = d1.graph
    assert graph == d2.graph
    if d1.degree != d2.degree:
        return False
    n = graph.vertex_count
    if n == 1:
        return True
    lap = graph.laplacian()
    m = n - 1
    a = [[Fraction(int(lap[i][j])) for j in range(1, n)] for i in range(1, n)]
    b = [Fraction(d1[i] - d2[i]) for i in range(1, n)]
    for col in range(m):
        pivot = next(r for r in range(col, m) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        b[col], b[pivot] = b[pivot], b[col]
        for r in range(m):
            if r != col and a[r][col]:
                factor = a[r][col] / a[col][col]
                for c in range(col, m):
                    a[r][c] -= factor * a[col][c]
                b[r] -= factor * b[col]
    return all((b[i] / a[i][i]).denominator == 1 for i in range(m))


def brute_force_is_q_reduced(divisor: Divisor, q: int) -> bool:
    """Definition check: effective away from q and no subset of V - {q}
    fires without sending a member negative. Exponential; small graphs only."""
    n = len(divisor)
    if any(divisor[v] < 0 for v in range(n) if v != q):
        return False
    others = [v for v in range(n) if v != q]
    for size in range(1, len(others) + 1):
        for subset in itertools.combinations(others, size):
            fired = divisor.fire_set(subset)
            if all(fired[v] >= 0 for v in subset):
                return False
    return True


def random_multigraph(
    rng: random.Random,
    n_lo: int = 2,
    n_hi: int = 7,
    extra_hi: int = 3,
    mult_hi: int = 2,
) -> Multigraph:
    """Random connected multigraph: random spanning tree plus extras."""
    n = rng.randint(n_lo, n_hi)
    edges: dict[tuple[int, int], int] = {}
    for v in range(1, n):
        u = rng.randrange(v)
        edges[(u, v)] = rng.randint(1, mult_hi)
    for _ in range(rng.randint(0, extra_hi)):
        if n < 2:
            break
        u, v = sorted(rng.sample(range(n), 2))
        edges[(u, v)] = edges.get((u, v), 0) + rng.randint(1, mult_hi)
    return Multigraph.from_edges(n, [(u, v, m) for (u, v), m in edges.items()])


def random_divisor(rng: random.Random, graph: Multigraph, lo: int = -3, hi: int = 4) -> Divisor:
    return Divisor(graph, [rng.randint(lo, hi) for _ in range(graph.vertex_count)])
