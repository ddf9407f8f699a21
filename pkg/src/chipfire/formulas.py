"""Closed-form values for families where gonality or multiplicity-free
gonality is proven, used to cross-validate the search engine and to seed
search bounds.

Everything is exact integer arithmetic (integer square roots, ceiling
divisions); an unknown value is a first-class outcome, never a guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .families import FamilySpec
from .graphs import Multigraph


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _ceil_sqrt(n: int) -> int:
    root = math.isqrt(n)
    return root if root * root == n else root + 1


def wheel_gon(n: int) -> int:
    """Gonality of the wheel with n rim vertices:
    ceil(sqrt(n)) - 1 + ceil(n / ceil(sqrt(n)))."""
    if n < 3:
        raise ValueError("wheel needs at least three rim vertices")
    s = _ceil_sqrt(n)
    return s - 1 + _ceil_div(n, s)


def wheel_mfgon(n: int) -> int:
    """Multiplicity-free gonality of the wheel: ceil(n/2) + 1."""
    if n < 3:
        raise ValueError("wheel needs at least three rim vertices")
    return _ceil_div(n, 2) + 1


def rook_mfgon(dims) -> int:
    """Multiplicity-free gonality of a product of complete graphs:
    (n_1 - 1) * n_2 * ... * n_l for sorted dimensions n_1 <= ... <= n_l."""
    sizes = sorted(int(d) for d in dims)
    if not sizes or any(d < 2 for d in sizes):
        raise ValueError("rook dimensions must all be at least 2")
    return (sizes[0] - 1) * math.prod(sizes[1:])


def floor_ceil_identity(n: int) -> bool:
    """ceil(sqrt n) - 1 + ceil(n / ceil(sqrt n)) equals the same expression
    built from floor(sqrt n); exact for every positive n."""
    if n < 1:
        raise ValueError("n must be positive")
    up = _ceil_sqrt(n)
    down = math.isqrt(n)
    return up - 1 + _ceil_div(n, up) == down - 1 + _ceil_div(n, down)


def wheel_equality_predicate(n: int) -> bool:
    """Whether the two wheel formulas agree (true exactly for n <= 8)."""
    return wheel_gon(n) == wheel_mfgon(n)


@dataclass(frozen=True)
class Prediction:
    """A proven value for gon or mfgon of a family instance, or unknown.

    ``value`` is None when no formula covers the instance; ``source`` is
    a short tag naming the result the number comes from.
    """

    quantity: str
    value: int | None
    source: str

    @property
    def known(self) -> bool:
        return self.value is not None

    def render(self) -> str:
        if self.value is None:
            return f"{self.quantity} = ? [{self.source}]"
        return f"{self.quantity} = {self.value} [{self.source}]"


def _pair(gon_value, gon_src, mf_value, mf_src) -> tuple[Prediction, Prediction]:
    return (
        Prediction("gon", gon_value, gon_src),
        Prediction("mfgon", mf_value, mf_src),
    )


_UNKNOWN = "open"


def predicted(
    spec: FamilySpec, base: Multigraph | None = None
) -> tuple[Prediction, Prediction]:
    """Proven (gon, mfgon) values for a family instance.

    Returns unknowns rather than guessing: rook gonality is reported
    unknown for two or more dimensions, antiprisms and the simple
    regular-gap graphs carry only bounds, and cones are resolved only
    when the built graph meets the minimum-valence hypothesis
    delta >= floor(n/2) + 1 (then gon = mfgon = n - independence number).
    """
    kind, params = spec.kind, spec.params
    if kind in ("path", "tree"):
        return _pair(1, "tree", 1, "tree")
    if kind == "cycle":
        return _pair(2, "cycle", 2, "cycle")
    if kind == "complete":
        (n,) = params
        if n == 1:
            return _pair(1, "tree", 1, "tree")
        return _pair(n - 1, "complete-burning", n - 1, "connectivity-equality")
    if kind == "complete_multipartite":
        total, largest = sum(params), max(params)
        if len(params) == 1:
            return _pair(1, "tree", 1, "tree")
        value = total - largest
        if value == 1:
            return _pair(1, "tree", 1, "tree")
        return _pair(value, "multipartite-connectivity", value, "connectivity-equality")
    if kind == "multipath":
        vertices, multiplicity = params
        if multiplicity == 1 or vertices == 1:
            return _pair(1, "tree", 1, "tree")
        return _pair(min(vertices, multiplicity), "multipath", vertices, "all-multiedge")
    if kind == "slashed_ladder":
        (m,) = params
        if m >= 3:
            return _pair(3, "ladder", m, "ladder")
        return _pair(None, _UNKNOWN, None, _UNKNOWN)
    if kind == "complete_slashed_ladder":
        m, n = params
        return _pair(n, "ladder-attachment", n + m - 2, "ladder-attachment")
    if kind == "wheel":
        (n,) = params
        return _pair(wheel_gon(n), "wheel-formula", wheel_mfgon(n), "universal-vertex")
    if kind == "rook":
        if len(params) == 1:
            return predicted(FamilySpec("complete", params))
        return _pair(None, _UNKNOWN, rook_mfgon(params), "rook-product")
    if kind == "regular_gap_multi":
        (r,) = params
        size = r + 1 if r % 2 == 0 else 2 * ((r - 1) // 2) * ((r + 1) // 2) + 2
        return _pair(None, _UNKNOWN, size, "all-multiedge")
    if kind == "necklace":
        (beads,) = params
        if beads == 4:
            return _pair(4, "trivalent-necklace", 4, "trivalent-necklace")
        return _pair(None, _UNKNOWN, None, _UNKNOWN)
    if kind == "cone":
        graph = spec.build(base=base)
        n = graph.vertex_count
        if graph.is_simple() and min(graph.valences) >= n // 2 + 1:
            value = n - graph.independence_number()
            return _pair(
                value, "min-valence-threshold", value, "min-valence-threshold"
            )
        return _pair(None, _UNKNOWN, None, _UNKNOWN)
    # antiprisms, augmented antiprisms, regular_gap_simple: bounds only
    return _pair(None, _UNKNOWN, None, _UNKNOWN)
