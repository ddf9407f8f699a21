"""Exhaustive, pruned, parallelizable solvers for gonality and
multiplicity-free gonality (any target rank).

Candidate spaces
----------------
Gonality at degree d enumerates chip-count tuples with at least one chip
on the base vertex 0, filtered by a burning pass to 0-reduced divisors.
Every positive-rank class of degree d has exactly one such representative,
so the filter loses nothing while shrinking the space by orders of
magnitude. Multiplicity-free search enumerates d-element chip supports in
colexicographic order; no reduction filter is applied because reduction
can break multiplicity-freeness.

Both searches ascend through degrees until the first witness; refuting
exactly degree d suffices to push the optimum above d (adding a chip to
an empty vertex never lowers rank), and an upper cap (target rank plus
genus, or the vertex count) guarantees termination.

Pruning is the rank-zero burning certificate: cheap, sound, and counted
in the returned statistics. Work splits into contiguous enumeration-index
ranges for a process pool; merged results are identical for any worker
count, including the single-process inline path.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .divisors import Divisor
from .enumeration import (
    compositions_first_positive,
    compositions_first_positive_count,
    subsets_colex,
)
from .graphs import Multigraph
from .rank import rank, rank_at_least
from .reduction import _burned_flags, _burns_all

_GONALITY_CERTIFICATE_TRIES = 3
_PARALLEL_THRESHOLD = 4096


@dataclass
class SearchStats:
    """Deterministic search accounting (wall time excluded from identity)."""

    candidates: int = 0
    certificate_prunes: int = 0
    full_probes: int = 0
    seconds: float = 0.0
    by_degree: dict[int, int] = field(default_factory=dict)


@dataclass
class GonalitySearchResult:
    """Optimal value, a witness divisor achieving it, and search statistics.

    ``value`` is ``math.inf`` (witness None) when no multiplicity-free
    divisor of the requested rank exists at all.
    """

    value: int | float
    witness: Divisor | None
    stats: SearchStats


@dataclass
class _ChunkOutcome:
    start: int
    examined: int
    prunes: int
    probes: int
    witness_index: int | None = None
    witness_values: tuple[int, ...] | None = None


# -- per-candidate tests (shared by inline and pooled execution) -----------


def _gonality_candidate(adjacency, chips, r: int, graph: Multigraph):
    """Classify one composition candidate.

    Returns "skip" (not 0-reduced), "pruned" (certificate), "refuted"
    (full probe failed) or "witness".
    """
    if not _burns_all(adjacency, chips, 0):
        return "skip"
    tries = 0
    for v in range(1, len(chips)):
        if chips[v] == 0:
            if _burned_flags(adjacency, chips, v)[0]:
                return "pruned"
            tries += 1
            if tries >= _GONALITY_CERTIFICATE_TRIES:
                break
    if rank_at_least(Divisor(graph, chips), r):
        return "witness"
    return "refuted"


def _mf_candidate(adjacency, chips, r: int, graph: Multigraph):
    """Classify one chip-support candidate: "pruned", "refuted" or "witness"."""
    for v in range(len(chips)):
        if chips[v] == 0 and _burns_all(adjacency, chips, v):
            return "pruned"
    if rank_at_least(Divisor(graph, chips), r):
        return "witness"
    return "refuted"


def _gonality_chunk(args) -> _ChunkOutcome:
    graph, r, start, candidates = args
    adjacency = graph.adjacency
    out = _ChunkOutcome(start=start, examined=0, prunes=0, probes=0)
    for offset, chips in enumerate(candidates):
        verdict = _gonality_candidate(adjacency, chips, r, graph)
        out.examined += 1
        if verdict == "pruned":
            out.prunes += 1
        elif verdict == "refuted":
            out.probes += 1
        elif verdict == "witness":
            out.probes += 1
            out.witness_index = start + offset
            out.witness_values = tuple(chips)
            break
    return out


def _mf_chunk(args) -> _ChunkOutcome:
    graph, degree, r, start, stop = args
    adjacency = graph.adjacency
    n = graph.vertex_count
    out = _ChunkOutcome(start=start, examined=0, prunes=0, probes=0)
    for offset, support in enumerate(subsets_colex(n, degree, start, stop)):
        chips = [0] * n
        for v in support:
            chips[v] = 1
        verdict = _mf_candidate(adjacency, chips, r, graph)
        out.examined += 1
        if verdict == "pruned":
            out.prunes += 1
        elif verdict == "refuted":
            out.probes += 1
        else:
            out.probes += 1
            out.witness_index = start + offset
            out.witness_values = tuple(chips)
            break
    return out


def _merge_chunks(outcomes: list[_ChunkOutcome], stats: SearchStats):
    """Fold ordered chunk outcomes into the stats; stop at the first witness.

    Only chunks up to and including the witness chunk count, so totals are
    independent of how the work was split.
    """
    for out in sorted(outcomes, key=lambda o: o.start):
        stats.candidates += out.examined
        stats.certificate_prunes += out.prunes
        stats.full_probes += out.probes
        if out.witness_index is not None:
            return out
    return None


def _run_degree(tasks, worker, jobs: int, stats: SearchStats):
    """Run chunk tasks in order, inline or on a process pool."""
    if jobs <= 1 or len(tasks) <= 1:
        outcomes = []
        for task in tasks:
            out = worker(task)
            outcomes.append(out)
            if out.witness_index is not None:
                break
        return _merge_chunks(outcomes, stats)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        outcomes = list(pool.map(worker, tasks))
    return _merge_chunks(outcomes, stats)


def _chunk_ranges(total: int, jobs: int) -> list[tuple[int, int]]:
    if total <= 0:
        return []
    size = max(1024, -(-total // (max(jobs, 1) * 8)))
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def default_jobs() -> int:
    return os.cpu_count() or 1


def gonality(
    graph: Multigraph,
    r: int = 1,
    degree_hint: int | None = None,
    jobs: int = 1,
) -> GonalitySearchResult:
    """Minimum degree of a divisor of rank at least ``r`` (exact).

    ``degree_hint`` may supply a known sound lower bound to skip early
    degrees. The search is capped at degree r + genus, where the duality
    identity forces rank >= r, so it always terminates.
    """
    if r < 1:
        raise ValueError("target rank must be positive")
    t0 = time.perf_counter()
    stats = SearchStats()
    n = graph.vertex_count
    start_degree = max(1, r, degree_hint or 0)
    cap = r + graph.genus()
    for degree in range(start_degree, cap + 1):
        total = compositions_first_positive_count(degree, n)
        stats.by_degree[degree] = total
        candidates = list(compositions_first_positive(degree, n))
        use_jobs = jobs if total >= _PARALLEL_THRESHOLD else 1
        tasks = [
            (graph, r, lo, candidates[lo:hi])
            for lo, hi in _chunk_ranges(total, use_jobs)
        ]
        hit = _run_degree(tasks, _gonality_chunk, use_jobs, stats)
        if hit is not None:
            witness = Divisor(graph, hit.witness_values)
            _revalidate(witness, degree, r)
            stats.seconds = time.perf_counter() - t0
            return GonalitySearchResult(value=degree, witness=witness, stats=stats)
    raise AssertionError("search cap reached without a witness; engine bug")


def mf_gonality(graph: Multigraph, r: int = 1, jobs: int = 1) -> GonalitySearchResult:
    """Minimum degree of a multiplicity-free divisor of rank at least ``r``.

    Returns the infinity marker when r exceeds the rank of the all-ones
    divisor, which caps the rank of every multiplicity-free divisor.
    """
    if r < 1:
        raise ValueError("target rank must be positive")
    t0 = time.perf_counter()
    stats = SearchStats()
    n = graph.vertex_count
    if r > 1 and r > max_mf_rank(graph):
        stats.seconds = time.perf_counter() - t0
        return GonalitySearchResult(value=math.inf, witness=None, stats=stats)
    for degree in range(max(1, r), n + 1):
        total = math.comb(n, degree)
        stats.by_degree[degree] = total
        use_jobs = jobs if total >= _PARALLEL_THRESHOLD else 1
        tasks = [
            (graph, degree, r, lo, hi) for lo, hi in _chunk_ranges(total, use_jobs)
        ]
        hit = _run_degree(tasks, _mf_chunk, use_jobs, stats)
        if hit is not None:
            witness = Divisor(graph, hit.witness_values)
            _revalidate(witness, degree, r)
            stats.seconds = time.perf_counter() - t0
            return GonalitySearchResult(value=degree, witness=witness, stats=stats)
    raise AssertionError("all-ones divisor missed; engine bug")


def _revalidate(witness: Divisor, degree: int, r: int) -> None:
    # independent recheck of the returned witness, catching bookkeeping bugs
    if witness.degree != degree:
        raise AssertionError("witness degree mismatch")
    if not rank_at_least(witness, r):
        raise AssertionError("witness failed independent rank revalidation")


def refute_multiplicity_free_at_degree(
    graph: Multigraph, degree: int, r: int = 1, jobs: int = 1
) -> tuple[bool, SearchStats]:
    """Exhaustively test every multiplicity-free divisor of one exact degree.

    Returns (True, stats) when no candidate has rank >= ``r``; combined
    with rank monotonicity under added chips this certifies that the
    multiplicity-free optimum exceeds ``degree``. stats.candidates counts
    every enumerated support (all comb(n, degree) of them on success).
    """
    t0 = time.perf_counter()
    stats = SearchStats()
    n = graph.vertex_count
    total = math.comb(n, degree)
    stats.by_degree[degree] = total
    use_jobs = jobs if total >= _PARALLEL_THRESHOLD else 1
    tasks = [(graph, degree, r, lo, hi) for lo, hi in _chunk_ranges(total, use_jobs)]
    hit = _run_degree(tasks, _mf_chunk, use_jobs, stats)
    stats.seconds = time.perf_counter() - t0
    return hit is None, stats


def max_mf_rank(graph: Multigraph) -> int:
    """Largest r for which a multiplicity-free divisor of rank r exists.

    Achieved by the all-ones divisor, so this is simply its rank.
    """
    return rank(Divisor.ones(graph)).value


def positive_rank_representatives(
    graph: Multigraph, degree: int, r: int = 1
) -> list[Divisor]:
    """All 0-reduced divisors of the given degree (chip on the base) with
    rank at least ``r`` — one representative per qualifying class.

    Unlike :func:`gonality` this does not stop at the first hit; it is the
    tool for auditing *which* classes achieve a given degree.
    """
    adjacency = graph.adjacency
    found = []
    for chips in compositions_first_positive(degree, graph.vertex_count):
        if not _burns_all(adjacency, chips, 0):
            continue
        divisor = Divisor(graph, chips)
        if rank_at_least(divisor, r):
            found.append(divisor)
    return found
