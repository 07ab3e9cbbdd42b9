"""Exact VC-dimension computation.

The search is bottom-up and level-wise.  Shattered sets are closed under
taking subsets, so every shattered set of size m extends a shattered set of
size m-1: level m candidates are generated from the level m-1 frontier the
way frequent-itemset miners generate candidates (extend by a larger element,
require every (m-1)-subset to be on the frontier).  Each candidate is
checked by splitting the hypothesis set on one column at a time and bailing
out on the first one-sided split.  Levels are sorted before use so results,
including the witness, do not depend on the worker count.

A candidate filter may be installed to restrict the search to a
downward-closed family of subsets (the similarity module uses this to search
forests only).  The filter must accept every subset of any set it accepts;
otherwise the frontier-based generation is not sound.

``vc_naive`` is an independent brute-force oracle: it tests every one of the
2^n subsets with a plain projection count and exists solely to cross-check
the engine.
"""

from __future__ import annotations

import multiprocessing
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import DomainTooLargeForOracleError
from .space import HypothesisSpace, ShatterWitness, check_subset, is_shattered

#: vc_naive enumerates 2^n subsets; beyond this it is no longer an oracle.
ORACLE_DOMAIN_CAP = 20

CandidateFilter = Callable[["tuple[int, ...]"], bool]


@dataclass(frozen=True, slots=True)
class VcResult:
    """Exact VC dimension plus the lexicographically smallest maximum witness."""

    dimension: int
    witness: ShatterWitness


def _columns(space: HypothesisSpace) -> "list[int]":
    """Column bitmasks: bit i of cols[j] is hypothesis i's label of element j."""
    cols = [0] * space.domain_size
    for i, h in enumerate(space.hypotheses):
        b = h.bits
        while b:
            low = b & -b
            cols[low.bit_length() - 1] |= 1 << i
            b ^= low
    return cols


def _shatters(cols: Sequence[int], full: int, subset: Sequence[int]) -> bool:
    """Split the hypothesis set column by column; shattered iff no split is one-sided."""
    groups = [full]
    for e in subset:
        col = cols[e]
        nxt = []
        for g in groups:
            a = g & col
            if a == 0 or a == g:
                return False
            nxt.append(a)
            nxt.append(g ^ a)
        groups = nxt
    return True


def _candidates(
    frontier: "list[tuple[int, ...]]", domain_size: int, m: int
) -> "list[tuple[int, ...]]":
    """Extend frontier sets by a larger element; prune candidates with a
    non-shattered (m-1)-subset.  Output inherits the frontier's sorted order."""
    prev = set(frontier) if m >= 2 else None
    out = []
    for s in frontier:
        start = s[-1] + 1 if s else 0
        for e in range(start, domain_size):
            c = s + (e,)
            if prev is not None:
                # dropping the last element gives s itself, already known shattered
                ok = True
                for t in range(m - 1):
                    if c[:t] + c[t + 1 :] not in prev:
                        ok = False
                        break
                if not ok:
                    continue
            out.append(c)
    return out


_WORKER_STATE: "tuple | None" = None


def _check_candidate(subset: "tuple[int, ...]") -> bool:
    cols, full, flt = _WORKER_STATE
    if flt is not None and not flt(subset):
        return False
    return _shatters(cols, full, subset)


@contextmanager
def _level_mapper(cols, full, candidate_filter, jobs):
    """Yield a function mapping candidate lists to shattered flags.

    jobs > 1 uses a fork pool; the workers inherit the search context, which
    is fixed for the whole call.  Tiny levels are checked inline either way.
    """
    if jobs <= 1:
        def run(cands):
            if candidate_filter is None:
                return [_shatters(cols, full, c) for c in cands]
            return [candidate_filter(c) and _shatters(cols, full, c) for c in cands]

        yield run
        return

    global _WORKER_STATE
    previous = _WORKER_STATE
    _WORKER_STATE = (cols, full, candidate_filter)
    pool = multiprocessing.get_context("fork").Pool(jobs)
    try:
        def run(cands):
            if len(cands) < 4 * jobs:
                return [_check_candidate(c) for c in cands]
            chunk = max(16, len(cands) // (jobs * 8))
            return pool.map(_check_candidate, cands, chunksize=chunk)

        yield run
    finally:
        pool.close()
        pool.join()
        _WORKER_STATE = previous


def vc_exact(
    space: HypothesisSpace,
    *,
    candidate_filter: Optional[CandidateFilter] = None,
    jobs: int = 1,
) -> VcResult:
    """Exact VC dimension with a deterministic maximum shattered witness.

    Uses the a-priori bound dimension <= floor(log2 |H|) and hereditary
    level-wise pruning.  The witness is the lexicographically smallest
    maximum shattered subset, independent of ``jobs``.
    """
    cols = _columns(space)
    count = len(space.hypotheses)
    full = (1 << count) - 1
    limit = min(space.domain_size, count.bit_length() - 1)
    best: "tuple[int, ...]" = ()
    with _level_mapper(cols, full, candidate_filter, jobs) as run:
        frontier = [()]
        for m in range(1, limit + 1):
            cands = _candidates(frontier, space.domain_size, m)
            if not cands:
                break
            level = [c for c, ok in zip(cands, run(cands)) if ok]
            if not level:
                break
            level.sort()
            frontier = level
            best = frontier[0]
    witness = is_shattered(space, best)
    assert isinstance(witness, ShatterWitness)
    return VcResult(len(best), witness)


def shattered_level(
    space: HypothesisSpace,
    m: int,
    previous_level: "Sequence[tuple[int, ...]]",
    *,
    candidate_filter: Optional[CandidateFilter] = None,
) -> "list[tuple[int, ...]]":
    """All shattered subsets of size m, given the complete level m-1.

    ``previous_level`` must be exactly the shattered subsets of size m-1
    (the singleton [()] for m = 1); correctness rests on shattering being
    hereditary.
    """
    if m < 1:
        raise ValueError("level must be at least 1")
    prev = sorted(previous_level)
    for s in prev:
        if len(s) != m - 1:
            raise ValueError(f"previous level entries must have size {m - 1}")
        check_subset(space.domain_size, s)
    cols = _columns(space)
    full = (1 << len(space.hypotheses)) - 1
    out = []
    for c in _candidates(prev, space.domain_size, m):
        if candidate_filter is not None and not candidate_filter(c):
            continue
        if _shatters(cols, full, c):
            out.append(c)
    out.sort()
    return out


def vc_naive(space: HypothesisSpace) -> int:
    """Brute-force oracle: test every subset of the domain, no pruning."""
    if space.domain_size > ORACLE_DOMAIN_CAP:
        raise DomainTooLargeForOracleError(
            f"oracle requires domain_size <= {ORACLE_DOMAIN_CAP}, got {space.domain_size}"
        )
    bits = [h.bits for h in space.hypotheses]
    best = 0
    for mask in range(1, 1 << space.domain_size):
        width = bin(mask).count("1")
        if len({b & mask for b in bits}) == 1 << width and width > best:
            best = width
    return best
