"""The similarity lift and its pair-domain machinery.

A hypothesis h induces a labelling of pairs: a pair (w, x) is labelled 1
exactly when h(w) = h(x).  The canonical pair domain is the set of unordered
pairs {i < j} without the diagonal -- the two orders of a pair always carry
identical labels and a diagonal pair is always labelled 1, so neither can
ever contribute to a shattered set.  ``lift_space_ordered`` provides the
full ordered-with-diagonal domain purely so the equivalence can be tested.

Pair sets double as graphs (edges over the endpoint vertices).  A pair set
shattered by any lifted space must be acyclic: around a cycle, a labelling
with exactly one 0-edge would connect two vertices by both an all-equal path
and a one-flip path.  ``forest_filter`` turns that fact into a candidate
filter for the search engine, and ``balanced_labelling`` constructs the
per-component half-and-half labelling used to bound sparse families.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from .errors import (
    DuplicateElementsError,
    IndexOutOfRangeError,
    LengthMismatchError,
    NotAForestError,
    PairDomainEmptyError,
)
from .space import Hypothesis, HypothesisSpace, _canonical_space

#: A canonical pair (i, j) with i < j, and a sorted, deduplicated set of them.
Pair = tuple[int, int]
PairSet = tuple[Pair, ...]


class PairDomain:
    """All C(n, 2) canonical pairs of a base domain, in lexicographic order.

    rank and unrank are inverse; rank r is the bit position pair r occupies
    in a lifted hypothesis.
    """

    __slots__ = ("base_size", "pairs", "_rank")

    def __init__(self, base_size: int):
        if base_size < 1:
            raise ValueError("base_size must be at least 1")
        self.base_size = base_size
        self.pairs: "tuple[tuple[int, int], ...]" = tuple(
            (i, j) for i in range(base_size) for j in range(i + 1, base_size)
        )
        self._rank = {p: r for r, p in enumerate(self.pairs)}

    def __len__(self) -> int:
        return len(self.pairs)

    def rank(self, first: int, second: int) -> int:
        if first == second:
            raise ValueError("diagonal pairs are not part of the canonical domain")
        key = (first, second) if first < second else (second, first)
        try:
            return self._rank[key]
        except KeyError:
            raise IndexOutOfRangeError(
                f"pair {key} out of range for base domain of size {self.base_size}"
            ) from None

    def unrank(self, rank: int) -> "tuple[int, int]":
        if not 0 <= rank < len(self.pairs):
            raise IndexOutOfRangeError(
                f"pair rank {rank} out of range for base domain of size {self.base_size}"
            )
        return self.pairs[rank]


@lru_cache(maxsize=64)
def pair_domain(base_size: int) -> PairDomain:
    """Shared immutable PairDomain instance for ``base_size``."""
    return PairDomain(base_size)


@lru_cache(maxsize=1 << 15)
def _lift_bits(bits: int, base_size: int) -> int:
    out = 0
    r = 0
    for i in range(base_size):
        bi = (bits >> i) & 1
        for j in range(i + 1, base_size):
            if bi == ((bits >> j) & 1):
                out |= 1 << r
            r += 1
    return out


def lift_hypothesis(h: Hypothesis) -> Hypothesis:
    """Pair labelling induced by h: bit at pair (i, j) is 1 iff h(i) = h(j)."""
    n = h.length
    return Hypothesis(_lift_bits(h.bits, n), n * (n - 1) // 2)


def lift_space(space: HypothesisSpace) -> HypothesisSpace:
    """Canonical space of the distinct lifted hypotheses over the pair domain.

    |lifted| <= |H|, strictly smaller whenever H contains a hypothesis and
    its complement (the lift cannot tell them apart).
    """
    n = space.domain_size
    if n < 2:
        raise PairDomainEmptyError(
            f"cannot lift a space over {n} element(s): the pair domain is empty "
            "(treat the lifted VC dimension as 0)"
        )
    m = n * (n - 1) // 2
    return _canonical_space(m, (_lift_bits(h.bits, n) for h in space.hypotheses))


def lift_space_ordered(space: HypothesisSpace) -> HypothesisSpace:
    """Compatibility mode: lift onto all n*n ordered pairs including the diagonal.

    Exists to test that canonicalizing the pair domain never changes a VC
    dimension; column rank of ordered pair (w, x) is w*n + x.
    """
    n = space.domain_size

    def ordered_bits(bits: int) -> int:
        out = 0
        for w in range(n):
            bw = (bits >> w) & 1
            for x in range(n):
                if bw == ((bits >> x) & 1):
                    out |= 1 << (w * n + x)
        return out

    return _canonical_space(n * n, (ordered_bits(h.bits) for h in space.hypotheses))


def canonical_pairs(pairs: Iterable[Sequence[int]]) -> "tuple[tuple[int, int], ...]":
    """Normalize to the canonical pair-set form: (i, j) with i < j, deduplicated, sorted."""
    out = set()
    for p in pairs:
        a, b = p
        if a == b:
            raise ValueError(f"diagonal pair ({a}, {b}) is not a valid pair")
        if a < 0 or b < 0:
            raise ValueError("pair endpoints must be non-negative")
        out.add((a, b) if a < b else (b, a))
    return tuple(sorted(out))


def endpoints(pairs: Iterable[Sequence[int]]) -> "tuple[int, ...]":
    """Sorted distinct endpoint set of a pair set."""
    ps = canonical_pairs(pairs)
    return tuple(sorted({v for p in ps for v in p}))


def chain_pairs(elements: Sequence[int]) -> "tuple[tuple[int, int], ...]":
    """Consecutive pairs of a chain of distinct elements, canonicalized."""
    elems = list(elements)
    if len(elems) < 2:
        raise ValueError("a chain needs at least two elements to form pairs")
    if len(set(elems)) != len(elems):
        raise DuplicateElementsError(f"chain elements must be distinct: {elems}")
    return canonical_pairs(zip(elems, elems[1:]))


def chain_witness(
    elements: Sequence[int],
    labels: Sequence[int],
    start_bit: int,
    domain_size: int,
) -> Hypothesis:
    """Hypothesis realizing a prescribed similarity labelling along a chain.

    The value at elements[0] is ``start_bit``; it propagates down the chain,
    kept equal across a 1-labelled pair and flipped across a 0-labelled one,
    and is 0 everywhere outside the chain.  Restricting the lift of the
    result to the chain's pairs reproduces ``labels``.
    """
    elems = list(elements)
    if not elems:
        raise ValueError("chain must contain at least one element")
    if len(set(elems)) != len(elems):
        raise DuplicateElementsError(f"chain elements must be distinct: {elems}")
    if len(labels) != len(elems) - 1:
        raise LengthMismatchError(
            f"{len(labels)} labels for a chain of {len(elems)} elements; expected {len(elems) - 1}"
        )
    if start_bit not in (0, 1):
        raise ValueError("start_bit must be 0 or 1")
    for e in elems:
        if not 0 <= e < domain_size:
            raise IndexOutOfRangeError(
                f"chain element {e} out of range for domain of size {domain_size}"
            )
    bits = 0
    val = start_bit
    if val:
        bits |= 1 << elems[0]
    for lab, e in zip(labels, elems[1:]):
        if lab not in (0, 1):
            raise ValueError("labels must be 0 or 1")
        val = val if lab else 1 - val
        if val:
            bits |= 1 << e
    return Hypothesis(bits, domain_size)


@dataclass(frozen=True, slots=True)
class ForestCheck:
    """Acyclicity verdict for a pair graph, with a certifying cycle when cyclic."""

    acyclic: bool
    cycle: "Optional[tuple[tuple[int, int], ...]]"

    def __bool__(self) -> bool:
        return self.acyclic


def _root(parent: dict, x: int) -> int:
    while x in parent:
        x = parent[x]
    return x


def _tree_path(adj: dict, start: int, goal: int) -> "list[tuple[int, int]]":
    """Edge path between two vertices of the same tree (BFS, deterministic)."""
    prev = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == goal:
            break
        for w in adj[v]:
            if w not in prev:
                prev[w] = v
                queue.append(w)
    path = []
    v = goal
    while prev[v] is not None:
        u = prev[v]
        path.append((u, v) if u < v else (v, u))
        v = u
    path.reverse()
    return path


def is_forest(pairs: Iterable[Sequence[int]]) -> ForestCheck:
    """True iff the pair graph is acyclic; otherwise one cycle's edge list."""
    ps = canonical_pairs(pairs)
    parent: dict = {}
    adj: dict = {}
    for a, b in ps:
        ra, rb = _root(parent, a), _root(parent, b)
        if ra == rb:
            cycle = tuple(_tree_path(adj, a, b)) + ((a, b),)
            return ForestCheck(False, cycle)
        parent[ra] = rb
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return ForestCheck(True, None)


@dataclass(frozen=True, slots=True)
class ComponentPartition:
    """Connected components of a pair graph over its endpoint vertex set."""

    components: "tuple[tuple[int, ...], ...]"

    @property
    def tree_count(self) -> int:
        return len(self.components)

    @property
    def vertex_count(self) -> int:
        return sum(len(c) for c in self.components)


def components(pairs: Iterable[Sequence[int]]) -> ComponentPartition:
    """Connected components, each sorted, ordered by smallest vertex."""
    ps = canonical_pairs(pairs)
    parent: dict = {}
    acyclic = True
    for a, b in ps:
        ra, rb = _root(parent, a), _root(parent, b)
        if ra == rb:
            acyclic = False
        else:
            parent[ra] = rb
    groups: dict = {}
    for v in {v for p in ps for v in p}:
        groups.setdefault(_root(parent, v), []).append(v)
    comps = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
    if acyclic:
        # counting identity for forests: |V| = |E| + number of trees
        assert sum(len(c) for c in comps) == len(ps) + len(comps)
    return ComponentPartition(comps)


def balanced_labelling(pairs: Iterable[Sequence[int]], domain_size: int) -> Hypothesis:
    """Label floor(|C|/2) vertices of each component 1, the rest 0.

    The smallest-indexed vertices of each component receive the 1s; vertices
    outside every component are 0.  Requires the pair set to be a forest.
    """
    ps = canonical_pairs(pairs)
    fc = is_forest(ps)
    if not fc:
        raise NotAForestError(f"pair set contains a cycle: {fc.cycle}")
    bits = 0
    for comp in components(ps).components:
        for v in comp:
            if v >= domain_size:
                raise IndexOutOfRangeError(
                    f"vertex {v} out of range for domain of size {domain_size}"
                )
        for v in comp[: len(comp) // 2]:
            bits |= 1 << v
    return Hypothesis(bits, domain_size)


def forest_filter(base_size: int) -> Callable[["tuple[int, ...]"], bool]:
    """Candidate filter for the search engine: accept only acyclic rank sets.

    Sound for lifted spaces because every shattered pair set is a forest,
    and downward-closed because subgraphs of forests are forests.
    """
    pairs = pair_domain(base_size).pairs

    def accept(ranks: "tuple[int, ...]") -> bool:
        parent: dict = {}
        for r in ranks:
            a, b = pairs[r]
            while a in parent:
                a = parent[a]
            while b in parent:
                b = parent[b]
            if a == b:
                return False
            parent[a] = b
        return True

    return accept
