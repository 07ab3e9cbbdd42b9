"""Generators for concrete hypothesis-space families and seeded space streams.

Randomness is pinned to SplitMix64 rather than a standard library generator
so that seeds mean the same thing in any reimplementation.  A random space
of a given size draws 64-bit values, keeps the low n bits (exactly uniform,
since 2^n divides 2^64) and collects distinct labellings until the requested
size is reached.  Streams derive the i-th space's seed from the i-th output
of SplitMix64 run on the base seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

from .errors import (
    DomainTooLargeForEnumerationError,
    InvalidParamsError,
    InvalidSpecError,
)
from .space import (
    DOMAIN_SIZE_CAP,
    HypothesisSpace,
    _cached_hypothesis,
    _canonical_space,
    _revbits,
)

#: Full enumeration of 2^(2^n) - 1 nonempty spaces is feasible only here.
ENUMERATION_CAP = 4

_MASK64 = (1 << 64) - 1


def splitmix64_stream(seed: int) -> Iterator[int]:
    """The documented SplitMix64 sequence for ``seed`` (64-bit outputs).

    state += 0x9E3779B97F4A7C15; z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
    z = (z ^ z>>27) * 0x94D049BB133111EB; output z ^ z>>31 (all mod 2^64).
    """
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


FAMILY_KINDS = ("k_sparse", "full_cube", "random", "exhaustive")

_KIND_ALIASES = {
    "k_sparse": "k_sparse",
    "ksparse": "k_sparse",
    "full_cube": "full_cube",
    "cube": "full_cube",
    "random": "random",
    "exhaustive": "exhaustive",
}


@dataclass(frozen=True, slots=True)
class FamilySpec:
    """Description of one generated family instance, kept for provenance."""

    kind: str
    n: int
    k: Optional[int] = None
    size: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise InvalidParamsError(f"unknown family kind {self.kind!r}")
        if self.kind == "k_sparse" and self.k is None:
            raise InvalidParamsError("k_sparse requires k")
        if self.kind == "random" and (self.size is None or self.seed is None):
            raise InvalidParamsError("random requires size and seed")

    def to_dict(self) -> dict:
        doc = {"family": self.kind, "n": self.n}
        for key in ("k", "size", "seed"):
            value = getattr(self, key)
            if value is not None:
                doc[key] = value
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "FamilySpec":
        if not isinstance(doc, dict):
            raise InvalidSpecError(f"family spec must be an object, got {doc!r}")
        raw_kind = doc.get("family", doc.get("kind"))
        kind = _KIND_ALIASES.get(raw_kind)
        if kind is None:
            raise InvalidSpecError(f"unknown family {raw_kind!r}")
        if "n" not in doc:
            raise InvalidSpecError("family spec requires n")
        try:
            return cls(
                kind,
                int(doc["n"]),
                k=int(doc["k"]) if doc.get("k") is not None else None,
                size=int(doc["size"]) if doc.get("size") is not None else None,
                seed=int(doc["seed"]) if doc.get("seed") is not None else None,
            )
        except (TypeError, ValueError) as exc:
            raise InvalidSpecError(f"malformed family spec {doc!r}: {exc}") from None
        except InvalidParamsError as exc:
            raise InvalidSpecError(str(exc)) from None


def _check_n(n: int) -> None:
    if not 1 <= n <= DOMAIN_SIZE_CAP:
        raise InvalidParamsError(f"n must be in 1..{DOMAIN_SIZE_CAP}, got {n}")


def k_sparse(n: int, k: int) -> HypothesisSpace:
    """All labellings of [n] with at most k ones; |H| = sum_{w<=k} C(n, w)."""
    _check_n(n)
    if not 0 <= k <= n:
        raise InvalidParamsError(f"k must be in 0..{n}, got {k}")
    bits = []
    for weight in range(k + 1):
        for positions in combinations(range(n), weight):
            b = 0
            for p in positions:
                b |= 1 << p
            bits.append(b)
    return _canonical_space(n, bits)


@lru_cache(maxsize=8)
def full_cube(n: int) -> HypothesisSpace:
    """All 2^n labellings of [n]."""
    _check_n(n)
    # enumerate lexicographic sort keys; bit-reversal is an involution
    hyps = tuple(_cached_hypothesis(_revbits(key, n), n) for key in range(1 << n))
    return HypothesisSpace(n, hyps)


def random_space(n: int, size: int, seed: int) -> HypothesisSpace:
    """Uniformly sampled space of ``size`` distinct hypotheses, reproducible from seed."""
    _check_n(n)
    if not 1 <= size <= (1 << n):
        raise InvalidParamsError(f"size must be in 1..2^{n}, got {size}")
    mask = (1 << n) - 1
    stream = splitmix64_stream(seed)
    chosen: set = set()
    while len(chosen) < size:
        chosen.add(next(stream) & mask)
    return _canonical_space(n, chosen)


def random_space_stream(n: int, size: int, samples: int, seed: int) -> Iterator[HypothesisSpace]:
    """``samples`` random spaces; the i-th uses the i-th SplitMix64 output of ``seed``."""
    if samples < 1:
        raise InvalidParamsError(f"samples must be at least 1, got {samples}")
    seeds = splitmix64_stream(seed)
    for _ in range(samples):
        yield random_space(n, size, next(seeds))


def enumerate_spaces(n: int) -> Iterator[HypothesisSpace]:
    """Every nonempty space over [n] exactly once, in a deterministic order.

    Spaces are subsets of the lexicographically sorted cube, counted in
    binary: mask bit i selects cube hypothesis i.
    """
    if n < 1:
        raise InvalidParamsError(f"n must be at least 1, got {n}")
    if n > ENUMERATION_CAP:
        raise DomainTooLargeForEnumerationError(
            f"exhaustive enumeration caps at n = {ENUMERATION_CAP}, got {n}"
        )
    cube = full_cube(n).hypotheses
    count = len(cube)
    for mask in range(1, 1 << count):
        picked = tuple(cube[i] for i in range(count) if (mask >> i) & 1)
        yield HypothesisSpace(n, picked)


def spaces_for(spec: FamilySpec) -> Iterator[HypothesisSpace]:
    """Expand a family spec into its space(s)."""
    if spec.kind == "k_sparse":
        yield k_sparse(spec.n, spec.k)
    elif spec.kind == "full_cube":
        yield full_cube(spec.n)
    elif spec.kind == "random":
        yield random_space(spec.n, spec.size, spec.seed)
    else:
        yield from enumerate_spaces(spec.n)
