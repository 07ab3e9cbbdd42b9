"""Per-space bound verification, ratio search, and report emission.

``verify_theorem`` measures one space: its VC dimension, the VC dimension of
its lifted space (computed with the forest candidate filter), the ratio
between them, and whether both sides of the d - 1 <= d_sim <= floor(4.55 d)
bracket hold.  It reports rather than asserts, so a hypothetical
counterexample is captured instead of crashed on.

``ratio_search`` drives verify over a space stream and tracks the maximum
d_sim / d, probing the conjecture that the true upper factor is 2.  Streams
are processed in chunks by a worker pool; results are folded in stream
order, so the outcome is independent of the worker count.
"""

from __future__ import annotations

import csv
import json
import multiprocessing
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterable, Iterator, Optional, Sequence, TextIO, Union

from .bounds import DELTA, urner_bound
from .engine import vc_exact
from .errors import InvalidSpecError, PairDomainEmptyError
from .families import FamilySpec, spaces_for
from .similarity import forest_filter, lift_space, pair_domain
from .space import HypothesisSpace, space_to_dict

#: Fixed CSV column order of report files.
CSV_COLUMNS = (
    "family",
    "n",
    "k",
    "size",
    "seed",
    "d",
    "d_sim",
    "ratio",
    "lower_ok",
    "upper_ok",
    "urner_value",
    "wall_time_ms",
)

_CHUNK = 128


@dataclass(frozen=True, slots=True)
class BoundReport:
    """Everything measured about one space, bound checks included."""

    family_spec: Union[FamilySpec, str]
    n: int
    space_size: int
    d: int
    d_sim: int
    ratio: Optional[Fraction]
    lower_ok: bool
    upper_ok: bool
    witness_base: "tuple[int, ...]"
    witness_sim: "tuple[tuple[int, int], ...]"
    urner_value: Optional[float]
    wall_time_ms: int

    def to_dict(self, *, include_timing: bool = True) -> dict:
        doc = {
            "family": self.family_spec.to_dict()
            if isinstance(self.family_spec, FamilySpec)
            else self.family_spec,
            "n": self.n,
            "space_size": self.space_size,
            "d": self.d,
            "d_sim": self.d_sim,
            "ratio": str(self.ratio) if self.ratio is not None else None,
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
            "witness_base": list(self.witness_base),
            "witness_sim": [list(p) for p in self.witness_sim],
            "urner_value": self.urner_value,
        }
        if include_timing:
            doc["wall_time_ms"] = self.wall_time_ms
        return doc

    def csv_row(self, *, include_timing: bool = True) -> "list[str]":
        spec = self.family_spec
        if isinstance(spec, FamilySpec):
            family, k, size, seed = spec.kind, spec.k, spec.size, spec.seed
        else:
            family, k, size, seed = str(spec), None, None, None
        row = [
            family,
            str(self.n),
            "" if k is None else str(k),
            "" if size is None else str(size),
            "" if seed is None else str(seed),
            str(self.d),
            str(self.d_sim),
            "undefined" if self.ratio is None else str(self.ratio),
            "true" if self.lower_ok else "false",
            "true" if self.upper_ok else "false",
            "" if self.urner_value is None else repr(self.urner_value),
        ]
        if include_timing:
            row.append(str(self.wall_time_ms))
        return row


def _lifted_vc(space: HypothesisSpace):
    """(dimension, witness pairs) of the lifted space; (0, ()) when n < 2."""
    try:
        lifted = lift_space(space)
    except PairDomainEmptyError:
        return 0, ()
    result = vc_exact(lifted, candidate_filter=forest_filter(space.domain_size))
    domain = pair_domain(space.domain_size)
    return result.dimension, tuple(domain.unrank(r) for r in result.witness.subset)


def verify_theorem(
    space: HypothesisSpace, family_spec: Union[FamilySpec, str] = "file"
) -> BoundReport:
    """Measure one space against the d - 1 <= d_sim <= floor(4.55 d) bracket."""
    start = time.perf_counter()
    base = vc_exact(space)
    d = base.dimension
    d_sim, witness_sim = _lifted_vc(space)
    ratio = Fraction(d_sim, d) if d > 0 else None
    report = BoundReport(
        family_spec=family_spec,
        n=space.domain_size,
        space_size=len(space),
        d=d,
        d_sim=d_sim,
        ratio=ratio,
        lower_ok=d - 1 <= d_sim,
        upper_ok=d_sim <= (d * DELTA.numerator) // DELTA.denominator,
        witness_base=base.witness.subset,
        witness_sim=witness_sim,
        urner_value=urner_bound(d) if d >= 1 else None,
        wall_time_ms=int((time.perf_counter() - start) * 1000),
    )
    return report


@dataclass(frozen=True, slots=True)
class RatioSearchResult:
    """Outcome of a ratio search over a space stream."""

    max_ratio: Optional[Fraction]
    argmax_space: Optional[HypothesisSpace]
    spaces_examined: int
    conjecture_violated: bool

    def to_dict(self) -> dict:
        return {
            "max_ratio": str(self.max_ratio) if self.max_ratio is not None else None,
            "argmax_space": space_to_dict(self.argmax_space)
            if self.argmax_space is not None
            else None,
            "spaces_examined": self.spaces_examined,
            "conjecture_violated": self.conjecture_violated,
        }


def _dims_job(space: HypothesisSpace) -> "tuple[int, int]":
    d = vc_exact(space).dimension
    d_sim, _ = _lifted_vc(space)
    return d, d_sim


def _chunks(stream: Iterator, size: int) -> Iterator[list]:
    while True:
        batch = list(islice(stream, size))
        if not batch:
            return
        yield batch


def ratio_search(
    spaces: Iterable[HypothesisSpace], budget: int, jobs: int = 1
) -> RatioSearchResult:
    """Maximum d_sim / d over up to ``budget`` spaces with d >= 1.

    The argmax is the first space in stream order attaining the maximum;
    spaces with d = 0 force d_sim = 0 and are excluded from the ratio.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    stream = islice(iter(spaces), budget)
    best: Optional[Fraction] = None
    argmax: Optional[HypothesisSpace] = None
    examined = 0

    def fold(space: HypothesisSpace, dims: "tuple[int, int]") -> None:
        nonlocal best, argmax, examined
        examined += 1
        d, d_sim = dims
        if d < 1:
            return
        ratio = Fraction(d_sim, d)
        if best is None or ratio > best:
            best = ratio
            argmax = space
    if jobs <= 1:
        for space in stream:
            fold(space, _dims_job(space))
    else:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            for batch in _chunks(stream, _CHUNK):
                for space, dims in zip(batch, pool.map(_dims_job, batch)):
                    fold(space, dims)
    return RatioSearchResult(
        max_ratio=best,
        argmax_space=argmax,
        spaces_examined=examined,
        conjecture_violated=best is not None and best > 2,
    )


def _verify_job(item: "tuple[Union[FamilySpec, str], HypothesisSpace]") -> BoundReport:
    spec, space = item
    return verify_theorem(space, family_spec=spec)


def iter_reports(
    pairs: "Iterable[tuple[Union[FamilySpec, str], HypothesisSpace]]", jobs: int = 1
) -> Iterator[BoundReport]:
    """Verify a (family, space) stream; rows come out in stream order."""
    if jobs <= 1:
        for item in pairs:
            yield _verify_job(item)
        return
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        for batch in _chunks(iter(pairs), _CHUNK):
            yield from pool.map(_verify_job, batch)


def _write_csv(out: TextIO, reports: Iterable[BoundReport], include_timing: bool) -> int:
    columns = CSV_COLUMNS if include_timing else CSV_COLUMNS[:-1]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    count = 0
    for report in reports:
        writer.writerow(report.csv_row(include_timing=include_timing))
        count += 1
    return count


def _write_jsonl(out: TextIO, reports: Iterable[BoundReport], include_timing: bool) -> int:
    count = 0
    for report in reports:
        out.write(json.dumps(report.to_dict(include_timing=include_timing), separators=(",", ":")))
        out.write("\n")
        count += 1
    return count


def run_report(
    specs: Sequence[FamilySpec],
    output_format: str,
    output_path,
    *,
    jobs: int = 1,
    include_timing: bool = True,
) -> int:
    """Write one report row per space described by ``specs``; returns the row count.

    ``include_timing=False`` drops the wall-time column, leaving output that
    is byte-identical across runs and worker counts.
    """
    if output_format not in ("csv", "jsonl"):
        raise InvalidSpecError(f"unknown report format {output_format!r}")
    pairs = ((spec, space) for spec in specs for space in spaces_for(spec))
    reports = iter_reports(pairs, jobs=jobs)
    with open(output_path, "w", encoding="utf-8", newline="") as out:
        if output_format == "csv":
            return _write_csv(out, reports, include_timing)
        return _write_jsonl(out, reports, include_timing)
