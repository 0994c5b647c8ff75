"""Bounded exhaustive verification and implication mining.

Everything here is driven by one pass over the enumerated triangles.  Each
triangle is reduced to a 7-bit mask (the six conditions plus "3 divides the
primitive gcd") and a sort key.  A :class:`ScanSummary` keeps, per mask, the
number of triangles and the smallest key seen.  Summaries merge by adding
counts and taking minimum keys, so chunk results can be combined in any order
and still produce the same answer.

Witness order: smallest ``max(|x1|, |y1|, |x2|, |y2|)``, then lexicographic on
``(x1, y1, x2, y2)`` of the origin-based triangle as enumerated.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from .centers import Triangle, euler_line_lattice_point
from .conditions import (
    AREA,
    CONDITION_LABELS,
    EVEN,
    F,
    G,
    GCD3,
    H,
    MAX_ARRAY_BOUND,
    R,
    ConditionVector,
    classify,
    classify_arrays,
    primitive_gcd,
)
from .enumeration import EnumSpec, Chunk, chunk_keys, enumerate_triangles, make_chunk

__all__ = [
    "ScanSummary",
    "scan_summary",
    "VerificationReport",
    "THEOREMS",
    "verify",
    "verify_theorem1",
    "verify_theorem2",
    "verify_corollary",
    "verify_theorem3",
    "verify_f_implies_h",
    "verify_all",
    "ImplicationEntry",
    "ImplicationTable",
    "mine_implications",
    "proved_implication",
    "scan",
    "euler_line_empty_scan",
    "family_area_n",
]

NBUCKETS = 128
Key = Tuple[int, int, int, int, int]


def witness_key(x1: int, y1: int, x2: int, y2: int) -> Key:
    return (max(abs(x1), abs(y1), abs(x2), abs(y2)), x1, y1, x2, y2)


@dataclass
class ScanSummary:
    counts: List[int] = field(default_factory=lambda: [0] * NBUCKETS)
    first: Dict[int, Key] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def add(self, mask: int, key: Key, n: int = 1) -> None:
        self.counts[mask] += n
        old = self.first.get(mask)
        if old is None or key < old:
            self.first[mask] = key

    def merge(self, other: "ScanSummary") -> "ScanSummary":
        out = ScanSummary(list(self.counts), dict(self.first))
        for m, n in enumerate(other.counts):
            if n:
                out.add(m, other.first[m], n)
        return out

    def count_where(self, pred: Callable[[int], bool]) -> int:
        return sum(n for m, n in enumerate(self.counts) if n and pred(m))

    def first_where(self, pred: Callable[[int], bool]) -> Optional[Key]:
        keys = [k for m, k in self.first.items() if pred(m)]
        return min(keys) if keys else None


def _summarize_arrays(chunk: Chunk) -> ScanSummary:
    x1, y1, x2, y2 = chunk
    out = ScanSummary()
    if x1.size == 0:
        return out
    masks = classify_arrays(x1, y1, x2, y2)
    size = np.maximum(np.maximum(np.abs(x1), np.abs(y1)), np.maximum(np.abs(x2), np.abs(y2)))
    order = np.lexsort((y2, x2, y1, x1, size))
    uniq, idx = np.unique(masks[order], return_index=True)
    counts = np.bincount(masks, minlength=NBUCKETS)
    out.counts = [int(c) for c in counts]
    for m, i in zip(uniq.tolist(), order[idx].tolist()):
        out.first[m] = (int(size[i]), int(x1[i]), int(y1[i]), int(x2[i]), int(y2[i]))
    return out


def _triangle_mask(t: Triangle) -> int:
    mask = classify(t).mask
    if primitive_gcd(t) % 3 == 0:
        mask |= GCD3
    return mask


def _summarize_scalar(chunk: Chunk) -> ScanSummary:
    out = ScanSummary()
    for x1, y1, x2, y2 in zip(*(c.tolist() for c in chunk)):
        out.add(_triangle_mask(Triangle.from_origin(x1, y1, x2, y2)), witness_key(x1, y1, x2, y2))
    return out


def scan_summary(bound: int, threads: int = 1, primitive_only: bool = False,
                 dedupe: bool = False) -> ScanSummary:
    """Summarize every triangle of ``[-bound, bound]^2`` by condition mask."""
    spec = EnumSpec(bound, primitive_only, dedupe)
    summarize = _summarize_arrays if bound <= MAX_ARRAY_BOUND else _summarize_scalar

    def work(key: int) -> ScanSummary:
        return summarize(make_chunk(spec, key))

    keys = chunk_keys(bound)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, keys))
    else:
        parts = [work(k) for k in keys]
    total = ScanSummary()
    for p in parts:
        total = total.merge(p)
    return total


def _key_triangle(key: Optional[Key]) -> Optional[Triangle]:
    return None if key is None else Triangle.from_origin(*key[1:])


def _triangle_json(t: Optional[Triangle]):
    return None if t is None else list(t.as_tuple())


# theorem id -> (description, antecedent bits, bit that must then be set)
THEOREMS: Dict[str, Tuple[str, int, int]] = {
    "T1": ("F and G lattice => 3 | gcd(x1,y1,x2,y2)", F | G, GCD3),
    "T2": ("F lattice => every side vector has even coordinate sum", F, EVEN),
    "COR": ("F lattice => area is an integer", F, AREA),
    "T3": ("H lattice and R integer => F lattice", H | R, F),
    "F_IMPLIES_H": ("F lattice => H lattice", F, H),
}


@dataclass
class VerificationReport:
    theorem_id: str
    bound: int
    triangles_checked: int
    antecedent_count: int
    counterexample: Optional[Triangle]
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "theorem_id": self.theorem_id,
            "statement": THEOREMS[self.theorem_id][0],
            "bound": self.bound,
            "triangles_checked": self.triangles_checked,
            "antecedent_count": self.antecedent_count,
            "counterexample": _triangle_json(self.counterexample),
            "passed": self.passed,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 3)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing))

    def __str__(self):
        status = "PASS" if self.passed else f"FAIL counterexample {self.counterexample}"
        return (f"{self.theorem_id:<12} {status}  bound={self.bound} "
                f"checked={self.triangles_checked} antecedent={self.antecedent_count}")


def _report(theorem_id: str, summary: ScanSummary, bound: int, elapsed: float) -> VerificationReport:
    _, ante, cons = THEOREMS[theorem_id]
    holds = lambda m: m & ante == ante  # noqa: E731
    bad = lambda m: holds(m) and not m & cons  # noqa: E731
    return VerificationReport(
        theorem_id=theorem_id,
        bound=bound,
        triangles_checked=summary.total,
        antecedent_count=summary.count_where(holds),
        counterexample=_key_triangle(summary.first_where(bad)),
        elapsed=elapsed,
    )


def verify(theorem_id: str, bound: int, threads: int = 1) -> VerificationReport:
    if theorem_id not in THEOREMS:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    start = time.perf_counter()
    summary = scan_summary(bound, threads)
    return _report(theorem_id, summary, bound, time.perf_counter() - start)


def verify_theorem1(bound: int, threads: int = 1) -> VerificationReport:
    return verify("T1", bound, threads)


def verify_theorem2(bound: int, threads: int = 1) -> VerificationReport:
    return verify("T2", bound, threads)


def verify_corollary(bound: int, threads: int = 1) -> VerificationReport:
    return verify("COR", bound, threads)


def verify_theorem3(bound: int, threads: int = 1) -> VerificationReport:
    return verify("T3", bound, threads)


def verify_f_implies_h(bound: int, threads: int = 1) -> VerificationReport:
    return verify("F_IMPLIES_H", bound, threads)


def verify_all(bound: int, threads: int = 1) -> List[VerificationReport]:
    """All five verifiers from a single enumeration pass."""
    start = time.perf_counter()
    summary = scan_summary(bound, threads)
    elapsed = time.perf_counter() - start
    return [_report(tid, summary, bound, elapsed) for tid in THEOREMS]


# known implications: f => h, f => area, f => even, {h, r} => f
_RULES = ((F, H), (F, AREA), (F, EVEN), (H | R, F))


def proved_implication(antecedent: int, consequent: int) -> bool:
    """Whether ``antecedent => consequent`` (bit masks) follows from the proved rules."""
    closure = antecedent
    changed = True
    while changed:
        changed = False
        for pre, post in _RULES:
            if closure & pre == pre and not closure & post:
                closure |= post
                changed = True
    return closure & consequent == consequent


REFUTED = "REFUTED"
HOLDS = "HOLDS_UP_TO_BOUND"
VACUOUS = "VACUOUS_UP_TO_BOUND"


@dataclass(frozen=True)
class ImplicationEntry:
    status: str
    witness: Optional[Triangle]
    antecedent_satisfiable_count: int
    proved: bool = False


def mask_labels(mask: int) -> List[str]:
    return [CONDITION_LABELS[i] for i in range(6) if mask >> i & 1]


def parse_labels(labels) -> int:
    mask = 0
    for name in labels:
        mask |= 1 << CONDITION_LABELS.index(name)
    return mask


@dataclass
class ImplicationTable:
    bound: int
    entries: Dict[Tuple[int, int], ImplicationEntry]
    dedupe: bool = False

    def get(self, antecedent, consequent: str) -> ImplicationEntry:
        """Look up by label names, e.g. ``table.get({"g", "h"}, "f")``."""
        return self.entries[(parse_labels(antecedent), CONDITION_LABELS.index(consequent))]

    def to_dict(self) -> dict:
        rows = []
        for (mask, c), e in sorted(self.entries.items()):
            rows.append({
                "antecedent": mask_labels(mask),
                "consequent": CONDITION_LABELS[c],
                "status": e.status,
                "witness": _triangle_json(e.witness),
                "antecedent_count": e.antecedent_satisfiable_count,
                "proved": e.proved,
            })
        return {"bound": self.bound, "dedupe": self.dedupe, "entries": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def to_text(self) -> str:
        """64 x 6 matrix: ``·`` in antecedent, ``✓`` holds, ``✗`` refuted, ``∅`` vacuous.

        A trailing ``*`` marks an implication that follows from proved results.
        """
        width = 14
        head = f"{'antecedent':<22}" + "".join(f"{lab:>{width}}" for lab in CONDITION_LABELS)
        lines = [f"implication table, bound {self.bound}", head]
        for mask in range(64):
            cells = []
            for c in range(6):
                if mask >> c & 1:
                    cells.append("·")
                    continue
                e = self.entries[(mask, c)]
                if e.status == REFUTED:
                    x1, y1, x2, y2 = e.witness.side_vectors()
                    cell = f"✗{x1},{y1};{x2},{y2}"
                elif e.status == HOLDS:
                    cell = "✓*" if e.proved else "✓"
                else:
                    cell = "∅"
                cells.append(cell)
            label = "{" + ",".join(mask_labels(mask)) + "}"
            lines.append(f"{label:<22}" + "".join(f"{c:>{width}}" for c in cells))
        lines.append("legend: · in antecedent, ✓ holds up to bound (* follows from proved results), "
                     "✗x1,y1;x2,y2 refuted by O,(x1,y1),(x2,y2), ∅ antecedent never satisfied")
        return "\n".join(lines)


def table_from_summary(summary: ScanSummary, bound: int, dedupe: bool = False) -> ImplicationTable:
    entries = {}
    for ante in range(64):
        count = summary.count_where(lambda m: m & ante == ante)
        for c in range(6):
            bit = 1 << c
            if ante & bit:
                continue
            key = summary.first_where(lambda m: m & ante == ante and not m & bit)
            if key is not None:
                status = REFUTED
            elif count:
                status = HOLDS
            else:
                status = VACUOUS
            entries[(ante, c)] = ImplicationEntry(status, _key_triangle(key), count,
                                                  proved_implication(ante, bit))
    return ImplicationTable(bound, entries, dedupe)


def mine_implications(bound: int, threads: int = 1, dedupe: bool = False) -> ImplicationTable:
    """All 192 ``antecedent => consequent`` cells over ``[-bound, bound]^2``."""
    return table_from_summary(scan_summary(bound, threads, dedupe=dedupe), bound, dedupe)


def scan(bound: int, predicate: Optional[Callable] = None, limit: Optional[int] = None,
         primitive_only: bool = False, dedupe: bool = False
         ) -> Iterator[Tuple[Triangle, ConditionVector]]:
    """Stream triangles whose condition mask satisfies ``predicate``.

    ``predicate`` gets an array of masks and returns a boolean array (the
    :mod:`flagexpr` compiler produces such functions).
    """
    spec = EnumSpec(bound, primitive_only, dedupe)
    produced = 0
    for key in chunk_keys(bound):
        x1, y1, x2, y2 = make_chunk(spec, key)
        if x1.size == 0:
            continue
        if bound <= MAX_ARRAY_BOUND:
            masks = classify_arrays(x1, y1, x2, y2, with_gcd3=False)
        else:
            masks = np.array([classify(Triangle.from_origin(*row)).mask
                              for row in zip(x1.tolist(), y1.tolist(), x2.tolist(), y2.tolist())],
                             dtype=np.uint8)
        selected = np.ones(masks.shape, dtype=bool) if predicate is None else predicate(masks)
        hit = np.nonzero(np.asarray(selected, dtype=bool))[0]
        for i in hit.tolist():
            if limit is not None and produced >= limit:
                return
            t = Triangle.from_origin(int(x1[i]), int(y1[i]), int(x2[i]), int(y2[i]))
            yield t, ConditionVector.from_mask(int(masks[i]))
            produced += 1


def euler_line_empty_scan(bound: int) -> List[Triangle]:
    """Orbit representatives whose Euler line misses every lattice point."""
    return [t for t in enumerate_triangles(EnumSpec(bound, dedupe=True))
            if euler_line_lattice_point(t) is None]


def family_area_n(n: int) -> Triangle:
    """``O, (2, 0), (n, n)``: area ``n``, circumcenter ``(1, n - 1)``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Triangle.from_origin(2, 0, n, n)
