"""Exhaustive and sampled sweeps over signings of a base graph.

The signing space is enumerated as bitmasks (class masks over non-tree
edges, or raw sign vectors over all edges), split into contiguous ranges
per worker and processed in chunks of 4096 by the scan kernel. A single
collector merges chunk results, so worker count never changes the report
beyond wall time. Checkpoints are JSON-lines files of violation records
with a footer marking progress per range.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from . import accel
from .conjectures import DEFAULT_TOL, BoundKind, ViolationRecord, bound
from .graphs import SignedGraph, SimpleGraph
from .spectra import ConvergenceError, spectrum_of
from .switching import (
    DisconnectedGraphError,
    SpanningTree,
    canonical_representative,
    spanning_tree,
)

CHUNK = 1 << 12  # masks per kernel call; also the progress/checkpoint grain


class SearchMode(Enum):
    EXHAUSTIVE_CLASSES = "classes"
    EXHAUSTIVE_ALL = "all"
    RANDOM_SAMPLE = "sample"


class CheckpointError(RuntimeError):
    """Checkpoint file is corrupt or belongs to a different job."""


class SearchAborted(RuntimeError):
    """A worker failed; .partial holds the results collected so far."""

    def __init__(self, message: str, partial: "SearchReport"):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class SearchJob:
    base: SimpleGraph
    kind: BoundKind
    mode: SearchMode
    k_filter: Optional[frozenset[int]] = None
    sample_count: int = 0
    seed: int = 0
    tol: float = DEFAULT_TOL
    workers: int = 1

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        if self.tol <= 0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")
        if self.mode is SearchMode.RANDOM_SAMPLE and self.sample_count < 1:
            raise ValueError("sample_count must be positive in RandomSample mode")
        if self.k_filter is not None:
            object.__setattr__(self, "k_filter", frozenset(int(k) for k in self.k_filter))
            bad = [k for k in self.k_filter if not 1 <= k <= self.base.n]
            if bad:
                raise ValueError(f"k_filter values {sorted(bad)} outside [1, {self.base.n}]")

    def fingerprint(self) -> str:
        """Hash of everything that affects results (worker count excluded)."""
        doc = {
            "n": self.base.n,
            "edges": list(self.base.edges),
            "kind": self.kind.value,
            "mode": self.mode.value,
            "k_filter": sorted(self.k_filter) if self.k_filter is not None else None,
            "sample_count": self.sample_count,
            "seed": self.seed,
            "tol": self.tol,
        }
        return hashlib.sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()

    def to_json_dict(self) -> dict:
        return {
            "base": self.base.label,
            "n": self.base.n,
            "m": self.base.m,
            "kind": self.kind.value,
            "mode": self.mode.value,
            "k_filter": sorted(self.k_filter) if self.k_filter is not None else None,
            "sample_count": self.sample_count,
            "seed": self.seed,
            "tol": self.tol,
            "workers": self.workers,
        }


@dataclass
class SearchReport:
    job: SearchJob
    classes_checked: int
    violations: list[ViolationRecord]
    wall_time: float
    best_margin: float
    complete: bool = True

    def to_json_dict(self) -> dict:
        return {
            "job": self.job.to_json_dict(),
            "classes_checked": self.classes_checked,
            "violations": [v.to_json_dict() for v in self.violations],
            "wall_time": self.wall_time,
            "best_margin": self.best_margin,
            "complete": self.complete,
        }


@dataclass(frozen=True)
class _ScanSetup:
    ei: np.ndarray
    ej: np.ndarray
    deg: np.ndarray
    var_pos: np.ndarray          # edge indices whose sign a mask bit controls
    kbounds: np.ndarray
    kcheck: np.ndarray
    space: int                   # number of distinct masks
    st: Optional[SpanningTree]
    sample_masks: Optional[np.ndarray] = None


def _scan_setup(job: SearchJob) -> _ScanSetup:
    base = job.base
    n, m = base.n, base.m
    ei = np.array([e[0] for e in base.edges], dtype=np.int64)
    ej = np.array([e[1] for e in base.edges], dtype=np.int64)
    deg = np.array(base.degree_sequence(), dtype=np.float64)
    if job.mode is SearchMode.EXHAUSTIVE_ALL:
        st = None
        var_pos = np.arange(m, dtype=np.int64)
        space = 1 << m
    else:
        st = spanning_tree(base)
        var_pos = np.array(st.nontree_edges, dtype=np.int64)
        space = 1 << len(st.nontree_edges)
    kbounds = np.array([bound(job.kind, m, k) for k in range(1, n + 1)], dtype=np.float64)
    if job.k_filter is None:
        kcheck = np.ones(n, dtype=np.bool_)
    else:
        kcheck = np.array([k in job.k_filter for k in range(1, n + 1)], dtype=np.bool_)
    sample_masks = None
    if job.mode is SearchMode.RANDOM_SAMPLE:
        rng = np.random.default_rng(job.seed)
        sample_masks = rng.integers(0, space, size=job.sample_count, dtype=np.int64)
    return _ScanSetup(ei=ei, ej=ej, deg=deg, var_pos=var_pos, kbounds=kbounds,
                      kcheck=kcheck, space=space, st=st, sample_masks=sample_masks)


def _split(total: int, workers: int) -> list[tuple[int, int]]:
    q, r = divmod(total, workers)
    ranges = []
    lo = 0
    for w in range(workers):
        size = q + (1 if w < r else 0)
        ranges.append((lo, lo + size))
        lo += size
    return ranges


def partition(job: SearchJob, workers: int) -> list[tuple[int, int]]:
    """Disjoint, exhaustive mask-index ranges with sizes differing by <= 1."""
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    setup = _scan_setup(job)
    total = job.sample_count if job.mode is SearchMode.RANDOM_SAMPLE else setup.space
    return _split(total, workers)


def _expand_mask(mask: int, var_pos: np.ndarray) -> int:
    signs = 0
    for b, t in enumerate(var_pos):
        if (mask >> b) & 1:
            signs |= 1 << int(t)
    return signs


# Worker-side state, set once per process by the pool initializer.
_CTX: dict = {}


def _init_worker(payload: dict) -> None:
    _CTX.update(payload)


def _run_chunk(task: tuple[int, int, int]):
    ri, lo, hi = task
    if _CTX["sample_masks"] is not None:
        masks = _CTX["sample_masks"][lo:hi]
    else:
        masks = np.arange(lo, hi, dtype=np.int64)
    cap = len(masks) * len(_CTX["deg"])
    out_mask = np.empty(cap, dtype=np.int64)
    out_k = np.empty(cap, dtype=np.int64)
    out_sum = np.empty(cap, dtype=np.float64)
    out_margin = np.empty(cap, dtype=np.float64)
    count, best, bad = accel.scan_masks(
        masks, _CTX["ei"], _CTX["ej"], _CTX["deg"], _CTX["var_pos"],
        _CTX["kbounds"], _CTX["kcheck"], _CTX["tol"],
        out_mask, out_k, out_sum, out_margin,
    )
    viols = [
        (int(out_mask[i]), int(out_k[i]), float(out_sum[i]), float(out_margin[i]))
        for i in range(count)
    ]
    return ri, lo, hi, viols, float(best), int(bad)


def _atomic_write(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def checkpoint_write(path: str, job: SearchJob, completed_through: list[int],
                     best_margin: float, found: dict) -> None:
    """Rewrite the checkpoint: violation records then a progress footer."""
    lines = [
        json.dumps(rec.to_json_dict())
        for _, rec in sorted(found.items())
    ]
    footer = {
        "completed_through": list(completed_through),
        "best_margin": best_margin,
        "job_hash": job.fingerprint(),
    }
    lines.append(json.dumps(footer))
    _atomic_write(path, "\n".join(lines) + "\n")


def checkpoint_resume(path: str, job: SearchJob, ranges: list[tuple[int, int]]):
    """Read a checkpoint back; returns (completed_through, best_margin, found)
    or None when the file is absent or empty (fresh start)."""
    if not os.path.exists(path) or os.path.getsize(path) == 0:
        return None
    with open(path, encoding="utf-8") as fh:
        lines = [ln for ln in (raw.strip() for raw in fh) if ln]
    if not lines:
        return None
    try:
        footer = json.loads(lines[-1])
    except json.JSONDecodeError as exc:
        raise CheckpointError(f"corrupt checkpoint footer in {path}") from exc
    if not isinstance(footer, dict) or "job_hash" not in footer or "completed_through" not in footer:
        raise CheckpointError(f"checkpoint {path} is missing its footer")
    if footer["job_hash"] != job.fingerprint():
        raise CheckpointError("checkpoint belongs to a different job (hash mismatch)")
    completed = footer["completed_through"]
    if len(completed) != len(ranges):
        raise CheckpointError(
            f"checkpoint has {len(completed)} ranges, current partition has {len(ranges)}"
        )
    for pos, (lo, hi) in zip(completed, ranges):
        if not lo <= pos <= hi:
            raise CheckpointError(f"checkpoint position {pos} outside range [{lo}, {hi}]")
    found = {}
    try:
        for ln in lines[:-1]:
            d = json.loads(ln)
            rec = ViolationRecord.from_json_dict(d, job.base)
            found[(rec.signing.signs, rec.k)] = rec
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise CheckpointError(f"corrupt violation record in {path}") from exc
    return [int(p) for p in completed], float(footer.get("best_margin", -np.inf)), found


def run(job: SearchJob, checkpoint_path: Optional[str] = None,
        progress: Optional[Callable[[int, int], None]] = None,
        on_violation: Optional[Callable[[ViolationRecord], None]] = None) -> SearchReport:
    """Check every signing in the job's scope and collect violation evidence.

    Deterministic for identical jobs: violations are recorded against the
    canonical representative of their switching class (when the base is
    connected) and sorted by (sign bitmask, k). The optional progress
    callback receives (masks done, masks total) after every chunk.
    """
    t0 = time.perf_counter()
    setup = _scan_setup(job)
    total = job.sample_count if job.mode is SearchMode.RANDOM_SAMPLE else setup.space
    ranges = _split(total, job.workers)

    # For the all-signings mode, violations are canonicalized before being
    # recorded so evidence is deduplicated per switching class.
    canon_tree: Optional[SpanningTree] = setup.st
    if job.mode is SearchMode.EXHAUSTIVE_ALL:
        try:
            canon_tree = spanning_tree(job.base)
        except DisconnectedGraphError:
            canon_tree = None

    next_start = [lo for lo, hi in ranges]
    best = -np.inf
    found: dict[tuple[int, int], ViolationRecord] = {}
    if checkpoint_path:
        resumed = checkpoint_resume(checkpoint_path, job, ranges)
        if resumed is not None:
            next_start, best, found = resumed

    tasks = [
        (ri, s, min(s + CHUNK, hi))
        for ri, (lo, hi) in enumerate(ranges)
        for s in range(next_start[ri], hi, CHUNK)
    ]
    pending: list[dict[int, int]] = [{} for _ in ranges]
    checked = sum(next_start[ri] - ranges[ri][0] for ri in range(len(ranges)))

    def make_record(mask: int, k: int, sm: float, mg: float) -> ViolationRecord:
        b = bound(job.kind, job.base.m, k)
        if job.mode is SearchMode.EXHAUSTIVE_ALL:
            g = SignedGraph(job.base, mask)
            if canon_tree is not None:
                g = canonical_representative(g, canon_tree)
                sm = spectrum_of(g).top_k_sum(k)
                mg = sm - b
        else:
            g = SignedGraph(job.base, _expand_mask(mask, setup.var_pos))
        return ViolationRecord(signing=g, kind=job.kind, k=k, sum=sm, bound=b, margin=mg)

    def handle(result) -> None:
        nonlocal best, checked
        ri, lo, hi, viols, chunk_best, bad = result
        if bad >= 0:
            raise ConvergenceError(f"eigensolver failed to converge on mask {bad:#x}")
        checked += hi - lo
        best = max(best, chunk_best)
        for mask, k, sm, mg in viols:
            rec = make_record(mask, k, sm, mg)
            key = (rec.signing.signs, rec.k)
            if key not in found:
                found[key] = rec
                if on_violation:
                    on_violation(rec)
        pending[ri][lo] = hi
        while next_start[ri] in pending[ri]:
            next_start[ri] = pending[ri].pop(next_start[ri])
        if checkpoint_path:
            checkpoint_write(checkpoint_path, job, next_start, best, found)
        if progress:
            progress(checked, total)

    payload = {
        "ei": setup.ei, "ej": setup.ej, "deg": setup.deg, "var_pos": setup.var_pos,
        "kbounds": setup.kbounds, "kcheck": setup.kcheck, "tol": job.tol,
        "sample_masks": setup.sample_masks,
    }

    def partial_report(msg: str) -> SearchReport:
        return SearchReport(
            job=job, classes_checked=checked,
            violations=sorted(found.values(), key=lambda r: (r.signing.signs, r.k)),
            wall_time=time.perf_counter() - t0, best_margin=float(best), complete=False,
        )

    if job.workers == 1:
        _init_worker(payload)
        for task in tasks:
            handle(_run_chunk(task))
    else:
        with ProcessPoolExecutor(
            max_workers=job.workers, initializer=_init_worker, initargs=(payload,)
        ) as pool:
            futures = {pool.submit(_run_chunk, task) for task in tasks}
            try:
                while futures:
                    done, futures = wait(futures, return_when=FIRST_COMPLETED)
                    for fut in done:
                        handle(fut.result())
            except ConvergenceError:
                raise
            except Exception as exc:
                for fut in futures:
                    fut.cancel()
                raise SearchAborted(f"worker failed: {exc}", partial_report(str(exc))) from exc

    violations = sorted(found.values(), key=lambda r: (r.signing.signs, r.k))
    return SearchReport(
        job=job, classes_checked=checked, violations=violations,
        wall_time=time.perf_counter() - t0, best_margin=float(best), complete=True,
    )
