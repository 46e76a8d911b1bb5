"""Run one theorem check over a corpus of graphs, optionally in parallel and cached."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .cache import ResultCache
from .graph import Graph
from .linalg import QQ, Field
from .report import FAIL, PASS, SKIPPED, VerificationReport
from .verify import run_check


@dataclass
class SweepResult:
    theorem: str
    params: dict
    field: str
    reports: list[VerificationReport] = field(default_factory=list)
    cached: int = 0

    def count(self, verdict: str) -> int:
        return sum(r.verdict == verdict for r in self.reports)

    @property
    def failures(self) -> list[VerificationReport]:
        return [r for r in self.reports if r.verdict == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self, include_reports: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "params": self.params,
            "field": self.field,
            "graphs": len(self.reports),
            "pass": self.count(PASS),
            "fail": self.count(FAIL),
            "skipped": self.count(SKIPPED),
            "failures": [r.to_json() for r in self.failures],
            "cached": self.cached,
        }
        if include_reports:
            out["reports"] = [r.to_json() for r in self.reports]
        return out


def _task(args: tuple[str, Graph, int, int, str]) -> dict:
    theorem, G, k, kmax, field = args
    return run_check(theorem, G, k=k, kmax=kmax, field=field).to_json()


def sweep(
    theorem: str,
    graphs: Iterable[Graph],
    k: int = 2,
    kmax: int = 3,
    field: Field | str = QQ,
    jobs: int | None = None,
    cache: ResultCache | None = None,
) -> SweepResult:
    """Reports come back in corpus order whatever ``jobs`` is."""
    field = Field.parse(field)
    params = {"k": k, "kmax": kmax}
    graphs = list(graphs)
    keys = [(G.canonical_string(), theorem, k, kmax, str(field)) for G in graphs]
    results: list[dict | None] = [cache.get(key) if cache else None for key in keys]
    todo = [i for i, r in enumerate(results) if r is None]
    tasks = [(theorem, graphs[i], k, kmax, str(field)) for i in todo]
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            computed = list(pool.map(_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        computed = [_task(t) for t in tasks]
    for i, rec in zip(todo, computed):
        results[i] = rec
        if cache is not None:
            cache.put(keys[i], rec)
    reports = [VerificationReport.from_json(r) for r in results if r is not None]
    return SweepResult(theorem, params, str(field), reports, cached=len(graphs) - len(todo))
