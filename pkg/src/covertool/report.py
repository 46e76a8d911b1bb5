"""Structured pass/fail evidence for a single theorem check on a single graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graph import Graph

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class VerificationReport:
    theorem: str
    graph: str
    params: dict[str, Any]
    field: str
    verdict: str
    evidence: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_claims(
        cls,
        theorem: str,
        G: Graph,
        params: dict[str, Any],
        field: str,
        claims: dict[str, bool],
        quantities: dict[str, Any] | None = None,
        notes: list[str] | None = None,
    ) -> VerificationReport:
        evidence: dict[str, Any] = {"claims": dict(claims), "quantities": quantities or {}}
        if notes:
            evidence["notes"] = notes
        verdict = PASS if all(claims.values()) else FAIL
        return cls(theorem, G.canonical_string(), params, field, verdict, evidence)

    @classmethod
    def skipped(cls, theorem: str, G: Graph, params: dict[str, Any], field: str, reason: str, size_bound: int | None = None) -> VerificationReport:
        evidence: dict[str, Any] = {"reason": reason}
        if size_bound is not None:
            evidence["size_bound"] = size_bound
        return cls(theorem, G.canonical_string(), params, field, SKIPPED, evidence)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def claims(self) -> dict[str, bool]:
        return self.evidence.get("claims", {})

    def to_json(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "graph": self.graph,
            "params": self.params,
            "field": self.field,
            "verdict": self.verdict,
            "evidence": self.evidence,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> VerificationReport:
        return cls(data["theorem"], data["graph"], data["params"], data["field"], data["verdict"], data.get("evidence", {}))


def combine(theorem: str, G: Graph, params: dict[str, Any], field: str, parts: list[tuple[str, VerificationReport]]) -> VerificationReport:
    """Merge several sub-checks into one report; skipped parts are listed but not counted."""
    claims: dict[str, bool] = {}
    quantities: dict[str, Any] = {}
    skipped = []
    for label, rep in parts:
        if rep.verdict == SKIPPED:
            skipped.append({"part": label, **rep.evidence})
            continue
        for name, ok in rep.claims.items():
            claims[f"{label}:{name}"] = ok
        quantities[label] = rep.evidence.get("quantities", {})
    if not claims:
        reason = skipped[0]["reason"] if skipped else "no applicable sub-checks"
        return VerificationReport.skipped(theorem, G, params, field, reason)
    rep = VerificationReport.from_claims(theorem, G, params, field, claims, quantities)
    if skipped:
        rep.evidence["skipped_parts"] = skipped
    return rep
