"""Executable checks of the structural results on symbolic powers of cover ideals.

Each check returns a :class:`VerificationReport`.  A failed hypothesis or a
size cap yields ``skipped``; ``fail`` means a computed quantity contradicts
the statement being checked.
"""

from __future__ import annotations

from functools import lru_cache, wraps
from typing import Callable

from .betti import betti, has_linear_presentation, has_linear_resolution, hochster_betti
from .errors import SizeError
from .gk import build_gk, gk_identity_sides
from .graph import Graph, classify, delete_closed_neighborhood, find_cm_vwc_labeling
from .ideal import (
    Monomial,
    MonomialIdeal,
    colon,
    cover_ideal,
    edge_ideal,
    max_gen_degree,
    multiply,
    symbolic_power,
)
from .linalg import QQ, Field
from .report import VerificationReport, combine

THEOREMS = ("main", "reg-monotone", "deg-linear", "deletion", "colon", "singdeg", "terai", "gk")


@lru_cache(maxsize=512)
def cover_symbolic_power(G: Graph, k: int) -> MonomialIdeal:
    """J(G)^(k); the unit ideal when G has no edges or k = 0."""
    J = cover_ideal(G)
    if J.is_unit():
        return J
    return symbolic_power(J, k)


def _isolated_skip(theorem: str, G: Graph, params: dict, field: Field) -> VerificationReport | None:
    if G.isolated_vertices():
        return VerificationReport.skipped(theorem, G, params, str(field), "hypothesis: graph has isolated vertices")
    if not G.edges:
        return VerificationReport.skipped(theorem, G, params, str(field), "hypothesis: graph has no edges")
    return None


def _size_guard(tag: str):
    """Turn a SizeError into a skipped report carrying the offending size."""

    def decorate(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
        @wraps(fn)
        def wrapper(G: Graph, *args, **kwargs):
            try:
                return fn(G, *args, **kwargs)
            except SizeError as exc:
                field = str(Field.parse(kwargs.get("field", QQ)))
                return VerificationReport.skipped(tag, G, {"args": list(args)}, field, str(exc), exc.size)

        return wrapper

    return decorate


@_size_guard("main")
def verify_main_theorem(G: Graph, k: int = 2, field: Field | str = QQ) -> VerificationReport:
    """The five conditions of the linear-resolution characterization agree.

    The "for every k" conditions are checked for 1..k only (bounded-k
    evidence); linear presentation counts as false when J(G)^(j) is not
    generated in a single degree.
    """
    field = Field.parse(field)
    if k < 2:
        raise ValueError("k must be at least 2")
    params = {"k": k}
    skip = _isolated_skip("main", G, params, field)
    if skip:
        return skip
    # Runs the labeling size check before any algebra.
    labeling = find_cm_vwc_labeling(G)
    per_power = {}
    resolution, presentation = {}, {}
    for j in range(1, k + 1):
        Jj = cover_symbolic_power(G, j)
        deg, single = max_gen_degree(Jj)
        presentation[j] = single and has_linear_presentation(Jj, field)
        resolution[j] = single and has_linear_resolution(Jj, field)
        per_power[str(j)] = {
            "max_degree": deg,
            "single_degree": single,
            "linear_presentation": presentation[j],
            "linear_resolution": resolution[j],
        }
    conditions = {
        "i": all(resolution.values()),
        "ii": resolution[k],
        "iii": all(presentation.values()),
        "iv": presentation[k],
        "v": labeling is not None,
    }
    claims = {
        "conditions_equivalent": len(set(conditions.values())) == 1,
        "resolution_implies_presentation": all(presentation[j] or not resolution[j] for j in resolution),
    }
    quantities = {
        "conditions": conditions,
        "powers": per_power,
        "cm_labeling": [list(p) for p in labeling.pairs] if labeling else None,
    }
    notes = [
        f"bounded-k evidence: conditions over all k checked for k=1..{k}",
        "linear presentation evaluated as false when not generated in a single degree",
    ]
    return VerificationReport.from_claims("main", G, params, str(field), claims, quantities, notes)


@_size_guard("reg-monotone")
def verify_reg_monotone(G: Graph, kmax: int = 3, field: Field | str = QQ) -> VerificationReport:
    """reg(S/J(G)^(k)) is nondecreasing for k = 1..kmax."""
    field = Field.parse(field)
    if kmax < 2:
        raise ValueError("kmax must be at least 2")
    params = {"kmax": kmax}
    if not G.edges:
        return VerificationReport.skipped("reg-monotone", G, params, str(field), "graph has no edges")
    regs = [betti(cover_symbolic_power(G, k), field).as_quotient().reg for k in range(1, kmax + 1)]
    claims = {f"reg{k}<=reg{k + 1}": regs[k - 1] <= regs[k] for k in range(1, kmax)}
    return VerificationReport.from_claims("reg-monotone", G, params, str(field), claims, {"reg_quotient": regs})


def verify_deg_linear(G: Graph, kmax: int = 3, field: Field | str = QQ) -> VerificationReport:
    """deg(J(G)^(k)) = k deg(J(G)) for unmixed or claw-free G."""
    field = Field.parse(field)
    params = {"kmax": kmax}
    skip = _isolated_skip("deg-linear", G, params, field)
    if skip:
        return skip
    cls = classify(G)
    if not (cls.unmixed or cls.claw_free):
        return VerificationReport.skipped("deg-linear", G, params, str(field), "hypothesis: neither unmixed nor claw-free")
    degrees = [max_gen_degree(cover_symbolic_power(G, k))[0] for k in range(1, kmax + 1)]
    claims = {f"deg{k}=={k}*deg1": degrees[k - 1] == k * degrees[0] for k in range(1, kmax + 1)}
    quantities = {"degrees": degrees, "unmixed": cls.unmixed, "claw_free": cls.claw_free}
    return VerificationReport.from_claims("deg-linear", G, params, str(field), claims, quantities)


def verify_deletion_identity(G: Graph, x: str, k: int, field: Field | str = QQ) -> VerificationReport:
    """J(G)^(k) + (x) = u^k J'^(k) + (x), u the product of N(x), J' = J(G minus N[x])."""
    field = Field.parse(field)
    if k < 1:
        raise ValueError("k must be positive")
    G.index(x)
    params = {"vertex": x, "k": k}
    ambient = G.vertices
    xideal = MonomialIdeal(ambient, [Monomial.var(x)])
    u = Monomial.product_of(G.neighbors(x))
    rest = delete_closed_neighborhood(G, [x])
    lhs = cover_symbolic_power(G, k) + xideal
    rhs = multiply(cover_symbolic_power(rest, k).extend(ambient), u**k) + xideal
    quantities = {"lhs": str(lhs), "rhs": str(rhs), "u": str(u), "remaining_edges": len(rest.edges)}
    return VerificationReport.from_claims("deletion", G, params, str(field), {"equal": lhs == rhs}, quantities)


def verify_colon_identity(G: Graph, k: int, field: Field | str = QQ) -> VerificationReport:
    """(J(G)^(k) : x_1...x_n) = J(G)^(k-2)."""
    field = Field.parse(field)
    if k < 2:
        raise ValueError("k must be at least 2")
    params = {"k": k}
    skip = _isolated_skip("colon", G, params, field)
    if skip:
        return skip
    v = Monomial.product_of(G.vertices)
    lhs = colon(cover_symbolic_power(G, k), v)
    rhs = cover_symbolic_power(G, k - 2)
    return VerificationReport.from_claims("colon", G, params, str(field), {"equal": lhs == rhs}, {"colon": str(lhs), "expected": str(rhs)})


def verify_singdeg(G: Graph, k: int, field: Field | str = QQ) -> VerificationReport:
    """If J(G)^(k) is generated in one degree then G is very well-covered."""
    field = Field.parse(field)
    if k < 2:
        raise ValueError("k must be at least 2")
    params = {"k": k}
    skip = _isolated_skip("singdeg", G, params, field)
    if skip:
        return skip
    degs = sorted(set(cover_symbolic_power(G, k).degrees()))
    single = len(degs) == 1
    vwc = classify(G).very_well_covered
    quantities = {"generator_degrees": degs, "single_degree": single, "very_well_covered": vwc}
    return VerificationReport.from_claims("singdeg", G, params, str(field), {"implication": vwc or not single}, quantities)


@_size_guard("terai")
def verify_terai(G: Graph, field: Field | str = QQ) -> VerificationReport:
    """reg(J(G)) = pd(S/I(G)), both from Hochster Betti tables."""
    field = Field.parse(field)
    skip = _isolated_skip("terai", G, {}, field)
    if skip:
        return skip
    reg_cover = hochster_betti(cover_ideal(G), field).reg
    pd_edge = hochster_betti(edge_ideal(G), field).as_quotient().pd
    quantities = {"reg_cover": reg_cover, "pd_quotient_edge": pd_edge}
    return VerificationReport.from_claims("terai", G, {}, str(field), {"equal": reg_cover == pd_edge}, quantities)


def verify_gk_identity(G: Graph, r: int, field: Field | str = QQ) -> VerificationReport:
    """polarize(J(G)^(r)) equals the cover ideal of G_r, generator by generator."""
    field = Field.parse(field)
    if r < 1:
        raise ValueError("r must be positive")
    params = {"r": r}
    skip = _isolated_skip("gk", G, params, field)
    if skip:
        return skip
    lhs, rhs = gk_identity_sides(G, r)
    gk = build_gk(G, r)
    quantities = {
        "gk_vertices": gk.n,
        "gk_edges": len(gk.edges),
        "generators": len(lhs),
        "same_ambient": lhs.ambient == rhs.ambient,
    }
    return VerificationReport.from_claims("gk", G, params, str(field), {"equal": lhs == rhs}, quantities)


# -- sweep entry point -------------------------------------------------------


def run_check(theorem: str, G: Graph, k: int = 2, kmax: int = 3, field: Field | str = QQ) -> VerificationReport:
    """One report per graph; families of sub-checks are merged."""
    field = Field.parse(field)
    if theorem == "main":
        return verify_main_theorem(G, k, field=field)
    if theorem == "reg-monotone":
        return verify_reg_monotone(G, kmax, field=field)
    if theorem == "deg-linear":
        return verify_deg_linear(G, kmax, field=field)
    if theorem == "singdeg":
        return verify_singdeg(G, k, field=field)
    if theorem == "terai":
        return verify_terai(G, field=field)
    if theorem == "deletion":
        parts = [(f"{x}/k={kk}", verify_deletion_identity(G, x, kk, field)) for x in G.vertices for kk in range(1, kmax + 1)]
        return combine("deletion", G, {"kmax": kmax}, str(field), parts)
    if theorem == "colon":
        parts = [(f"k={kk}", verify_colon_identity(G, kk, field)) for kk in range(2, kmax + 1)]
        return combine("colon", G, {"kmax": kmax}, str(field), parts)
    if theorem == "gk":
        parts = [(f"r={r}", verify_gk_identity(G, r, field)) for r in range(1, kmax + 1)]
        return combine("gk", G, {"kmax": kmax}, str(field), parts)
    raise ValueError(f"unknown theorem {theorem!r}; choose from {THEOREMS}")
