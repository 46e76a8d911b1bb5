"""Graded Betti numbers, regularity and projective dimension of monomial ideals.

Two exact routes are provided:

* ``hochster``: Hochster's formula on a squarefree ideal (after polarizing
  a non-squarefree one), summing reduced homology of induced subcomplexes
  of the Stanley-Reisner complex.
* ``koszul``: multigraded Betti numbers read off the upper Koszul simplicial
  complexes K^m(I) = {F : m / x_F in I} at the elements m of the lcm
  lattice.  These complexes live on at most ``len(ambient)`` vertices, which
  keeps symbolic powers of cover ideals cheap.

Both agree on every input; the test suite checks one against the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import SizeError
from .ideal import MonomialIdeal, minimal_transversals, polarize, max_gen_degree
from .linalg import QQ, Field
from .simplicial import homology_from_facet_masks

SUBSET_CAP = 2**22
METHODS = ("koszul", "hochster")


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers beta_{i,j} of an ideal I.

    With ``quotient=True`` the table stands for S/I; the stored entries are
    still those of I and reg/pd are obtained by the usual shift.
    """

    entries: dict[tuple[int, int], int]
    subject: str
    field: Field = QQ
    quotient: bool = False

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row(self, i: int) -> dict[int, int]:
        return {j: b for (ii, j), b in sorted(self.entries.items()) if ii == i}

    @property
    def reg(self) -> int:
        return resolution_stats(self).reg

    @property
    def pd(self) -> int:
        return resolution_stats(self).pd

    def as_quotient(self) -> BettiTable:
        return BettiTable(dict(self.entries), f"S/{self.subject}", self.field, quotient=True)

    def to_json(self) -> dict:
        stats = resolution_stats(self)
        if self.quotient:
            entries = [{"i": 0, "j": 0, "beta": 1}]
            entries += [{"i": i + 1, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items())]
        else:
            entries = [{"i": i, "j": j, "beta": b} for (i, j), b in sorted(self.entries.items())]
        return {
            "subject": self.subject,
            "field": str(self.field),
            "entries": entries,
            "reg": stats.reg,
            "pd": stats.pd,
        }

    def __str__(self) -> str:
        if not self.entries:
            return "(empty table)"
        top_i = max(i for i, _ in self.entries)
        shifts = sorted({j - i for i, j in self.entries})
        lines = ["      " + " ".join(f"{i:>4}" for i in range(top_i + 1))]
        for t in shifts:
            cells = [self.entries.get((i, i + t), 0) for i in range(top_i + 1)]
            lines.append(f"{t:>4}: " + " ".join(f"{c or '.':>4}" for c in cells))
        return "\n".join(lines)


class ResolutionStats(NamedTuple):
    reg: int
    pd: int


def resolution_stats(T: BettiTable) -> ResolutionStats:
    if not T.entries:
        raise ValueError("empty Betti table")
    reg = max(j - i for i, j in T.entries)
    pd = max(i for i, _ in T.entries)
    if T.quotient:
        return ResolutionStats(reg - 1, pd + 1)
    return ResolutionStats(reg, pd)


def require_same_field(*tables: BettiTable) -> Field:
    fields = {t.field for t in tables}
    if len(fields) > 1:
        raise ValueError(f"tables computed over different fields: {sorted(map(str, fields))}")
    return fields.pop()


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero() or I.is_unit():
        raise ValueError("Betti numbers need a nonzero proper ideal")


# -- Hochster route ----------------------------------------------------------


def _union_closure(supports: list[int], cap: int) -> set[int]:
    closure: set[int] = set()
    for s in supports:
        new = {s} | {t | s for t in closure}
        closure |= new
        if len(closure) > cap:
            raise SizeError(f"Hochster enumeration exceeds {cap} subsets", len(closure))
    return closure


def _hochster_terms(I: MonomialIdeal, field: Field, prune: bool) -> Iterator[tuple[int, int, int]]:
    n = len(I.ambient)
    supports = [sum(1 << i for i, e in enumerate(v) if e) for v in I.vectors]
    full = (1 << n) - 1
    facets = [full & ~t for t in minimal_transversals(supports)]
    if prune:
        subsets = sorted(_union_closure(supports, SUBSET_CAP))
    else:
        if 1 << n > SUBSET_CAP:
            raise SizeError(f"Hochster enumeration exceeds {SUBSET_CAP} subsets", 1 << n)
        subsets = range(1 << n)
    for W in subsets:
        restricted = list({f & W for f in facets})
        if prune:
            common = W
            for f in restricted:
                common &= f
            if common:
                continue
        size = bin(W).count("1")
        for d, h in enumerate(homology_from_facet_masks(restricted, field), start=-1):
            i = size - d - 2
            if h and i >= 0:
                yield i, size, h


def hochster_betti(I: MonomialIdeal, field: Field | str = QQ, prune: bool = True) -> BettiTable:
    """Graded Betti numbers of a squarefree ideal by Hochster's formula.

    ``prune`` skips subsets W whose restricted complex is a cone; it never
    changes the result.
    """
    field = Field.parse(field)
    _require_proper(I)
    if not I.is_squarefree():
        raise ValueError("Hochster's formula needs a squarefree ideal")
    entries: dict[tuple[int, int], int] = {}
    for i, j, h in _hochster_terms(I, field, prune):
        entries[(i, j)] = entries.get((i, j), 0) + h
    return BettiTable(entries, str(I), field)


# -- Koszul route ------------------------------------------------------------


def _lcm_lattice(gens: tuple[tuple[int, ...], ...], max_gens: int | None = None) -> set[tuple[int, ...]]:
    """lcms of nonempty subsets of gens (of at most ``max_gens`` elements)."""
    lattice = set(gens)
    frontier = list(gens)
    level = 1
    while frontier and (max_gens is None or level < max_gens):
        new = []
        for a in frontier:
            for g in gens:
                m = tuple(map(max, a, g))
                if m not in lattice:
                    lattice.add(m)
                    new.append(m)
        if len(lattice) > SUBSET_CAP:
            raise SizeError(f"lcm lattice exceeds {SUBSET_CAP} elements", len(lattice))
        frontier = new
        level += 1
    return lattice


def multigraded_betti(I: MonomialIdeal, field: Field | str = QQ, max_i: int | None = None) -> Iterator[tuple[int, tuple[int, ...], int]]:
    """Yield (i, m, beta_{i,m}) for every nonzero multigraded Betti number with i <= max_i."""
    field = Field.parse(field)
    _require_proper(I)
    gens = I.vectors
    n = len(I.ambient)
    # beta_{i,m} can only be nonzero at lcms of i+1 generators (Taylor bound).
    lattice = _lcm_lattice(gens, None if max_i is None else max_i + 1)
    for m in sorted(lattice, key=lambda v: (sum(v), v)):
        support = [k for k in range(n) if m[k]]
        facets = []
        for g in gens:
            if all(a <= b for a, b in zip(g, m)):
                mask = 0
                for bit, k in enumerate(support):
                    if g[k] < m[k]:
                        mask |= 1 << bit
                facets.append(mask)
        dims = homology_from_facet_masks(facets, field)
        for d, h in enumerate(dims, start=-1):
            if h and (max_i is None or d + 1 <= max_i):
                yield d + 1, m, h


def koszul_betti(I: MonomialIdeal, field: Field | str = QQ, max_i: int | None = None) -> BettiTable:
    field = Field.parse(field)
    entries: dict[tuple[int, int], int] = {}
    for i, m, h in multigraded_betti(I, field, max_i):
        key = (i, sum(m))
        entries[key] = entries.get(key, 0) + h
    return BettiTable(entries, str(I), field)


# -- public entry points -----------------------------------------------------


def betti(I: MonomialIdeal, field: Field | str = QQ, method: str = "koszul", max_i: int | None = None) -> BettiTable:
    """Graded Betti table of a nonzero proper monomial ideal.

    ``method="hochster"`` polarizes and applies Hochster's formula;
    ``max_i`` truncates the table to homological degrees <= max_i.
    """
    field = Field.parse(field)
    _require_proper(I)
    if method == "koszul":
        return koszul_betti(I, field, max_i)
    if method != "hochster":
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    table = hochster_betti(polarize(I), field)
    entries = {k: v for k, v in table.entries.items() if max_i is None or k[0] <= max_i}
    return BettiTable(entries, str(I), field)


def has_linear_resolution(I: MonomialIdeal, field: Field | str = QQ, method: str = "koszul") -> bool:
    _require_proper(I)
    d, single = max_gen_degree(I)
    if not single:
        return False
    if method == "koszul":
        return all(sum(m) - i == d for i, m, _ in multigraded_betti(I, field))
    return all(j - i == d for i, j in betti(I, field, method).entries)


def has_linear_presentation(I: MonomialIdeal, field: Field | str = QQ, method: str = "koszul") -> bool:
    _require_proper(I)
    d, single = max_gen_degree(I)
    if not single:
        raise ValueError("linear presentation is defined for ideals generated in one degree")
    table = betti(I, field, method, max_i=1)
    return all(j == d + 1 for j in table.row(1))
