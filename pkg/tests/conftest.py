"""Shared oracles and fixtures.

The oracles here are deliberately naive and share no code with the package:
subset enumeration for independent sets, exponent-vector enumeration for
symbolic powers, and the Taylor complex (with plain Fraction elimination)
for Betti numbers.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import HealthCheck, settings

from covertool.graph import Graph

settings.register_profile(
    "covertool",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("covertool")


# -- graphs ------------------------------------------------------------------


def graph_from_mask(n: int, mask: int) -> Graph:
    names = [f"x{i}" for i in range(1, n + 1)]
    pairs = list(combinations(range(n), 2))
    return Graph(names, [(names[i], names[j]) for k, (i, j) in enumerate(pairs) if mask >> k & 1])


def naive_maximal_independent_sets(G: Graph) -> set[frozenset[str]]:
    V = list(G.vertices)
    edges = [frozenset(e) for e in G.edges]
    indep = []
    for bits in range(1 << len(V)):
        S = frozenset(V[i] for i in range(len(V)) if bits >> i & 1)
        if not any(e <= S for e in edges):
            indep.append(S)
    return {S for S in indep if not any(S < T for T in indep)}


def naive_minimal_covers(G: Graph) -> set[frozenset[str]]:
    V = list(G.vertices)
    edges = [frozenset(e) for e in G.edges]
    covers = []
    for bits in range(1 << len(V)):
        S = frozenset(V[i] for i in range(len(V)) if bits >> i & 1)
        if all(e & S for e in edges):
            covers.append(S)
    return {S for S in covers if not any(T < S for T in covers)}


# -- monomials as exponent tuples ------------------------------------------


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def naive_minimal(vecs) -> set[tuple[int, ...]]:
    vecs = set(vecs)
    return {v for v in vecs if not any(u != v and divides(u, v) for u in vecs)}


def naive_symbolic_cover_power(G: Graph, k: int) -> set[tuple[int, ...]]:
    """Minimal exponent vectors a with a_i + a_j >= k on every edge.

    Each exponent of a minimal generator is at most k, so the box [0,k]^n
    contains all of them.
    """
    idx = {v: i for i, v in enumerate(G.vertices)}
    edges = [(idx[a], idx[b]) for a, b in G.edges]
    members = [a for a in product(range(k + 1), repeat=G.n) if all(a[i] + a[j] >= k for i, j in edges)]
    return naive_minimal(members)


def in_ideal(gens, m) -> bool:
    return any(divides(g, m) for g in gens)


# -- Betti numbers via the Taylor complex ----------------------------------


def fraction_rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def taylor_betti(gens: list[tuple[int, ...]]) -> dict[tuple[int, int], int]:
    """beta_{i,j} of the ideal from the Taylor complex tensored with the field.

    Subsets of size i+1 sit in homological degree i.  After tensoring, a face
    map survives only when dropping the element keeps the lcm unchanged, so
    each multidegree m is a separate complex over subsets with lcm exactly m.
    """
    gens = list(gens)
    by_lcm: dict[tuple[int, ...], dict[int, list[tuple[int, ...]]]] = {}
    for size in range(1, len(gens) + 1):
        for sub in combinations(range(len(gens)), size):
            m = tuple(max(gens[s][v] for s in sub) for v in range(len(gens[0])))
            by_lcm.setdefault(m, {}).setdefault(size, []).append(sub)
    out: dict[tuple[int, int], int] = {}
    for m, layers in by_lcm.items():
        deg = sum(m)
        ranks = {}
        for size, subs in layers.items():
            lower = {s: i for i, s in enumerate(layers.get(size - 1, []))}
            rows = []
            for sub in subs:
                row = [Fraction(0)] * len(lower)
                for pos in range(len(sub)):
                    face = sub[:pos] + sub[pos + 1 :]
                    if face in lower:
                        row[lower[face]] += (-1) ** pos
                rows.append(row)
            ranks[size] = fraction_rank(rows) if lower else 0
        for size, subs in layers.items():
            h = len(subs) - ranks[size] - ranks.get(size + 1, 0)
            if h:
                out[(size - 1, deg)] = out.get((size - 1, deg), 0) + h
    return out


@pytest.fixture(scope="session")
def corpus5():
    from covertool.graphio import generate_corpus

    return list(generate_corpus(5))


# Acceptance lines are collected here and echoed in the terminal summary so
# they show up in plain `pytest -v` output.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
