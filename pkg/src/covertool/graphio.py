"""Graph ingestion (edge lists, graph6), named graphs and small-graph corpora."""

from __future__ import annotations

import re
from itertools import permutations, product
from typing import Iterator

from .errors import SizeError
from .graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    path_graph,
)

CORPUS_MAX_N = 7


class GraphFormatError(ValueError):
    pass


# -- graph6 ------------------------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    # graph6 bit order: upper triangle column by column.
    return [(i, j) for j in range(1, n) for i in range(j)]


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(G: Graph) -> str:
    """Encode with vertex i of G as the i-th graph6 vertex."""
    bits = [1 if G._adj[j] >> i & 1 else 0 for i, j in _pairs(G.n)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(int("".join(map(str, bits[k : k + 6])), 2) + 63) for k in range(0, len(bits), 6))
    return _encode_n(G.n) + body


def from_graph6(line: str, prefix: str = "x") -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphFormatError(f"not a graph6 string: {line!r}")
    data = [ord(c) - 63 for c in s]
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] != 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    else:
        raise GraphFormatError(f"truncated graph6 header: {line!r}")
    pairs = _pairs(n)
    need = -(-len(pairs) // 6)
    if len(data) - pos != need:
        raise GraphFormatError(f"graph6 body has {len(data) - pos} bytes, expected {need}")
    bits = []
    for d in data[pos:]:
        bits.extend((d >> s) & 1 for s in range(5, -1, -1))
    if any(bits[len(pairs) :]):
        raise GraphFormatError("nonzero graph6 padding bits")
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(names, [(names[i], names[j]) for (i, j), b in zip(pairs, bits) if b])


# -- edge lists --------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """One edge per line as two names; a lone name declares a vertex; '#' starts a comment."""
    order: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    edge_keys: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) > 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex names, got {len(tokens)} tokens")
        for t in tokens:
            if t not in seen:
                seen.add(t)
                order.append(t)
        if len(tokens) == 2:
            a, b = tokens
            if a == b:
                raise GraphFormatError(f"line {lineno}: loop at {a!r}")
            key = frozenset((a, b))
            if key in edge_keys:
                raise GraphFormatError(f"line {lineno}: duplicate edge {a}-{b}")
            edge_keys.add(key)
            edges.append((a, b))
    return Graph(order, edges)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse an edge list or a single graph6 line (``fmt`` = auto, edges or graph6)."""
    if fmt == "graph6":
        return from_graph6(text.strip())
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt != "auto":
        raise ValueError(f"unknown graph format {fmt!r}")
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) == 1 and len(lines[0].split()) == 1:
        try:
            return from_graph6(lines[0])
        except GraphFormatError:
            pass
    return parse_edge_list(text)


def to_edge_list(G: Graph) -> str:
    out = [f"{a} {b}" for a, b in G.edge_list()]
    out += list(G.isolated_vertices())
    return "\n".join(out) + "\n"


_NAMED = re.compile(r"^(?:(?P<kind>[CPKE])(?P<n>\d+)|K(?P<a>\d+),(?P<b>\d+))$")


def named_graph(name: str) -> Graph:
    """C<n>, P<n> (n vertices), K<n>, K<a>,<b>, E<n> (edgeless)."""
    m = _NAMED.match(re.sub(r"[_{}\s]", "", name.upper()))
    if not m:
        raise ValueError(f"unknown graph name {name!r}")
    if m.group("a"):
        return complete_bipartite_graph(int(m.group("a")), int(m.group("b")))
    kind, n = m.group("kind"), int(m.group("n"))
    return {"C": cycle_graph, "P": path_graph, "K": complete_graph, "E": edgeless_graph}[kind](n)


# -- isomorphism canonical form --------------------------------------------


def _refine(adj: list[int], n: int) -> list[int]:
    colors = [0] * n
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in range(n) if adj[v] >> u & 1))) for v in range(n)]
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(G: Graph) -> tuple[int, int]:
    """(n, code) equal for exactly the isomorphic graphs; brute force within refined cells."""
    n = G.n
    adj = list(G._adj)
    colors = _refine(adj, n)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    pairs = _pairs(n)
    best = None
    for choice in product(*(permutations(c) for c in cells)):
        order = [v for cell in choice for v in cell]  # new position -> old vertex
        code = 0
        for i, j in pairs:
            code = (code << 1) | (adj[order[i]] >> order[j] & 1)
        if best is None or code > best[0]:
            best = (code, order)
    if best is None:
        return (n, 0)
    return (n, best[0])


def canonical_graph(G: Graph, prefix: str = "x") -> Graph:
    n, code = canonical_form(G)
    pairs = _pairs(n)
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(names[i], names[j]) for k, (i, j) in enumerate(pairs) if code >> (len(pairs) - 1 - k) & 1]
    return Graph(names, edges)


# -- corpora -----------------------------------------------------------------


def _labeled_graphs(n: int, prefix: str) -> Iterator[Graph]:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(names, [(names[i], names[j]) for k, (i, j) in enumerate(pairs) if mask >> k & 1])


def _iso_classes(nmax: int, prefix: str) -> dict[int, list[Graph]]:
    # Every graph on n vertices is a class representative on n-1 vertices
    # plus one new vertex with some neighborhood.
    classes: dict[int, list[Graph]] = {1: [edgeless_graph(1, prefix)]}
    for n in range(2, nmax + 1):
        found: dict[tuple[int, int], Graph] = {}
        new_name = f"{prefix}{n}"
        for H in classes[n - 1]:
            for mask in range(1 << (n - 1)):
                nbrs = [H.vertices[i] for i in range(n - 1) if mask >> i & 1]
                G = Graph([*H.vertices, new_name], [*H.edge_list(), *((v, new_name) for v in nbrs)])
                key = canonical_form(G)
                if key not in found:
                    found[key] = canonical_graph(G, prefix)
        classes[n] = [found[k] for k in sorted(found, key=lambda k: (bin(k[1]).count("1"), k[1]))]
    return classes


def generate_corpus(nmax: int, no_isolated: bool = True, dedup: bool = False, prefix: str = "x") -> Iterator[Graph]:
    """All graphs on exactly n = 1..nmax vertices (labeled, or one per isomorphism class)."""
    if nmax > CORPUS_MAX_N:
        raise SizeError(f"corpus generation limited to {CORPUS_MAX_N} vertices", nmax)
    if nmax < 1:
        return
    if dedup:
        classes = _iso_classes(nmax, prefix)
        stream = (G for n in range(1, nmax + 1) for G in classes[n])
    else:
        stream = (G for n in range(1, nmax + 1) for G in _labeled_graphs(n, prefix))
    for G in stream:
        if no_isolated and G.isolated_vertices():
            continue
        yield G
