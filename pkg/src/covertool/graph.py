"""Labeled simple graphs, independence/cover enumeration and structural labelings."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import SizeError

LABELING_MAX_VERTICES = 24


@dataclass(frozen=True)
class Graph:
    """A simple graph on an ordered list of named vertices.

    The order of ``vertices`` fixes every deterministic ordering produced by
    this package (enumeration order, variable order of the associated rings).
    """

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]] = frozenset()
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)
    _adj: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        verts = tuple(vertices)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex names")
        index = {v: i for i, v in enumerate(verts)}
        edge_set: set[frozenset[str]] = set()
        adj = [0] * len(verts)
        for e in edges:
            pair = tuple(e)
            if len(pair) != 2:
                raise ValueError(f"edge {pair!r} does not have two endpoints")
            a, b = pair
            if a == b:
                raise ValueError(f"loop at vertex {a!r}")
            for v in pair:
                if v not in index:
                    raise ValueError(f"edge endpoint {v!r} is not a vertex")
            key = frozenset(pair)
            if key in edge_set:
                raise ValueError(f"duplicate edge {a!r}-{b!r}")
            edge_set.add(key)
            adj[index[a]] |= 1 << index[b]
            adj[index[b]] |= 1 << index[a]
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", tuple(adj))

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def edge_list(self) -> list[tuple[str, str]]:
        """Edges as ordered pairs, sorted by vertex order."""
        pairs = []
        for e in self.edges:
            a, b = sorted(e, key=self._index.__getitem__)
            pairs.append((a, b))
        pairs.sort(key=lambda p: (self._index[p[0]], self._index[p[1]]))
        return pairs

    def has_edge(self, a: str, b: str) -> bool:
        return bool(self._adj[self.index(a)] >> self.index(b) & 1)

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self._names(self._adj[self.index(v)])

    def closed_neighborhood(self, vs: Iterable[str]) -> tuple[str, ...]:
        mask = 0
        for v in vs:
            i = self.index(v)
            mask |= self._adj[i] | (1 << i)
        return self._names(mask)

    def degree(self, v: str) -> int:
        return bin(self._adj[self.index(v)]).count("1")

    def isolated_vertices(self) -> tuple[str, ...]:
        return tuple(v for v, a in zip(self.vertices, self._adj) if a == 0)

    def is_independent(self, vs: Iterable[str]) -> bool:
        mask = self._mask(vs)
        return all(not (self._adj[i] & mask) for i in _bits(mask))

    def canonical_string(self) -> str:
        """Sorted vertex list plus sorted edge list; stable cache key."""
        verts = sorted(self.vertices)
        edges = sorted("-".join(sorted(e)) for e in self.edges)
        return "V:" + ",".join(verts) + ";E:" + ",".join(edges)

    def relabel(self, mapping: dict[str, str], order: Sequence[str] | None = None) -> Graph:
        verts = [mapping[v] for v in self.vertices] if order is None else list(order)
        return Graph(verts, [(mapping[a], mapping[b]) for a, b in self.edge_list()])

    def __repr__(self) -> str:
        edges = " ".join(f"{a}-{b}" for a, b in self.edge_list())
        return f"Graph([{', '.join(self.vertices)}]; {edges})"

    # -- bitmask helpers ---------------------------------------------------

    def _mask(self, vs: Iterable[str]) -> int:
        mask = 0
        for v in vs:
            mask |= 1 << self.index(v)
        return mask

    def _names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in _bits(mask))


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


# -- named graphs ------------------------------------------------------------


def path_graph(n: int, prefix: str = "x") -> Graph:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(names, zip(names, names[1:]))


def cycle_graph(n: int, prefix: str = "x") -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(names, [(names[i], names[(i + 1) % n]) for i in range(n)])


def complete_graph(n: int, prefix: str = "x") -> Graph:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(names, combinations(names, 2))


def complete_bipartite_graph(a: int, b: int, prefix: str = "x") -> Graph:
    names = [f"{prefix}{i}" for i in range(1, a + b + 1)]
    return Graph(names, [(u, v) for u in names[:a] for v in names[a:]])


def edgeless_graph(n: int, prefix: str = "x") -> Graph:
    return Graph([f"{prefix}{i}" for i in range(1, n + 1)])


# -- subgraphs ---------------------------------------------------------------


def induced_subgraph(G: Graph, W: Iterable[str]) -> Graph:
    keep = G._mask(W)
    verts = [v for i, v in enumerate(G.vertices) if keep >> i & 1]
    return Graph(verts, [e for e in G.edges if all(keep >> G.index(v) & 1 for v in e)])


def delete_vertices(G: Graph, A: Iterable[str]) -> Graph:
    """The graph G minus A: drop A and every edge meeting it."""
    drop = G._mask(A)
    return induced_subgraph(G, G._names(((1 << G.n) - 1) & ~drop))


def delete_closed_neighborhood(G: Graph, F: Iterable[str]) -> Graph:
    F = tuple(F)
    if not G.is_independent(F):
        raise ValueError(f"{set(F)} is not an independent set")
    return delete_vertices(G, G.closed_neighborhood(F))


# -- independent sets and covers --------------------------------------------


def _maximal_independent_masks(G: Graph) -> list[int]:
    # Bron-Kerbosch with pivoting on the complement graph.
    full = (1 << G.n) - 1
    non_adj = [full & ~a & ~(1 << i) for i, a in enumerate(G._adj)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(_bits(px), key=lambda u: bin(non_adj[u] & p).count("1"))
        for v in _bits(p & ~non_adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & non_adj[v], x & non_adj[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    return out


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


def maximal_independent_sets(G: Graph) -> list[tuple[str, ...]]:
    """All maximal independent sets, each in vertex order, sorted lexicographically."""
    masks = sorted(_maximal_independent_masks(G), key=_lex_key)
    return [G._names(m) for m in masks]


def minimal_vertex_covers(G: Graph) -> list[tuple[str, ...]]:
    """Complements of :func:`maximal_independent_sets`, in the same order."""
    full = (1 << G.n) - 1
    masks = sorted(_maximal_independent_masks(G), key=_lex_key)
    return [G._names(full & ~m) for m in masks]


@dataclass(frozen=True)
class GraphClass:
    has_isolated: bool
    bipartite: bool
    claw_free: bool
    unmixed: bool
    very_well_covered: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "has_isolated": self.has_isolated,
            "bipartite": self.bipartite,
            "claw_free": self.claw_free,
            "unmixed": self.unmixed,
            "very_well_covered": self.very_well_covered,
        }


def is_bipartite(G: Graph) -> bool:
    color: dict[int, int] = {}
    for s in range(G.n):
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in _bits(G._adj[u]):
                if w not in color:
                    color[w] = color[u] ^ 1
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_claw_free(G: Graph) -> bool:
    for c in range(G.n):
        nbrs = _bits(G._adj[c])
        for a, b, d in combinations(nbrs, 3):
            if not (G._adj[a] >> b & 1 or G._adj[a] >> d & 1 or G._adj[b] >> d & 1):
                return False
    return True


def classify(G: Graph) -> GraphClass:
    sizes = {bin(m).count("1") for m in _maximal_independent_masks(G)}
    has_isolated = any(a == 0 for a in G._adj)
    unmixed = len(sizes) == 1
    vwc = not has_isolated and G.n % 2 == 0 and sizes == {G.n // 2}
    return GraphClass(has_isolated, is_bipartite(G), is_claw_free(G), unmixed, vwc)


# -- very well-covered labelings ----------------------------------------------


@dataclass(frozen=True)
class VwcLabeling:
    """Pairs (x_i, y_i): the x's form a minimal cover, the y's its complement."""

    h: int
    pairs: tuple[tuple[str, str], ...]

    @property
    def cover(self) -> tuple[str, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def independent(self) -> tuple[str, ...]:
        return tuple(y for _, y in self.pairs)


def labeling_conditions(G: Graph, pairs: Sequence[tuple[str, str]]) -> dict[str, bool]:
    """Evaluate the four structural conditions of a very well-covered labeling.

    Condition (iv) is read over distinct indices; for equal indices it is
    vacuous in a simple graph.
    """
    h = len(pairs)
    xs = [x for x, _ in pairs]
    ys = [y for _, y in pairs]
    everything = set(xs) | set(ys)
    full = everything == set(G.vertices) and len(everything) == 2 * h
    cover = set(G.vertices) - set(ys)
    cond_i = (
        full
        and G.is_independent(ys)
        and cover == set(xs)
        and all(not G.is_independent([v, *ys]) for v in xs)
    )
    if not full:
        return {"i": False, "ii": False, "iii": False, "iv": False}
    adj = G.has_edge
    cond_ii = all(adj(x, y) for x, y in pairs)
    cond_iii = True
    for i, j, k in _distinct_triples(h):
        for z in pairs[i]:
            if adj(z, xs[j]) and adj(ys[j], xs[k]) and not adj(z, xs[k]):
                cond_iii = False
    cond_iv = all(
        not (adj(xs[i], ys[j]) and adj(xs[i], xs[j]))
        for i in range(h)
        for j in range(h)
        if i != j
    )
    return {"i": cond_i, "ii": cond_ii, "iii": cond_iii, "iv": cond_iv}


def _distinct_triples(h: int):
    for i in range(h):
        for j in range(h):
            if j == i:
                continue
            for k in range(h):
                if k != i and k != j:
                    yield i, j, k


def _candidate_labelings(G: Graph):
    """Yield every (i)-(iv) labeling: cover X, complementary Y, matching X-Y."""
    h = G.n // 2
    for cover in sorted(minimal_vertex_covers(G), key=lambda c: [G.index(v) for v in c]):
        if len(cover) != h:
            continue
        ys = [v for v in G.vertices if v not in cover]
        matched: list[str] = []

        def extend(pos: int):
            if pos == h:
                yield list(zip(cover, matched))
                return
            for y in ys:
                if y not in matched and G.has_edge(cover[pos], y):
                    matched.append(y)
                    yield from extend(pos + 1)
                    matched.pop()

        for pairs in extend(0):
            if all(labeling_conditions(G, pairs).values()):
                yield pairs


def _check_size(G: Graph) -> None:
    if G.n > LABELING_MAX_VERTICES:
        raise SizeError(f"labeling search limited to {LABELING_MAX_VERTICES} vertices", G.n)


def find_vwc_labeling(G: Graph) -> VwcLabeling | None:
    _check_size(G)
    if not classify(G).very_well_covered:
        return None
    for pairs in _candidate_labelings(G):
        return VwcLabeling(len(pairs), tuple(pairs))
    return None


def _order_for_cm(G: Graph, pairs: list[tuple[str, str]]) -> list[tuple[str, str]] | None:
    # Need an ordering with i <= j whenever x_i ~ y_j: topological sort of i -> j.
    h = len(pairs)
    succ = [[j for j in range(h) if j != i and G.has_edge(pairs[i][0], pairs[j][1])] for i in range(h)]
    indeg = [0] * h
    for i in range(h):
        for j in succ[i]:
            indeg[j] += 1
    ready = [i for i in range(h) if indeg[i] == 0]
    order = []
    while ready:
        ready.sort()
        i = ready.pop(0)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    if len(order) < h:
        return None
    return [pairs[i] for i in order]


def cm_order_holds(G: Graph, pairs: Sequence[tuple[str, str]]) -> bool:
    return all(
        i <= j
        for i, (x, _) in enumerate(pairs)
        for j, (_, y) in enumerate(pairs)
        if G.has_edge(x, y)
    )


def find_cm_vwc_labeling(G: Graph) -> VwcLabeling | None:
    """A labeling with the extra ordering condition, or None.

    Non-None exactly for Cohen-Macaulay very well-covered graphs.
    """
    _check_size(G)
    if not classify(G).very_well_covered:
        return None
    for pairs in _candidate_labelings(G):
        ordered = _order_for_cm(G, pairs)
        if ordered is not None:
            return VwcLabeling(len(ordered), tuple(ordered))
    return None
