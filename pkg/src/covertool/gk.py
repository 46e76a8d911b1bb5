"""The depolarization graph G_r whose cover ideal is the polarized r-th symbolic power."""

from __future__ import annotations

from .graph import Graph, induced_subgraph
from .ideal import cover_ideal, polarize, polarized_name, symbolic_power


def build_gk(G: Graph, r: int) -> Graph:
    """Vertices v_p (1 <= p <= r); v_p ~ w_q iff v ~ w in G and p + q <= r + 1."""
    if r < 1:
        raise ValueError("r must be positive")
    verts = [polarized_name(v, p) for v in G.vertices for p in range(1, r + 1)]
    edges = []
    for a, b in G.edge_list():
        for p in range(1, r + 1):
            for q in range(1, r + 2 - p):
                edges.append((polarized_name(a, p), polarized_name(b, q)))
    return Graph(verts, edges)


def gk_embedding(G: Graph, r: int) -> dict[str, str]:
    """Vertex map G_r -> G_{r+1} skipping the layer floor((r+1)/2) + 1."""
    half = (r + 1) // 2
    return {
        polarized_name(v, p): polarized_name(v, p if p <= half else p + 1)
        for v in G.vertices
        for p in range(1, r + 1)
    }


def gk_embedding_is_induced(G: Graph, r: int) -> bool:
    """Check that the embedding is an isomorphism onto an induced subgraph."""
    small = build_gk(G, r)
    big = build_gk(G, r + 1)
    phi = gk_embedding(G, r)
    if len(set(phi.values())) != len(phi):
        return False
    image = induced_subgraph(big, [phi[v] for v in small.vertices])
    mapped = {frozenset(phi[v] for v in e) for e in small.edges}
    return mapped == set(image.edges)


def gk_identity_sides(G: Graph, r: int):
    """(polarized symbolic power, cover ideal of G_r), both in the polarized ambient."""
    lhs = polarize(symbolic_power(cover_ideal(G), r))
    rhs = cover_ideal(build_gk(G, r))
    return lhs, rhs
