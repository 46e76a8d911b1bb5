"""Simplicial complexes, the Stanley-Reisner dictionary and reduced homology."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, maximal_independent_sets
from .ideal import MonomialIdeal, minimal_transversals
from .linalg import QQ, Field, rank


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _maximal_masks(masks: Iterable[int]) -> list[int]:
    ordered = sorted(set(masks), key=_popcount, reverse=True)
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex stored by its facets.

    ``facets == ()`` is the void complex (no faces at all);
    ``facets == (frozenset(),)`` is the empty complex {∅}.
    """

    vertex_set: tuple[str, ...]
    facets: tuple[frozenset[str], ...]

    @classmethod
    def from_faces(cls, vertex_set: Sequence[str], faces: Iterable[Iterable[str]]) -> SimplicialComplex:
        vertex_set = tuple(vertex_set)
        pos = {v: i for i, v in enumerate(vertex_set)}
        masks = []
        for f in faces:
            m = 0
            for v in f:
                if v not in pos:
                    raise ValueError(f"unknown vertex {v!r}")
                m |= 1 << pos[v]
            masks.append(m)
        return cls._from_masks(vertex_set, masks)

    @classmethod
    def _from_masks(cls, vertex_set: tuple[str, ...], masks: Iterable[int]) -> SimplicialComplex:
        facets = _maximal_masks(masks)
        facets.sort(key=lambda m: (-_popcount(m), [i for i in range(len(vertex_set)) if m >> i & 1]))
        return cls(vertex_set, tuple(frozenset(vertex_set[i] for i in range(len(vertex_set)) if m >> i & 1) for m in facets))

    @classmethod
    def void(cls, vertex_set: Sequence[str] = ()) -> SimplicialComplex:
        return cls(tuple(vertex_set), ())

    @classmethod
    def empty(cls, vertex_set: Sequence[str] = ()) -> SimplicialComplex:
        return cls(tuple(vertex_set), (frozenset(),))

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int | None:
        """max facet size - 1; None for the void complex."""
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1

    def facet_masks(self) -> list[int]:
        pos = {v: i for i, v in enumerate(self.vertex_set)}
        return [sum(1 << pos[v] for v in f) for f in self.facets]

    def contains_face(self, face: Iterable[str]) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def faces(self) -> list[tuple[str, ...]]:
        """All faces (including ∅ when non-void), by size then vertex order."""
        masks = _face_masks(self.facet_masks())
        n = len(self.vertex_set)
        masks.sort(key=lambda m: (_popcount(m), [i for i in range(n) if m >> i & 1]))
        return [tuple(self.vertex_set[i] for i in range(n) if m >> i & 1) for m in masks]

    def f_vector(self) -> list[int]:
        """Face counts f_{-1}, f_0, ..., f_dim."""
        counts: dict[int, int] = {}
        for m in _face_masks(self.facet_masks()):
            counts[_popcount(m)] = counts.get(_popcount(m), 0) + 1
        if not counts:
            return []
        return [counts.get(s, 0) for s in range(max(counts) + 1)]


def _face_masks(facets: Sequence[int]) -> list[int]:
    seen: set[int] = set()
    for f in facets:
        sub = f
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return list(seen)


# -- Stanley-Reisner dictionary ---------------------------------------------


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are the sets containing no generator support."""
    if not I.is_squarefree():
        raise ValueError("ideal is not squarefree")
    verts = I.ambient
    n = len(verts)
    if I.is_zero():
        return SimplicialComplex._from_masks(verts, [(1 << n) - 1])
    if I.is_unit():
        return SimplicialComplex.void(verts)
    supports = [sum(1 << i for i, e in enumerate(v) if e) for v in I.vectors]
    full = (1 << n) - 1
    return SimplicialComplex._from_masks(verts, [full & ~t for t in minimal_transversals(supports)])


def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Generated by the minimal non-faces."""
    verts = delta.vertex_set
    n = len(verts)
    if delta.is_void():
        return MonomialIdeal.unit(verts)
    full = (1 << n) - 1
    complements = [full & ~f for f in delta.facet_masks()]
    if any(c == 0 for c in complements):
        return MonomialIdeal.zero(verts)
    nonfaces = minimal_transversals(complements)
    return MonomialIdeal._from_vectors(verts, [tuple(m >> i & 1 for i in range(n)) for m in nonfaces])


def independence_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex.from_faces(G.vertices, maximal_independent_sets(G))


# -- derived complexes -------------------------------------------------------


def restrict(delta: SimplicialComplex, W: Iterable[str]) -> SimplicialComplex:
    W = set(W)
    unknown = W - set(delta.vertex_set)
    if unknown:
        raise ValueError(f"unknown vertices {sorted(unknown)}")
    verts = tuple(v for v in delta.vertex_set if v in W)
    if delta.is_void():
        return SimplicialComplex.void(verts)
    return SimplicialComplex.from_faces(verts, [f & W for f in delta.facets])


def link(delta: SimplicialComplex, F: Iterable[str]) -> SimplicialComplex:
    F = frozenset(F)
    if not delta.contains_face(F):
        raise ValueError(f"{sorted(F)} is not a face")
    verts = tuple(v for v in delta.vertex_set if v not in F)
    return SimplicialComplex.from_faces(verts, [f - F for f in delta.facets if F <= f])


def purity_and_strong_connectivity(delta: SimplicialComplex) -> dict[str, bool]:
    if delta.is_void():
        raise ValueError("void complex")
    sizes = {len(f) for f in delta.facets}
    pure = len(sizes) == 1
    if not pure:
        return {"pure": False, "strongly_connected": False}
    d = sizes.pop()
    facets = list(delta.facets)
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in range(len(facets)):
            if b not in seen and len(facets[a] & facets[b]) == d - 1:
                seen.add(b)
                stack.append(b)
    return {"pure": True, "strongly_connected": len(seen) == len(facets)}


# -- homology ----------------------------------------------------------------


def homology_from_facet_masks(facets: Sequence[int], field: Field = QQ) -> list[int]:
    """Reduced homology dimensions H~_{-1}, ..., H~_{dim} of the complex spanned by facets.

    Uses the augmented chain complex, so C_{-1} is spanned by the empty face.
    """
    if not facets:
        return [0]
    common = facets[0]
    for f in facets:
        common &= f
    if common:
        # A cone is acyclic.
        return [0] * (_popcount(max(facets, key=_popcount)) + 1)
    by_size: dict[int, list[int]] = {}
    for m in _face_masks(facets):
        by_size.setdefault(_popcount(m), []).append(m)
    top = max(by_size)
    index: dict[int, dict[int, int]] = {}
    for s, masks in by_size.items():
        masks.sort()
        index[s] = {m: i for i, m in enumerate(masks)}
    # ranks[s] = rank of the boundary from faces of size s to size s-1
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        lower = index[s - 1]
        rows = []
        for m in by_size[s]:
            row = {}
            sign = 1
            bits = m
            while bits:
                low = bits & -bits
                row[lower[m ^ low]] = sign
                sign = -sign
                bits ^= low
            rows.append(row)
        ranks[s] = rank(rows, field)
    return [len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(0, top + 1)]


def reduced_homology_dims(delta: SimplicialComplex, field: Field | str = QQ) -> list[int]:
    """Dimensions of H~_{-1}, ..., H~_{dim}; the void complex gives [0]."""
    return homology_from_facet_masks(delta.facet_masks(), Field.parse(field))


def reduced_euler_characteristic(delta: SimplicialComplex) -> int:
    """Sum over faces (∅ included) of (-1)^(dim F)."""
    return sum((-1) ** (s - 1) * c for s, c in enumerate(delta.f_vector()))
