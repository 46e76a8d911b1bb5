"""Exact monomial and monomial-ideal arithmetic.

Ideals are stored by their unique minimal monomial generating set, kept as
exponent vectors aligned with an ordered ambient variable list.  The zero
ideal has no generators; the unit ideal has the single generator ``1``.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence, Union

from .graph import Graph, minimal_vertex_covers

MAX_EXPONENT = 2**63 - 1

Vector = tuple[int, ...]


class Monomial:
    """A monomial as a map variable name -> positive exponent."""

    __slots__ = ("_items",)

    def __init__(self, exponents: Mapping[str, int] | None = None):
        items = []
        for var, e in (exponents or {}).items():
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"bad exponent {e!r} for {var!r}")
            if e > MAX_EXPONENT:
                raise OverflowError(f"exponent of {var!r} exceeds machine word")
            if e:
                items.append((var, e))
        self._items = tuple(sorted(items))

    @classmethod
    def one(cls) -> Monomial:
        return cls()

    @classmethod
    def var(cls, name: str, e: int = 1) -> Monomial:
        return cls({name: e})

    @classmethod
    def product_of(cls, names: Iterable[str]) -> Monomial:
        exps: dict[str, int] = {}
        for v in names:
            exps[v] = exps.get(v, 0) + 1
        return cls(exps)

    @classmethod
    def from_vector(cls, ambient: Sequence[str], vec: Sequence[int]) -> Monomial:
        return cls(dict(zip(ambient, vec)))

    @classmethod
    def parse(cls, text: str) -> Monomial:
        """Parse ``"x1^2*x3"``; ``"1"`` is the unit monomial."""
        text = text.strip()
        if text == "1":
            return cls()
        exps: dict[str, int] = {}
        for factor in text.split("*"):
            m = re.fullmatch(r"\s*([^\s^*]+)\s*(?:\^\s*(\d+))?\s*", factor)
            if not m:
                raise ValueError(f"cannot parse monomial factor {factor!r}")
            name, e = m.group(1), int(m.group(2) or 1)
            exps[name] = exps.get(name, 0) + e
        return cls(exps)

    @property
    def exponents(self) -> dict[str, int]:
        return dict(self._items)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self._items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._items)

    def exponent(self, var: str) -> int:
        return dict(self._items).get(var, 0)

    def vector(self, ambient: Sequence[str]) -> Vector:
        exps = dict(self._items)
        extra = set(exps) - set(ambient)
        if extra:
            raise ValueError(f"variables {sorted(extra)} not in ambient")
        return tuple(exps.get(v, 0) for v in ambient)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self._items)

    def divides(self, other: Monomial) -> bool:
        o = dict(other._items)
        return all(o.get(v, 0) >= e for v, e in self._items)

    def lcm(self, other: Monomial) -> Monomial:
        exps = dict(self._items)
        for v, e in other._items:
            exps[v] = max(exps.get(v, 0), e)
        return Monomial(exps)

    def gcd(self, other: Monomial) -> Monomial:
        o = dict(other._items)
        return Monomial({v: min(e, o.get(v, 0)) for v, e in self._items})

    def __mul__(self, other: Monomial) -> Monomial:
        exps = dict(self._items)
        for v, e in other._items:
            exps[v] = exps.get(v, 0) + e
        return Monomial(exps)

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        exps = dict(self._items)
        for v, e in other._items:
            exps[v] -= e
        return Monomial(exps)

    def __pow__(self, k: int) -> Monomial:
        return Monomial({v: e * k for v, e in self._items})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def format(self, order: Sequence[str] | None = None) -> str:
        if not self._items:
            return "1"
        items = self._items
        if order is not None:
            pos = {v: i for i, v in enumerate(order)}
            items = tuple(sorted(items, key=lambda it: pos.get(it[0], len(pos))))
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in items)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Monomial({self.format()!r})"


MonomialLike = Union[Monomial, str, Mapping[str, int]]


def _as_monomial(m: MonomialLike) -> Monomial:
    if isinstance(m, Monomial):
        return m
    if isinstance(m, str):
        return Monomial.parse(m)
    return Monomial(m)


# -- vector kernels ----------------------------------------------------------


def _canonical_key(v: Vector) -> tuple:
    return (sum(v), tuple(-e for e in v))


def _pack_width(vecs: Sequence[Vector]) -> int:
    top = max((max(v) for v in vecs if v), default=0)
    return max(top.bit_length() + 1, 2)


def _minimal_vectors(vecs: Iterable[Vector]) -> list[Vector]:
    """Drop every vector dominated by another; return in canonical order."""
    uniq = sorted(set(vecs), key=_canonical_key)
    if len(uniq) <= 1:
        return uniq
    n = len(uniq[0])
    if n == 0:
        return uniq[:1]
    # Packed fields with a guard bit: a <= b componentwise iff
    # ((b | guard) - a) & guard == guard.
    w = _pack_width(uniq)
    guard = sum(1 << (w * i + w - 1) for i in range(n))
    kept: list[Vector] = []
    kept_packed: list[int] = []
    for v in uniq:
        pv = 0
        for i, e in enumerate(v):
            pv |= e << (w * i)
        g = pv | guard
        for pk in kept_packed:
            if (g - pk) & guard == guard:
                break
        else:
            kept.append(v)
            kept_packed.append(pv)
    return kept


def _divides(a: Vector, b: Vector) -> bool:
    return all(x <= y for x, y in zip(a, b))


# -- ideals ------------------------------------------------------------------


class MonomialIdeal:
    """A monomial ideal in the polynomial ring over ``ambient``."""

    __slots__ = ("ambient", "_gens")

    def __init__(self, ambient: Iterable[str], generators: Iterable[MonomialLike] = ()):
        ambient = tuple(ambient)
        if len(set(ambient)) != len(ambient):
            raise ValueError("duplicate ambient variables")
        vecs = [_as_monomial(g).vector(ambient) for g in generators]
        self.ambient = ambient
        self._gens = tuple(_minimal_vectors(vecs))

    @classmethod
    def _from_vectors(cls, ambient: tuple[str, ...], vecs: Iterable[Vector], minimal: bool = False) -> MonomialIdeal:
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj._gens = tuple(sorted(vecs, key=_canonical_key)) if minimal else tuple(_minimal_vectors(vecs))
        return obj

    @classmethod
    def zero(cls, ambient: Iterable[str]) -> MonomialIdeal:
        return cls(ambient)

    @classmethod
    def unit(cls, ambient: Iterable[str]) -> MonomialIdeal:
        ambient = tuple(ambient)
        return cls._from_vectors(ambient, [(0,) * len(ambient)], minimal=True)

    @classmethod
    def maximal(cls, ambient: Iterable[str]) -> MonomialIdeal:
        ambient = tuple(ambient)
        return cls(ambient, [Monomial.var(v) for v in ambient])

    # -- views

    @property
    def vectors(self) -> tuple[Vector, ...]:
        return self._gens

    @property
    def generators(self) -> list[Monomial]:
        return [Monomial.from_vector(self.ambient, v) for v in self._gens]

    def __len__(self) -> int:
        return len(self._gens)

    def is_zero(self) -> bool:
        return not self._gens

    def is_unit(self) -> bool:
        return len(self._gens) == 1 and not any(self._gens[0])

    def is_squarefree(self) -> bool:
        return all(e <= 1 for v in self._gens for e in v)

    def degrees(self) -> list[int]:
        return [sum(v) for v in self._gens]

    def extend(self, ambient: Iterable[str]) -> MonomialIdeal:
        """The same generators viewed in a larger polynomial ring."""
        ambient = tuple(ambient)
        missing = set(self.ambient) - set(ambient)
        if missing:
            raise ValueError(f"ambient lacks {sorted(missing)}")
        pos = [self.ambient.index(v) if v in self.ambient else None for v in ambient]
        vecs = [tuple(0 if p is None else v[p] for p in pos) for v in self._gens]
        return MonomialIdeal._from_vectors(ambient, vecs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ambient == other.ambient and self._gens == other._gens

    def __hash__(self) -> int:
        return hash((self.ambient, self._gens))

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal | MonomialLike) -> MonomialIdeal:
        if isinstance(other, MonomialIdeal):
            return product(self, other)
        return multiply(self, _as_monomial(other))

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def __contains__(self, m: MonomialLike) -> bool:
        return contains(self, _as_monomial(m))

    def __str__(self) -> str:
        if not self._gens:
            return "(0)"
        return "(" + ", ".join(g.format(self.ambient) for g in self.generators) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal({list(self.ambient)!r}, {str(self)})"


def _same_ambient(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ambient != J.ambient:
        raise ValueError("ambient mismatch")


# -- arithmetic --------------------------------------------------------------


def minimalize(gens: Iterable[MonomialLike], ambient: Iterable[str]) -> MonomialIdeal:
    return MonomialIdeal(ambient, gens)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    lcms = (tuple(map(max, u, v)) for u in I._gens for v in J._gens)
    return MonomialIdeal._from_vectors(I.ambient, lcms)


def intersect_all(ideals: Iterable[MonomialIdeal], ambient: Iterable[str]) -> MonomialIdeal:
    """Intersection of a family; the empty intersection is the unit ideal."""
    acc = MonomialIdeal.unit(ambient)
    for J in ideals:
        acc = intersect(acc, J)
    return acc


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal._from_vectors(I.ambient, I._gens + J._gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    prods = (tuple(a + b for a, b in zip(u, v)) for u in I._gens for v in J._gens)
    return MonomialIdeal._from_vectors(I.ambient, prods)


def multiply(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    mv = m.vector(I.ambient)
    return MonomialIdeal._from_vectors(I.ambient, [tuple(a + b for a, b in zip(u, mv)) for u in I._gens], minimal=True)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative power")
    result = MonomialIdeal.unit(I.ambient)
    base = I
    while k:
        if k & 1:
            result = product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def colon(I: MonomialIdeal, m: MonomialLike) -> MonomialIdeal:
    mv = _as_monomial(m).vector(I.ambient)
    quotients = (tuple(max(a - b, 0) for a, b in zip(u, mv)) for u in I._gens)
    return MonomialIdeal._from_vectors(I.ambient, quotients)


def contains(I: MonomialIdeal, m: MonomialLike) -> bool:
    mv = _as_monomial(m).vector(I.ambient)
    return any(_divides(u, mv) for u in I._gens)


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff I is contained in J."""
    _same_ambient(I, J)
    return all(any(_divides(v, u) for v in J._gens) for u in I._gens)


def max_gen_degree(I: MonomialIdeal) -> tuple[int, bool]:
    """Largest generator degree and whether all generators share it."""
    if I.is_zero():
        raise ValueError("the zero ideal has no generators")
    degs = I.degrees()
    return max(degs), len(set(degs)) == 1


# -- graphs ------------------------------------------------------------------


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal(G.vertices, [Monomial.product_of(e) for e in G.edge_list()])


def cover_ideal(G: Graph) -> MonomialIdeal:
    """Generated by the products over minimal vertex covers; unit if edgeless."""
    if not G.edges:
        return MonomialIdeal.unit(G.vertices)
    return MonomialIdeal(G.vertices, [Monomial.product_of(c) for c in minimal_vertex_covers(G)])


# -- squarefree machinery ----------------------------------------------------


def _require_squarefree_proper(I: MonomialIdeal) -> None:
    if not I.is_squarefree():
        raise ValueError("ideal is not squarefree")
    if I.is_zero() or I.is_unit():
        raise ValueError("zero and unit ideals have no minimal primes")


def _support_mask(v: Vector) -> int:
    mask = 0
    for i, e in enumerate(v):
        if e:
            mask |= 1 << i
    return mask


def minimal_transversals(supports: Iterable[int]) -> list[int]:
    """Minimal sets (bitmasks) meeting every given set (bitmask)."""
    acc = [0]
    for s in supports:
        bits = [1 << i for i in range(s.bit_length()) if s >> i & 1]
        cand = set()
        for t in acc:
            if t & s:
                cand.add(t)
            else:
                cand.update(t | b for b in bits)
        ordered = sorted(cand, key=lambda m: bin(m).count("1"))
        acc = []
        for t in ordered:
            if not any(a & t == a for a in acc):
                acc.append(t)
    return acc


def _mask_vector(mask: int, n: int) -> Vector:
    return tuple(mask >> i & 1 for i in range(n))


def minimal_primes(I: MonomialIdeal) -> list[tuple[str, ...]]:
    """Variable sets of the irredundant prime decomposition of a squarefree ideal."""
    _require_squarefree_proper(I)
    n = len(I.ambient)
    masks = minimal_transversals(_support_mask(v) for v in I._gens)
    vecs = sorted((_mask_vector(m, n) for m in masks), key=_canonical_key)
    return [tuple(x for x, e in zip(I.ambient, v) if e) for v in vecs]


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    _require_squarefree_proper(I)
    n = len(I.ambient)
    masks = minimal_transversals(_support_mask(v) for v in I._gens)
    return MonomialIdeal._from_vectors(I.ambient, [_mask_vector(m, n) for m in masks], minimal=True)


def _intersect_prime_power(vecs: Sequence[Vector], prime: Sequence[int], k: int, n: int) -> list[Vector]:
    # Minimal multiples of u lying in P^k are u times the monomials of
    # degree k - deg_P(u) in the variables of P.
    out = []
    cache: dict[int, list[Vector]] = {}
    for u in vecs:
        need = k - sum(u[i] for i in prime)
        if need <= 0:
            out.append(u)
            continue
        if need not in cache:
            monos = []
            for combo in combinations_with_replacement(prime, need):
                m = [0] * n
                for i in combo:
                    m[i] += 1
                monos.append(tuple(m))
            cache[need] = monos
        out.extend(tuple(a + b for a, b in zip(u, m)) for m in cache[need])
    return _minimal_vectors(out)


def symbolic_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-th symbolic power of a squarefree ideal: intersection of P^k over minimal primes."""
    if k < 0:
        raise ValueError("negative symbolic power")
    _require_squarefree_proper(I)
    n = len(I.ambient)
    if k == 0:
        return MonomialIdeal.unit(I.ambient)
    pos = {v: i for i, v in enumerate(I.ambient)}
    vecs: list[Vector] = [(0,) * n]
    for prime in minimal_primes(I):
        vecs = _intersect_prime_power(vecs, [pos[v] for v in prime], k, n)
    return MonomialIdeal._from_vectors(I.ambient, vecs, minimal=True)


# -- polarization ------------------------------------------------------------


def polarized_name(var: str, p: int) -> str:
    return f"{var}_{p}"


def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Squarefree ideal replacing x^a by x_1 x_2 ... x_a, variable-major order."""
    if I.is_zero():
        raise ValueError("cannot polarize the zero ideal")
    tops = [max(v[i] for v in I._gens) for i in range(len(I.ambient))]
    ambient = tuple(polarized_name(x, p) for x, a in zip(I.ambient, tops) for p in range(1, a + 1))
    vecs = []
    for v in I._gens:
        pv: list[int] = []
        for e, a in zip(v, tops):
            pv.extend([1] * e + [0] * (a - e))
        vecs.append(tuple(pv))
    # Polarization preserves minimality; reminimalize anyway as a check.
    return MonomialIdeal._from_vectors(ambient, vecs)


# -- serialization -----------------------------------------------------------


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {
        "ambient": list(I.ambient),
        "gens": [[[x, e] for x, e in zip(I.ambient, v) if e] for v in I._gens],
    }


def ideal_from_json(data: Mapping) -> MonomialIdeal:
    ambient = list(data["ambient"])
    gens = [Monomial({x: int(e) for x, e in g}) for g in data["gens"]]
    return MonomialIdeal(ambient, gens)
