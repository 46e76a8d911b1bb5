"""Exact ranks of sparse integer matrices over Q or a prime field."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

Row = dict[int, int]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field for homology: the rationals (``p=None``) or F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not (_is_prime(self.p) and self.p < 2**31):
            raise ValueError(f"field characteristic must be a prime below 2^31, got {self.p}")

    @classmethod
    def parse(cls, text: str | Field | None) -> Field:
        """Accepts ``q`` (rationals) or ``f<p>`` for a prime p."""
        if isinstance(text, Field):
            return text
        if text is None:
            return QQ
        t = text.strip().lower()
        if t in ("q", "qq", "0"):
            return QQ
        if t.startswith("f") and t[1:].isdigit():
            return cls(int(t[1:]))
        raise ValueError(f"unknown field {text!r}; use 'q' or 'f<p>'")

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"


QQ = Field()


def rank(rows: Iterable[Row], field: Field = QQ) -> int:
    """Rank of a matrix given as sparse rows {column: entry}.

    Over Q the elimination stays in the integers: each reduction replaces a
    row by a*row - b*pivot and divides out the content.
    """
    p = field.p
    pivots: dict[int, Row] = {}
    for row in rows:
        r = {c: (v % p if p else v) for c, v in row.items()}
        r = {c: v for c, v in r.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                if p:
                    inv = pow(r[c], p - 2, p)
                    r = {k: v * inv % p for k, v in r.items()}
                pivots[c] = r
                break
            if p:
                b = r[c]
                for k, v in piv.items():
                    nv = (r.get(k, 0) - b * v) % p
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            else:
                a, b = piv[c], r[c]
                new = {k: a * v for k, v in r.items()}
                for k, v in piv.items():
                    nv = new.get(k, 0) - b * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                r = {k: v // g for k, v in new.items()} if g > 1 else new
    return len(pivots)
