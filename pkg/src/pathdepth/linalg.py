"""Exact matrix rank over GF(p) and the rationals.

Boundary matrices are sparse with entries in {-1, 0, 1}, so rows are kept
sparse: an int bitset over GF(2), a ``{column: value}`` dict otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(p) for prime p, or QQ when ``characteristic == 0``."""

    characteristic: int = 2

    def __post_init__(self) -> None:
        p = self.characteristic
        if p != 0 and (p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise ValueError(f"field characteristic must be 0 or a prime, got {p}")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        s = text.strip().upper()
        if s in ("Q", "QQ", "0"):
            return cls(0)
        if s.startswith("GF(") and s.endswith(")"):
            s = s[3:-1]
        try:
            return cls(int(s))
        except ValueError:
            raise ValueError(f"unknown field {text!r}; use a prime like 2, 3, 5 or Q") from None

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


GF2 = FieldSpec(2)
QQ = FieldSpec(0)


def rank_gf2(rows: list[int]) -> int:
    """Rank of a GF(2) matrix given as int bitsets, one per row."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            low = row & -row
            p = pivots.get(low)
            if p is None:
                pivots[low] = row
                break
            row ^= p
    return len(pivots)


def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: (v * inv) % p for c, v in row.items()}
                break
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def _rank_integer(rows: list[dict[int, int]]) -> int:
    # Fraction-free elimination: r <- a*r - b*p, then strip the row content.
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                pivots[lead] = {c: v // g for c, v in row.items()}
                break
            a, b = piv[lead], row[lead]
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            row = {c: v // g for c, v in new.items()} if g > 1 else new
    return len(pivots)


def rank_sparse(rows: list[dict[int, int]], field: FieldSpec) -> int:
    """Rank of a sparse integer matrix read over ``field``."""
    if field.is_rational:
        return _rank_integer(rows)
    if field.characteristic == 2:
        bits = []
        for row in rows:
            b = 0
            for c, v in row.items():
                if v & 1:
                    b |= 1 << c
            bits.append(b)
        return rank_gf2(bits)
    return _rank_mod_p(rows, field.characteristic)
