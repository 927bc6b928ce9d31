"""Closed forms for I_3(P_n^2) and exact replays of its colon identities."""

from __future__ import annotations

from .graphs import path_power_ideal
from .ring import (
    Monomial,
    MonomialIdeal,
    RingContext,
    add_monomial,
    colon_by_monomial,
    ideal_sum,
    minimalize,
)


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def floor_div(a: int, b: int) -> int:
    return a // b


def _require(n: int, least: int) -> None:
    if n < least:
        raise ValueError(f"n must be >= {least}, got {n}")


def depth_formula(n: int) -> int:
    _require(n, 3)
    return ceil_div(n, 7) + floor_div(n - 2, 7) + 1


def pd_formula(n: int) -> int:
    _require(n, 3)
    value = n - 1 - ceil_div(n, 7) - floor_div(n - 2, 7)
    assert value == n - depth_formula(n)
    return value


def dim_formula(n: int) -> int:
    _require(n, 3)
    return ceil_div(n, 4) + floor_div(n - 2, 4) + 1


def lemma23_lhs(n: int) -> int:
    return ceil_div(n - 1, 7) + floor_div(n - 3, 7) + 1


def lemma23_rhs(n: int) -> int:
    return ceil_div(n, 7) + floor_div(n - 2, 7)


def lemma23_check(n: int) -> bool:
    _require(n, 1)
    return lemma23_lhs(n) >= lemma23_rhs(n)


def lemma23_exhaustive(limit: int) -> int | None:
    """First n in 1..limit where the inequality fails, or None."""
    for n in range(1, limit + 1):
        if lemma23_lhs(n) < lemma23_rhs(n):
            return n
    return None


def power_zero_threshold(n: int) -> int:
    _require(n, 5)
    return floor_div(n - 2, 3) + 1


def witness_monomial(n: int) -> Monomial:
    """x_{r+1} x_{r+2} ... x_n with r = (n - 2) mod 3."""
    _require(n, 5)
    r = (n - 2) % 3
    a = RingContext(n).monomial(range(r + 1, n + 1))
    assert a.degree == 3 * power_zero_threshold(n) - 1
    return a


# Colon identities ------------------------------------------------------------

class _Builder:
    """Shorthand for ideals in k[x1..xn] written with offsets from n."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.ring = RingContext(n)

    def x(self, off: int) -> Monomial:
        return self.ring.var(self.n - off)

    def mono(self, *offs: int) -> Monomial:
        return self.ring.monomial(self.n - o for o in offs)

    def gens(self, *terms: tuple[int, ...]) -> MonomialIdeal:
        return minimalize([self.mono(*t) for t in terms], self.ring)

    def path(self, shrink: int) -> MonomialIdeal:
        return path_power_ideal(self.n - shrink, num_vars=self.n)


IDENTITY_IDS = (
    "identity:colon-i",
    "identity:colon-ii",
    "identity:colon-ii-short",
    "identity:colon-iii",
    "identity:colon-iv-a",
    "identity:colon-iv-a-short",
    "identity:colon-iv-b",
    "identity:colon-iv-c",
    "identity:colon-iv-c-short",
    "identity:colon-iv-d",
)


def colon_identity_sides(n: int) -> list[tuple[str, MonomialIdeal, MonomialIdeal]]:
    """(id, computed side, displayed side) for each identity at this n.

    Computed sides use only colon and sum operations on I = I_3(P_n^2);
    displayed sides are typed in from the generator lists.  Offsets count
    down from n, so ``(4, 3)`` means x_{n-4} x_{n-3}.
    """
    if n < 8:
        raise ValueError(f"n must be >= 8; at n={n} the index n-7 = {n - 7} is out of range")
    b = _Builder(n)
    I = b.path(0)

    colon = colon_by_monomial(I, b.x(2))
    J = b.gens((4, 3), (3, 1), (1, 0), (5, 3), (4, 1), (5, 4), (3, 0), (6, 4), (4, 0))
    five_linear = b.gens((6,), (5,), (3,), (1,), (0,))

    colon2 = colon_by_monomial(colon, b.x(4))

    H = colon_by_monomial(add_monomial(I, b.x(2)), b.x(3))
    L = b.gens((2,), (5, 4), (6, 4), (6, 5), (7, 5), (1, 0), (4, 1), (5, 1))

    H_colon = colon_by_monomial(H, b.x(5))
    H_lin = b.gens((1,), (2,), (4,), (6,), (7,))
    H_plus = add_monomial(H, b.x(5))
    H_plus_colon = colon_by_monomial(H_plus, b.x(4))
    H_plus_lin = b.gens((2,), (5,), (6,), (1,))
    H_plus_plus = add_monomial(H_plus, b.x(4))

    return [
        ("identity:colon-i", colon, ideal_sum(b.path(5), J)),
        ("identity:colon-ii", colon2, ideal_sum(b.path(7), five_linear)),
        ("identity:colon-ii-short", colon2, ideal_sum(b.path(5), five_linear)),
        ("identity:colon-iii", H, ideal_sum(b.path(6), L)),
        ("identity:colon-iv-a", H_colon, ideal_sum(b.path(8), H_lin)),
        ("identity:colon-iv-a-short", H_colon, ideal_sum(b.path(6), H_lin)),
        ("identity:colon-iv-b", H_plus,
         ideal_sum(b.path(6), b.gens((2,), (5,), (6, 4), (4, 1), (1, 0)))),
        ("identity:colon-iv-c", H_plus_colon, ideal_sum(b.path(7), H_plus_lin)),
        ("identity:colon-iv-c-short", H_plus_colon, ideal_sum(b.path(6), H_plus_lin)),
        ("identity:colon-iv-d", H_plus_plus,
         ideal_sum(b.path(6), b.gens((2,), (4,), (5,), (1, 0)))),
    ]


def split_recursion_sides(n: int) -> list[tuple[str, MonomialIdeal, MonomialIdeal]]:
    """The remaining displays in the depth recursion (valid for n >= 8)."""
    if n < 8:
        raise ValueError(f"n must be >= 8; at n={n} the index n-7 = {n - 7} is out of range")
    b = _Builder(n)
    I = b.path(0)
    colon = colon_by_monomial(I, b.x(2))
    plus4 = add_monomial(colon, b.x(4))
    plus4_colon3 = colon_by_monomial(plus4, b.x(3))
    plus43 = add_monomial(plus4, b.x(3))
    return [
        ("identity:split-a", plus4,
         ideal_sum(b.path(5), b.gens((4,), (3, 1), (1, 0), (5, 3), (3, 0)))),
        ("identity:split-b", plus4_colon3, ideal_sum(b.path(6), b.gens((5,), (4,), (1,), (0,)))),
        ("identity:split-b-long", plus4_colon3, ideal_sum(b.path(5), b.gens((5,), (4,), (1,), (0,)))),
        ("identity:split-c", plus43, ideal_sum(b.path(5), b.gens((4,), (3,), (1, 0)))),
        ("identity:split-d", add_monomial(add_monomial(I, b.x(2)), b.x(3)),
         ideal_sum(b.path(4), b.gens((2,), (3,)))),
    ]


def dimension_split_sides(n: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """I_3(P_n^2) against I_3(P_{n-4}^2) plus the sixteen displayed cubics (n >= 8)."""
    if n < 8:
        raise ValueError(f"n must be >= 8; at n={n} the index n-7 = {n - 7} is out of range")
    b = _Builder(n)
    J = b.gens(
        (5, 4, 3), (4, 3, 2), (3, 2, 1), (2, 1, 0),
        (6, 4, 3), (5, 3, 2), (4, 2, 1), (3, 1, 0),
        (6, 5, 3), (5, 4, 2), (4, 3, 1), (3, 2, 0),
        (7, 5, 3), (6, 4, 2), (5, 3, 1), (4, 2, 0),
    )
    return b.path(0), ideal_sum(b.path(4), J)


def four_family_generators(n: int) -> set[tuple[int, ...]]:
    """Supports of I_3(P_n^2) from the four displayed index families."""
    out = set()
    out |= {(i, i + 1, i + 2) for i in range(1, n - 1)}
    out |= {(i, i + 2, i + 3) for i in range(1, n - 2)}
    out |= {(i, i + 1, i + 3) for i in range(1, n - 2)}
    out |= {(i, i + 2, i + 4) for i in range(1, n - 3)}
    return out
