"""Monomials and monomial ideals over k[x1, ..., xn].

Ideals are stored in canonical minimal form: no generator divides another,
and generators are sorted by degree and then lexicographically with
x1 > x2 > ... > xn.  Two ideals are equal exactly when their generator
tuples are equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Exps = tuple[int, ...]

DEFAULT_MAX_PRODUCTS = 200_000
DEFAULT_MAX_POLARIZED_VARS = 12


class RingMismatchError(ValueError):
    pass


class CapExceededError(RuntimeError):
    """A configured size guard would be exceeded."""


@dataclass(frozen=True)
class RingContext:
    num_vars: int

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError(f"num_vars must be >= 1, got {self.num_vars}")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f"x{i}" for i in range(1, self.num_vars + 1))

    def var(self, i: int) -> Monomial:
        """The variable x_i (1-based)."""
        if not 1 <= i <= self.num_vars:
            raise ValueError(f"x{i} is not a variable of a ring with {self.num_vars} variables")
        e = [0] * self.num_vars
        e[i - 1] = 1
        return Monomial(tuple(e))

    def monomial(self, support: Iterable[int]) -> Monomial:
        """Squarefree monomial from 1-based variable indices; repeats raise the exponent."""
        e = [0] * self.num_vars
        for i in support:
            if not 1 <= i <= self.num_vars:
                raise ValueError(f"x{i} is not a variable of a ring with {self.num_vars} variables")
            e[i - 1] += 1
        return Monomial(tuple(e))

    def one(self) -> Monomial:
        return Monomial((0,) * self.num_vars)


@dataclass(frozen=True)
class Monomial:
    exponents: Exps

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self.exponents)

    def support(self) -> tuple[int, ...]:
        """1-based indices of the variables dividing this monomial."""
        return tuple(i + 1 for i, a in enumerate(self.exponents) if a)

    def divides(self, other: Monomial) -> bool:
        return _divides(self.exponents, other.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        _same_length(self, other)
        return Monomial(_mul(self.exponents, other.exponents))

    def lcm(self, other: Monomial) -> Monomial:
        _same_length(self, other)
        return Monomial(_lcm(self.exponents, other.exponents))

    def gcd(self, other: Monomial) -> Monomial:
        _same_length(self, other)
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def quotient(self, other: Monomial) -> Monomial:
        """self / gcd(self, other)."""
        _same_length(self, other)
        return Monomial(_colon(self.exponents, other.exponents))

    def __str__(self) -> str:
        return format_monomial(self.exponents)


def _same_length(a: Monomial, b: Monomial) -> None:
    if len(a.exponents) != len(b.exponents):
        raise RingMismatchError(
            f"monomials live in rings of different sizes ({len(a.exponents)} vs {len(b.exponents)})"
        )


# Raw exponent-tuple helpers.  The hot loops work on tuples, not Monomial objects.

def _divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _colon(a: Exps, b: Exps) -> Exps:
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def canonical_key(e: Exps) -> tuple:
    return (sum(e), tuple(-a for a in e))


def _minimal(gens: Iterable[Exps]) -> tuple[Exps, ...]:
    """Canonical minimal generating set of a collection of exponent tuples."""
    ordered = sorted(set(gens), key=canonical_key)
    kept: list[Exps] = []
    # lower holds generators of strictly smaller degree than the current one;
    # equal-degree divisibility only happens for equal tuples, already deduplicated.
    lower: list[Exps] = []
    pending: list[Exps] = []
    current_degree = -1
    for e in ordered:
        d = sum(e)
        if d != current_degree:
            lower.extend(pending)
            pending = []
            current_degree = d
        if any(_divides(g, e) for g in lower):
            continue
        pending.append(e)
        kept.append(e)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in canonical minimal form.

    Build instances with :func:`minimalize` or :meth:`from_exponents`; the
    constructor trusts that ``gens`` is already canonical.
    """

    ring: RingContext
    gens: tuple[Exps, ...]

    @classmethod
    def from_exponents(cls, ring: RingContext, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
        return minimalize([Monomial(tuple(g)) for g in gens], ring)

    @classmethod
    def from_supports(cls, ring: RingContext, supports: Iterable[Iterable[int]]) -> MonomialIdeal:
        return minimalize([ring.monomial(s) for s in supports], ring)

    @classmethod
    def zero(cls, ring: RingContext) -> MonomialIdeal:
        return cls(ring, ())

    @property
    def num_vars(self) -> int:
        return self.ring.num_vars

    @property
    def generators(self) -> list[Monomial]:
        return [Monomial(g) for g in self.gens]

    def __len__(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_squarefree(self) -> bool:
        return all(a <= 1 for g in self.gens for a in g)

    def max_exponents(self) -> Exps:
        n = self.num_vars
        return tuple(max((g[i] for g in self.gens), default=0) for i in range(n))

    def __contains__(self, u: Monomial) -> bool:
        return contains(self, u)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __str__(self) -> str:
        return format_ideal(self)

    def to_json(self) -> dict:
        return {"num_vars": self.num_vars, "generators": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal:
        ring = RingContext(int(data["num_vars"]))
        return cls.from_exponents(ring, data["generators"])


def _check_ring(ring: RingContext, e: Exps) -> None:
    if len(e) != ring.num_vars:
        raise RingMismatchError(
            f"monomial with {len(e)} exponents does not live in a ring with {ring.num_vars} variables"
        )


def _check_same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ring != J.ring:
        raise RingMismatchError(
            f"ideals live in different rings ({I.num_vars} vs {J.num_vars} variables)"
        )


def minimalize(gens: Iterable[Monomial], ring: RingContext) -> MonomialIdeal:
    raw = []
    for m in gens:
        _check_ring(ring, m.exponents)
        if m.is_unit():
            raise ValueError("unit ideal not supported")
        raw.append(m.exponents)
    return MonomialIdeal(ring, _minimal(raw))


def contains(I: MonomialIdeal, u: Monomial) -> bool:
    _check_ring(I.ring, u.exponents)
    e = u.exponents
    return any(_divides(g, e) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return MonomialIdeal(I.ring, _minimal(I.gens + J.gens))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal, max_products: int = DEFAULT_MAX_PRODUCTS) -> MonomialIdeal:
    _check_same_ring(I, J)
    count = len(I.gens) * len(J.gens)
    if count > max_products:
        raise CapExceededError(
            f"power too large: {count} products exceed the cap of {max_products} (raise --max-products)"
        )
    return MonomialIdeal(I.ring, _minimal(_mul(a, b) for a in I.gens for b in J.gens))


def ideal_power(I: MonomialIdeal, t: int, max_products: int = DEFAULT_MAX_PRODUCTS) -> MonomialIdeal:
    """I^t by repeated multiplication by I, minimalizing after each step."""
    if t < 1:
        raise ValueError(f"power exponent must be >= 1, got {t}")
    result = I
    for _ in range(t - 1):
        result = ideal_product(result, I, max_products)
    return result


def colon_by_monomial(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    _check_ring(I.ring, f.exponents)
    fe = f.exponents
    quotients = [_colon(g, fe) for g in I.gens]
    if any(not any(q) for q in quotients):
        # f already lies in I, so I : f is the unit ideal.
        raise ValueError("unit ideal not supported: the monomial lies in the ideal")
    return MonomialIdeal(I.ring, _minimal(quotients))


def add_monomial(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """The ideal (I, f)."""
    _check_ring(I.ring, f.exponents)
    if f.is_unit():
        raise ValueError("unit ideal not supported")
    return MonomialIdeal(I.ring, _minimal(I.gens + (f.exponents,)))


def ideal_intersection(I: MonomialIdeal, J: MonomialIdeal, max_products: int = DEFAULT_MAX_PRODUCTS) -> MonomialIdeal:
    _check_same_ring(I, J)
    count = len(I.gens) * len(J.gens)
    if count > max_products:
        raise CapExceededError(
            f"intersection too large: {count} lcm pairs exceed the cap of {max_products}"
        )
    return MonomialIdeal(I.ring, _minimal(_lcm(a, b) for a in I.gens for b in J.gens))


def colon_by_variables(I: MonomialIdeal, max_products: int = DEFAULT_MAX_PRODUCTS) -> MonomialIdeal:
    """(I : m) for m = (x1, ..., xn), as the intersection of the I : x_j."""
    if I.is_zero():
        return I
    result: MonomialIdeal | None = None
    for j in range(1, I.num_vars + 1):
        if I.ring.var(j).exponents in I.gens:
            continue  # I : x_j is the whole ring
        q = colon_by_monomial(I, I.ring.var(j))
        result = q if result is None else ideal_intersection(result, q, max_products)
    if result is None:
        raise ValueError("unit ideal not supported: I contains every variable")
    return result


@dataclass(frozen=True)
class Polarization:
    ideal: MonomialIdeal
    added_vars: int
    # blocks[i] lists the 1-based polarized variables standing for x_{i+1}
    blocks: tuple[tuple[int, ...], ...]

    def describe(self) -> list[str]:
        out = []
        for i, block in enumerate(self.blocks, start=1):
            for j, v in enumerate(block, start=1):
                out.append(f"x{v} = x_{{{i},{j}}}")
        return out


def polarize(I: MonomialIdeal, max_vars: int = DEFAULT_MAX_POLARIZED_VARS) -> Polarization:
    """Polarize I; variables come in blocks x_{1,1}, ..., x_{1,a1}, x_{2,1}, ...

    Every original variable keeps at least one slot, so a squarefree ideal is
    returned unchanged with ``added_vars == 0``.
    """
    if I.is_zero():
        raise ValueError("polarization of the zero ideal is not defined")
    widths = [max(1, a) for a in I.max_exponents()]
    total = sum(widths)
    if total > max_vars:
        raise CapExceededError(
            f"polarization too large: {total} variables exceed the cap of {max_vars}"
        )
    offsets = []
    pos = 0
    for w in widths:
        offsets.append(pos)
        pos += w
    blocks = tuple(tuple(range(off + 1, off + w + 1)) for off, w in zip(offsets, widths))
    new_gens = []
    for g in I.gens:
        e = [0] * total
        for i, a in enumerate(g):
            for j in range(a):
                e[offsets[i] + j] = 1
        new_gens.append(tuple(e))
    ring = RingContext(total)
    return Polarization(MonomialIdeal(ring, _minimal(new_gens)), total - I.num_vars, blocks)


def embed(I: MonomialIdeal, ring: RingContext, offset: int = 0) -> MonomialIdeal:
    """Extend I to a larger ring, shifting its variables up by ``offset``."""
    if offset < 0 or offset + I.num_vars > ring.num_vars:
        raise RingMismatchError(
            f"cannot place {I.num_vars} variables at offset {offset} in a ring with {ring.num_vars}"
        )
    pad_right = ring.num_vars - offset - I.num_vars
    gens = [(0,) * offset + g + (0,) * pad_right for g in I.gens]
    return MonomialIdeal(ring, _minimal(gens))


# Text form -----------------------------------------------------------------

def format_monomial(e: Exps) -> str:
    parts = []
    for i, a in enumerate(e, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal) -> str:
    if I.is_zero():
        return "0"
    return ", ".join(format_monomial(g) for g in I.gens)


class IdealParseError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_ideal(text: str, num_vars: int | None = None) -> MonomialIdeal:
    """Parse ``"x1*x2*x3, x2^2*x4"``; the ring size defaults to the largest index."""
    # Strip whitespace but keep a map back to original positions for error messages.
    chars = [(i, c) for i, c in enumerate(text) if not c.isspace()]
    s = "".join(c for _, c in chars)
    pos_of = [i for i, _ in chars] + [len(text)]

    if s in ("", "0"):
        if num_vars is None:
            raise IdealParseError("cannot infer the number of variables of the zero ideal; pass num_vars", 0)
        return MonomialIdeal.zero(RingContext(num_vars))

    raw: list[dict[int, int]] = []
    k = 0
    while True:
        factors: dict[int, int] = {}
        while True:
            m = _FACTOR.match(s, k)
            if m is None:
                raise IdealParseError("expected a factor like x3 or x3^2", pos_of[k])
            idx = int(m.group(1))
            if idx < 1:
                raise IdealParseError("variable indices are 1-based", pos_of[k])
            exp = int(m.group(2)) if m.group(2) is not None else 1
            factors[idx] = factors.get(idx, 0) + exp
            k = m.end()
            if k < len(s) and s[k] == "*":
                k += 1
                continue
            break
        if sum(factors.values()) == 0:
            raise IdealParseError("unit ideal not supported", pos_of[k])
        raw.append(factors)
        if k == len(s):
            break
        if s[k] != ",":
            raise IdealParseError(f"unexpected character {s[k]!r}", pos_of[k])
        k += 1

    largest = max(i for f in raw for i in f)
    n = largest if num_vars is None else num_vars
    if largest > n:
        raise ValueError(f"x{largest} does not fit in a ring with {n} variables")
    ring = RingContext(n)
    gens = []
    for f in raw:
        e = [0] * n
        for i, a in f.items():
            e[i - 1] = a
        gens.append(Monomial(tuple(e)))
    return minimalize(gens, ring)
