"""Minimal primes, dimension, symbolic powers and the socle test for depth zero."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .homology import depth_squarefree, NotSquarefreeError
from .linalg import GF2, FieldSpec
from .ring import (
    DEFAULT_MAX_PRODUCTS,
    Exps,
    Monomial,
    MonomialIdeal,
    RingContext,
    _minimal,
    ideal_intersection,
)


@dataclass(frozen=True, order=True)
class VariablePrime:
    """The monomial prime (x_i : i in variables)."""

    variables: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.variables:
            raise ValueError("a variable prime needs at least one variable")

    def __len__(self) -> int:
        return len(self.variables)

    def ideal(self, ring: RingContext) -> MonomialIdeal:
        return MonomialIdeal.from_supports(ring, [[i] for i in self.variables])

    def power(self, ring: RingContext, t: int) -> MonomialIdeal:
        return MonomialIdeal.from_supports(ring, combinations_with_replacement(self.variables, t))

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i}" for i in self.variables) + ")"


def _require_squarefree(I: MonomialIdeal) -> None:
    if not I.is_squarefree():
        raise NotSquarefreeError()


def minimal_transversals(edges: list[frozenset[int]]) -> list[frozenset[int]]:
    """Inclusion-minimal vertex sets meeting every edge (branch and bound)."""
    edges = sorted(set(edges), key=lambda e: (len(e), sorted(e)))
    found: set[frozenset[int]] = set()

    def is_minimal(cover: frozenset[int]) -> bool:
        for v in cover:
            smaller = cover - {v}
            if all(e & smaller for e in edges):
                return False
        return True

    def branch(cover: frozenset[int]) -> None:
        if any(f <= cover for f in found):
            return
        for e in edges:
            if not e & cover:
                for v in sorted(e):
                    branch(cover | {v})
                return
        if is_minimal(cover):
            found.add(cover)

    branch(frozenset())
    # a cover found first can be a superset of one found later
    minimal = [c for c in found if not any(o < c for o in found)]
    return sorted(minimal, key=lambda c: (len(c), sorted(c)))


def minimal_primes(I: MonomialIdeal) -> list[VariablePrime]:
    """Minimal primes of a squarefree ideal; empty for the zero ideal."""
    _require_squarefree(I)
    if I.is_zero():
        return []
    supports = [frozenset(Monomial(g).support()) for g in I.gens]
    return [VariablePrime(tuple(sorted(c))) for c in minimal_transversals(supports)]


def primary_decomposition(I: MonomialIdeal) -> list[VariablePrime]:
    """I as the intersection of all its minimal primes (squarefree I is radical)."""
    return minimal_primes(I)


def intersect_primes(primes: list[VariablePrime], ring: RingContext, t: int = 1,
                     max_products: int = DEFAULT_MAX_PRODUCTS) -> MonomialIdeal:
    if not primes:
        return MonomialIdeal.zero(ring)
    result = primes[0].power(ring, t)
    for p in primes[1:]:
        result = ideal_intersection(result, p.power(ring, t), max_products)
    return result


@dataclass(frozen=True)
class Decomposition:
    primes: list[VariablePrime]
    height: int
    dim: int

    def to_json(self) -> dict:
        return {"primes": [list(p.variables) for p in self.primes], "height": self.height, "dim": self.dim}


def height_and_dim(I: MonomialIdeal) -> tuple[int, int]:
    primes = minimal_primes(I)
    if not primes:
        return 0, I.num_vars
    h = min(len(p) for p in primes)
    return h, I.num_vars - h


def decompose(I: MonomialIdeal) -> Decomposition:
    primes = minimal_primes(I)
    h = min((len(p) for p in primes), default=0)
    return Decomposition(primes, h, I.num_vars - h)


def symbolic_power(I: MonomialIdeal, t: int, max_products: int = DEFAULT_MAX_PRODUCTS) -> MonomialIdeal:
    """Intersection of P^t over the minimal primes P of squarefree I."""
    if t < 1:
        raise ValueError(f"symbolic power exponent must be >= 1, got {t}")
    _require_squarefree(I)
    if I.is_zero():
        return I
    return intersect_primes(minimal_primes(I), I.ring, t, max_products)


# Socle test -------------------------------------------------------------------

def socle_monomials(I: MonomialIdeal, first_only: bool = False) -> list[Monomial]:
    """Monomials u with u not in I and u*x_l in I for every variable x_l.

    Exponents are fixed one variable at a time.  u_j + 1 must equal the x_j
    exponent of some generator, so only those values are tried, in increasing
    order; results therefore come out in increasing lexicographic order of the
    exponent vector.  After fixing u_1..u_k the generators are projected onto
    the remaining variables:

    * ``base``: generators g with g_j <= u_j for the fixed j (witnesses of u in I),
    * ``bumped[l]``: generators with g_l <= u_l + 1 and g_j <= u_j otherwise
      (witnesses of u*x_l in I).

    u is outside I iff ``base`` never reaches an all-zero residue, and u*x_l is
    in I iff ``bumped[l]`` keeps a residue dividing the remaining part of u.
    """
    if I.is_zero():
        return []
    n = I.num_vars
    gens = list(I.gens)
    choices = []
    for j in range(n):
        values = sorted({g[j] - 1 for g in gens if g[j] >= 1})
        choices.append(values)
    out: list[Monomial] = []
    prefix: list[int] = []

    def residual_is_unit(res: list[Exps], k: int) -> bool:
        return any(not any(r[k:]) for r in res)

    def search(k: int, base: list[Exps], bumped: list[list[Exps]]) -> bool:
        if k == n:
            out.append(Monomial(tuple(prefix)))
            return first_only
        if not choices[k]:
            # x_{k+1} never occurs: u_{k+1} = 0 and u*x_{k+1} can never land in I
            return False
        for c in choices[k]:
            nb = [g for g in base if g[k] <= c]
            if residual_is_unit(nb, k + 1):
                break  # u is already in I, and larger c only adds witnesses
            nbumped = []
            ok = True
            for res in bumped:
                keep = [g for g in res if g[k] <= c]
                if not keep:
                    ok = False
                    break
                nbumped.append(keep)
            if not ok:
                continue
            new_l = [g for g in base if g[k] <= c + 1]
            if not new_l:
                continue
            nbumped.append(new_l)
            prefix.append(c)
            stop = search(k + 1, nb, nbumped)
            prefix.pop()
            if stop:
                return True
        return False

    search(0, gens, [])
    return out


@dataclass(frozen=True)
class SocleResult:
    associated: bool
    witness: Monomial | None


def max_ideal_is_associated(I: MonomialIdeal) -> SocleResult:
    """Whether (x1..xn) is associated to S/I, i.e. depth S/I = 0.

    The witness is the lexicographically least socle monomial.
    """
    if I.is_zero():
        return SocleResult(False, None)
    found = socle_monomials(I, first_only=True)
    if not found:
        return SocleResult(False, None)
    return SocleResult(True, found[0])


def is_socle_witness(I: MonomialIdeal, u: Monomial) -> bool:
    """Direct check: u outside I and every x_l * u inside I."""
    from .ring import contains

    if contains(I, u):
        return False
    return all(contains(I, u * I.ring.var(j)) for j in range(1, I.num_vars + 1))


def is_cohen_macaulay(I: MonomialIdeal, field: FieldSpec = GF2, **kwargs) -> bool:
    _require_squarefree(I)
    if I.is_zero():
        return True
    _, dim = height_and_dim(I)
    return depth_squarefree(I, field, **kwargs) == dim
