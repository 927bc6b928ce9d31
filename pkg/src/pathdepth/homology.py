"""Stanley-Reisner complexes, reduced simplicial homology and Hochster's formula.

Vertex ``v`` (1-based) is bit ``v - 1`` of a face mask.  The chain complex is
augmented by the empty face, so the complex ``{∅}`` has one-dimensional
homology in degree -1 while the void complex (no faces at all) is acyclic.
"""

from __future__ import annotations

import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .linalg import GF2, FieldSpec, rank_gf2, rank_sparse
from .ring import (
    DEFAULT_MAX_POLARIZED_VARS,
    CapExceededError,
    MonomialIdeal,
    polarize,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_SUBSETS = 1 << 24
MAX_SUBSETS_ENV = "PATHDEPTH_MAX_SUBSETS"


def default_max_subsets() -> int:
    raw = os.environ.get(MAX_SUBSETS_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{MAX_SUBSETS_ENV} must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_SUBSETS


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def subset_order_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Increasing cardinality, then lexicographic on the sorted vertex list."""
    vs = vertices_of(mask)
    return (len(vs), vs)


class NotSquarefreeError(ValueError):
    def __init__(self) -> None:
        super().__init__("ideal is not squarefree; polarize first")


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    facets: tuple[int, ...]  # facet masks, none containing another

    @classmethod
    def from_facets(cls, vertex_count: int, facets) -> SimplicialComplex:
        masks = {mask_of(f) for f in facets}
        maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
        return cls(vertex_count, tuple(sorted(maximal, key=subset_order_key)))

    @classmethod
    def void(cls, vertex_count: int) -> SimplicialComplex:
        return cls(vertex_count, ())

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        """Largest face dimension; -1 for {∅}.  The void complex reports -2."""
        if not self.facets:
            return -2
        return max(_popcount(f) for f in self.facets) - 1

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [vertices_of(f) for f in self.facets]

    def faces_by_size(self) -> list[list[int]]:
        """levels[k] lists the faces with k vertices, each in increasing mask order."""
        if not self.facets:
            return []
        seen: set[int] = set()
        for f in self.facets:
            vs = vertices_of(f)
            for k in range(len(vs) + 1):
                for combo in combinations(vs, k):
                    seen.add(mask_of(combo))
        top = max(_popcount(m) for m in seen)
        levels: list[list[int]] = [[] for _ in range(top + 1)]
        for m in seen:
            levels[_popcount(m)].append(m)
        for lv in levels:
            lv.sort()
        return levels


def _popcount(m: int) -> int:
    return bin(m).count("1")


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers of S/I, keyed by (i, W-mask)."""

    field: FieldSpec
    num_vars: int
    entries: dict[tuple[int, int], int] = dc_field(default_factory=dict)

    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def total(self) -> dict[int, int]:
        """Total Betti numbers beta_i."""
        out: dict[int, int] = {}
        for (i, _), b in self.entries.items():
            out[i] = out.get(i, 0) + b
        return dict(sorted(out.items()))

    def graded(self) -> dict[tuple[int, int], int]:
        """beta_{i,j} with j = |W|."""
        out: dict[tuple[int, int], int] = {}
        for (i, w), b in self.entries.items():
            key = (i, _popcount(w))
            out[key] = out.get(key, 0) + b
        return dict(sorted(out.items()))

    def sorted_entries(self) -> list[tuple[int, tuple[int, ...], int]]:
        rows = [(i, vertices_of(w), b) for (i, w), b in self.entries.items()]
        rows.sort(key=lambda r: (len(r[1]), r[1], r[0]))
        return rows

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "entries": [{"i": i, "W": list(w), "beta": b} for i, w, b in self.sorted_entries()],
        }


# Homology -------------------------------------------------------------------

def _boundary_rank(upper: list[int], lower: list[int], field: FieldSpec) -> int:
    """Rank of the boundary map from faces ``upper`` to faces ``lower``."""
    if not upper or not lower:
        return 0
    index = {f: j for j, f in enumerate(lower)}
    if field.characteristic == 2:
        rows = []
        for f in upper:
            bits = 0
            rest = f
            while rest:
                low = rest & -rest
                bits |= 1 << index[f ^ low]
                rest ^= low
            rows.append(bits)
        return rank_gf2(rows)
    srows = []
    for f in upper:
        row = {}
        sign = 1
        rest = f
        while rest:
            low = rest & -rest
            row[index[f ^ low]] = sign
            sign = -sign
            rest ^= low
        srows.append(row)
    return rank_sparse(srows, field)


def homology_from_levels(levels: list[list[int]], field: FieldSpec) -> dict[int, int]:
    """Reduced homology dimensions {d: dim} for d = -1 .. top, given faces by size."""
    if not levels:
        return {}
    ranks = [0] * (len(levels) + 1)
    # ranks[k] = rank of the map from size-k faces to size-(k-1) faces
    for k in range(1, len(levels)):
        ranks[k] = _boundary_rank(levels[k], levels[k - 1], field)
    dims = {}
    for k, faces in enumerate(levels):
        dims[k - 1] = len(faces) - ranks[k] - ranks[k + 1]
    return dims


def reduced_homology_dims(delta: SimplicialComplex, field: FieldSpec = GF2) -> dict[int, int]:
    return homology_from_levels(delta.faces_by_size(), field)


def _faces_avoiding(W: int, gen_masks: list[int]) -> list[list[int]]:
    """Faces of the induced complex on W: subsets of W containing no generator."""
    inside = [g for g in gen_masks if g & W == g]
    verts = []
    rest = W
    while rest:
        low = rest & -rest
        verts.append(low)
        rest ^= low
    blockers = {v: [g for g in inside if g & v] for v in verts}
    levels = [[0]]
    while True:
        nxt = []
        for f in levels[-1]:
            top = f.bit_length()
            for v in verts:
                if v.bit_length() <= top:
                    continue
                g2 = f | v
                if any(g & g2 == g for g in blockers[v]):
                    continue
                nxt.append(g2)
        if not nxt:
            return levels
        levels.append(nxt)


def _check_squarefree_proper(I: MonomialIdeal) -> None:
    if not I.is_squarefree():
        raise NotSquarefreeError()


def gen_masks(I: MonomialIdeal) -> list[int]:
    return [sum(1 << i for i, a in enumerate(g) if a) for g in I.gens]


def stanley_reisner(I: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the supports of squarefree monomials outside I."""
    _check_squarefree_proper(I)
    full = (1 << I.num_vars) - 1
    levels = _faces_avoiding(full, gen_masks(I))
    faces = [f for lv in levels for f in lv]
    # A face is a facet iff no one-vertex extension is a face.
    face_set = set(faces)
    facets = []
    for f in faces:
        free = full & ~f
        maximal = True
        while free:
            low = free & -free
            if f | low in face_set:
                maximal = False
                break
            free ^= low
        if maximal:
            facets.append(f)
    return SimplicialComplex(I.num_vars, tuple(sorted(facets, key=subset_order_key)))


def induced_subcomplex(delta: SimplicialComplex, W) -> SimplicialComplex:
    w = mask_of(W)
    if w >> delta.vertex_count:
        raise ValueError(f"W={sorted(W)} is not a subset of the {delta.vertex_count} vertices")
    if delta.is_void():
        return delta
    return SimplicialComplex.from_facets(delta.vertex_count, [vertices_of(f & w) for f in delta.facets])


def _union_closure(masks: list[int]) -> list[int]:
    unions = {0}
    for g in masks:
        unions |= {u | g for u in unions}
    return sorted(unions, key=subset_order_key)


def _betti_chunk(args) -> list[tuple[int, int, int]]:
    chunk, masks, characteristic = args
    field = FieldSpec(characteristic)
    out = []
    for W in chunk:
        size = _popcount(W)
        for d, h in homology_from_levels(_faces_avoiding(W, masks), field).items():
            if h:
                out.append((size - d - 1, W, h))
    return out


def _resolve_workers(threads: int) -> int:
    if threads == 0:
        return os.cpu_count() or 1
    return max(1, threads)


def hochster_betti(
    I: MonomialIdeal,
    field: FieldSpec = GF2,
    *,
    max_subsets: int | None = None,
    prune: bool = True,
    threads: int = 1,
    progress: bool = False,
) -> BettiTable:
    """All multigraded Betti numbers of S/I via beta_{i,W} = dim H~_{|W|-i-1}(Δ_W).

    With ``prune`` only unions of generator supports are visited; any other W
    has a cone point in Δ_W and contributes nothing.
    """
    _check_squarefree_proper(I)
    n = I.num_vars
    cap = default_max_subsets() if max_subsets is None else max_subsets
    needed = 1 << n
    if needed > cap:
        raise CapExceededError(
            f"Hochster sweep over {n} variables needs {needed} subsets, above the cap of {cap} "
            f"(set {MAX_SUBSETS_ENV} or --max-subsets to raise it)"
        )
    masks = gen_masks(I)
    if prune:
        subsets = _union_closure(masks)
    else:
        subsets = sorted(range(needed), key=subset_order_key)

    table = BettiTable(field, n)
    workers = _resolve_workers(threads)
    if workers == 1 or len(subsets) < 256:
        results = []
        step = max(1, len(subsets) // 20)
        for start in range(0, len(subsets), step):
            results.extend(_betti_chunk((subsets[start:start + step], masks, field.characteristic)))
            if progress:
                print(f"  subsets processed: {min(start + step, len(subsets))}/{len(subsets)}", file=sys.stderr)
    else:
        size = max(1, len(subsets) // (workers * 8))
        jobs = [(subsets[s:s + size], masks, field.characteristic) for s in range(0, len(subsets), size)]
        results = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for done, part in enumerate(pool.map(_betti_chunk, jobs), start=1):
                results.extend(part)
                if progress:
                    print(f"  chunks processed: {done}/{len(jobs)}", file=sys.stderr)
    for i, W, h in results:
        table.entries[(i, W)] = h
    return table


def betti_at(I: MonomialIdeal, W, field: FieldSpec = GF2) -> dict[int, int]:
    """Targeted query: {i: beta_{i,W}} for one subset W, with no sweep cap."""
    _check_squarefree_proper(I)
    w = mask_of(W)
    size = _popcount(w)
    dims = homology_from_levels(_faces_avoiding(w, gen_masks(I)), field)
    return {size - d - 1: h for d, h in dims.items() if h}


def projective_dimension(I: MonomialIdeal, field: FieldSpec = GF2, **kwargs) -> int:
    if I.is_zero():
        _check_squarefree_proper(I)
        return 0
    return hochster_betti(I, field, **kwargs).projective_dimension()


def depth_squarefree(I: MonomialIdeal, field: FieldSpec = GF2, **kwargs) -> int:
    return I.num_vars - projective_dimension(I, field, **kwargs)


def depth_general(
    I: MonomialIdeal,
    field: FieldSpec = GF2,
    *,
    max_polarized_vars: int = DEFAULT_MAX_POLARIZED_VARS,
    **kwargs,
) -> int:
    """depth S/I for any monomial ideal, through the polarization (pd is preserved)."""
    if I.is_squarefree():
        return depth_squarefree(I, field, **kwargs)
    try:
        pol = polarize(I, max_vars=max_polarized_vars)
    except CapExceededError as exc:
        raise CapExceededError(f"{exc}; use the socle test (ass-max) to decide depth 0 instead") from None
    return I.num_vars - projective_dimension(pol.ideal, field, **kwargs)
