from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from conftest import monomial_ideals
from pathdepth.graphs import path_power_ideal
from pathdepth.homology import (
    NotSquarefreeError,
    SimplicialComplex,
    betti_at,
    depth_general,
    depth_squarefree,
    hochster_betti,
    induced_subcomplex,
    projective_dimension,
    reduced_homology_dims,
    stanley_reisner,
)
from pathdepth.linalg import GF2, QQ, FieldSpec
from pathdepth.oracle import naive_betti, taylor_projective_dimension
from pathdepth.ring import CapExceededError, MonomialIdeal, RingContext, ideal_power, parse_ideal, polarize

TRIANGLE = SimplicialComplex.from_facets(3, [(1, 2), (1, 3), (2, 3)])
RP2_FACETS = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
              (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]


def _nonzero(d):
    return {k: v for k, v in d.items() if v}


def test_stanley_reisner_examples():
    assert stanley_reisner(parse_ideal("x1*x2*x3")) == TRIANGLE
    full = stanley_reisner(MonomialIdeal.zero(RingContext(4)))
    assert full.facet_sets() == [(1, 2, 3, 4)]
    skel = stanley_reisner(path_power_ideal(4))
    assert sorted(skel.facet_sets()) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_stanley_reisner_rejects_powers():
    with pytest.raises(NotSquarefreeError, match="polarize first"):
        stanley_reisner(parse_ideal("x1^2*x2"))


def test_induced_subcomplex():
    assert induced_subcomplex(TRIANGLE, [1, 2, 3]) == TRIANGLE
    assert induced_subcomplex(TRIANGLE, [1, 2]).facet_sets() == [(1, 2)]
    empty = induced_subcomplex(TRIANGLE, [])
    assert empty.facets == (0,) and empty.dimension == -1


def test_void_and_empty_complex_conventions():
    assert reduced_homology_dims(SimplicialComplex.void(3)) == {}
    assert reduced_homology_dims(SimplicialComplex(3, (0,))) == {-1: 1}


def test_homology_examples():
    assert _nonzero(reduced_homology_dims(TRIANGLE)) == {1: 1}
    simplex = SimplicialComplex.from_facets(4, [(1, 2, 3, 4)])
    assert _nonzero(reduced_homology_dims(simplex)) == {}
    skel = stanley_reisner(path_power_ideal(4))
    # 6 edges, 4 vertices, connected: cycle rank 6 - 4 + 1
    assert _nonzero(reduced_homology_dims(skel)) == {1: 3}


def test_projective_plane_depends_on_characteristic():
    rp2 = SimplicialComplex.from_facets(6, RP2_FACETS)
    assert _nonzero(reduced_homology_dims(rp2, GF2)) == {1: 1, 2: 1}
    assert _nonzero(reduced_homology_dims(rp2, QQ)) == {}
    assert _nonzero(reduced_homology_dims(rp2, FieldSpec(3))) == {}


def test_hochster_examples():
    table = hochster_betti(parse_ideal("x1*x2*x3"))
    assert table.sorted_entries() == [(0, (), 1), (1, (1, 2, 3), 1)]
    assert hochster_betti(parse_ideal("x1")).sorted_entries() == [(0, (), 1), (1, (1,), 1)]
    zero = hochster_betti(MonomialIdeal.zero(RingContext(3)))
    assert zero.sorted_entries() == [(0, (), 1)]


def test_betti_json_schema():
    data = hochster_betti(parse_ideal("x1*x2, x2*x3")).to_json()
    assert data["field"] == "GF(2)"
    assert data["entries"] == [
        {"i": 0, "W": [], "beta": 1},
        {"i": 1, "W": [1, 2], "beta": 1},
        {"i": 1, "W": [2, 3], "beta": 1},
        {"i": 2, "W": [1, 2, 3], "beta": 1},
    ]


def test_hochster_cap():
    with pytest.raises(CapExceededError, match="needs 1024 subsets"):
        hochster_betti(path_power_ideal(10), max_subsets=1000)


def test_hochster_cap_from_environment(monkeypatch):
    monkeypatch.setenv("PATHDEPTH_MAX_SUBSETS", "100")
    with pytest.raises(CapExceededError):
        hochster_betti(path_power_ideal(8))
    # a targeted single-subset query is not capped, and agrees with a full sweep
    targeted = betti_at(path_power_ideal(8), range(1, 9))
    monkeypatch.delenv("PATHDEPTH_MAX_SUBSETS")
    full = hochster_betti(path_power_ideal(8)).entries
    assert targeted == {i: b for (i, w), b in full.items() if w == 0xFF}


def test_projective_dimension_examples():
    assert projective_dimension(path_power_ideal(7)) == 5
    assert projective_dimension(MonomialIdeal.zero(RingContext(3))) == 0
    assert projective_dimension(path_power_ideal(4)) == 2


def test_depth_examples():
    assert depth_squarefree(path_power_ideal(3)) == 2
    assert depth_squarefree(path_power_ideal(9)) == 4
    assert depth_squarefree(MonomialIdeal.zero(RingContext(5))) == 5


def test_depth_of_powers():
    I = path_power_ideal(4)
    assert depth_general(ideal_power(I, 2)) == 1
    assert depth_general(ideal_power(I, 3)) == 0
    assert depth_general(I) == depth_squarefree(I)


def test_depth_general_cap_suggests_socle_test():
    with pytest.raises(CapExceededError, match="socle test"):
        depth_general(ideal_power(path_power_ideal(4), 4), max_polarized_vars=12)


def test_polarized_pd_matches_taylor_oracle():
    I2 = ideal_power(path_power_ideal(4), 2)
    assert projective_dimension(polarize(I2).ideal) == taylor_projective_dimension(I2) == 3


@pytest.mark.parametrize("text", ["x1^2", "x1^2*x2, x2^3", "x1^2, x1*x2, x2^2", "x1^2*x3, x2^2*x3, x1*x2"])
def test_polarization_preserves_pd(text):
    I = parse_ideal(text)
    assert projective_dimension(polarize(I).ideal) == taylor_projective_dimension(I)


def test_pruned_sweep_matches_full_sweep():
    for n in range(3, 9):
        I = path_power_ideal(n)
        assert hochster_betti(I, prune=True).entries == hochster_betti(I, prune=False).entries


def test_parallel_sweep_matches_serial():
    I = path_power_ideal(9)
    assert hochster_betti(I, threads=2).entries == hochster_betti(I).entries


@pytest.mark.parametrize("n", [3, 4, 5])
def test_hochster_matches_smith_oracle_on_paths(n):
    I = path_power_ideal(n)
    fast = {(i, w): b for i, w, b in hochster_betti(I).sorted_entries()}
    assert fast == naive_betti(I, 2)


@settings(max_examples=25, deadline=None)
@given(monomial_ideals(max_vars=5, max_gens=5, squarefree=True))
def test_hochster_matches_smith_oracle_random(I):
    for p in (2, 3):
        fast = {(i, w): b for i, w, b in hochster_betti(I, FieldSpec(p)).sorted_entries()}
        assert fast == naive_betti(I, p)


def test_auslander_buchsbaum_is_enforced():
    for n in range(3, 10):
        I = path_power_ideal(n)
        assert depth_squarefree(I) + projective_dimension(I) == n


def test_random_disjoint_additivity():
    from pathdepth.campaign import disjoint_trial_outcome, disjoint_trials

    assert all(disjoint_trial_outcome(t) for t in disjoint_trials(seed=7, count=25))


def test_characteristic_stability_small_paths():
    for n in range(3, 9):
        I = path_power_ideal(n)
        depths = {depth_squarefree(I, FieldSpec(p)) for p in (2, 3, 5, 0)}
        assert len(depths) == 1
