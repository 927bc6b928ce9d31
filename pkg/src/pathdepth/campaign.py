"""The verification campaign: closed forms against computed invariants."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Any, Callable, Iterable

from .decomposition import (
    height_and_dim,
    is_cohen_macaulay,
    is_socle_witness,
    max_ideal_is_associated,
    symbolic_power,
)
from .formulas import (
    colon_identity_sides,
    depth_formula,
    dim_formula,
    lemma23_exhaustive,
    pd_formula,
    power_zero_threshold,
    witness_monomial,
)
from .graphs import path_power_ideal
from .homology import depth_squarefree, hochster_betti, projective_dimension, stanley_reisner
from .linalg import GF2, QQ, FieldSpec
from .oracle import naive_betti
from .ring import (
    DEFAULT_MAX_POLARIZED_VARS,
    DEFAULT_MAX_PRODUCTS,
    CapExceededError,
    Monomial,
    MonomialIdeal,
    RingContext,
    add_monomial,
    colon_by_monomial,
    contains,
    embed,
    ideal_power,
    ideal_sum,
    polarize,
)

CLAIMS = (
    "thm2.4", "cor2.5", "prop2.6", "thm2.7", "prop2.8", "lemma2.3",
    "identities", "lemma2.1", "lemma2.2", "chars", "oracle",
)


@dataclass
class ClaimCheck:
    id: str
    params: dict[str, Any]
    expected: Any
    computed: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "params": self.params,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    config: dict[str, Any]
    checks: list[ClaimCheck] = dc_field(default_factory=list)

    def sort(self) -> None:
        self.checks.sort(key=lambda c: (c.id, sorted(c.params.items())))

    @property
    def n_pass(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def n_fail(self) -> int:
        return len(self.checks) - self.n_pass

    def ok(self) -> bool:
        return self.n_fail == 0

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "checks": [c.to_json() for c in self.checks],
            "summary": {"pass": self.n_pass, "fail": self.n_fail},
        }

    def format_table(self) -> str:
        rows = [("claim", "params", "expected", "computed", "result")]
        for c in self.checks:
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            rows.append((c.id, params, _short(c.expected), _short(c.computed), "PASS" if c.passed else "FAIL"))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        lines.append(f"{self.n_pass} passed, {self.n_fail} failed")
        return "\n".join(lines)


def _short(value: Any, width: int = 48) -> str:
    s = str(value)
    return s if len(s) <= width else s[: width - 3] + "..."


def _record(report: VerificationReport, cid: str, params: dict, expected: Any, compute: Callable[[], Any]) -> None:
    try:
        computed = compute()
    except Exception as exc:  # record-and-continue
        computed = f"error: {exc}"
    report.checks.append(ClaimCheck(cid, params, expected, computed))


# Depth of powers ----------------------------------------------------------------

def power_depth(
    I: MonomialIdeal,
    t: int,
    field: FieldSpec = GF2,
    *,
    max_products: int = DEFAULT_MAX_PRODUCTS,
    max_polarized_vars: int = DEFAULT_MAX_POLARIZED_VARS,
    max_subsets: int | None = None,
) -> tuple[int, str]:
    """depth S/I^t and the route used: ``"polarization"`` or ``"socle"``.

    Falls back to the socle test when the polarized ring is over the cap; that
    route can only certify depth 0.
    """
    P = ideal_power(I, t, max_products)
    try:
        pol = polarize(P, max_vars=max_polarized_vars)
    except CapExceededError:
        if max_ideal_is_associated(P).associated:
            return 0, "socle"
        raise CapExceededError(
            f"depth of I^{t} is positive and the polarized ring exceeds {max_polarized_vars} variables"
        ) from None
    pd = projective_dimension(pol.ideal, field, max_subsets=max_subsets)
    return P.num_vars - pd, "polarization"


# Random trials --------------------------------------------------------------------

def random_squarefree_ideal(rng: random.Random, ring: RingContext, prob: float = 0.3) -> MonomialIdeal:
    """Each squarefree monomial of degree 2 or 3 kept with probability ``prob``."""
    n = ring.num_vars
    supports = [s for d in (2, 3) for s in combinations(range(1, n + 1), d) if rng.random() < prob]
    return MonomialIdeal.from_supports(ring, supports)


def random_squarefree_monomial(rng: random.Random, ring: RingContext) -> Monomial:
    d = rng.choice((1, 2)) if ring.num_vars >= 2 else 1
    return ring.monomial(rng.sample(range(1, ring.num_vars + 1), d))


@dataclass
class ColonTrial:
    ideal: MonomialIdeal
    f: Monomial
    colon: MonomialIdeal
    plus: MonomialIdeal


def colon_trials(seed: int, count: int, max_vars: int = 8) -> list[ColonTrial]:
    """Random (I, f) pairs with f outside I, so I : f stays proper."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ring = RingContext(rng.randint(3, max_vars))
        I = random_squarefree_ideal(rng, ring)
        for _ in range(20):
            f = random_squarefree_monomial(rng, ring)
            if not contains(I, f):
                break
        else:
            continue
        out.append(ColonTrial(I, f, colon_by_monomial(I, f), add_monomial(I, f)))
    return out


@dataclass
class DisjointTrial:
    left: MonomialIdeal
    right: MonomialIdeal
    joint: MonomialIdeal


def disjoint_trials(seed: int, count: int, max_vars: int = 8) -> list[DisjointTrial]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        s = rng.randint(1, max_vars - 1)
        t = rng.randint(1, max_vars - s)
        left = random_squarefree_ideal(rng, RingContext(s))
        right = random_squarefree_ideal(rng, RingContext(t))
        ring = RingContext(s + t)
        joint = ideal_sum(embed(left, ring, 0), embed(right, ring, s))
        out.append(DisjointTrial(left, right, joint))
    return out


def colon_trial_outcome(trial: ColonTrial, field: FieldSpec = GF2) -> tuple[bool, bool | None]:
    """(membership part holds, conditional part holds or None if not applicable)."""
    d = depth_squarefree(trial.ideal, field)
    dc = depth_squarefree(trial.colon, field)
    dp = depth_squarefree(trial.plus, field)
    member = d in (dc, dp)
    conditional = (d == dc) if dp >= dc else None
    return member, conditional


def disjoint_trial_outcome(trial: DisjointTrial, field: FieldSpec = GF2) -> bool:
    return depth_squarefree(trial.joint, field) == (
        depth_squarefree(trial.left, field) + depth_squarefree(trial.right, field)
    )


def suite_small_ideals(seed: int, colon_count: int = 200, disjoint_count: int = 100,
                       max_vars: int = 5) -> list[MonomialIdeal]:
    """Every squarefree ideal on at most ``max_vars`` variables the suites touch."""
    seen: dict[MonomialIdeal, None] = {}
    for n in range(3, max_vars + 1):
        seen[path_power_ideal(n)] = None
    for tr in colon_trials(seed, colon_count):
        for J in (tr.ideal, tr.colon, tr.plus):
            if J.num_vars <= max_vars:
                seen[J] = None
    for tr in disjoint_trials(seed, disjoint_count):
        for J in (tr.left, tr.right, tr.joint):
            if J.num_vars <= max_vars:
                seen[J] = None
    return list(seen)


def hochster_matches_oracle(I: MonomialIdeal) -> bool:
    table = hochster_betti(I, GF2)
    fast = {(i, w): b for i, w, b in table.sorted_entries()}
    return fast == naive_betti(I, 2)


# Campaign -------------------------------------------------------------------------

@dataclass
class CampaignConfig:
    n_min: int = 3
    n_max: int = 10
    t_max: int = 3
    field: FieldSpec = GF2
    seed: int = 0
    claims: tuple[str, ...] = CLAIMS
    colon_trials: int = 200
    disjoint_trials: int = 100
    lemma23_limit: int = 100_000
    socle_n_max: int = 11
    facet_n_max: int = 13
    chars_n_max: int = 10
    max_products: int = DEFAULT_MAX_PRODUCTS
    max_polarized_vars: int = DEFAULT_MAX_POLARIZED_VARS
    max_subsets: int | None = None

    def to_json(self) -> dict:
        return {
            "n_range": [self.n_min, self.n_max],
            "t_max": self.t_max,
            "field": str(self.field),
            "seed": self.seed,
            "claims": list(self.claims),
            "colon_trials": self.colon_trials,
            "disjoint_trials": self.disjoint_trials,
            "lemma23_limit": self.lemma23_limit,
            "socle_n_max": self.socle_n_max,
            "max_products": self.max_products,
            "max_polarized_vars": self.max_polarized_vars,
            "max_subsets": self.max_subsets,
        }


def run_campaign(
    n_range: Iterable[int] = range(3, 11),
    t_max: int = 3,
    field: FieldSpec = GF2,
    seed: int = 0,
    **options,
) -> VerificationReport:
    ns = list(n_range)
    cfg = CampaignConfig(n_min=min(ns), n_max=max(ns), t_max=t_max, field=field, seed=seed, **options)
    return run_config(cfg, ns)


def run_config(cfg: CampaignConfig, ns: list[int] | None = None,
               progress: Callable[[str], None] | None = None) -> VerificationReport:
    if ns is None:
        ns = list(range(cfg.n_min, cfg.n_max + 1))
    report = VerificationReport(cfg.to_json())
    field = cfg.field
    fname = str(field)
    claims = set(cfg.claims)
    unknown = claims - set(CLAIMS)
    if unknown:
        raise ValueError(f"unknown claims {sorted(unknown)}; choose from {', '.join(CLAIMS)}")
    caps = dict(max_products=cfg.max_products, max_polarized_vars=cfg.max_polarized_vars,
                max_subsets=cfg.max_subsets)

    def note(msg: str) -> None:
        if progress is not None:
            progress(msg)

    squarefree_ns = [n for n in ns if n >= 3]
    ideals = {n: path_power_ideal(n) for n in squarefree_ns}
    depth_cache: dict[int, int] = {}

    def depth_of(n: int) -> int:
        if n not in depth_cache:
            depth_cache[n] = depth_squarefree(ideals[n], field, max_subsets=cfg.max_subsets)
        return depth_cache[n]

    if "thm2.4" in claims:
        for n in squarefree_ns:
            note(f"depth n={n}")
            _record(report, "thm2.4", {"n": n, "field": fname}, depth_formula(n), lambda n=n: depth_of(n))
    if "cor2.5" in claims:
        for n in squarefree_ns:
            _record(report, "cor2.5", {"n": n, "field": fname}, pd_formula(n),
                    lambda n=n: projective_dimension(ideals[n], field, max_subsets=cfg.max_subsets))
    if "prop2.6" in claims:
        for n in squarefree_ns:
            _record(report, "prop2.6", {"n": n}, dim_formula(n), lambda n=n: height_and_dim(ideals[n])[1])
            if n <= cfg.facet_n_max:
                _record(report, "prop2.6:facets", {"n": n}, dim_formula(n),
                        lambda n=n: stanley_reisner(ideals[n]).dimension + 1)
    if "thm2.7" in claims:
        for n in squarefree_ns:
            _record(report, "thm2.7", {"n": n, "field": fname}, n in (3, 4),
                    lambda n=n: is_cohen_macaulay(ideals[n], field, max_subsets=cfg.max_subsets))
    if "prop2.8" in claims:
        _prop28(report, cfg, ns, field, caps, note)
    if "lemma2.3" in claims:
        _record(report, "lemma2.3", {"n_max": cfg.lemma23_limit}, None,
                lambda: lemma23_exhaustive(cfg.lemma23_limit))
    if "identities" in claims:
        for n in ns:
            if n < 8:
                continue
            note(f"colon identities n={n}")
            try:
                sides = colon_identity_sides(n)
            except Exception as exc:
                report.checks.append(ClaimCheck("identity:colon", {"n": n}, True, f"error: {exc}"))
                continue
            for cid, lhs, rhs in sides:
                report.checks.append(ClaimCheck(cid, {"n": n}, str(rhs), str(lhs)))
    if "lemma2.1" in claims:
        note("colon branching trials")
        trials = colon_trials(cfg.seed, cfg.colon_trials)
        outcomes = [colon_trial_outcome(tr, field) for tr in trials]
        applicable = [c for _, c in outcomes if c is not None]
        params = {"trials": cfg.colon_trials, "seed": cfg.seed, "field": fname}
        report.checks.append(ClaimCheck("lemma2.1.i", params, len(outcomes), sum(m for m, _ in outcomes)))
        report.checks.append(ClaimCheck("lemma2.1.ii", params, len(applicable), sum(applicable)))
    if "lemma2.2" in claims:
        note("disjoint additivity trials")
        trials = disjoint_trials(cfg.seed, cfg.disjoint_trials)
        good = sum(disjoint_trial_outcome(tr, field) for tr in trials)
        report.checks.append(ClaimCheck("lemma2.2", {"trials": cfg.disjoint_trials, "seed": cfg.seed,
                                                     "field": fname}, len(trials), good))
    if "chars" in claims:
        fields = (FieldSpec(2), FieldSpec(3), FieldSpec(5), QQ)
        for n in squarefree_ns:
            if n > cfg.chars_n_max:
                continue
            note(f"characteristic sweep n={n}")
            _record(report, "chars", {"n": n}, [depth_formula(n)] * len(fields),
                    lambda n=n: [depth_squarefree(ideals[n], f, max_subsets=cfg.max_subsets) for f in fields])
    if "oracle" in claims:
        note("oracle equivalence")
        small = suite_small_ideals(cfg.seed, cfg.colon_trials, cfg.disjoint_trials)
        _record(report, "oracle", {"ideals": len(small), "max_vars": 5}, len(small),
                lambda: sum(hochster_matches_oracle(I) for I in small))
    report.sort()
    return report


def _prop28(report, cfg: CampaignConfig, ns, field, caps, note) -> None:
    fname = str(field)
    if 3 in ns:
        I = path_power_ideal(3)
        for t in range(1, cfg.t_max + 1):
            note(f"power depth n=3 t={t}")
            _record(report, "prop2.8.1", {"n": 3, "t": t, "field": fname}, 2,
                    lambda t=t: power_depth(I, t, field, **caps)[0])
    if 4 in ns:
        I = path_power_ideal(4)
        for t in range(1, cfg.t_max + 1):
            note(f"power depth n=4 t={t}")
            expected = {1: 2, 2: 1}.get(t, 0)
            _record(report, "prop2.8.2", {"n": 4, "t": t, "field": fname}, expected,
                    lambda t=t: power_depth(I, t, field, **caps)[0])
        u = Monomial((2, 1, 1, 1))
        _record(report, "prop2.8.2:symbolic", {"n": 4, "t": 2}, [True, False],
                lambda: [contains(symbolic_power(I, 2), u), contains(ideal_power(I, 2), u)])
    for n in ns:
        if n < 5 or n > cfg.socle_n_max:
            continue
        t0 = power_zero_threshold(n)
        note(f"socle test n={n} t={t0}")
        P = ideal_power(path_power_ideal(n), t0, cfg.max_products)
        _record(report, "prop2.8.3", {"n": n, "t": t0}, True, lambda P=P: max_ideal_is_associated(P).associated)
        _record(report, "prop2.8.3:witness", {"n": n, "t": t0}, True,
                lambda P=P, n=n: is_socle_witness(P, witness_monomial(n)))
