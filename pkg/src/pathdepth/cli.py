"""Command line front end: ``pathdepth <command> [options]``.

Exit codes: 0 success, 1 usage or engine error, 2 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import campaign
from .decomposition import decompose, is_cohen_macaulay, max_ideal_is_associated, symbolic_power
from .graphs import path_power_ideal
from .homology import depth_squarefree, hochster_betti, projective_dimension
from .linalg import FieldSpec
from .ring import (
    DEFAULT_MAX_POLARIZED_VARS,
    DEFAULT_MAX_PRODUCTS,
    MonomialIdeal,
    format_ideal,
    ideal_power,
    parse_ideal,
)

log = logging.getLogger("pathdepth")

COMMANDS = ("ideal", "depth", "pd", "dim", "betti", "cm", "decompose", "ass-max",
            "power", "symbolic-power", "verify")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class CliConfig:
    command: str
    n: int | None
    k: int
    t: int
    power: int
    field: FieldSpec
    max_subsets: int | None
    max_products: int
    max_polarized_vars: int
    json_path: Path | None
    seed: int
    threads: int


def _common(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("ideal selection")
    g.add_argument("--n", type=int, help="number of path vertices; selects I_t(P_n^k)")
    g.add_argument("--k", type=int, default=2, help="graph power (default 2)")
    g.add_argument("--t", type=int, default=3, help="path length (default 3)")
    g.add_argument("--ideal", help='generators such as "x1*x2*x3, x2^2*x4"')
    g.add_argument("--ideal-json", type=Path, help='file with {"num_vars": n, "generators": [...]}')
    g.add_argument("--vars", type=int, help="number of variables (overrides inference)")
    g.add_argument("--power", type=int, default=1, help="work with the ideal raised to this power")
    o = p.add_argument_group("engine")
    o.add_argument("--field", default="2", help='prime such as 2, 3, 5, or "Q" (default 2)')
    o.add_argument("--max-subsets", type=int, default=None,
                   help="cap on Hochster subsets (default 2^24, env PATHDEPTH_MAX_SUBSETS)")
    o.add_argument("--max-products", type=int, default=DEFAULT_MAX_PRODUCTS)
    o.add_argument("--max-polarized-vars", type=int, default=DEFAULT_MAX_POLARIZED_VARS)
    o.add_argument("--threads", type=int, default=1, help="worker processes (0 = auto)")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--json", dest="json_path", type=Path, help="also write JSON output here")
    o.add_argument("--progress", action="store_true", help="report progress on standard error")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pathdepth", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "ideal": "print the canonical generators",
        "depth": "depth of S/I",
        "pd": "projective dimension of S/I",
        "dim": "Krull dimension of S/I",
        "betti": "multigraded Betti numbers via Hochster's formula",
        "cm": "Cohen-Macaulay test",
        "decompose": "minimal primes, height and dimension",
        "ass-max": "is the maximal ideal associated (socle test)?",
        "power": "minimal generators of I^power",
        "symbolic-power": "generators of the symbolic power I^(power)",
        "verify": "run the verification campaign",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        _common(p)
        if name == "verify":
            p.add_argument("claims", nargs="*", default=[],
                           help=f"claims to check (default all): {', '.join(campaign.CLAIMS)}")
            p.add_argument("--n-min", type=int)
            p.add_argument("--n-max", type=int)
            p.add_argument("--t-max", type=int, default=3)
            p.add_argument("--trials", type=int, default=None, help="override the random trial counts")
            p.add_argument("--lemma23-limit", type=int, default=100_000)
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    try:
        field = FieldSpec.parse(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for flag in ("k", "t", "power"):
        if getattr(args, flag) < 1:
            raise UsageError(f"--{flag} must be >= 1")
    return CliConfig(args.command, args.n, args.k, args.t, args.power, field, args.max_subsets,
                     args.max_products, args.max_polarized_vars, args.json_path, args.seed, args.threads)


def _base_ideal(args: argparse.Namespace) -> MonomialIdeal:
    given = [x for x in (args.n is not None, args.ideal is not None, args.ideal_json is not None) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --n, --ideal, --ideal-json")
    if args.ideal is not None:
        return parse_ideal(args.ideal, args.vars)
    if args.ideal_json is not None:
        data = json.loads(args.ideal_json.read_text())
        if args.vars is not None:
            data["num_vars"] = args.vars
        return MonomialIdeal.from_json(data)
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    if args.t < 2:
        raise UsageError("--t must be >= 2")
    return path_power_ideal(args.n, args.k, args.t, num_vars=args.vars)


def _label(args: argparse.Namespace) -> str:
    base = f"I_{args.t}(P_{args.n}^{args.k})" if args.n is not None else "I"
    return base if args.power == 1 else f"{base}^{args.power}"


def _emit(cfg: CliConfig, text: str, payload: dict) -> None:
    print(text)
    if cfg.json_path is not None:
        cfg.json_path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _engine_kwargs(cfg: CliConfig, args) -> dict:
    return {"max_subsets": cfg.max_subsets, "threads": cfg.threads, "progress": args.progress}


def _run(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if cfg.command == "verify":
        return _verify(cfg, args)

    base = _base_ideal(args)
    I = ideal_power(base, cfg.power, cfg.max_products) if cfg.power > 1 else base
    field = cfg.field
    eng = _engine_kwargs(cfg, args)
    meta = {"ideal": I.to_json(), "field": str(field)}

    if cfg.command == "ideal" or cfg.command == "power":
        text = f"{_label(args)} = ({format_ideal(I)})\n{len(I)} minimal generators in {I.num_vars} variables"
        _emit(cfg, text, I.to_json())
    elif cfg.command == "symbolic-power":
        J = symbolic_power(base, cfg.power, cfg.max_products)
        text = f"symbolic power {cfg.power} = ({format_ideal(J)})\n{len(J)} minimal generators"
        _emit(cfg, text, J.to_json())
    elif cfg.command == "depth":
        if I.is_squarefree():
            d, route = depth_squarefree(I, field, **eng), "hochster"
        else:
            d, route = campaign.power_depth(base, cfg.power, field, max_products=cfg.max_products,
                                            max_polarized_vars=cfg.max_polarized_vars,
                                            max_subsets=cfg.max_subsets)
        _emit(cfg, f"depth = {d}", {**meta, "depth": d, "route": route})
    elif cfg.command == "pd":
        if not I.is_squarefree():
            from .ring import polarize
            pd = projective_dimension(polarize(I, cfg.max_polarized_vars).ideal, field, **eng)
        else:
            pd = projective_dimension(I, field, **eng)
        _emit(cfg, f"pd = {pd}", {**meta, "pd": pd})
    elif cfg.command == "dim":
        dec = decompose(I)
        _emit(cfg, f"dim = {dec.dim} (height {dec.height})", {**meta, "dim": dec.dim, "height": dec.height})
    elif cfg.command == "decompose":
        dec = decompose(I)
        lines = [str(p) for p in dec.primes]
        lines.append(f"{len(dec.primes)} minimal primes; height {dec.height}, dim {dec.dim}")
        _emit(cfg, "\n".join(lines), dec.to_json())
    elif cfg.command == "betti":
        table = hochster_betti(I, field, **eng)
        totals = table.total()
        lines = [f"beta_{i} = {b}" for i, b in totals.items()]
        lines.append(f"pd = {table.projective_dimension()}")
        _emit(cfg, "\n".join(lines), table.to_json())
    elif cfg.command == "cm":
        dec = decompose(I)
        d = depth_squarefree(I, field, **eng)
        cm = is_cohen_macaulay(I, field, **eng)
        _emit(cfg, f"Cohen-Macaulay: {str(cm).lower()} (depth {d}, dim {dec.dim})",
              {**meta, "cohen_macaulay": cm, "depth": d, "dim": dec.dim})
    elif cfg.command == "ass-max":
        res = max_ideal_is_associated(I)
        text = f"maximal ideal associated: {str(res.associated).lower()}"
        if res.witness is not None:
            text += f" (witness {res.witness})"
        _emit(cfg, text, {**meta, "associated": res.associated,
                          "witness": list(res.witness.exponents) if res.witness else None})
    return 0


def _verify(cfg: CliConfig, args: argparse.Namespace) -> int:
    claims = tuple(args.claims) or campaign.CLAIMS
    bad = [c for c in claims if c not in campaign.CLAIMS]
    if bad:
        raise UsageError(f"unknown claim {bad[0]!r}; choose from {', '.join(campaign.CLAIMS)}")
    if cfg.n is not None:
        n_min = n_max = cfg.n
    else:
        n_min = args.n_min if args.n_min is not None else 3
        n_max = args.n_max if args.n_max is not None else 10
    if n_min < 3 or n_max < n_min:
        raise UsageError(f"need 3 <= n-min <= n-max, got {n_min}..{n_max}")
    options = {}
    if args.trials is not None:
        options = {"colon_trials": args.trials, "disjoint_trials": args.trials}
    conf = campaign.CampaignConfig(
        n_min=n_min, n_max=n_max, t_max=args.t_max, field=cfg.field, seed=cfg.seed, claims=claims,
        lemma23_limit=args.lemma23_limit, max_products=cfg.max_products,
        max_polarized_vars=cfg.max_polarized_vars, max_subsets=cfg.max_subsets, **options,
    )
    progress = (lambda msg: print(msg, file=sys.stderr)) if args.progress else None
    report = campaign.run_config(conf, progress=progress)
    _emit(cfg, report.format_table(), report.to_json())
    return 0 if report.ok() else 2


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
