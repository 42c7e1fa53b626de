"""Command-line front end.

Exit codes: 0 success, 1 verification or search failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import dimension as dim
from .draisma import (
    SCHEMA_VERSION, LiftError, WitnessCertificate, certificate_mismatches, lift_chain, search_witness,
)
from .linalg import DEFAULT_PRIME
from .pfaffian import initial_pfaffian_generators, jt_generators
from .tree import NewickError, TreeError, circular_embed, enumerate_shapes, k_clusters, parse_newick

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    seed: int = 0
    prime: int = DEFAULT_PRIME
    fmt: str = "json"
    out: str | None = None
    options: dict = field(default_factory=dict)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        common = {"command", "inputs", "seed", "prime", "format", "out", "verbose", "func"}
        opts = {k: v for k, v in vars(args).items() if k not in common}
        return cls(args.command, list(getattr(args, "inputs", []) or []), args.seed, args.prime,
                   args.format, args.out, opts)


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    p = Path(source)
    if p.is_file():
        return p.read_text()
    if source.strip().endswith(";"):
        return source
    raise InputError(f"no such file: {source}")


def _load_trees(source: str) -> list:
    lines = [ln.strip() for ln in _read_text(source).splitlines() if ln.strip() and not ln.startswith("#")]
    try:
        return [parse_newick(ln) for ln in lines]
    except (NewickError, TreeError) as exc:
        raise InputError(str(exc)) from exc


def _load_tree(source: str):
    trees = _load_trees(source)
    if len(trees) != 1:
        raise InputError(f"expected one tree, found {len(trees)}")
    return trees[0]


def _emit(cfg: RunConfig, payload: dict, text: str | None = None):
    payload = {"schemaVersion": SCHEMA_VERSION, "seed": cfg.seed, **payload}
    if cfg.fmt == "json" or text is None:
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        body = text if text.endswith("\n") else text + "\n"
    if cfg.out:
        Path(cfg.out).write_text(body)
    else:
        sys.stdout.write(body)


def cmd_tree_info(cfg: RunConfig) -> int:
    tree = _load_tree(cfg.inputs[0])
    emb = circular_embed(tree)
    t = emb.tree
    ck = {k: len(k_clusters(t, k)) for k in range(2, t.n)}
    ck = {k: c for k, c in ck.items() if c}
    payload = {
        "n": t.n,
        "newick": t.to_newick(),
        "relabel": {str(a): b for a, b in sorted(emb.relabel.items())},
        "splits": sorted(str(s) for s in t.nontrivial_splits()),
        "cherries": [list(c) for c in t.cherries()],
        "clusterCounts": {str(k): c for k, c in ck.items()},
        "tree": t.to_json(),
    }
    lines = [f"n = {t.n}", f"circular order: {t.to_newick()}",
             "splits: " + " ".join(payload["splits"]),
             "cherries: " + " ".join(f"{a},{b}" for a, b in t.cherries())]
    lines += [f"c_{k} = {c}" for k, c in ck.items()]
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def cmd_generators(cfg: RunConfig) -> int:
    tree = circular_embed(_load_tree(cfg.inputs[0])).tree
    s = cfg.options["secant"]
    if s < 1:
        raise InputError("--secant must be at least 1")
    gens = jt_generators(tree) if s == 1 else initial_pfaffian_generators(tree, s)
    _emit(cfg, {"newick": tree.to_newick(), "secant": s, "count": len(gens),
                "generators": [g.to_json() for g in gens]},
          "\n".join(str(g) for g in gens) or "0")
    return EXIT_OK


def cmd_draisma_search(cfg: RunConfig) -> int:
    tree = circular_embed(_load_tree(cfg.inputs[0])).tree
    if cfg.options.get("lift_chain"):
        return _lift(cfg, tree)
    target = cfg.options.get("target")
    ranks = cfg.options.get("ranks")
    if target is None:
        target = 4 * tree.n - 10
        ranks = ranks or (2 * tree.n - 5, 2 * tree.n - 5)
    cert = search_witness(tree, target, seed=cfg.seed, max_iters=cfg.options["max_iters"],
                          ranks=tuple(ranks) if ranks else None)
    if cert is None:
        sys.stderr.write(f"no witness with bound >= {target} in {cfg.options['max_iters']} draws\n")
        return EXIT_FAIL
    _emit(cfg, cert.to_json(), f"bound {cert.bound} = {cert.rank1} + {cert.rank2}")
    return EXIT_OK


def _lift(cfg: RunConfig, tree) -> int:
    try:
        cert = lift_chain(tree, seed=cfg.seed, max_iters=cfg.options["max_iters"])
    except LiftError as exc:
        raise InputError(str(exc)) from exc
    _emit(cfg, cert.to_json(), f"bound {cert.bound} = {cert.rank1} + {cert.rank2}")
    return EXIT_OK


def cmd_draisma_lift(cfg: RunConfig) -> int:
    return _lift(cfg, circular_embed(_load_tree(cfg.inputs[0])).tree)


def cmd_draisma_verify(cfg: RunConfig) -> int:
    try:
        data = json.loads(_read_text(cfg.inputs[0]))
        cert = WitnessCertificate.from_json(data)
    except (json.JSONDecodeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    problems = certificate_mismatches(cert)
    _emit(cfg, {"valid": not problems, "problems": problems, "bound": cert.bound},
          "valid" if not problems else "INVALID: " + "; ".join(problems))
    return EXIT_OK if not problems else EXIT_FAIL


def cmd_dimension(cfg: RunConfig) -> int:
    tree = circular_embed(_load_tree(cfg.inputs[0])).tree
    rep = dim.dimension_report(tree, cfg.options["r"], cfg.prime, cfg.seed, cfg.options["trials"])
    text = (f"n={rep.n} r={rep.r} expected={rep.expected_pfaffian_dim} cherry={rep.cherry_bound} "
            f"cluster={rep.cluster_bound} jacobian={rep.jacobian_dim} verdict={rep.verdict}")
    _emit(cfg, rep.to_json(), text)
    return EXIT_OK


def cmd_conjecture_sweep(cfg: RunConfig) -> int:
    trees = []
    for src in cfg.inputs:
        trees += [circular_embed(t).tree for t in _load_trees(src)]
    if cfg.options.get("all_shapes"):
        lo, hi = cfg.options["all_shapes"]
        for n in range(lo, hi + 1):
            trees += enumerate_shapes(n)
    if not trees:
        raise InputError("no trees given")
    rows = []
    for r in cfg.options["r"]:
        if r < 2:
            raise InputError("conjecture sweep needs r >= 2")
        for t in trees:
            rep = dim.dimension_report(t, r, cfg.prime, cfg.seed, cfg.options["trials"])
            jac_equal = rep.jacobian_dim == rep.expected_pfaffian_dim
            rows.append({
                **rep.to_json(),
                "jacobianEqual": jac_equal,
                "agreesNonStrict": jac_equal == rep.conjecture["nonStrict"],
                "agreesStrict": jac_equal == rep.conjecture["strict"],
            })
    header = "r  n  sum thr  expected jacobian verdict           nonstrict agree  tree"
    lines = [header] + [
        f"{x['r']:<2} {x['n']:<2} {x['conjecture']['sum']:>3} {x['conjecture']['threshold']:>3}  "
        f"{x['expectedPfaffianDim']:>8} {x['jacobianDim']:>8} {x['equalityVerdict']:<17} "
        f"{str(x['conjecture']['nonStrict']):<9} {str(x['agreesNonStrict']):<6} {x['tree']}"
        for x in rows
    ]
    _emit(cfg, {"rows": rows, "disagreements": sum(not x["agreesNonStrict"] for x in rows)},
          "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="pluckertree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tree-info", parents=[common])
    p.add_argument("inputs", nargs=1, metavar="NEWICK")
    p.set_defaults(func=cmd_tree_info)

    p = sub.add_parser("generators", parents=[common])
    p.add_argument("inputs", nargs=1, metavar="NEWICK")
    p.add_argument("--secant", type=int, default=1)
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("draisma-search", parents=[common])
    p.add_argument("inputs", nargs=1, metavar="NEWICK")
    p.add_argument("--target", type=int, default=None)
    p.add_argument("--ranks", type=int, nargs=2, metavar=("R1", "R2"),
                   help="require this exact rank pair (default 2n-5, 2n-5 when --target is omitted)")
    p.add_argument("--lift-chain", action="store_true")
    p.add_argument("--max-iters", type=int, default=100_000)
    p.set_defaults(func=cmd_draisma_search)

    p = sub.add_parser("draisma-lift", parents=[common])
    p.add_argument("inputs", nargs=1, metavar="NEWICK")
    p.add_argument("--max-iters", type=int, default=100_000)
    p.set_defaults(func=cmd_draisma_lift)

    p = sub.add_parser("draisma-verify", parents=[common])
    p.add_argument("inputs", nargs=1, metavar="CERT")
    p.set_defaults(func=cmd_draisma_verify)

    p = sub.add_parser("dimension", parents=[common])
    p.add_argument("inputs", nargs=1, metavar="NEWICK")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--trials", type=int, default=3)
    p.set_defaults(func=cmd_dimension)

    p = sub.add_parser("conjecture-sweep", parents=[common])
    p.add_argument("inputs", nargs="*", metavar="NEWICK_FILE")
    p.add_argument("--r", type=int, nargs="+", default=[2])
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--all-shapes", type=int, nargs=2, metavar=("NMIN", "NMAX"))
    p.set_defaults(func=cmd_conjecture_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    cfg = RunConfig.from_args(args)
    try:
        return args.func(cfg)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
