"""Command-line interface: ``polylrs {htovr,vrtoh,lp,oracle} FILE``.

Exit codes: 0 success, 1 empty polyhedron, 2 no vertex, 3 not full
dimensional, 4 parse or usage error, 5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass

from . import errors
from .errors import ParseError
from .io import parse_hrep, parse_vrep, serialize_hrep, serialize_vrep
from .lp import MSG_UNBOUNDED, LPStatus, solve_lp
from .model import HRep, VRRep
from .numerics import RATIONAL, Mode, TolerancePolicy, format_scalar, parse_scalar
from .oracle import oracle_facets, oracle_rays, oracle_vertices
from .transforms import h_to_vr, require_vertex, vr_to_h
from .vertex_search import VertexSearchConfig

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_NO_VERTEX = 2
EXIT_NOT_FULL_DIMENSIONAL = 3
EXIT_PARSE = 4
EXIT_INTERNAL = 5

_EXIT_CODES = [
    ((errors.EmptyPolyhedronError, errors.EmptyInputError), EXIT_EMPTY),
    ((errors.NoVertexError,), EXIT_NO_VERTEX),
    ((errors.NotFullDimensionalError,), EXIT_NOT_FULL_DIMENSIONAL),
    ((errors.ParseError, errors.DuplicateVertexError, errors.DuplicateRayError, errors.ZeroRayError), EXIT_PARSE),
    (
        (
            errors.InvariantViolation,
            errors.NonUniqueLexMinError,
            errors.ZeroPivotElementError,
            errors.SingularBlockError,
            FloatingPointError,
        ),
        EXIT_INTERNAL,
    ),
]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    mode: Mode = Mode.RATIONAL
    seed: int = 0
    deterministic: bool = False
    tol_zero: float | None = None
    tol_feas: float | None = None
    with_origins: bool = False
    check: bool = False

    def __post_init__(self) -> None:
        if self.mode is Mode.RATIONAL and (self.tol_zero is not None or self.tol_feas is not None):
            raise ValueError("--tol-zero/--tol-feas are only valid with --mode float")

    @property
    def policy(self) -> TolerancePolicy:
        if self.mode is Mode.RATIONAL:
            return RATIONAL
        return TolerancePolicy.floating(self.tol_zero, self.tol_feas)

    @property
    def search(self) -> VertexSearchConfig:
        return VertexSearchConfig(rng_seed=self.seed, deterministic_only=self.deterministic)


def _tolerance(text: str) -> float:
    try:
        return float(parse_scalar(text, RATIONAL))
    except ValueError:
        try:
            return float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid tolerance {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("file", help="input file, or - for standard input")
    common.add_argument("-o", "--output", help="write the result here instead of standard output")
    common.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.RATIONAL.value)
    common.add_argument("--seed", type=int, default=None, help="vertex-search seed (default: $POLYLRS_SEED or 0)")
    common.add_argument("--deterministic", action="store_true", help="skip the random vertex probes")
    common.add_argument("--tol-zero", type=_tolerance, default=None, help="zero-snap threshold (float mode)")
    common.add_argument("--tol-feas", type=_tolerance, default=None, help="feasibility slack (float mode)")
    common.add_argument("--check", action="store_true", help="verify dictionary invariants after every pivot")
    common.add_argument("-q", "--quiet", action="store_true", help="suppress progress messages")

    parser = _Parser(prog="polylrs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("htovr", parents=[common], help="H-representation to vertices and rays")
    p.add_argument("--with-origins", action="store_true", help="add the origin/ray pairs section")
    sub.add_parser("vrtoh", parents=[common], help="vertices and rays to facet inequalities")
    p = sub.add_parser("lp", parents=[common], help="maximize c.x over an H-representation")
    p.add_argument("--objective", required=True, help='objective coefficients, e.g. "0 0 1"')
    sub.add_parser("oracle", parents=[common], help="brute-force answer (vertices/rays for hrep, facets for vrep)")
    return parser


def _run_config(args) -> RunConfig:
    seed = args.seed
    if seed is None:
        env = os.environ.get("POLYLRS_SEED")
        try:
            seed = int(env) if env else 0
        except ValueError:
            raise _UsageError(f"POLYLRS_SEED must be an integer, got {env!r}") from None
    try:
        return RunConfig(
            mode=Mode(args.mode),
            seed=seed,
            deterministic=args.deterministic,
            tol_zero=args.tol_zero,
            tol_feas=args.tol_feas,
            with_origins=getattr(args, "with_origins", False),
            check=args.check,
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def run_htovr(text: str, cfg: RunConfig) -> str:
    P = parse_hrep(text, cfg.policy)
    out = h_to_vr(P, policy=cfg.policy, cfg=cfg.search, check=cfg.check)
    return serialize_vrep(out.to_vrep(with_origins=cfg.with_origins))


def run_vrtoh(text: str, cfg: RunConfig) -> str:
    R = parse_vrep(text, cfg.policy)
    return serialize_hrep(vr_to_h(R.vertices, R.rays, cfg.policy, cfg=cfg.search, check=cfg.check))


def run_lp(text: str, objective: str, cfg: RunConfig) -> str:
    P = parse_hrep(text, cfg.policy)
    try:
        c = [parse_scalar(tok, cfg.policy) for tok in objective.replace(",", " ").split()]
    except ValueError as exc:
        raise ParseError(f"objective: {exc}") from None
    if len(c) != P.d:
        raise ParseError(f"objective has {len(c)} coefficients, polyhedron dimension is {P.d}")
    v = require_vertex(P, cfg.search, cfg.policy)
    res = solve_lp(c, P, v, cfg.policy, check=cfg.check)
    if res.status is LPStatus.UNBOUNDED:
        logging.getLogger("polylrs").info(MSG_UNBOUNDED)
        return "unbounded\ndirection " + " ".join(map(format_scalar, res.direction)) + "\n"
    return (
        "optimal\n"
        + "point "
        + " ".join(map(format_scalar, res.x_opt))
        + "\nvalue "
        + format_scalar(res.max_value)
        + "\n"
    )


def run_oracle(text: str, cfg: RunConfig) -> str:
    if cfg.mode is not Mode.RATIONAL:
        raise _UsageError("the oracle runs in rational mode only")
    keyword = next((line.split("#", 1)[0].strip() for line in text.splitlines() if line.split("#", 1)[0].strip()), "")
    if keyword == "hrep":
        P = parse_hrep(text)
        vertices = sorted(oracle_vertices(P))
        rays = sorted(oracle_rays(P)) if vertices else []
        return serialize_vrep(VRRep(tuple(vertices), tuple(rays), (), P.d))
    R = parse_vrep(text)
    facets = sorted(oracle_facets(R.vertices, R.rays))
    if not facets:
        raise errors.NotFullDimensionalError("no facets found; input is not full dimensional")
    return serialize_hrep(HRep(tuple(h for h, _ in facets), tuple(b for _, b in facets)))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _run_config(args)
    except _UsageError as exc:
        print(f"polylrs: error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    log = logging.getLogger("polylrs")
    previous_level = log.level
    log.addHandler(handler)
    log.setLevel(logging.WARNING if args.quiet else logging.INFO)
    try:
        text = _read(args.file)
        if args.command == "htovr":
            result = run_htovr(text, cfg)
        elif args.command == "vrtoh":
            result = run_vrtoh(text, cfg)
        elif args.command == "lp":
            result = run_lp(text, args.objective, cfg)
        else:
            result = run_oracle(text, cfg)
    except _UsageError as exc:
        print(f"polylrs: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:
        for types, code in _EXIT_CODES:
            if isinstance(exc, types):
                print(str(exc), file=sys.stderr)
                return code
        raise
    finally:
        log.removeHandler(handler)
        log.setLevel(previous_level)

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(result)
    else:
        sys.stdout.write(result)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
