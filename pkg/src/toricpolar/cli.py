"""Command-line interface.

Subcommands:
  multidegrees  d_0..d_n of the toric polar map (or gradient map) of f
  csm           CSM class of the standard complement and Euler numbers
  curve-report  plane-curve invariants and the local degree formula
  verify        run the proposition harness over the corpus

Exit codes: 0 success, 1 failed verification, 2 parse error,
3 precondition violation, 4 unlucky randomized specialization
(trial disagreement); rerun those with a fresh --seed or --prime.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import classes, curves
from .constructions import parse_corpus, verify_propositions
from .errors import ParseError, PreconditionError, SpecializationError
from .field import DEFAULT_PRIME, PrimeField
from .maps import (RandomizationConfig, gradient_map, multidegrees,
                   toric_polar_map)
from .parse import parse_polynomial

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_SPECIALIZATION = 4


@dataclass(frozen=True)
class RunConfig:
    prime: int
    seed: int
    trials: int
    as_json: bool

    def randomization(self) -> RandomizationConfig:
        return RandomizationConfig(prime=self.prime, seed=self.seed,
                                   trials=self.trials)


def _add_common(sub: argparse.ArgumentParser, needs_poly=True):
    if needs_poly:
        src = sub.add_mutually_exclusive_group(required=True)
        src.add_argument("--poly", help="polynomial text")
        src.add_argument("--file", help="file containing the polynomial text")
        sub.add_argument("--vars", required=True,
                         help="comma-separated variable names, e.g. x0,x1,x2")
    sub.add_argument("--prime", type=int, default=DEFAULT_PRIME,
                     help="prime modulus (default %(default)s)")
    sub.add_argument("--seed", type=int, default=0,
                     help="master seed for all randomized choices")
    sub.add_argument("--trials", type=int, default=2,
                     help="independent agreement trials (default %(default)s)")
    sub.add_argument("--json", action="store_true", dest="as_json",
                     help="machine-readable JSON output")


def _read_polynomial(args, run: RunConfig):
    text = args.poly
    if text is None:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read().strip()
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    if not names:
        raise ParseError("empty variable list", 0)
    field = PrimeField(run.prime)
    return parse_polynomial(text, names, field), names


def _emit(report: dict, lines, run: RunConfig):
    if run.as_json:
        print(json.dumps(report, separators=(", ", ": ")))
    else:
        for line in lines:
            print(line)


def cmd_multidegrees(args, run: RunConfig) -> int:
    f, _ = _read_polynomial(args, run)
    cfg = run.randomization()
    build = gradient_map if args.gradient else toric_polar_map
    md = multidegrees(build(f, seed=run.seed), cfg)
    report = {
        "map": "gradient" if args.gradient else "toric",
        "n": md.n,
        "degree": md.topological_degree,
        "multidegrees": list(md.values),
        "prime": run.prime,
        "seed": run.seed,
        "trials": run.trials,
    }
    lines = [
        f"{report['map']} map on P^{md.n}",
        f"multidegrees: {' '.join(map(str, md.values))}",
        f"topological degree: {md.topological_degree}"
        + ("" if md.is_dominant() else " (not dominant)"),
    ]
    _emit(report, lines, run)
    return EXIT_OK


def cmd_csm(args, run: RunConfig) -> int:
    f, _ = _read_polynomial(args, run)
    cfg = run.randomization()
    md = multidegrees(toric_polar_map(f, seed=run.seed), cfg)
    csm = classes.csm_standard_complement(md)
    chi_u = classes.euler_standard_complement(md)
    chi_d = classes.euler_divisor_complement(md)
    report = {
        "n": md.n,
        "multidegrees": list(md.values),
        "csm": list(csm.coefficients),
        "euler_complement": chi_u,
        "euler_divisor_complement": chi_d,
        "prime": run.prime,
        "seed": run.seed,
        "trials": run.trials,
    }
    lines = [
        f"CSM class of the standard complement in P^{md.n}: "
        + " ".join(map(str, csm.coefficients)),
        f"chi(P^n minus hypersurface and coordinate hyperplanes) = {chi_u}",
        f"chi(hypersurface minus coordinate hyperplanes) = {chi_d}",
    ]
    _emit(report, lines, run)
    return EXIT_OK


def cmd_curve_report(args, run: RunConfig) -> int:
    f, _ = _read_polynomial(args, run)
    cfg = run.randomization()
    rep = curves.plane_degree_formula(f)
    engine = multidegrees(toric_polar_map(f, seed=run.seed), cfg).topological_degree
    report = {
        "k": rep.k,
        "milnor_sum": rep.milnor_sum,
        "incidence": rep.incidence,
        "tangency": rep.tangency,
        "degree": rep.degree_formula,
        "engine_degree": engine,
    }
    lines = [
        f"degree k = {rep.k}",
        f"milnor sum = {rep.milnor_sum} (weighted-homogeneous singularities assumed)",
        f"fundamental-point incidence = {rep.incidence}",
        f"coordinate-line tangency = {rep.tangency}",
        f"degree formula k^2 - milnor - incidence - tangency = {rep.degree_formula}",
        f"multidegree engine degree = {engine}",
    ]
    _emit(report, lines, run)
    return EXIT_OK if rep.degree_formula == engine else EXIT_CHECK_FAILED


def cmd_verify(args, run: RunConfig) -> int:
    corpus = None
    if args.corpus:
        with open(args.corpus, "r", encoding="utf-8") as fh:
            corpus = parse_corpus(fh.read())
    results = verify_propositions(seed=run.seed, cfg=run.randomization(),
                                  corpus=corpus)
    ok = all(r.passed for r in results)
    report = {
        "seed": run.seed,
        "prime": run.prime,
        "trials": run.trials,
        "passed": ok,
        "checks": [
            {"name": r.name, "passed": r.passed, "witness": r.witness}
            for r in results
        ],
    }
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}"
             + (f"\n  {r.witness}" if r.witness else "")
             for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    _emit(report, lines, run)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricpolar",
        description="Exact multidegrees of toric polar and gradient maps, "
                    "CSM classes and Euler characteristics of standard "
                    "complements.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_md = subs.add_parser("multidegrees",
                           help="multidegrees of the toric polar map")
    _add_common(p_md)
    p_md.add_argument("--gradient", action="store_true",
                      help="use the gradient map instead")
    p_md.set_defaults(fn=cmd_multidegrees)

    p_csm = subs.add_parser("csm", help="CSM class of the standard complement")
    _add_common(p_csm)
    p_csm.set_defaults(fn=cmd_csm)

    p_curve = subs.add_parser("curve-report",
                              help="plane-curve invariants and degree formula")
    _add_common(p_curve)
    p_curve.set_defaults(fn=cmd_curve_report)

    p_verify = subs.add_parser("verify", help="run the proposition harness")
    _add_common(p_verify, needs_poly=False)
    p_verify.add_argument("--corpus", help="corpus manifest file "
                          "(name | vars | polynomial | expected)")
    p_verify.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    run = RunConfig(prime=args.prime, seed=args.seed, trials=args.trials,
                    as_json=args.as_json)
    try:
        return args.fn(args, run)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SpecializationError as exc:
        print(f"unlucky specialization: {exc}", file=sys.stderr)
        return EXIT_SPECIALIZATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
