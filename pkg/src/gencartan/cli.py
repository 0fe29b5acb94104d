"""Command-line entry point.

Exit codes: 0 success, 1 validation failure or counterexample, 2 usage
errors (unknown subcommand or flag, unreadable config, malformed element,
suite not applicable to the config).
"""

from __future__ import annotations

import argparse
import itertools
import sys
from typing import Sequence

from gencartan.algebra import AlgebraElement, format_monomial
from gencartan.config import AlgebraConfig
from gencartan.configfile import load_config, parse_window
from gencartan.errors import ConfigError
from gencartan.families import SPECIAL, bracket, family, validate
from gencartan.parse import ElementSyntaxError, parse_element
from gencartan.probe import ideal_closure, window_basis, window_monomials
from gencartan.special import special_generator
from gencartan.suites import SUITES, SuiteNotApplicable, run_suite


class UsageError(Exception):
    pass


def _checked_config(source: str, out) -> AlgebraConfig | None:
    cfg = load_config(source)
    problems = validate(cfg)
    if problems:
        for v in problems:
            print(str(v), file=out)
        return None
    return cfg


def _labelled_basis(cfg: AlgebraConfig, window) -> list[tuple[str, object]]:
    """Window basis with printable labels; for type S a spanning set of generators."""
    if family(cfg) == SPECIAL:
        out = []
        for m in window_monomials(cfg, window):
            for p, q in itertools.combinations(range(cfg.n), 2):
                g = special_generator(p, q, AlgebraElement({m: 1}), cfg)
                if g:
                    out.append((f"D[{p + 1},{q + 1}]({format_monomial(m)})", g))
        return out
    return [(str(b), b) for b in window_basis(cfg, window)]


def cmd_validate(args, out) -> int:
    cfg = load_config(args.config)
    problems = validate(cfg)
    if not problems:
        print("ok", file=out)
        return 0
    for v in problems:
        print(str(v), file=out)
    return 1


def cmd_bracket(args, out) -> int:
    cfg = _checked_config(args.config, out)
    if cfg is None:
        return 1
    a = parse_element(args.a, cfg)
    b = parse_element(args.b, cfg)
    print(str(bracket(a, b, cfg)), file=out)
    return 0


def cmd_structure_constants(args, out) -> int:
    cfg = _checked_config(args.config, out)
    if cfg is None:
        return 1
    window = parse_window(args.window, cfg.k)
    basis = _labelled_basis(cfg, window)
    for (la, a), (lb, b) in itertools.product(basis, repeat=2):
        print(f"{la} | {lb} | {bracket(a, b, cfg)}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    cfg = _checked_config(args.config, out)
    if cfg is None:
        return 1
    result = run_suite(args.suite, cfg, args.samples, args.rng_seed)
    for line in result.lines():
        print(line, file=out)
    return 0 if result.ok else 1


def cmd_probe(args, out) -> int:
    cfg = _checked_config(args.config, out)
    if cfg is None:
        return 1
    window = parse_window(args.window, cfg.k)
    seed = parse_element(args.seed_element, cfg)
    try:
        report = ideal_closure(cfg, seed, window, max_iter=args.max_iter)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for line in report.lines():
        print(line, file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gencartan", description="Generalized Cartan-type Lie algebras over group algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the construction conditions of a config")
    p.add_argument("config", help="JSON config path or preset:NAME[:k=v,...]")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("bracket", help="bracket two elements")
    p.add_argument("config")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(run=cmd_bracket)

    p = sub.add_parser("structure-constants", help="brackets of all ordered window basis pairs")
    p.add_argument("config")
    p.add_argument("--window", required=True, help="lo..hi[,lo..hi...][/max_degree]")
    p.set_defaults(run=cmd_structure_constants)

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("config")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--rng-seed", type=int, default=0)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("probe", help="finite-window ideal closure from a seed")
    p.add_argument("config")
    p.add_argument("--seed-element", required=True)
    p.add_argument("--window", required=True)
    p.add_argument("--max-iter", type=int, default=64)
    p.set_defaults(run=cmd_probe)
    return ap


_VALUE_FLAGS = ("--window", "--seed-element")


def _glue_values(argv: Sequence[str]) -> list[str]:
    """Join ``--window -3..3`` into ``--window=-3..3`` so leading minus signs are not read as flags."""
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    ap = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = ap.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.run(args, out)
    except (ConfigError, ElementSyntaxError, SuiteNotApplicable, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
