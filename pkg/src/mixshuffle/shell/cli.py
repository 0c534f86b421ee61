"""Command-line entry point."""
from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from ..errors import AlgebraError, ConfigError
from ..kernel import load_alphabet, make_alphabet
from .expr import evaluate, format_value, parse_expression
from .verify import RunConfig, run_verification_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def resolve_alphabet(source: str):
    if source == "builtin:stuffle":
        return make_alphabet("stuffle")
    if source == "builtin:zero":
        return make_alphabet("zero")
    if source.startswith("builtin:"):
        raise ConfigError(f"unknown builtin alphabet {source!r}")
    try:
        return load_alphabet(source)
    except OSError as exc:
        raise ConfigError(f"cannot read pairing file {source!r}: {exc.strerror}") from None


_LAMBDA_RE = re.compile(r"\s*-?[0-9]+(?:/[0-9]+)?\s*\Z")


def parse_lambda(text: str) -> Fraction:
    """Integers or ``p/q`` only; decimal notation is refused."""
    if not _LAMBDA_RE.match(text):
        raise ConfigError(f"--lambda must be an exact rational p/q, got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ConfigError(f"--lambda has a zero denominator: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mixshuffle",
        description="Exact shuffle, quasi-shuffle and mixable shuffle algebra computations.")
    p.add_argument("--alphabet", default="builtin:stuffle",
                   help="pairing file path, builtin:stuffle or builtin:zero (default: %(default)s)")
    p.add_argument("--lambda", dest="lam", default="1", help="weight as p/q (default: %(default)s)")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--max-length", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eval", dest="exprs", action="append", default=[], metavar="EXPR",
                   help="evaluate an expression; may be repeated")
    p.add_argument("--verify", action="store_true", help="run the verification suite")
    p.add_argument("--negative-control", action="store_true",
                   help="add control rows that check the weight-0 operator at --lambda")
    p.add_argument("--format", dest="output", choices=("canonical", "tabular", "quiet"), default="canonical")
    return p


def _glue_values(argv: list[str]) -> list[str]:
    # argparse takes values like "-5/3" or "-[z1]" for options; glue them to their flag
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("--lambda", "--eval") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
            continue
        out.append(argv[i])
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_values(argv))
    if not args.exprs and not args.verify:
        parser.print_usage(sys.stderr)
        print("mixshuffle: error: nothing to do; pass --eval or --verify", file=sys.stderr)
        return EXIT_USAGE
    try:
        config = RunConfig(
            alphabet=resolve_alphabet(args.alphabet), alphabet_source=args.alphabet,
            lam=parse_lambda(args.lam), max_degree=args.max_degree, max_length=args.max_length,
            seed=args.seed, output=args.output, negative_control=args.negative_control)
    except AlgebraError as exc:
        print(f"mixshuffle: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    for text in args.exprs:
        try:
            value = evaluate(parse_expression(text), config.alphabet, config.lam)
        except AlgebraError as exc:
            print(f"mixshuffle: {exc.code}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if config.output != "quiet":
            print(format_value(value, config.output))

    if args.verify:
        status, report = run_verification_suite(config)
        if config.output != "quiet":
            sys.stdout.write(report)
        return status
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
