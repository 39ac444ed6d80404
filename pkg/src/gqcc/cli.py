"""Command-line front end: ``gqcc <subcommand> <codefile> ...``.

Exit status is 0 on success, 1 when a check or decode fails, and 2 for usage
or parse errors.

``simulate`` prints a CSV header and one row (or one JSON object with
``--json``) with the fields noise, trials, frames, clean, failures, detected,
failure_rate, ci_low, ci_high, seed, wall_time.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from .codefile import CodefileError, CodeSpec, load_codefile
from .decoder import (
    PairStatus,
    build_syndrome_table,
    check_correctable_set,
    is_passively_corrected,
    single_qubit_errors,
    syndrome_of,
)
from .pauli import PauliElement
from .simulator import estimate_logical_rate, parse_noise

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _print_code(title: str, code, out) -> None:
    print(f"# {title}", file=out)
    for label, m in (
        ("S", code.stabilizer),
        ("S_E", code.s_e),
        ("S_I", code.s_i),
        ("S_G", code.s_g),
        ("S_C", code.s_c),
    ):
        print(f"{label}:", file=out)
        print(m.format(), file=out)


def cmd_validate(spec: CodeSpec, args, out) -> int:
    ok = True
    for title, code in (("initial", spec.initial_code()), ("encoded", spec.encoded_code())):
        problems = code.structure_problems()
        if problems:
            ok = False
            for p in problems:
                print(f"{title}: {p}", file=out)
        else:
            print(f"{title}: ok", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_encode(spec: CodeSpec, args, out) -> int:
    print(f"code {spec.name} {spec.params}", file=out)
    _print_code("initial", spec.initial_code(), out)
    _print_code("encoded", spec.encoded_code(), out)
    return EXIT_OK


def cmd_syndrome_table(spec: CodeSpec, args, out) -> int:
    code = spec.encoded_code()
    try:
        table = build_syndrome_table(code, single_qubit_errors(spec.params.n))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    out.write(table.to_csv())
    return EXIT_OK


def cmd_check(spec: CodeSpec, args, out) -> int:
    code = spec.encoded_code()
    named = spec.error_set()
    report = check_correctable_set(code, [e for _, e in named])
    print("first,second,status", file=out)
    for p in report.pairs:
        print(f"{named[p.first][0]},{named[p.second][0]},{p.status.value}", file=out)
    counts = report.counts()
    summary = " ".join(f"{s.value}={counts[s]}" for s in PairStatus)
    verdict = "correctable" if report.correctable else "not correctable"
    print(f"# {verdict}: {summary}", file=out)
    return EXIT_OK if report.correctable else EXIT_FAIL


def cmd_passive(spec: CodeSpec, args, out) -> int:
    code = spec.encoded_code()
    try:
        e = PauliElement.parse(args.error, width=spec.params.n)
    except ValueError as exc:
        print(f"error: bad --error operator: {exc}", file=sys.stderr)
        return EXIT_USAGE
    passive = is_passively_corrected(code, e, slack=args.slack)
    syn = syndrome_of(code, e)
    print(f"error: {e.format()}", file=out)
    print(f"syndrome_zero: {str(syn.is_zero()).lower()}", file=out)
    print(f"passive: {str(passive).lower()}", file=out)
    return EXIT_OK if passive else EXIT_FAIL


def cmd_simulate(spec: CodeSpec, args, out) -> int:
    try:
        noise = parse_noise(args.noise, spec.params.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = spec.encoded_code()
    report = estimate_logical_rate(
        code, noise, args.frames, args.trials, args.seed, args.workers, args.stride
    )
    if args.json:
        print(report.to_json(), file=out)
    else:
        print(report.csv_header(), file=out)
        print(report.csv_row(), file=out)
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gqcc", description="Grandfather quantum convolutional code toolkit."
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="codefile")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check commutation structure before and after encoding")
    add("encode", cmd_encode, "print initial and encoded matrices in [Z|X] layout")
    add("syndrome-table", cmd_syndrome_table, "single-qubit syndrome table as CSV")
    add("check", cmd_check, "classify every pair of the declared error set")
    p = add("passive", cmd_passive, "test membership in the passive group")
    p.add_argument("--error", required=True, help='frame strings, e.g. "IZIZI IIZII"')
    p.add_argument("--slack", type=int, default=4, help="initial shift window in frames")
    p = add("simulate", cmd_simulate, "Monte Carlo estimate of the failure rate")
    p.add_argument(
        "--noise",
        default="alternating",
        help="alternating | depolarizing:<p> | custom:<frames>=<p>;...",
    )
    p.add_argument("--frames", type=_positive, default=100)
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--stride", type=_positive, default=2, help="frames between decoded frames")
    p.add_argument("--json", action="store_true", help="emit a JSON object instead of CSV")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        spec = load_codefile(args.file)
    except CodefileError as exc:
        print(f"{args.file}:{exc.line}:{exc.column}: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return args.func(spec, args, out)


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
