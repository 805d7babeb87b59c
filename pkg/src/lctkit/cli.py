"""``lct-kit`` command line.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .errors import (
    ConsistencyError,
    EmptyIdeal,
    LctKitError,
    ParseError,
    UnitIdeal,
)
from .harness import SUITES, SuiteConfig, approx_covolume, colength, loj_exponent_bruteforce, run_suite
from .ideal import MonomialIdeal, maximal_ideal, parse_ideal
from .invariants import (
    LCT_CONVENTION,
    chain_report,
    dp_from,
    invariant_report,
    lct,
    li_from,
    loj_exponent,
    loj_sequence,
    projectively_equivalent,
)
from .polyhedron import from_ideal

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def approx(q: Fraction) -> str:
    """Three decimals, truncated like the hand computations they are compared with."""
    scaled = math.floor(q * 1000) if q >= 0 else -math.floor(-q * 1000)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // 1000}.{scaled % 1000:03d}"


def both(q: Fraction) -> str:
    return f"{rational(q)} ≃ {approx(q)}"


def _tuple_text(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _rational_text(values) -> str:
    return "(" + ",".join(str(Fraction(v)) for v in values) + ")"


def _build_parser() -> _Parser:
    parser = _Parser(prog="lct-kit", description="Invariants of monomial ideals.")
    parser.add_argument("--version", action="version", version=f"lct-kit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--dimension", "-n", type=int, default=None,
                       help="ambient dimension (default: highest variable used)")
        return p

    p = add("invariants", "all invariants of one ideal")
    p.add_argument("ideal")
    p.add_argument("--with-maximal", action="store_true",
                   help="also evaluate the chain for m*I")

    p = add("lct", "log canonical threshold (Howald)")
    p.add_argument("ideal")

    p = add("loj", "Łojasiewicz exponents")
    p.add_argument("ideal")
    p.add_argument("--wrt", default=None, help="second ideal J (default: maximal ideal)")

    p = add("chain", "inequality chain for the product I*J")
    p.add_argument("ideal")
    p.add_argument("other")

    p = add("compare", "projective equivalence witness")
    p.add_argument("ideal")
    p.add_argument("other")

    p = add("from-data", "DP and Li from supplied sequences")
    p.add_argument("--e-seq", default=None, help="mixed multiplicities e_1,...,e_n")
    p.add_argument("--l-seq", default=None, help="Łojasiewicz exponents, e.g. 15,15/2,5")

    p = add("verify", "randomized property suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)} or all")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-exponent", type=int, default=9)
    p.add_argument("--max-generators", type=int, default=6)
    p.add_argument("--max-s", type=int, default=12)
    p.add_argument("--workers", type=int, default=1)

    p = add("oracle", "brute-force cross checks for one ideal")
    p.add_argument("ideal")
    p.add_argument("--wrt", default=None)
    p.add_argument("--max-s", type=int, default=12)
    p.add_argument("--resolution", type=int, default=16)
    return parser


def _parse_pair(first: str, second: str | None, dimension: int | None):
    """Parse two ideals into one ambient space; ``second=None`` means the maximal ideal."""
    if dimension is None:
        dimension = parse_ideal(first).dimension
        if second is not None:
            dimension = max(dimension, parse_ideal(second).dimension)
    I = parse_ideal(first, dimension)
    J = parse_ideal(second, dimension) if second is not None else maximal_ideal(dimension)
    return I, J


def _parse_sequence(text: str, what: str) -> list[Fraction]:
    try:
        values = [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse {what} {text!r}") from None
    return values


def _emit(out, args, data: dict, lines: list[str]) -> None:
    if args.format == "json":
        out.write(json.dumps(data, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _ideal_label(I: MonomialIdeal) -> str:
    return f"<{I.to_text()}>  n = {I.dimension}  tuples: {I.to_tuple_text()}"


def _chain_lines(report, label: str) -> list[str]:
    return [
        f"sum 1/(L_i(I)+L_i(J)) = {both(report.left_sum)}",
        f"Li({label}) = {both(report.li_product)}",
        f"DP({label}) = {both(report.dp_product)}",
        f"lct({label}) = {both(report.lct_product)}",
        "equalities = " + ", ".join(str(e).lower() for e in report.equalities),
        f"{label} Hickel = {str(report.ij_is_hickel).lower()}",
    ]


def _cmd_invariants(args, out) -> int:
    I = parse_ideal(args.ideal, args.dimension)
    report = invariant_report(I)
    chain = chain_report(I, maximal_ideal(I.dimension)) if args.with_maximal else None
    data = report.to_dict()
    data["chain"] = chain.to_dict() if chain else None
    data["polyhedron"] = from_ideal(I).to_dict()
    data["notes"] = [LCT_CONVENTION]
    flags = data["flags"]
    lines = [
        f"ideal: {_ideal_label(I)}",
        f"ord = {report.ord}",
        f"L = {_tuple_text(report.l_sequence)} asc; "
        f"{_tuple_text(reversed(report.l_sequence))} desc",
        f"e_i = {_tuple_text(report.e_sequence)}",
        f"e = {report.multiplicity}",
        f"Li = {both(report.li)}",
        f"DP = {both(report.dp)}",
        f"lct = {both(report.lct)}",
        f"hickel = {str(flags['hickel']).lower()}  diagonal = {str(flags['diagonal']).lower()}"
        f"  power_of_maximal = {str(flags['power_of_maximal']).lower()}",
    ]
    if chain:
        lines += ["", "chain with J = m:"] + _chain_lines(chain, "m·I")
    lines += ["", f"note: {LCT_CONVENTION}"]
    _emit(out, args, data, lines)
    return EXIT_OK


def _cmd_lct(args, out, err) -> int:
    I = parse_ideal(args.ideal, args.dimension)
    value = lct(I)
    finite = from_ideal(I).has_finite_colength()
    if not finite:
        err.write("warning: colength: infinite\n")
    data = {"ideal": I.to_tuple_text(), "lct": rational(value), "finite_colength": finite}
    _emit(out, args, data, [f"ideal: {_ideal_label(I)}", f"lct = {both(value)}"])
    return EXIT_OK


def _cmd_loj(args, out) -> int:
    I, J = _parse_pair(args.ideal, args.wrt, args.dimension)
    value = loj_exponent(I, J)
    data = {"ideal": I.to_tuple_text(), "wrt": J.to_tuple_text(), "loj_exponent": rational(value)}
    lines = [f"ideal: {_ideal_label(I)}", f"wrt: <{J.to_text()}>", f"L_J(I) = {both(value)}"]
    if args.wrt is None:
        seq = loj_sequence(I)
        data["l_sequence_asc"] = [rational(Fraction(v)) for v in seq]
        data["l_sequence_desc"] = [rational(Fraction(v)) for v in reversed(seq)]
        lines.append(f"L = {_tuple_text(seq)} asc; {_tuple_text(reversed(seq))} desc")
    _emit(out, args, data, lines)
    return EXIT_OK


def _cmd_chain(args, out) -> int:
    I, J = _parse_pair(args.ideal, args.other, args.dimension)
    report = chain_report(I, J)
    data = {"ideal": I.to_tuple_text(), "other": J.to_tuple_text(), **report.to_dict()}
    witness = report.projectively_equivalent
    lines = [f"I: {_ideal_label(I)}", f"J: {_ideal_label(J)}"] + _chain_lines(report, "IJ")
    lines.append(f"projectively equivalent = {list(witness) if witness else 'no'}")
    _emit(out, args, data, lines)
    return EXIT_OK


def _cmd_compare(args, out) -> int:
    I, J = _parse_pair(args.ideal, args.other, args.dimension)
    witness = projectively_equivalent(I, J)
    data = {
        "ideal": I.to_tuple_text(),
        "other": J.to_tuple_text(),
        "projectively_equivalent": list(witness) if witness else None,
    }
    if witness:
        a, b = witness
        text = f"closure(I^{a}) = closure(J^{b})  (a, b) = ({a}, {b})"
    else:
        text = "not projectively equivalent"
    _emit(out, args, data, [f"I: {_ideal_label(I)}", f"J: {_ideal_label(J)}", text])
    return EXIT_OK


def _cmd_from_data(args, out) -> int:
    if args.e_seq is None and args.l_seq is None:
        raise UsageError("from-data needs --e-seq or --l-seq")
    data, lines = {}, []
    if args.e_seq is not None:
        seq = _parse_sequence(args.e_seq, "e-sequence")
        value = dp_from(seq)
        data.update(e_sequence=[rational(v) for v in seq], dp=rational(value))
        lines.append(f"DP{_rational_text(seq)} = {both(value)}")
    if args.l_seq is not None:
        seq = _parse_sequence(args.l_seq, "L-sequence")
        value = li_from(seq)
        data.update(l_sequence=[rational(v) for v in seq], li=rational(value))
        lines.append(f"Li{_rational_text(seq)} = {both(value)}")
    _emit(out, args, data, lines)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    if args.suite == "all" and args.n != 2:
        # the literal r/s search is only budgeted for the plane
        suites = tuple(s for s in suites if s != "oracle-loj")
    try:
        config = SuiteConfig(
            dimension=args.n,
            trials=args.trials,
            max_exponent=args.max_exponent,
            max_generators=args.max_generators,
            rng_seed=args.seed,
            suites=tuple(suites),
            max_s=args.max_s,
            workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_suite(config)
    lines = [f"n = {args.n}  trials = {args.trials}  seed = {args.seed}"]
    for name, c in report.counts.items():
        lines.append(f"{name:16s} passed {c['passed']:5d}  failed {c['failed']:5d}")
    lines.append(f"violations: {len(report.violations)}")
    for v in report.violations:
        lines.append(f"  [{v['suite']} #{v['trial']}] {v['relation']}: {v['ideals']} {v['values']}")
    lines.append(f"conjecture candidates (DP = lct, not diagonal): {len(report.conjecture_candidates)}")
    for c in report.conjecture_candidates:
        lines.append(f"  {c}")
    _emit(out, args, report.to_dict(), lines)
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    I, J = _parse_pair(args.ideal, args.wrt, args.dimension)
    if args.max_s < 1 or args.resolution < 1:
        raise UsageError("--max-s and --resolution must be positive")
    exact_cov = from_ideal(I).covolume()
    grid_cov = approx_covolume(I, args.resolution)
    exact_loj = loj_exponent(I, J)
    brute_loj = loj_exponent_bruteforce(I, J, args.max_s)
    data = {
        "ideal": I.to_tuple_text(),
        "wrt": J.to_tuple_text(),
        "colength": colength(I),
        "covolume": rational(exact_cov),
        "approx_covolume": rational(grid_cov),
        "resolution": args.resolution,
        "loj_exponent": rational(exact_loj),
        "loj_exponent_bruteforce": rational(brute_loj),
        "max_s": args.max_s,
    }
    lines = [
        f"ideal: {_ideal_label(I)}",
        f"colength = {data['colength']}",
        f"covolume = {both(exact_cov)}",
        f"grid covolume (s = {args.resolution}) = {both(grid_cov)}  gap {both(grid_cov - exact_cov)}",
        f"L_J(I) = {both(exact_loj)}  brute force (s <= {args.max_s}) = {both(brute_loj)}",
    ]
    _emit(out, args, data, lines)
    return EXIT_OK


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(list(argv))
        handlers = {
            "invariants": lambda: _cmd_invariants(args, out),
            "lct": lambda: _cmd_lct(args, out, err),
            "loj": lambda: _cmd_loj(args, out),
            "chain": lambda: _cmd_chain(args, out),
            "compare": lambda: _cmd_compare(args, out),
            "from-data": lambda: _cmd_from_data(args, out),
            "verify": lambda: _cmd_verify(args, out),
            "oracle": lambda: _cmd_oracle(args, out),
        }
        return handlers[args.command]()
    except UsageError as exc:
        err.write(f"error: usage: {exc}\n")
        return EXIT_USAGE
    except (ParseError, UnitIdeal, EmptyIdeal) as exc:
        err.write(f"error: parse: {type(exc).__name__}: {exc}\n")
        return EXIT_PARSE
    except ConsistencyError as exc:
        err.write(f"error: internal consistency: {exc}\n")
        return EXIT_DOMAIN
    except (LctKitError, ValueError) as exc:
        err.write(f"error: domain: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
