# cli.py
"""
Command line for the orbit-space toolkit.

    python cli.py strata --n 5 --summary
    python cli.py homology --space g52 --coeff z
    python cli.py report-all --n 5 --seed 7

JSON on stdout is the contract; --tsv prints the cosmetic table instead.
Exit codes: 0 success, 2 invalid input, 3 internal failure or failed checks.
"""
import argparse
import logging
import re
import sys
from typing import List, Optional

import config
import report
from exceptions import InternalAssertion, ParseError, UsageError, ValidationError
from models import Report
from utils import parse_chart, parse_json, parse_matrix_text, parse_sigma

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    """argparse reports malformed flags as UsageError instead of exiting."""

    def error(self, message):
        raise UsageError(message)


def _add_output(p: argparse.ArgumentParser):
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", dest="output", action="store_const", const="json", default="json")
    group.add_argument("--tsv", dest="output", action="store_const", const="tsv")


def _add_sampling(p: argparse.ArgumentParser):
    p.add_argument("--seed", type=int, default=config.SEED)
    p.add_argument("--samples", type=int, default=config.SAMPLES)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gorbit", description="Torus orbit spaces of G(n,2)")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    p = commands.add_parser("strata", help="enumerate admissible sets")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--summary", action="store_true")
    _add_output(p)

    p = commands.add_parser("polytopes", help="admissible polytopes up to symmetry")
    p.add_argument("--n", type=int, default=5)
    _add_output(p)

    p = commands.add_parser("fundamental", help="fundamental strata")
    p.add_argument("--n", type=int, default=5)
    _add_output(p)

    p = commands.add_parser("moment", help="moment image of a plane")
    p.add_argument("--n", type=int, default=5)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--sigma", help="admissible set, e.g. '[[1,2],[1,3]]'")
    source.add_argument("--matrix", help="JSON list of rows of Gaussian rationals")
    source.add_argument("--plucker", help='JSON Plücker vector {"n": 5, "coords": {"12": "1"}}')
    _add_output(p)

    p = commands.add_parser("params", help="spaces of parameters")
    actions = p.add_subparsers(dest="action", parser_class=_Parser)
    actions.required = True
    q = actions.add_parser("check-transitions")
    _add_sampling(q)
    _add_output(q)
    q = actions.add_parser("virtual")
    q.add_argument("--sigma", required=True)
    q.add_argument("--chart", default="12")
    _add_output(q)
    q = actions.add_parser("embed")
    target = q.add_mutually_exclusive_group(required=True)
    target.add_argument("--matrix")
    target.add_argument("--triple", help="three points of CP^1, e.g. '(2:1),(3:1),(3:2)'")
    q.add_argument("--direction", help="point of the exceptional line when the triple is the center")
    _add_output(q)

    p = commands.add_parser("homology", help="homology of orbit spaces and curated complexes")
    p.add_argument("--space", default="g52")
    p.add_argument("--coeff", default="z")
    _add_output(p)

    p = commands.add_parser("report-all", help="run the acceptance suite")
    p.add_argument("--n", type=int, default=5)
    _add_sampling(p)
    _add_output(p)
    return parser


def _split_triple(text: str) -> List[str]:
    points = re.findall(r"\([^()]*\)", text)
    if len(points) != 3:
        raise ParseError(f"Expected three points like (a:b), got {text!r}")
    return points


def run(argv: List[str]) -> Report:
    args = build_parser().parse_args(argv)
    command = " ".join(["gorbit"] + list(argv))
    if args.command == "strata":
        return report.strata_report(args.n, args.summary, command)
    if args.command == "polytopes":
        return report.polytopes_report(args.n, command)
    if args.command == "fundamental":
        return report.fundamental_report(args.n, command)
    if args.command == "moment":
        p = report.resolve_plane(
            plucker=parse_json(args.plucker, "plucker") if args.plucker else None,
            matrix=parse_matrix_text(args.matrix) if args.matrix else None,
            sigma=parse_sigma(args.sigma, args.n) if args.sigma else None,
        )
        return report.moment_report(p, command)
    if args.command == "params":
        if args.action == "check-transitions":
            return report.transitions_report(args.seed, args.samples, command)
        if args.action == "virtual":
            return report.virtual_report(parse_sigma(args.sigma), parse_chart(args.chart), command)
        return report.embed_report(
            matrix=parse_matrix_text(args.matrix) if args.matrix else None,
            coords=_split_triple(args.triple) if args.triple else None,
            direction=args.direction,
            command=command,
        )
    if args.command == "homology":
        return report.homology_report(args.space, args.coeff, command)
    return report.report_all(args.n, args.seed, args.samples, command)


def _output_mode(argv: List[str]) -> str:
    return "tsv" if "--tsv" in argv else "json"


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    logging.basicConfig(
        level=config.LOG_LEVEL,
        filename=config.LOG_FILE,
        format="%(asctime)s - %(levelname)s - %(message)s",
    )
    logging.info(f"Command: {' '.join(argv)}")
    try:
        result = run(argv)
    except ValidationError as e:
        logging.warning(f"Rejected input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except InternalAssertion as e:
        logging.exception("Internal assertion failed")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL

    print(result.table if _output_mode(argv) == "tsv" else result.model_dump_json(indent=2))
    if result.payload.get("passed") is False:
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
