import argparse
import json
import sys
from typing import List, Optional, Tuple

from clifvs import checks, fvs, matrep, parser, schemas, utils
from clifvs.blades import Signature
from clifvs.constants import (
    DEFAULT_MODE,
    DEFAULT_SCALAR,
    EXIT_OK,
    EXIT_SINGULAR,
    EXIT_USAGE,
    MODE_CHOICES,
    SCALAR_CHOICES,
    SINGULAR_MESSAGE,
)
from clifvs.exceptions import CliffordError, ParseError, SignatureError
from clifvs.logging_config import get_logger, setup_logging, timed
from clifvs.scalars import format_scalar

logger = get_logger(__name__)

COMMANDS = ["inverse", "charpoly", "det", "matrep", "verify"]


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_USAGE; exit status 2 means a singular input."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def signature_arg(text: str) -> Tuple[int, int]:
    try:
        sig = Signature.parse(text)
    except SignatureError as error:
        raise argparse.ArgumentTypeError(str(error)) from None
    return sig.p, sig.q


def _add_global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    """
    The same flags are accepted before and after the subcommand; the copy on
    the subparser uses SUPPRESS defaults so it only overrides what it sees.
    """
    def default(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--signature", default=default(None), type=signature_arg,
                   help="Algebra signature p,q (required for every command but 'examples')")
    p.add_argument("--mode", default=default(DEFAULT_MODE), choices=MODE_CHOICES,
                   help="FVS step count: full 2^n, bott 2^ceil(n/2), span 2^s, reduced 2^ceil(s/2) (default: reduced)")
    p.add_argument("--scalar", default=default(DEFAULT_SCALAR), choices=SCALAR_CHOICES,
                   help="Coefficient field (default: rational)")
    p.add_argument("--json", dest="json_output", default=default(False), action="store_true",
                   help="Print a JSON object instead of text")
    p.add_argument("--trace", default=default(False), action="store_true",
                   help="Print the per-step t/m lines of the FVS recursion")
    p.add_argument("--debug", default=default(False), action="store_true",
                   help="Enable debug logging")


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(
        prog="clifvs",
        description="Exact multivector inverses, characteristic polynomials and determinants in Cl(p,q)",
    )
    _add_global_flags(p, suppress=False)
    subparsers = p.add_subparsers(dest="command", metavar="command", parser_class=_ArgumentParser)
    subparsers.required = True

    helps = {
        "inverse": "Multivector inverse (exit 2 when it does not exist)",
        "charpoly": "Characteristic polynomial, highest degree first",
        "det": "Determinant of the representation, c_N",
        "matrep": "Dump the real matrix representation of the expression",
        "verify": "Check the FVS results against the matrix representation",
    }
    for name in COMMANDS:
        sub = subparsers.add_parser(name, help=helps[name])
        _add_global_flags(sub, suppress=True)
        sub.add_argument("expression", help="Multivector expression, or '-' to read standard input")

    examples = subparsers.add_parser("examples", help="Replay the bundled catalogue of worked examples")
    _add_global_flags(examples, suppress=True)
    return p


def _emit(cfg: schemas.CliConfig, command: str, result: dict, text: List[str],
          trace: Optional[List[dict]] = None) -> None:
    if cfg.output == "json":
        payload = {
            'command': command,
            'signature': list(cfg.signature),
            'mode': cfg.mode,
            'scalar': cfg.scalar,
            'result': result,
        }
        if trace is not None:
            payload['trace'] = trace
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for line in text:
            sys.stdout.write(line + "\n")


def _trace_parts(cfg: schemas.CliConfig, result: schemas.FvsResult):
    if not cfg.trace:
        return [], None
    return fvs.format_trace(result), result.trace_dict()


def cmd_inverse(cfg: schemas.CliConfig, expr: str) -> int:
    a = parser.parse(expr, cfg.sig, cfg.scalar_kind)
    result = fvs.fvs_run(a, cfg.step_mode, want_trace=cfg.trace)
    lines, trace = _trace_parts(cfg, result)
    payload = result.inverse_dict()
    if result.singular:
        _emit(cfg, "inverse", payload, lines, trace)
        sys.stderr.write(SINGULAR_MESSAGE + "\n")
        return EXIT_SINGULAR
    _emit(cfg, "inverse", payload, lines + [str(result.inverse)], trace)
    return EXIT_OK


def cmd_charpoly(cfg: schemas.CliConfig, expr: str) -> int:
    a = parser.parse(expr, cfg.sig, cfg.scalar_kind)
    result = fvs.fvs_run(a, cfg.step_mode, want_trace=cfg.trace)
    lines, trace = _trace_parts(cfg, result)
    payload = result.charpoly_dict()
    _emit(cfg, "charpoly", payload, lines + [fvs.format_char_poly(result.char_poly)], trace)
    return EXIT_OK


def cmd_det(cfg: schemas.CliConfig, expr: str) -> int:
    a = parser.parse(expr, cfg.sig, cfg.scalar_kind)
    result = fvs.fvs_run(a, cfg.step_mode, want_trace=cfg.trace)
    lines, trace = _trace_parts(cfg, result)
    payload = result.det_dict()
    _emit(cfg, "det", payload, lines + [payload['determinant']], trace)
    return EXIT_OK


def cmd_matrep(cfg: schemas.CliConfig, expr: str) -> int:
    a = parser.parse(expr, cfg.sig, cfg.scalar_kind)
    if cfg.step_mode in (schemas.StepMode.REDUCED, schemas.StepMode.SPAN):
        basis = matrep.span_basis(a)
    else:
        basis = matrep.extended_basis(cfg.sig, range(1, cfg.sig.n + 1))
    image = matrep.pi(a, basis)
    rows = [[format_scalar(x) for x in row] for row in image]
    blades = [str(blade) for blade in basis.blades]
    text = [f"dim={basis.dim} basis=[{', '.join(blades)}]"] + [" ".join(row) for row in rows]
    _emit(cfg, "matrep", {'dim': basis.dim, 'basis': blades, 'rows': rows}, text)
    return EXIT_OK


def _report_lines(report: schemas.VerifyReport) -> List[str]:
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in report.checks]
    lines.append("all checks passed" if report.passed else "some checks FAILED")
    return lines


def cmd_verify(cfg: schemas.CliConfig, expr: str) -> int:
    a = parser.parse(expr, cfg.sig, cfg.scalar_kind)
    report = checks.verify_multivector(a, cfg.step_mode)
    _emit(cfg, "verify", report.to_dict(), _report_lines(report))
    return EXIT_OK if report.passed else EXIT_USAGE


def cmd_examples(cfg: schemas.CliConfig) -> int:
    report = checks.run_golden_examples()
    _emit(cfg, "examples", report.to_dict(), _report_lines(report))
    return EXIT_OK if report.passed else EXIT_USAGE


HANDLERS = {
    "inverse": cmd_inverse,
    "charpoly": cmd_charpoly,
    "det": cmd_det,
    "matrep": cmd_matrep,
    "verify": cmd_verify,
}


def run(argv: Optional[List[str]] = None) -> int:
    arg_parser = build_parser()
    args = arg_parser.parse_args(argv)

    setup_logging(debug=args.debug)

    if args.command != "examples" and args.signature is None:
        arg_parser.error("the following arguments are required: --signature")

    try:
        cfg = schemas.CliConfig(
            signature=args.signature or (1, 0),
            mode=args.mode,
            scalar=args.scalar,
            output="json" if args.json_output else "text",
            trace=args.trace,
            debug=args.debug,
        )
        logger.debug(f"Configuration: {cfg.to_dict()}")
        if args.command == "examples":
            return cmd_examples(cfg)
        with timed(logger, f"Command {args.command}"):
            return HANDLERS[args.command](cfg, utils.read_expression(args.expression))
    except ParseError as error:
        sys.stderr.write(error.render() + "\n")
        return EXIT_USAGE
    except CliffordError as error:
        logger.debug("Command failed", exc_info=True)
        sys.stderr.write(f"error: {error}\n")
        return EXIT_USAGE


def cli(argv: Optional[List[str]] = None):
    sys.exit(run(argv))
