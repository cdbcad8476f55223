"""
ALGCOEF Command Line

Subcommands:
    coeff        f_N by the selected method
    expand       f mod x^n by Newton iteration
    mahler-eq    coefficients c_0..c_K of the minimal Mahler equation
    furstenberg  the pair (a, b) with f = Diag(a/b) and its degree bounds
    linrep       JSON export of the linear representation
    bench        CSV timings for a YAML bench spec
    selfcheck    cross-method agreement on random instances

Exit codes: 0 ok, 2 invalid input, 3 certificate failure.
"""

from typing import List, Optional
import argparse
import json
import logging
import sys

from dotenv import load_dotenv

from src.arith import PrimeField, radix_digits
from src.config import ALGCOEFConfig
from src.diagonal import furstenberg
from src.errors import ALGCOEFError, CertificateFailure, InvalidInput
from src.evaluation import run_selfcheck
from src.mahler import algeq_to_mahler
from src.models.problem import Method, ProblemInstance
from src.oracle import expand_newton
from src.pipeline import CoefficientEngine
from src.utils import load_yaml, save_json, setup_logging
from .bench import run_bench
from .parser import parse_index, parse_poly

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_CERTIFICATE_FAILURE = 3


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser.

    Returns:
        Parser with one subparser per subcommand
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging on stderr")

    equation = argparse.ArgumentParser(add_help=False)
    equation.add_argument("-p", type=int, required=True, help="Prime characteristic")
    equation.add_argument("-E", required=True, help='Equation E(x, y), e.g. "y - x - y^2"')

    parser = argparse.ArgumentParser(
        prog="algcoef",
        description="N-th coefficients of algebraic power series over F_p",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    python -m src.cli coeff -p 7 -E "y - x - y^2" -N 10^50
    python -m src.cli expand -p 11 -n 12 -E "-x+(1+x)*y-(1+x^2)*y^2-y^3+(1+x)*y^4"
    python -m src.cli mahler-eq -p 5 -E "x + y - y^3"
    python -m src.cli linrep -p 7 -E "y - x - y^2" --out catalan7.json
    python -m src.cli bench --spec benchmarks/catalan_digits.yaml
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeff = sub.add_parser("coeff", parents=[common, equation], help="Compute f_N")
    coeff.add_argument("-N", required=True, help='Index: decimal, "10^k" or "a*10^k"')
    coeff.add_argument("--method", default=None, choices=[m.value for m in Method])
    coeff.add_argument("--crossover", type=int, default=None, help="auto picks diagonal-fast iff p > this")

    expand = sub.add_parser("expand", parents=[common, equation], help="Print f_0..f_{n-1}")
    expand.add_argument("-n", type=int, required=True, help="Precision")

    sub.add_parser("mahler-eq", parents=[common, equation], help="Print c_0..c_K")
    sub.add_parser("furstenberg", parents=[common, equation], help="Print a, b, d_x, d_y")

    linrep = sub.add_parser("linrep", parents=[common, equation], help="Export (L, (A_r), C) as JSON")
    linrep.add_argument("-N", default=None, help="Export the digit matrices of N's base-p digits")
    linrep.add_argument("--digits", default=None, help="Comma-separated digits to export")
    linrep.add_argument(
        "--method",
        default=None,
        choices=[Method.DIAGONAL.value, Method.DIAGONAL_FAST.value, Method.AUTO.value],
    )
    linrep.add_argument("--out", default=None, help="Output file (default stdout)")

    bench = sub.add_parser("bench", parents=[common], help="Run a YAML bench spec")
    bench.add_argument("--spec", required=True, help="YAML bench spec")
    bench.add_argument("--seed", type=int, default=None, help="Overrides the bench spec seed")
    bench.add_argument("--out", default=None, help="CSV file (default stdout)")

    selfcheck = sub.add_parser("selfcheck", parents=[common], help="Cross-method suite")
    selfcheck.add_argument("--seed", type=int, default=None)
    selfcheck.add_argument("--instances", type=int, default=None)
    selfcheck.add_argument("--max-n", type=int, default=None)
    selfcheck.add_argument("--out", default=None, help="Write the JSON report here")
    return parser


# =============================================================================
# Subcommands
# =============================================================================


def run_coeff(args: argparse.Namespace, config: ALGCOEFConfig) -> int:
    E = parse_poly(args.E, args.p)
    instance = ProblemInstance(
        PrimeField(args.p), E, parse_index(args.N), Method(args.method or config.default_method)
    )
    engine = CoefficientEngine(E, config, instance.method, crossover=args.crossover)
    print(int(engine.coefficient(instance.index)))
    return EXIT_OK


def run_expand(args: argparse.Namespace, config: ALGCOEFConfig) -> int:
    if args.n < 1:
        raise InvalidInput(f"precision must be positive, got {args.n}")
    prefix = expand_newton(parse_poly(args.E, args.p), args.n)
    print(" ".join(str(v) for v in prefix.values()))
    return EXIT_OK


def run_mahler_eq(args: argparse.Namespace, config: ALGCOEFConfig) -> int:
    equation = algeq_to_mahler(parse_poly(args.E, args.p))
    for k, c in enumerate(equation.coeffs):
        print(f"c_{k} = {c}")
    return EXIT_OK


def run_furstenberg(args: argparse.Namespace, config: ALGCOEFConfig) -> int:
    rep = furstenberg(parse_poly(args.E, args.p))
    print(f"a = {rep.a}")
    print(f"b = {rep.b}")
    print(f"dx = {rep.d_x}")
    print(f"dy = {rep.d_y}")
    return EXIT_OK


def _export_digits(args: argparse.Namespace, p: int) -> Optional[List[int]]:
    if args.digits:
        try:
            return [int(r) for r in args.digits.split(",") if r.strip()]
        except ValueError:
            raise InvalidInput(f"--digits must be comma-separated integers, got {args.digits!r}")
    if args.N is not None:
        return sorted(set(radix_digits(parse_index(args.N), p)))
    if p > 64:
        raise InvalidInput("for p > 64 give --digits or -N to choose the exported matrices")
    return None


def run_linrep(args: argparse.Namespace, config: ALGCOEFConfig) -> int:
    E = parse_poly(args.E, args.p)
    digits = _export_digits(args, args.p)
    engine = CoefficientEngine(E, config, args.method or Method.AUTO)
    document = engine.linrep.to_json(digits)
    if args.out:
        save_json(document, args.out)
    else:
        print(json.dumps(document))
    return EXIT_OK


def run_bench_command(args: argparse.Namespace, config: ALGCOEFConfig) -> int:
    spec = load_yaml(args.spec)
    if args.seed is not None:
        spec["seed"] = args.seed
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as f:
            run_bench(spec, config, f)
    else:
        run_bench(spec, config)
    return EXIT_OK


def run_selfcheck_command(args: argparse.Namespace, config: ALGCOEFConfig) -> int:
    if args.seed is not None:
        config.seed = args.seed
    if args.instances is not None:
        config.selfcheck_instances = args.instances
    if args.max_n is not None:
        config.selfcheck_max_n = args.max_n
    report = run_selfcheck(config)
    if args.out:
        save_json(report.to_dict(), args.out)
    print(report.summary())
    for mismatch in report.mismatches:
        print(json.dumps(mismatch.to_dict()))
    return EXIT_OK if report.ok else EXIT_CERTIFICATE_FAILURE


COMMANDS = {
    "coeff": run_coeff,
    "expand": run_expand,
    "mahler-eq": run_mahler_eq,
    "furstenberg": run_furstenberg,
    "linrep": run_linrep,
    "bench": run_bench_command,
    "selfcheck": run_selfcheck_command,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point.

    Returns:
        Process exit code
    """
    load_dotenv()
    args = build_parser().parse_args(argv)
    try:
        config = ALGCOEFConfig()
        if args.verbose:
            config.log_level = "DEBUG"
        setup_logging(config.log_level, config.log_format, config.log_file)
        config.apply()
        return COMMANDS[args.command](args, config)
    except CertificateFailure as e:
        logger.error(f"Certificate failure: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CERTIFICATE_FAILURE
    except (ValueError, OSError, ALGCOEFError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
