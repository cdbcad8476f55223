#!/usr/bin/env python3
"""
ALGCOEF Benchmark Suite

Runs one or more YAML bench specs, streams the CSV rows to stdout (or a
file) and reports on stderr how timings scale with p and with the number
of digits of N.
"""

import argparse
import sys
from collections import defaultdict
from pathlib import Path
from typing import Dict, List, Tuple

# Load environment variables
from dotenv import load_dotenv
load_dotenv()

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli.bench import run_bench, scaling_exponent
from src.config import ALGCOEFConfig
from src.models.results import BenchRecord
from src.utils import load_yaml, setup_logging


def parse_args():
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(description="ALGCOEF scaling benchmarks")
    parser.add_argument(
        "specs",
        nargs="*",
        default=["benchmarks/quartic_digits.yaml", "benchmarks/quartic_primes.yaml"],
        help="YAML bench specs (default: the quartic digit and prime sweeps)",
    )
    parser.add_argument("--out", type=str, default=None, help="CSV output file")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes per spec")
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")
    return parser.parse_args()


def _mean_by(records: List[BenchRecord], key: str, value: str) -> Dict[str, List[Tuple[int, float]]]:
    """Per method, (key, mean value) pairs sorted by key."""
    groups: Dict[Tuple[str, int], List[float]] = defaultdict(list)
    for r in records:
        groups[(r.method, getattr(r, key))].append(getattr(r, value))
    series: Dict[str, List[Tuple[int, float]]] = defaultdict(list)
    for (method, k), values in sorted(groups.items()):
        series[method].append((k, sum(values) / len(values)))
    return series


def report_scaling(records: List[BenchRecord]) -> None:
    """Fitted exponents and per-doubling ratios on stderr."""
    for method, points in _mean_by(records, "p", "pre_ms").items():
        if len(points) >= 2:
            xs, ys = zip(*points)
            print(f"{method}: precompute ~ p^{scaling_exponent(xs, ys):.2f}", file=sys.stderr)
    for method, points in _mean_by(records, "ndigits", "query_ms").items():
        for (n1, t1), (n2, t2) in zip(points, points[1:]):
            if t1 > 0:
                print(f"{method}: {n1} -> {n2} digits, query x{t2 / t1:.2f}", file=sys.stderr)


def main():
    args = parse_args()
    config = ALGCOEFConfig()
    setup_logging("DEBUG" if args.verbose else config.log_level, config.log_format)
    config.apply()

    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    records: List[BenchRecord] = []
    try:
        for path in args.specs:
            spec = load_yaml(path)
            if args.workers is not None:
                spec["workers"] = args.workers
            records.extend(run_bench(spec, config, out))
    finally:
        if out is not sys.stdout:
            out.close()
    report_scaling(records)


if __name__ == "__main__":
    main()
