"""
ALGCOEF Command Line

Polynomial and index parsing, the argparse front end and the bench harness.
"""

from .parser import MAX_POLY_EXPONENT, PolyParser, parse_index, parse_poly, tokenize
from .bench import NAMED_INSTANCES, run_bench, scaling_exponent
from .main import build_parser, main

__all__ = [
    # Parsing
    "MAX_POLY_EXPONENT",
    "PolyParser",
    "tokenize",
    "parse_poly",
    "parse_index",
    # Bench
    "NAMED_INSTANCES",
    "run_bench",
    "scaling_exponent",
    # Entry point
    "build_parser",
    "main",
]
