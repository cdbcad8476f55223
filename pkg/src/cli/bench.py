"""
Benchmark Harness

Runs a YAML bench spec and streams one CSV row per run, in spec order:

    instance: quartic          # toy | catalan | cubic | quartic | random | polynomial text
    primes: [1009, 2003]
    ndigits: [100, 200, 400]   # decimal digits of N
    methods: [diagonal-fast]
    repetitions: 3
    seed: 0
    d: 3                       # random instances only
    h: 2
    max_p: {mahler: 5}         # optional per-method ceiling on p
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO
import csv
import logging
import random
import sys

import numpy as np

from src.arith import BiPoly, BigIndex, PrimeField
from src.config import ALGCOEFConfig
from src.errors import InvalidInput
from src.evaluation import OpCounter, random_instance
from src.models.problem import Method
from src.models.results import BENCH_COLUMNS, BenchRecord
from src.pipeline import CoefficientEngine
from src.utils.timing import Timer
from .parser import parse_poly

logger = logging.getLogger(__name__)

NAMED_INSTANCES = {
    "toy": "x + y - y^3",
    "catalan": "y - x - y^2",
    "cubic": "x - (1+x)*y + x^2*y^2 + (1+x)*y^3",
    "quartic": "-x + (1+x)*y - (1+x^2)*y^2 - y^3 + (1+x)*y^4",
}


@dataclass(frozen=True)
class BenchJob:
    """One run; plain data so it can cross a process boundary."""

    method: str
    equation: BiPoly
    N: int
    ndigits: int
    seed: int
    config: Dict[str, Any]


def instance_for(spec: Dict[str, Any], p: int, seed: int) -> BiPoly:
    """The bench spec's equation over F_p."""
    name = str(spec.get("instance", "quartic"))
    if name == "random":
        rng = random.Random(seed)
        return random_instance(rng, p, int(spec.get("d", 3)), int(spec.get("h", 2)))
    return parse_poly(NAMED_INSTANCES.get(name, name), p)


def index_with_digits(rng: random.Random, ndigits: int) -> int:
    """A random N with exactly ndigits decimal digits."""
    if ndigits < 1:
        raise InvalidInput(f"ndigits must be positive, got {ndigits}")
    low = 10 ** (ndigits - 1) if ndigits > 1 else 0
    return rng.randrange(low, 10**ndigits)


def plan_jobs(spec: Dict[str, Any], config: ALGCOEFConfig) -> List[BenchJob]:
    """Expand a spec into runs, primes outermost, then methods, digits, repetitions."""
    for key in ("primes", "ndigits", "methods"):
        if not spec.get(key):
            raise InvalidInput(f"bench spec needs a nonempty '{key}' list")
    seed = int(spec.get("seed", config.seed))
    repetitions = int(spec.get("repetitions", config.bench_repetitions))
    max_p = {Method(name).value: int(bound) for name, bound in (spec.get("max_p") or {}).items()}
    rng = random.Random(seed)
    jobs = []
    for p in spec["primes"]:
        PrimeField(int(p))
        E = instance_for(spec, int(p), seed)
        for method in spec["methods"]:
            Method(method)
            skipped = int(p) > max_p.get(method, int(p))
            if skipped:
                logger.info(f"Bench plan: {method} skipped at p = {p} (max_p {max_p[method]})")
            for ndigits in spec["ndigits"]:
                N = index_with_digits(rng, int(ndigits))
                if skipped:
                    continue
                for _ in range(repetitions):
                    jobs.append(BenchJob(method, E, N, int(ndigits), seed, config.to_dict()))
    logger.info(f"Bench plan: {len(jobs)} runs")
    return jobs


def run_job(job: BenchJob) -> BenchRecord:
    """Fresh engine per run: precompute, then one timed query."""
    config = ALGCOEFConfig.from_dict(job.config).apply()
    engine = CoefficientEngine(job.equation, config, job.method)
    engine.precompute()
    counter = OpCounter()
    with Timer(f"{job.method} query") as timer:
        engine.coefficient(BigIndex(job.N), counter)
    return BenchRecord(
        method=engine.method.value,
        p=job.equation.field.p,
        d=int(job.equation.deg_y),
        h=int(job.equation.deg_x),
        ndigits=job.ndigits,
        pre_ms=engine.precompute_ms,
        query_ms=timer.elapsed_ms,
        ops=counter.total,
        seed=job.seed,
    )


def iter_records(jobs: Sequence[BenchJob], workers: int = 1) -> Iterator[BenchRecord]:
    """Records in job order; runs in worker processes when workers > 1."""
    if workers <= 1:
        for job in jobs:
            yield run_job(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as executor:
        yield from executor.map(run_job, jobs)


def run_bench(
    spec: Dict[str, Any],
    config: Optional[ALGCOEFConfig] = None,
    out: Optional[TextIO] = None,
) -> List[BenchRecord]:
    """
    Run a bench spec, writing the CSV header and one row per run.

    Args:
        spec: Parsed YAML spec
        config: Configuration (bench_workers, defaults for seed/repetitions)
        out: Destination stream (default stdout)

    Returns:
        All records, in spec order
    """
    config = config or ALGCOEFConfig()
    out = out or sys.stdout
    jobs = plan_jobs(spec, config)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    records = []
    for record in iter_records(jobs, int(spec.get("workers", config.bench_workers))):
        writer.writerow(record.to_row())
        out.flush()
        records.append(record)
    return records


def scaling_exponent(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Least-squares slope of log y against log x."""
    if len(xs) != len(ys) or len(xs) < 2:
        raise InvalidInput("need at least two (x, y) pairs")
    slope, _ = np.polyfit(np.log(np.asarray(xs, dtype=float)), np.log(np.asarray(ys, dtype=float)), 1)
    return float(slope)
