"""
Cross-Method Self-Check

Seeded random equations; every method and both expansion oracles must agree
on every compared coefficient.
"""

from typing import Iterable, Optional, Sequence
import logging
import random
import sys

from tqdm import tqdm

from src.arith import BiPoly, Fp, PrimeField
from src.config import ALGCOEFConfig
from src.errors import InvalidInput
from src.mahler import MahlerPipeline, algeq_to_mahler
from src.models.problem import Method
from src.models.results import Mismatch, SelfCheckReport, SkippedInstance
from src.oracle import expand_newton, expand_undetermined
from src.pipeline import CoefficientEngine

logger = logging.getLogger(__name__)

def random_instance(rng: random.Random, p: int, d: int, h: int) -> BiPoly:
    """
    A random valid equation over F_p.

    E(0,0) = 0, E_y(0,0) != 0, deg_y E = d and deg_x E <= h. For h >= 1 some
    E(x, 0) term is nonzero, so the root is not the zero series; h = 0 gives
    an x-free equation whose root is zero.
    """
    if d < 1 or h < 0:
        raise InvalidInput(f"need d >= 1 and h >= 0, got d = {d}, h = {h}")
    fld = PrimeField(p)
    terms = {(i, j): rng.randrange(p) for i in range(h + 1) for j in range(d + 1)}
    terms[0, 0] = 0
    terms[0, 1] = rng.randrange(1, p)
    if not any(terms[i, d] for i in range(h + 1)):
        terms[rng.randrange(h + 1), d] = rng.randrange(1, p)
    if h >= 1 and not any(terms[i, 0] for i in range(1, h + 1)):
        terms[rng.randrange(1, h + 1), 0] = rng.randrange(1, p)
    return BiPoly.from_terms(fld, terms)


def _compare(
    report: SelfCheckReport,
    E: BiPoly,
    method: str,
    expected: Sequence[int],
    indices: Iterable[int],
    values: Iterable[Fp],
) -> None:
    for n, got in zip(indices, values):
        if int(got) == expected[n]:
            report.record()
            continue
        logger.error(f"{method} disagrees at N = {n} for {E} over F_{E.field.p}")
        report.record(Mismatch(E.field.p, str(E), n, method, expected[n], int(got)))


def check_instance(
    E: BiPoly,
    config: ALGCOEFConfig,
    report: SelfCheckReport,
    rng: Optional[random.Random] = None,
) -> None:
    """
    Compare all methods on one equation against the Newton expansion.

    Args:
        E: Equation with deg_y E >= 2
        config: Self-check settings
        report: Report to update
        rng: Source of the sampled indices
    """
    rng = rng or random.Random(config.seed)
    n = config.selfcheck_max_n + 1
    expected = expand_newton(E, n).values()
    all_indices = range(n)
    samples = sorted(rng.randrange(n) for _ in range(config.selfcheck_samples))

    _compare(report, E, "undetermined", expected, all_indices, expand_undetermined(E, n).values())

    for method in (Method.DIAGONAL, Method.DIAGONAL_FAST):
        engine = CoefficientEngine(E, config, method)
        _compare(report, E, method.value, expected, all_indices, engine.coefficients(n))
        # single-index fold path
        _compare(report, E, method.value, expected, samples, (engine.coefficient(k) for k in samples))

    equation = algeq_to_mahler(E)
    if equation.monic_state_size > config.mahler_max_state_size:
        logger.info(f"Mahler state size up to {equation.monic_state_size} is over the cap, skipped")
        report.skip(SkippedInstance(E.field.p, str(E), equation.order, equation.monic_state_size))
        return
    pipeline = MahlerPipeline(E, equation)
    _compare(report, E, Method.MAHLER.value, expected, all_indices, pipeline.coefficients(n))
    _compare(report, E, Method.MAHLER.value, expected, samples, (pipeline.coefficient(k) for k in samples))


def run_selfcheck(config: Optional[ALGCOEFConfig] = None, progress: bool = True) -> SelfCheckReport:
    """
    Run the cross-method suite.

    Args:
        config: Instance count, primes, degree bounds, seed and caps
        progress: Show a progress bar on stderr

    Returns:
        SelfCheckReport with pass/fail/skip counts
    """
    config = config or ALGCOEFConfig()
    rng = random.Random(config.seed)
    report = SelfCheckReport()
    for _ in tqdm(
        range(config.selfcheck_instances),
        desc="selfcheck",
        file=sys.stderr,
        disable=not progress,
    ):
        p = rng.choice(config.selfcheck_primes)
        d = rng.randint(2, config.selfcheck_max_d)
        h = rng.randint(0, config.selfcheck_max_h)
        E = random_instance(rng, p, d, h)
        logger.debug(f"Instance over F_{p}: {E}")
        check_instance(E, config, report, rng)
        report.instances += 1
    logger.info(report.summary())
    return report
