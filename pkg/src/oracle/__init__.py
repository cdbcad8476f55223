"""
Reference Expansions

Newton and undetermined-coefficient series expansions, and the Lucas
Catalan oracle. Used as baselines and as seeds for the pipelines.
"""

from .newton import SeriesPrefix, expand_newton
from .undetermined import expand_undetermined
from .catalan import catalan_mod_p, binom_mod_p

__all__ = [
    "SeriesPrefix",
    "expand_newton",
    "expand_undetermined",
    "catalan_mod_p",
    "binom_mod_p",
]
