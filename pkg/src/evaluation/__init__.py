"""
ALGCOEF Evaluation

Operation counting and the cross-method self-check suite.
"""

from .ops import OpCounter
from .selfcheck import check_instance, random_instance, run_selfcheck

__all__ = [
    "OpCounter",
    "random_instance",
    "check_instance",
    "run_selfcheck",
]
