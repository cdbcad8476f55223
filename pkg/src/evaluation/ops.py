"""
Operation Counting

Field-level operation tallies for the bench ``ops`` column.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict


@dataclass
class OpCounter:
    """
    Named operation counts.

    Kinds in use: ``matvec`` (digit matrix times vector), ``mul`` (field
    products), ``section_step`` (Mahler state steps), ``newton_step`` (Newton
    iterations of the naive method).
    """

    counts: Counter = field(default_factory=Counter)

    def count(self, kind: str, amount: int = 1) -> None:
        self.counts[kind] += amount

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def reset(self) -> None:
        self.counts.clear()

    def to_dict(self) -> Dict[str, int]:
        return dict(self.counts)
