"""
Result Data Models

Benchmark rows and self-check reports.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


BENCH_COLUMNS = ("method", "p", "d", "h", "ndigits", "pre_ms", "query_ms", "ops")


@dataclass
class BenchRecord:
    """One benchmark run: precomputation and query timings for an instance."""

    method: str
    p: int
    d: int
    h: int
    ndigits: int  # decimal digits of N
    pre_ms: float
    query_ms: float
    ops: int  # counted field-level operations
    seed: Optional[int] = None

    def to_row(self) -> List[str]:
        """CSV cells in BENCH_COLUMNS order."""
        return [
            self.method,
            str(self.p),
            str(self.d),
            str(self.h),
            str(self.ndigits),
            f"{self.pre_ms:.3f}",
            f"{self.query_ms:.3f}",
            str(self.ops),
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method,
            "p": self.p,
            "d": self.d,
            "h": self.h,
            "ndigits": self.ndigits,
            "pre_ms": self.pre_ms,
            "query_ms": self.query_ms,
            "ops": self.ops,
            "seed": self.seed,
        }


@dataclass
class Mismatch:
    """A coefficient on which two methods disagreed."""

    p: int
    equation: str
    index: int
    method: str
    expected: int
    got: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "E": self.equation,
            "N": self.index,
            "method": self.method,
            "expected": self.expected,
            "got": self.got,
        }


@dataclass
class SkippedInstance:
    """An equation whose Mahler state was too large to step."""

    p: int
    equation: str
    order: int
    state_size: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "E": self.equation,
            "order": self.order,
            "state_size": self.state_size,
        }


@dataclass
class SelfCheckReport:
    """Pass/fail/skip counts of the cross-method suite."""

    instances: int = 0
    comparisons: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0  # instances whose Mahler state exceeded the size cap
    mismatches: List[Mismatch] = field(default_factory=list)
    skipped_instances: List[SkippedInstance] = field(default_factory=list)
    max_mismatches: int = 10

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, mismatch: Optional[Mismatch] = None) -> None:
        self.comparisons += 1
        if mismatch is None:
            self.passed += 1
            return
        self.failed += 1
        if len(self.mismatches) < self.max_mismatches:
            self.mismatches.append(mismatch)

    def skip(self, instance: SkippedInstance) -> None:
        self.skipped += 1
        self.skipped_instances.append(instance)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (
            f"{status}: {self.instances} instances, {self.passed} passed, "
            f"{self.failed} failed, {self.skipped} skipped"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "instances": self.instances,
            "comparisons": self.comparisons,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "mismatches": [m.to_dict() for m in self.mismatches],
            "skipped_instances": [s.to_dict() for s in self.skipped_instances],
        }
