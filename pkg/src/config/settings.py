"""
ALGCOEF Configuration Settings

Central configuration dataclass for the arithmetic kernels, the coefficient
pipelines, the self-check suite and the benchmark harness.
Supports environment variable overrides and validation.
"""

from dataclasses import dataclass, field
from typing import List, Optional
import os
from enum import Enum

from src.arith import MultiplicationPolicy, set_multiplication_policy
from src.models.problem import Method


class MulAlgorithm(str, Enum):
    """Univariate multiplication kernels."""
    AUTO = "auto"
    SCHOOLBOOK = "schoolbook"
    KARATSUBA = "karatsuba"
    PACKED = "packed"


@dataclass
class ALGCOEFConfig:
    """
    Central configuration for ALGCOEF.

    All settings can be overridden via environment variables with ALGCOEF_ prefix.
    Example: ALGCOEF_FAST_CROSSOVER_P=128 overrides fast_crossover_p.
    """

    # ==================== Arithmetic ====================
    karatsuba_threshold: int = 48  # Karatsuba recursion bottoms out below this length
    packed_threshold: int = 24  # auto switches to Kronecker packing from this length
    mul_algorithm: str = MulAlgorithm.AUTO.value

    # ==================== Method Selection ====================
    default_method: str = Method.AUTO.value
    fast_crossover_p: int = 64  # auto picks diagonal-fast iff p > this
    matrix_cache_size: int = 0  # digit matrices kept per representation (0 = unbounded)

    # ==================== Mahler Pipeline ====================
    # (K+2)(D+1) above this is considered too large to step in the self-check
    mahler_max_state_size: int = 200_000

    # ==================== Oracle ====================
    newton_min_precision: int = 1

    # ==================== Self-check ====================
    selfcheck_instances: int = 200
    selfcheck_max_n: int = 3000  # compare all N <= this
    selfcheck_primes: List[int] = field(default_factory=lambda: [2, 3, 5, 7, 11, 13])
    selfcheck_max_d: int = 4
    selfcheck_max_h: int = 3
    selfcheck_samples: int = 40  # extra single-index queries per method
    seed: int = 0

    # ==================== Bench ====================
    bench_repetitions: int = 3
    bench_workers: int = 1

    # ==================== Logging ====================
    log_level: str = "WARNING"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    log_file: Optional[str] = None

    def __post_init__(self):
        """Load environment variable overrides and validate configuration."""
        self._load_env_overrides()
        self._validate()

    def _load_env_overrides(self):
        """Load configuration from environment variables with ALGCOEF_ prefix."""
        for field_name in self.__dataclass_fields__:
            env_key = f"ALGCOEF_{field_name.upper()}"
            env_value = os.environ.get(env_key)

            if env_value is not None:
                field_type = self.__dataclass_fields__[field_name].type

                # Type conversion
                if field_type == int:
                    setattr(self, field_name, int(env_value))
                elif field_type == bool:
                    setattr(self, field_name, env_value.lower() in ('true', '1', 'yes'))
                elif field_type == List[int]:
                    setattr(self, field_name, [int(v) for v in env_value.split(",") if v.strip()])
                elif field_type == str or field_type == Optional[str]:
                    setattr(self, field_name, env_value)

    def _validate(self):
        """Validate configuration values."""
        if self.karatsuba_threshold < 2:
            raise ValueError("karatsuba_threshold must be at least 2")

        if self.packed_threshold < 1:
            raise ValueError("packed_threshold must be positive")

        if self.mul_algorithm not in [m.value for m in MulAlgorithm]:
            raise ValueError(f"mul_algorithm must be one of {[m.value for m in MulAlgorithm]}")

        if self.default_method not in [m.value for m in Method]:
            raise ValueError(f"default_method must be one of {[m.value for m in Method]}")

        if self.fast_crossover_p < 2:
            raise ValueError("fast_crossover_p must be at least 2")

        if self.matrix_cache_size < 0:
            raise ValueError("matrix_cache_size must be nonnegative")

        if self.mahler_max_state_size <= 0:
            raise ValueError("mahler_max_state_size must be positive")

        if self.newton_min_precision < 1:
            raise ValueError("newton_min_precision must be positive")

        if self.selfcheck_instances < 0:
            raise ValueError("selfcheck_instances must be nonnegative")

        if self.selfcheck_max_n < 1:
            raise ValueError("selfcheck_max_n must be positive")

        if not self.selfcheck_primes or any(p < 2 for p in self.selfcheck_primes):
            raise ValueError("selfcheck_primes must be a nonempty list of primes")

        if self.selfcheck_max_d < 2:
            raise ValueError("selfcheck_max_d must be at least 2")

        if self.selfcheck_max_h < 0:
            raise ValueError("selfcheck_max_h must be nonnegative")

        if self.bench_repetitions < 1:
            raise ValueError("bench_repetitions must be positive")

        if self.bench_workers < 1:
            raise ValueError("bench_workers must be positive")

        if self.log_level.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError("log_level must be DEBUG, INFO, WARNING, ERROR or CRITICAL")

    def multiplication_policy(self) -> MultiplicationPolicy:
        return MultiplicationPolicy(
            algorithm=self.mul_algorithm,
            karatsuba_threshold=self.karatsuba_threshold,
            packed_threshold=self.packed_threshold,
        )

    def apply(self) -> "ALGCOEFConfig":
        """Install the arithmetic settings process-wide."""
        set_multiplication_policy(self.multiplication_policy())
        return self

    @classmethod
    def from_dict(cls, config_dict: dict) -> "ALGCOEFConfig":
        """Create configuration from dictionary."""
        return cls(**{k: v for k, v in config_dict.items() if k in cls.__dataclass_fields__})

    def to_dict(self) -> dict:
        """Export configuration to dictionary."""
        return {
            field_name: getattr(self, field_name)
            for field_name in self.__dataclass_fields__
        }

    @classmethod
    def for_development(cls) -> "ALGCOEFConfig":
        """Factory method for development configuration."""
        return cls(
            log_level="DEBUG",
        )

    @classmethod
    def for_production(cls) -> "ALGCOEFConfig":
        """Factory method for production configuration."""
        return cls(
            log_level="WARNING",
            matrix_cache_size=0,
            bench_workers=os.cpu_count() or 1,
        )

    @classmethod
    def for_testing(cls) -> "ALGCOEFConfig":
        """Factory method for testing configuration."""
        return cls(
            selfcheck_instances=6,
            selfcheck_max_n=200,
            selfcheck_primes=[2, 3, 5],
            selfcheck_max_d=3,
            selfcheck_max_h=2,
            selfcheck_samples=5,
            mahler_max_state_size=20_000,
            bench_repetitions=1,
            log_level="DEBUG",
        )
