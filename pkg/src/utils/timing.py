"""
Timing Utilities

Wall-clock measurement for the precomputation and query phases that the
bench harness reports as pre_ms and query_ms, and a decorator that logs
how long the oracle and certificate routines took.
"""

import functools
import logging
import time
from typing import Any, Callable, Dict, Optional, TypeVar, Union, overload

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


class Timer:
    """
    Monotonic stopwatch used as a context manager.

    ``elapsed_ms`` is fixed when the block exits; ``elapsed`` reads the
    running time while inside it. When ``into`` is given, the result is
    added under ``name`` so repeated phases accumulate in one dict.
    """

    def __init__(self, name: str = "phase", into: Optional[Dict[str, float]] = None):
        self.name = name
        self.into = into
        self.elapsed_ms = 0.0
        self._start: Optional[int] = None

    def __enter__(self) -> "Timer":
        self._start = time.perf_counter_ns()
        return self

    def __exit__(self, *exc: Any) -> bool:
        self.elapsed_ms = (time.perf_counter_ns() - self._start) / 1e6
        if self.into is not None:
            self.into[self.name] = self.into.get(self.name, 0.0) + self.elapsed_ms
        logger.debug(f"{self.name}: {self.elapsed_ms:.3f}ms")
        return False

    @property
    def elapsed(self) -> float:
        if self._start is None:
            return 0.0
        return (time.perf_counter_ns() - self._start) / 1e6


@overload
def timed(func: F) -> F: ...


@overload
def timed(func: None = None, *, label: Optional[str] = None) -> Callable[[F], F]: ...


def timed(func: Optional[F] = None, *, label: Optional[str] = None) -> Union[F, Callable[[F], F]]:
    """
    Log the wall time of each call at DEBUG on the wrapped function's logger.

    Usable bare (``@timed``) or with a label (``@timed(label="newton")``).
    """

    def decorate(fn: F) -> F:
        name = label or fn.__qualname__
        fn_logger = logging.getLogger(fn.__module__)

        @functools.wraps(fn)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            with Timer(name) as timer:
                result = fn(*args, **kwargs)
            fn_logger.debug(f"{name} took {timer.elapsed_ms:.2f}ms")
            return result

        return wrapper  # type: ignore[return-value]

    if func is not None:
        return decorate(func)
    return decorate
