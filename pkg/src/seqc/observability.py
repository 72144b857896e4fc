"""Logging and timing helpers for long-running steps."""

import functools
import logging
import time
from typing import Any, Callable, TypeVar

F = TypeVar("F", bound=Callable[..., Any])

logger = logging.getLogger("seqc")


def get_step_logger(step: str) -> logging.Logger:
    """Get a logger for a specific step."""
    return logging.getLogger(f"seqc.{step}")


def _format_elapsed(elapsed: float) -> str:
    return f"{elapsed:.2f}s" if elapsed >= 1 else f"{elapsed * 1000:.0f}ms"


def timed_step(name: str, *, log_args: bool = False) -> Callable[[F], F]:
    """Decorator adding start/finish logging and timing to a step.

    Args:
        name: Step name used for the logger (e.g. "sweep", "suite.counting").
        log_args: Whether to log positional arguments at start.

    Example:
        @timed_step("sweep.norms")
        def norm_table(n: int) -> np.ndarray:
            ...
    """

    def decorator(func: F) -> F:
        step_logger = get_step_logger(name)

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            if log_args and args:
                step_logger.info("Starting... args=%s", args)
            else:
                step_logger.debug("Starting...")
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                elapsed = time.perf_counter() - start_time
                step_logger.error("Failed after %.2fs: %s", elapsed, e)
                raise
            step_logger.info("Completed in %s", _format_elapsed(time.perf_counter() - start_time))
            return result

        return wrapper  # type: ignore

    return decorator


def log_step_event(step: str, event: str, level: str = "info", **data: Any) -> None:
    """Log a custom event from within a step.

    Example:
        log_step_event("pairs", "row beyond published table", p=241)
    """
    step_logger = get_step_logger(step)
    log_func = getattr(step_logger, level if level in ("debug", "info", "warning", "error") else "info")

    if data:
        data_str = ", ".join(f"{k}={v}" for k, v in data.items())
        log_func("%s (%s)", event, data_str)
    else:
        log_func("%s", event)
