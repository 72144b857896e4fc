"""Configuration and logging setup."""

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import yaml

from seqc.errors import PreconditionError


def setup_logging() -> None:
    """Configure logging for seqc.

    Log level is determined by SEQC_LOG_LEVEL environment variable.
    Defaults to INFO. Records go to stderr so that stdout only carries
    TSV/JSON results.

    Supported levels: DEBUG, INFO, WARNING, ERROR
    """
    level_name = os.environ.get("SEQC_LOG_LEVEL", "INFO").upper()
    level = getattr(logging, level_name, logging.INFO)

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    logging.getLogger("seqc").setLevel(level)


# Default values
DEFAULT_MAX_N = 24
DEFAULT_FAST_PATH_RADIUS = 8
DEFAULT_PRIME_ROUNDS = 64
DEFAULT_PRIME_SEED = 0x5EC
DEFAULT_ORDER_LOOP_LIMIT = 1 << 20
DEFAULT_FACTOR_BUDGET = 1 << 16
DEFAULT_RANDOM_SAMPLES = 10000
DEFAULT_ORACLE_SAMPLES = 100000
DEFAULT_VERIFY_SEED = 2024

# Config file path, relative to the working directory
CONFIG_PATH = "seqc.yml"


@dataclass
class ExpectationConfig:
    """Limits for exhaustive expectation sweeps."""

    max_n: int = DEFAULT_MAX_N


@dataclass
class FastPathConfig:
    """Lattice fast path for rational complexity."""

    radius: int = DEFAULT_FAST_PATH_RADIUS


@dataclass
class PrimalityConfig:
    """Randomized primality above the deterministic range."""

    rounds: int = DEFAULT_PRIME_ROUNDS
    seed: int = DEFAULT_PRIME_SEED


@dataclass
class OrderConfig:
    """Multiplicative order computation limits."""

    loop_limit: int = DEFAULT_ORDER_LOOP_LIMIT
    factor_budget: int = DEFAULT_FACTOR_BUDGET


@dataclass
class VerifyConfig:
    """Sampling used by the randomized property suites."""

    random_samples: int = DEFAULT_RANDOM_SAMPLES
    oracle_samples: int = DEFAULT_ORACLE_SAMPLES
    seed: int = DEFAULT_VERIFY_SEED


@dataclass
class SeqcConfig:
    """Main configuration class."""

    version: str = "1.0"
    threads: Optional[int] = None
    expectation: ExpectationConfig = field(default_factory=ExpectationConfig)
    fast_path: FastPathConfig = field(default_factory=FastPathConfig)
    primality: PrimalityConfig = field(default_factory=PrimalityConfig)
    order: OrderConfig = field(default_factory=OrderConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"{name} must be an integer, got {raw!r}") from None


def load_config(path: Optional[Path] = None) -> SeqcConfig:
    """Load seqc configuration.

    Priority (highest to lowest):
    1. Environment variables (SEQC_THREADS, SEQC_MAX_N, SEQC_SEED)
    2. Config file (seqc.yml in the working directory, or ``path``)
    3. Package defaults

    Args:
        path: Config file or directory containing seqc.yml.
            Defaults to the current directory.

    Returns:
        SeqcConfig instance
    """
    config = SeqcConfig()

    if path is None:
        path = Path.cwd()
    config_file = path / CONFIG_PATH if path.is_dir() else path

    if config_file.exists():
        with open(config_file) as f:
            data = yaml.safe_load(f) or {}

        config.version = str(data.get("version", config.version))
        if data.get("threads") is not None:
            config.threads = int(data["threads"])

        if "expectation" in data:
            config.expectation.max_n = data["expectation"].get("max_n", DEFAULT_MAX_N)
        if "fast_path" in data:
            config.fast_path.radius = data["fast_path"].get(
                "radius", DEFAULT_FAST_PATH_RADIUS
            )
        if "primality" in data:
            config.primality.rounds = data["primality"].get("rounds", DEFAULT_PRIME_ROUNDS)
            config.primality.seed = data["primality"].get("seed", DEFAULT_PRIME_SEED)
        if "order" in data:
            config.order.loop_limit = data["order"].get(
                "loop_limit", DEFAULT_ORDER_LOOP_LIMIT
            )
            config.order.factor_budget = data["order"].get(
                "factor_budget", DEFAULT_FACTOR_BUDGET
            )
        if "verify" in data:
            config.verify.random_samples = data["verify"].get(
                "random_samples", DEFAULT_RANDOM_SAMPLES
            )
            config.verify.oracle_samples = data["verify"].get(
                "oracle_samples", DEFAULT_ORACLE_SAMPLES
            )
            config.verify.seed = data["verify"].get("seed", DEFAULT_VERIFY_SEED)

    # Environment overrides
    if (threads := _env_int("SEQC_THREADS")) is not None:
        config.threads = threads
    if (max_n := _env_int("SEQC_MAX_N")) is not None:
        config.expectation.max_n = max_n
    if (seed := _env_int("SEQC_SEED")) is not None:
        config.verify.seed = seed

    if config.expectation.max_n > DEFAULT_MAX_N:
        raise PreconditionError(
            f"expectation.max_n may not exceed {DEFAULT_MAX_N}, got {config.expectation.max_n}"
        )
    return config


def available_parallelism() -> int:
    """Number of CPUs this process may run on."""
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def resolve_threads(flag: Optional[int], config: Optional[SeqcConfig] = None) -> int:
    """Worker count: --threads flag, then SEQC_THREADS / config, then CPU count."""
    if flag is not None:
        threads = flag
    else:
        config = config or load_config()
        threads = config.threads if config.threads is not None else available_parallelism()
    if threads < 1:
        raise PreconditionError(f"thread count must be at least 1, got {threads}")
    return threads


# Global config instance
_config: Optional[SeqcConfig] = None


def get_config() -> SeqcConfig:
    """Get global configuration, loading it on first use."""
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reset_config() -> None:
    """Drop the cached configuration (used by tests)."""
    global _config
    _config = None
