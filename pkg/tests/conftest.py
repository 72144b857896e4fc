"""Pytest configuration and fixtures."""

import pytest

from seqc.config import reset_config

SEQC_ENV = ("SEQC_THREADS", "SEQC_MAX_N", "SEQC_SEED", "SEQC_LOG_LEVEL")


@pytest.fixture(autouse=True)
def clean_config(monkeypatch, tmp_path):
    """Run every test with package defaults: no SEQC_* env, no seqc.yml."""
    for name in SEQC_ENV:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    reset_config()
    yield
    reset_config()
