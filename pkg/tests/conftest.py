import random

import pytest

from wild_mckay import loggers


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ('WMK_THREADS', 'WMK_LOG', 'WMK_LOG_PATH', 'WMK_LOG_LEVEL'):
        monkeypatch.delenv(name, raising=False)
    loggers._loggers.clear()
    yield
    loggers._loggers.clear()


@pytest.fixture
def rng():
    return random.Random(20240611)
