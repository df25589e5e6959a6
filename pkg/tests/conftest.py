# tests/conftest.py

import logging
import os
import random

import pytest

from lieinv.catalog import catalog_build
from lieinv.config import get_settings


@pytest.fixture(autouse=True)
def _clean_settings(monkeypatch):
    """LIEINV_* 가 테스트 밖 환경에 따라 바뀌지 않게"""
    keys = ("LIEINV_LOG_LEVEL", "LIEINV_GRID_CAP", "LIEINV_VERIFY_GRID",
            "LIEINV_RANDOM_SEED", "LIEINV_RANDOM_J", "LIEINV_TABLES")
    for key in keys:
        monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    yield
    # load_dotenv() writes os.environ directly; drop those so module-scoped
    # fixtures set up before the next test do not see them
    monkeypatch.undo()
    for key in keys:
        os.environ.pop(key, None)
    get_settings.cache_clear()
    root = logging.getLogger("lieinv")
    for handler in list(root.handlers):
        root.removeHandler(handler)


@pytest.fixture
def rng():
    return random.Random(20040101)


@pytest.fixture
def build():
    """build("d4_lambda", lam="3/5") 처럼 쓰는 catalog 생성기"""

    def _build(case_id, **params):
        return catalog_build(case_id, params)

    return _build


@pytest.fixture
def a4(build):
    return build("a4")


@pytest.fixture
def rh3(build):
    return build("rh3")


@pytest.fixture
def n4(build):
    return build("n4")


@pytest.fixture
def r2r2(build):
    return build("r2r2")


@pytest.fixture
def r2p(build):
    return build("r2p")
