# lieinv/config.py

import logging
import os
import sys
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from lieinv.errors import ConfigError

# ── 1) .env 로드 ──────────────────────────────────────
BASE_DIR = Path(__file__).resolve().parents[1]
ENV_PATH = BASE_DIR / ".env"
DATA_DIR = Path(__file__).resolve().parent / "data"
DEFAULT_TABLES_PATH = DATA_DIR / "paper_tables.yaml"

log = logging.getLogger("lieinv.config")


# ── 2) 설정 스키마 ────────────────────────────────────
class Settings(BaseModel):
    log_level: str = "WARNING"
    grid_cap: int = Field(1_000_000, ge=1)
    verify_grid: str = "small"
    random_seed: int = 20040101
    random_j: int = Field(200, ge=1)
    tables_path: Path = DEFAULT_TABLES_PATH


ENV_KEYS = {
    "log_level": "LIEINV_LOG_LEVEL",
    "grid_cap": "LIEINV_GRID_CAP",
    "verify_grid": "LIEINV_VERIFY_GRID",
    "random_seed": "LIEINV_RANDOM_SEED",
    "random_j": "LIEINV_RANDOM_J",
    "tables_path": "LIEINV_TABLES",
}


def load_settings(env_path: Optional[Path] = None) -> Settings:
    """
    .env(있으면) → 환경변수(LIEINV_*) 순서로 읽어서 Settings를 만든다.
    이미 설정된 환경변수는 .env 값으로 덮어쓰지 않는다.
    """
    path = env_path or ENV_PATH
    if path.exists():
        load_dotenv(path)
        log.debug(".env 로드됨 %s", path)

    raw = {}
    for field_name, env_key in ENV_KEYS.items():
        value = os.getenv(env_key)
        if value not in (None, ""):
            raw[field_name] = value

    try:
        settings = Settings(**raw)
    except ValidationError as e:
        raise ConfigError(f"invalid LIEINV_* setting: {e.errors()[0]['msg']}") from e

    if not isinstance(logging.getLevelName(settings.log_level.upper()), int):
        raise ConfigError(f"invalid LIEINV_LOG_LEVEL: {settings.log_level}")
    return settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()


# ── 3) 로깅 설정 ──────────────────────────────────────
class BannerFormatter(logging.Formatter):
    """`=== DEBUG[cohomology]: message ===` 형태로 출력"""

    def format(self, record: logging.LogRecord) -> str:
        name = record.name.rsplit(".", 1)[-1]
        text = f"=== {record.levelname}[{name}]: {record.getMessage()} ==="
        if record.exc_info:
            text += "\n" + self.formatException(record.exc_info)
        return text


def setup_logging(level: Optional[str] = None) -> None:
    root = logging.getLogger("lieinv")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(BannerFormatter())
    root.addHandler(handler)
    root.setLevel((level or get_settings().log_level).upper())
    root.propagate = False
