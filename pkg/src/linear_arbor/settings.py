import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict

import yaml
from dotenv import load_dotenv

CONFIG_DIR = Path(__file__).parent / "config"


class Settings:
    """Process-wide settings from the environment (a .env file is honored)."""

    def __init__(self):
        load_dotenv()
        self.OUTPUT_DIR = os.getenv("LINEAR_ARBOR_OUTPUT_DIR", "./outputs")
        self.LOG_LEVEL = os.getenv("LINEAR_ARBOR_LOG_LEVEL", "INFO").upper()
        self.MAX_ROUNDS = _int_env("LINEAR_ARBOR_MAX_ROUNDS")
        self.EXACT_CUTOFF = _int_env("LINEAR_ARBOR_EXACT_CUTOFF")

    def pipeline_overrides(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        if self.MAX_ROUNDS is not None:
            out["max_rounds"] = self.MAX_ROUNDS
        if self.EXACT_CUTOFF is not None:
            out["exact_cutoff"] = self.EXACT_CUTOFF
        return out

    def configure_logging(self, quiet: bool = False) -> None:
        level = logging.WARNING if quiet else getattr(logging, self.LOG_LEVEL, logging.INFO)
        logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def _int_env(name: str):
    raw = os.getenv(name)
    if raw in (None, ""):
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


@lru_cache(maxsize=None)
def load_yaml(name: str) -> Dict[str, Any]:
    with open(CONFIG_DIR / name, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}
