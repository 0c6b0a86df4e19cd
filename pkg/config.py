#!/usr/bin/env python3
"""
config.py
- Loads .env (if present) and exposes the workbench settings as module constants
- Every library function that needs one of these looks it up at call time,
  so tests can monkeypatch `config.<NAME>` directly

Environment (optional):
  CSF_MEMO_BOUND          Largest vertex count that gets a canonical key (default: 10)
  CSF_SUBSET_EDGE_LIMIT   Largest edge count the subset engine accepts (default: 24)
  CSF_TREE_MAX_N          Largest tree size for search-trees (default: 9)
  CSF_JOBS                Worker processes for corpus sweeps (default: 1)
  CSF_WITNESS_DIR         Directory for failure witnesses (default: "witnesses")
  CSF_LOG_LEVEL           Logging level name (default: "INFO")
"""

import os
import logging
from pathlib import Path

log = logging.getLogger("config")

# ---------------- Dotenv (optional) ----------------
try:
    from dotenv import load_dotenv, find_dotenv
    env_path = find_dotenv(usecwd=True)
    load_dotenv(dotenv_path=env_path)
    if env_path:
        log.info("Loaded .env: %s", env_path)
except Exception as e:
    log.debug("dotenv not used (%s)", e)

# ---------------- Settings ----------------
MEMO_BOUND = int(os.environ.get("CSF_MEMO_BOUND", "10"))
SUBSET_EDGE_LIMIT = int(os.environ.get("CSF_SUBSET_EDGE_LIMIT", "24"))
TREE_MAX_N = int(os.environ.get("CSF_TREE_MAX_N", "9"))
JOBS = int(os.environ.get("CSF_JOBS", "1"))
WITNESS_DIR = Path(os.environ.get("CSF_WITNESS_DIR", "witnesses"))
LOG_LEVEL = os.environ.get("CSF_LOG_LEVEL", "INFO").upper()

LOG_FORMAT = "%(asctime)s %(levelname)s: %(message)s"


def setup_logging(level: str | None = None) -> None:
    """Configure root logging once, on stderr, so stdout stays JSON."""
    name = (level or LOG_LEVEL).upper()
    logging.basicConfig(level=getattr(logging, name, logging.INFO), format=LOG_FORMAT)
