#!/usr/bin/env python3
"""
witness_store.py
- Persists failing verification reports as replayable JSON witness files
- Layout: <CSF_WITNESS_DIR>/<check>/<fingerprint>-<params hash>.json plus summary.json
- Plain files only; nothing here needs a database or a lock
"""

import json
import hashlib
import logging
from datetime import datetime
from pathlib import Path

import config

SUMMARY_NAME = "summary.json"


class WitnessStore:
    def __init__(self, root: Path | str | None = None):
        self.root = Path(root) if root is not None else Path(config.WITNESS_DIR)
        self.log = logging.getLogger("witness_store")

    def _path_for(self, check: str, record: dict) -> Path:
        fp = record["instance"].get("fingerprint") or "standalone"
        params = json.dumps(record["instance"].get("params", {}), sort_keys=True)
        suffix = hashlib.sha256(params.encode()).hexdigest()[:8]
        return self.root / check / f"{fp}-{suffix}.json"

    def save(self, report) -> Path:
        """Write one failing report; returns the witness path."""
        record = report.to_json() if hasattr(report, "to_json") else dict(report)
        check = record["check"]
        path = self._path_for(check, record)
        path.parent.mkdir(parents=True, exist_ok=True)
        data = {
            "check": check,
            "instance": record["instance"],
            "witness": record.get("witness"),
            "note": record.get("note"),
            "created_at": datetime.now().isoformat(),
        }
        with open(path, "w") as f:
            json.dump(data, f, indent=2)
        self.log.info("Witness written: %s", path)
        return path

    def save_failures(self, reports) -> list[Path]:
        paths = [self.save(r) for r in reports if not r.passed]
        if paths:
            self.write_summary()
        return paths

    def load(self, path: Path | str) -> dict:
        with open(path, "r") as f:
            data = json.load(f)
        if "check" not in data or "instance" not in data:
            raise ValueError(f"{path}: not a witness file (needs 'check' and 'instance')")
        return data

    def list_witnesses(self) -> dict[str, list[Path]]:
        """check name -> witness files, newest first."""
        out: dict[str, list[Path]] = {}
        if not self.root.exists():
            return out
        for item in sorted(self.root.iterdir()):
            if item.is_dir():
                files = sorted(item.glob("*.json"), key=lambda p: p.stat().st_mtime, reverse=True)
                if files:
                    out[item.name] = files
        return out

    def write_summary(self) -> dict:
        """Regenerate summary.json: counts per check and the overall date range."""
        summary = {
            "generated_at": datetime.now().isoformat(),
            "total_witnesses": 0,
            "checks": {},
            "date_range": {"oldest": None, "newest": None},
        }
        stamps = []
        for check, files in self.list_witnesses().items():
            summary["checks"][check] = len(files)
            summary["total_witnesses"] += len(files)
            for p in files:
                try:
                    stamps.append(self.load(p).get("created_at"))
                except (OSError, ValueError) as e:
                    self.log.warning("Unreadable witness %s: %s", p, e)
        stamps = sorted(s for s in stamps if s)
        if stamps:
            summary["date_range"]["oldest"] = stamps[0]
            summary["date_range"]["newest"] = stamps[-1]
        self.root.mkdir(parents=True, exist_ok=True)
        with open(self.root / SUMMARY_NAME, "w") as f:
            json.dump(summary, f, indent=2)
        self.log.info("Witness summary: %d files across %d checks", summary["total_witnesses"], len(summary["checks"]))
        return summary

    def read_summary(self) -> dict | None:
        path = self.root / SUMMARY_NAME
        if not path.exists():
            return None
        with open(path, "r") as f:
            return json.load(f)
