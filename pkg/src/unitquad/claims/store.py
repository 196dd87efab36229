"""Stable JSON rendering and the on-disk result cache."""
from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile
from pathlib import Path
from typing import Any

CACHE_VERSION = 1
FLOAT_DIGITS = 6


def dumps_fixed(obj: Any, indent: int | None = 2) -> str:
    """JSON with sorted keys and every float written with six decimals."""

    def enc(o: Any, level: int) -> str:
        pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
        end = "" if indent is None else "\n" + " " * (indent * level)
        sep = ", " if indent is None else ","
        if isinstance(o, bool) or o is None:
            return json.dumps(o)
        if isinstance(o, float):
            if not math.isfinite(o):
                return json.dumps(str(o))
            text = f"{o:.{FLOAT_DIGITS}f}"
            return "0.000000" if text == "-0.000000" else text
        if isinstance(o, (int, str)):
            return json.dumps(o)
        if hasattr(o, "item"):  # numpy scalars
            return enc(o.item(), level)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{pad}{json.dumps(str(k))}: {enc(v, level + 1)}" for k, v in sorted(o.items(), key=lambda kv: str(kv[0]))]
            return "{" + sep.join(items) + end + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            if all(isinstance(x, (int, float, str, bool)) or x is None for x in o):
                return "[" + ", ".join(enc(x, level + 1) for x in o) + "]"
            return "[" + sep.join(f"{pad}{enc(x, level + 1)}" for x in o) + end + "]"
        raise TypeError(f"cannot serialize {type(o).__name__}")

    return enc(obj, 0)


def cache_key(**params: Any) -> str:
    text = json.dumps(params, sort_keys=True, default=str)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _plain(o: Any) -> Any:
    if hasattr(o, "item"):
        return o.item()
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


class ResultCache:
    """One JSON file per (q, artifact kind); writes are atomic."""

    def __init__(self, directory: str | os.PathLike | None):
        self.directory = Path(directory) if directory is not None else None

    @property
    def enabled(self) -> bool:
        return self.directory is not None

    def path(self, q: int, kind: str) -> Path:
        return self.directory / f"q{q:03d}_{kind}.json"

    def load(self, q: int, kind: str, key: str) -> Any | None:
        if not self.enabled:
            return None
        path = self.path(q, kind)
        try:
            doc = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if doc.get("version") != CACHE_VERSION or doc.get("key") != key:
            return None
        return doc.get("payload")

    def store(self, q: int, kind: str, key: str, payload: Any) -> None:
        if not self.enabled:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        doc = {"version": CACHE_VERSION, "q": q, "kind": kind, "key": key, "payload": payload}
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=f".q{q:03d}_{kind}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(json.dumps(doc, sort_keys=True, default=_plain))
            os.replace(tmp, self.path(q, kind))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
