"""On-disk memo cache for the expensive braid-family results.

Entries are JSON files keyed by (family, params, kernel version); corrupt
or unreadable entries are ignored and recomputed.  The directory comes
from EQKL_CACHE, falling back to a per-user cache directory.
"""

import hashlib
import json
import os
from pathlib import Path

# Bump when any computation feeding cached values changes meaning.
KERNEL_VERSION = "eqkl-kernel-1"

_KEY = hashlib.sha256(KERNEL_VERSION.encode()).hexdigest()[:12]


def cache_dir() -> Path:
    env = os.environ.get("EQKL_CACHE")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME", os.path.join(
        os.path.expanduser("~"), ".cache"))
    return Path(base) / "eqkl"


def _path(family: str, params) -> Path:
    tag = "-".join(str(p) for p in (params if isinstance(params, tuple)
                                    else (params,)))
    return cache_dir() / f"{family}-{tag}-{_KEY}.json"


def load_graded(family: str, params):
    from .render import graded_from_json_obj
    path = _path(family, params)
    try:
        with open(path) as fh:
            return graded_from_json_obj(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError):
        return None


def store_graded(family: str, params, value) -> None:
    from .render import graded_json_obj
    path = _path(family, params)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w") as fh:
            json.dump(graded_json_obj(value), fh)
        os.replace(tmp, path)
    except OSError:
        pass


def clear() -> int:
    """Remove every cache entry; returns the number of files removed."""
    root = cache_dir()
    removed = 0
    if root.is_dir():
        for path in root.glob("*.json"):
            try:
                path.unlink()
                removed += 1
            except OSError:
                pass
    return removed


def stats() -> dict:
    root = cache_dir()
    files = list(root.glob("*.json")) if root.is_dir() else []
    return {
        "directory": str(root),
        "entries": len(files),
        "bytes": sum(path.stat().st_size for path in files),
    }
