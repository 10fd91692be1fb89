"""Catalog file access.

Catalogs (cubics, charts, lambda tables, arrows, signatures, unfolding
cases) are versioned JSON files shipped under ``painleve_cubics/data``.
A different catalog root can be supplied with the CLI ``--catalog`` flag
or the PAINLEVE_CUBICS_CATALOG environment variable, so transcription
fixes never require touching code.
"""

from __future__ import annotations

import json
import os
from importlib import resources
from pathlib import Path

ENV_VAR = "PAINLEVE_CUBICS_CATALOG"

_override_root: Path | None = None


class CatalogError(ValueError):
    pass


def set_catalog_root(path: str | os.PathLike | None) -> None:
    global _override_root
    _override_root = Path(path) if path is not None else None
    clear_caches()


def catalog_root() -> Path | None:
    if _override_root is not None:
        return _override_root
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def load(name: str) -> dict:
    """Load catalog ``name`` (e.g. 'charts') as parsed JSON."""
    root = catalog_root()
    try:
        if root is not None:
            text = (root / f"{name}.json").read_text()
        else:
            text = resources.files("painleve_cubics.data").joinpath(f"{name}.json").read_text()
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {name!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"catalog {name!r} is not valid JSON: {exc}") from exc


_cache_clearers: list = []


def cached(fn):
    """functools.cache wrapper that registers for catalog-override resets."""
    import functools

    wrapped = functools.cache(fn)
    _cache_clearers.append(wrapped.cache_clear)
    return wrapped


def clear_caches() -> None:
    for clear in _cache_clearers:
        clear()
