"""Search-kernel selection: compiled extension when available, else pure Python.

Set DIMP8_PURE_PYTHON=1 to force the fallback. The compiled kernel only
handles <= 64 edges and finite weights below 2**32; calls outside that range
are routed to the Python twin regardless of the selected backend.
"""

from __future__ import annotations

import os

from . import _dimcore_py

_COMPILED = None
if not os.environ.get("DIMP8_PURE_PYTHON"):
    try:
        from . import _dimcore as _COMPILED  # type: ignore[attr-defined]
    except ImportError:
        _COMPILED = None

BACKEND = "cython" if _COMPILED is not None else "python"

_MAX_COMPILED_WEIGHT = 1 << 32


def _compiled_ok(m: int, weights) -> bool:
    return m <= 64 and all(w == float("inf") or w < _MAX_COMPILED_WEIGHT for w in weights)


def search_min_dim(m: int, dom: list[int], weights: list, backend: str | None = None):
    """Dispatch the exhaustive domination search to the chosen backend."""
    use = backend or BACKEND
    if use == "cython":
        if _COMPILED is None:
            raise RuntimeError("compiled kernel not available")
        if _compiled_ok(m, weights):
            return _COMPILED.search_min_dim(m, dom, weights)
        return _dimcore_py.search_min_dim(m, dom, weights)
    if use == "python":
        return _dimcore_py.search_min_dim(m, dom, weights)
    raise ValueError(f"unknown kernel backend: {use!r}")


def available_backends() -> list[str]:
    out = ["python"]
    if _COMPILED is not None:
        out.insert(0, "cython")
    return out


enumerate_dims = _dimcore_py.enumerate_dims
