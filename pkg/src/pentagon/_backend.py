"""Kernel selection: compiled ``_kernels`` when importable, else ``_fallback``."""

from __future__ import annotations

import numpy as np

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # not built
    _compiled = None

_active = "cython" if _compiled is not None else "python"


def available() -> list[str]:
    return ["python"] + (["cython"] if _compiled is not None else [])


def active() -> str:
    return _active


def set_backend(name: str) -> None:
    """Switch kernels globally; ``name`` is ``"python"`` or ``"cython"``."""
    global _active
    if name not in ("python", "cython"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "cython" and _compiled is None:
        raise RuntimeError("compiled kernels are not built")
    _active = name


def induced_cycles(g, k: int, backend: str | None = None, limit: int | None = None,
                   count_only: bool = False):
    """``(list of vertex tuples, count, complete)`` from the selected kernel."""
    which = backend or _active
    if which == "cython":
        indptr, indices = g.csr()
        arr, count, complete = _compiled.induced_cycles(
            indptr, indices, k, -1 if limit is None else limit, count_only
        )
        cycles = [] if count_only else [tuple(row) for row in arr.tolist()]
        return cycles, count, complete
    return _fallback.induced_cycles(g._bits, k, limit, count_only)


def intersection_pairs(cycles, n: int, backend: str | None = None):
    """Pairs of cycle indices sharing an edge, as an ``(m, 2)`` array (compiled)
    or a sorted list of tuples (fallback)."""
    which = backend or _active
    if which == "cython":
        if not cycles:
            return np.empty((0, 2), dtype=np.int64)
        arr = np.ascontiguousarray(np.asarray(cycles, dtype=np.int32))
        return _compiled.intersection_pairs(arr, n)
    return _fallback.intersection_pairs(cycles, n)
