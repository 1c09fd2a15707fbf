"""Selects the search-kernel backend at import time.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module takes over.  Setting the environment
variable ``ZAGREBCHECK_BACKEND=python`` forces the fallback.
"""

from __future__ import annotations

import importlib
import os

_API = (
    "adj_from_mask",
    "is_connected",
    "max_independent_set",
    "vertex_connectivity",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "longest_cycle",
)

BACKEND = "python"


def available() -> list[str]:
    names = ["python"]
    try:
        importlib.import_module("zagrebcheck._kernels")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


def use(name: str) -> None:
    """Rebind the kernel functions of this module to backend ``name``."""
    global BACKEND
    if name == "cython":
        mod = importlib.import_module("zagrebcheck._kernels")
    elif name == "python":
        mod = importlib.import_module("zagrebcheck._pykernels")
    else:
        raise ValueError(f"unknown kernel backend {name!r}")
    g = globals()
    for fn in _API:
        g[fn] = getattr(mod, fn)
    BACKEND = name


def _default() -> str:
    forced = os.environ.get("ZAGREBCHECK_BACKEND", "").strip().lower()
    if forced:
        return forced
    return available()[0]


use(_default())
