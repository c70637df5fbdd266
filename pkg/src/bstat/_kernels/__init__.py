"""Kernel backends for whole-group counting.

The compiled extension is preferred when it is importable; the
pure-Python fallback is always available.  Set ``BSTAT_KERNEL=python``
(or ``=cython``) to pin a backend at import time, or call :func:`use`
to switch at runtime (benchmarks and tests do).
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _speedups
except ImportError:
    _speedups = None

_backends = {"python": pure}
if _speedups is not None:
    _backends["cython"] = _speedups

_forced = os.environ.get("BSTAT_KERNEL")
if _forced is not None and _forced not in _backends:
    raise ImportError(
        f"BSTAT_KERNEL={_forced!r} is not available; choose from {sorted(_backends)}"
    )

_active_name = _forced or ("cython" if "cython" in _backends else "python")


def available() -> tuple[str, ...]:
    """Names of the importable backends."""
    return tuple(sorted(_backends))


def backend_name() -> str:
    """Name of the backend counting calls currently dispatch to."""
    return _active_name


def active():
    """The module implementing the current backend."""
    return _backends[_active_name]


def use(name: str) -> str:
    """Switch the active backend; returns the previous name."""
    global _active_name
    if name not in _backends:
        raise ValueError(f"unknown backend {name!r}; available: {sorted(_backends)}")
    previous = _active_name
    _active_name = name
    return previous
