"""Kernel backend selection.

The compiled kernels are used when the extension was built; setting
SPECHTCOMB_PURE_PYTHON=1 forces the pure-Python implementation.
"""
from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("SPECHTCOMB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

heights_from_steps = _impl.heights_from_steps
is_dominant = _impl.is_dominant
on_wall = _impl.on_wall
degree2 = _impl.degree2
wall_hits = _impl.wall_hits
last_wall = _impl.last_wall
reg = _impl.reg
arc_counts = _impl.arc_counts
reflect_arcs = _impl.reflect_arcs
dominant_paths = _impl.dominant_paths

__all__ = [
    "BACKEND",
    "heights_from_steps",
    "is_dominant",
    "on_wall",
    "degree2",
    "wall_hits",
    "last_wall",
    "reg",
    "arc_counts",
    "reflect_arcs",
    "dominant_paths",
]
