"""Selects the compiled kernels when built, else the pure-Python ones.

Set ``SURFCAT_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
segment_crossings = _kernels_py.segment_crossings
admissible_pairs = _kernels_py.admissible_pairs

if not os.environ.get("SURFCAT_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        segment_crossings = _compiled.segment_crossings
        admissible_pairs = _compiled.admissible_pairs
        BACKEND = "cython"
