"""Sieve backend selection.

Imports the compiled linear-sieve extension when it was built, otherwise
falls back to the NumPy implementation. Both produce bit-identical arrays;
EDGEBOUNDS_NO_EXT=1 forces the fallback (used by the backend-equality tests
and the benchmark).
"""

import math
import os

import numpy as np

from . import _spf_fallback

BACKEND = "python"
_fill_spf = None

if os.environ.get("EDGEBOUNDS_NO_EXT") != "1":
    try:
        from ._spfsieve import fill_spf as _fill_spf  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _fill_spf = None


def _prime_count_upper(limit: int) -> int:
    # pi(x) < 1.26 x / log x for x >= 17.
    if limit < 17:
        return 8
    return int(1.26 * limit / math.log(limit)) + 8


def spf_array(limit: int) -> np.ndarray:
    """Smallest prime factor of every n in [0, limit]; 0 below 2."""
    if BACKEND == "compiled":
        spf = np.zeros(limit + 1, dtype=np.int32)
        scratch = np.zeros(_prime_count_upper(limit), dtype=np.int32)
        _fill_spf(spf, scratch)
        return spf
    return _spf_fallback.spf_array(limit)
