"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise (or when
``DUALFSIG_PURE_PYTHON`` is set to a non-empty value) the pure-Python
fallback in ``_pykernels`` is used.  ``BACKEND`` names the active one.
"""
from __future__ import annotations

import os

from . import _pykernels

# Largest prime below 2**31; products of two residues fit in int64.
RANK_PRIME = 2_147_483_647

_compiled = None
if not os.environ.get("DUALFSIG_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

_impl = _compiled if _compiled is not None else _pykernels
BACKEND = "cython" if _compiled is not None else "python"

enum_sum_histogram = _impl.enum_sum_histogram
rank_mod_prime = _impl.rank_mod_prime
bareiss_rank = _impl.bareiss_rank


def available_backends() -> dict:
    """Map backend name to module, for tests and benchmarks."""
    out = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    else:
        try:
            from . import _kernels
            out["cython"] = _kernels
        except ImportError:
            pass
    return out


def integer_rank(rows: list[list[int]]) -> int:
    """Exact rank over Q of an integer matrix.

    Rank mod a prime never exceeds the rational rank, so a full modular
    rank settles the question; anything short of full falls back to
    Bareiss elimination over the integers.
    """
    if not rows or not rows[0]:
        return 0
    full = min(len(rows), len(rows[0]))
    if rank_mod_prime(rows, RANK_PRIME) == full:
        return full
    return bareiss_rank(rows)
