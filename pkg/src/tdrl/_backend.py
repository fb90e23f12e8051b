"""Selects the enumeration kernels at import time.

The compiled ``_kernels`` extension is used when it was built; otherwise, or
when ``TDRL_PURE_PYTHON`` is set to a non-empty value, the pure-Python
``_purepy`` module is used.  Both expose ``gather``, ``overlap_scan``,
``pairwise_max`` and ``greedy_pack`` with identical results.
"""

import os

if os.environ.get("TDRL_PURE_PYTHON"):
    from tdrl import _purepy as kernels
else:
    try:
        from tdrl import _kernels as kernels
    except ImportError:
        from tdrl import _purepy as kernels

BACKEND = kernels.NAME
