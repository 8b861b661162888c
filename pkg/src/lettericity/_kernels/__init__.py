"""Hot kernels with a numba backend and a pure-numpy fallback.

Set ``LETTERICITY_NO_NUMBA=1`` to force the numpy path. The numba path is
also skipped when numba cannot be imported. Both backends return identical
results; ``BACKEND`` names the active one.
"""
from __future__ import annotations

import os

from lettericity._kernels import numpy_impl

_disabled = os.environ.get("LETTERICITY_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

if _disabled:
    _impl = numpy_impl
else:
    try:
        from lettericity._kernels import numba_impl as _impl
    except ImportError:  # pragma: no cover - numba missing
        _impl = numpy_impl

BACKEND = "numba" if _impl is not numpy_impl else "numpy"

n_words = numpy_impl.n_words
random_adjacency = _impl.random_adjacency
pack_words = _impl.pack_words
exists_triple = _impl.exists_triple
exists_separated = _impl.exists_separated
exists_core = _impl.exists_core
event_hits = _impl.event_hits

EVENT_CODES = {"A": 0, "B": 1, "C": 2}
