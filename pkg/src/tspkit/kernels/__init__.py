"""Numeric kernel backends.

The compiled Cython backend is preferred when its extension was built; the
pure numpy backend is the fallback. Both implement the same functions with
bit-identical results (verified by tests/test_kernels.py), so the choice
only affects speed. Set TSPKIT_BACKEND=pure or TSPKIT_BACKEND=compiled to
force one explicitly; forcing `compiled` raises if the extension is missing.
"""

from __future__ import annotations

import os

from tspkit.kernels import pure

try:
    from tspkit.kernels import _ckernels as compiled
except ImportError:
    compiled = None

_requested = os.environ.get("TSPKIT_BACKEND", "").strip().lower()
if _requested in ("pure", "python"):
    _active = pure
elif _requested in ("compiled", "c", "cython"):
    if compiled is None:
        raise ImportError(
            "TSPKIT_BACKEND=compiled requested but the compiled kernels are not built; "
            "reinstall with a C compiler or unset TSPKIT_BACKEND"
        )
    _active = compiled
elif _requested:
    raise ImportError(f"unknown TSPKIT_BACKEND value {_requested!r} (use 'pure' or 'compiled')")
else:
    _active = compiled if compiled is not None else pure

BACKEND: str = _active.NAME

tour_length = _active.tour_length
batch_tour_lengths = _active.batch_tour_lengths
two_opt = _active.two_opt
greedy_scan = _active.greedy_scan
exact_search = _active.exact_search


def available_backends() -> dict[str, object]:
    """Importable backend modules keyed by name."""
    out: dict[str, object] = {"pure": pure}
    if compiled is not None:
        out["compiled"] = compiled
    return out
