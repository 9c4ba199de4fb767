"""Sieve backend selection.

The compiled extension is preferred when built; the pure-Python module is
the fallback. Set ``PRIMEORDER_SIEVE=python`` or ``=cython`` to force one
(requesting the compiled backend when it is missing is an error).
"""

from __future__ import annotations

import os

from . import _sieve_py

_requested = os.environ.get("PRIMEORDER_SIEVE", "").strip().lower()

if _requested in ("python", "py", "pure"):
    _impl = _sieve_py
    BACKEND = "python"
elif _requested in ("", "cython", "c", "compiled"):
    try:
        from . import _sieve_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        if _requested:
            raise ImportError(
                "PRIMEORDER_SIEVE requested the compiled sieve backend, "
                "but primeorder._sieve_cy is not built"
            )
        _impl = _sieve_py
        BACKEND = "python"
else:
    raise ImportError(f"unknown PRIMEORDER_SIEVE value: {_requested!r}")

sieve_first_n = _impl.sieve_first_n
fnv1a64 = _impl.fnv1a64


def available_backends() -> dict[str, bool]:
    """Which backends import on this host, keyed by name."""
    try:
        from . import _sieve_cy  # noqa: F401

        compiled = True
    except ImportError:
        compiled = False
    return {"python": True, "cython": compiled}
