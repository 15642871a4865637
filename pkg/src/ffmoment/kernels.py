"""Backend selection for the hot kernels.

The compiled Cython extension is used when it is importable; otherwise the
pure-Python implementation takes over with an identical API.  Setting the
environment variable FFMOMENT_PURE (to anything non-empty) forces the pure
backend, which the benchmark and the parity tests rely on.
"""

from __future__ import annotations

import os

from ffmoment import _purekernels

if os.environ.get("FFMOMENT_PURE"):
    _impl = _purekernels
else:
    try:
        from ffmoment import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _purekernels

BACKEND: str = _impl.NAME

symbol = _impl.symbol
symbol_many = _impl.symbol_many
char_sum_direct = _impl.char_sum_direct
poly_is_irreducible = _impl.poly_is_irreducible


def backend() -> str:
    """Name of the active kernel backend: "cython" or "pure"."""
    return BACKEND
