"""Kernel backend selection.

The compiled extension (_kernels) is used when it imported successfully and
the field is small enough to have lookup tables; otherwise the pure-Python
twin (_kernels_py) runs.  Set SCHURCODES_BACKEND=python to force the
fallback, e.g. for benchmarking.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py

try:
    from . import _kernels as _cy
except ImportError:  # extension not built
    _cy = None

_FORCED = os.environ.get("SCHURCODES_BACKEND")

COMPILED_AVAILABLE = _cy is not None


def active_backend() -> str:
    if _FORCED == "python" or _cy is None:
        return "python"
    return "cython"


def _use_compiled(field, backend):
    if backend == "python":
        return False
    if backend == "cython":
        if _cy is None:
            raise RuntimeError("compiled kernels are not available")
        return True
    return active_backend() == "cython" and field.kernel_tables() is not None


def rref(field, mat, backend=None):
    if _use_compiled(field, backend):
        return _cy.rref(mat, *field.kernel_tables())
    return _py.rref(field, mat)


def min_weight(field, gen, stop_at=1, backend=None):
    if _use_compiled(field, backend):
        return _cy.min_weight(gen, *field.kernel_tables()[:3], stop_at)
    return _py.min_weight(field, gen, stop_at)


def row_products(field, a, b, backend=None):
    if _use_compiled(field, backend):
        return _cy.row_products(a, b, field.kernel_tables()[1])
    return _py.row_products(field, a, b)
