"""Backend selection for the tableau kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module. Set ``POLYLRS_PURE_PYTHON=1`` to force
the fallback, or call :func:`set_backend` at runtime.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

NO_CANDIDATE = _pykernels.NO_CANDIDATE
TIE = _pykernels.TIE

_BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

pivot_inplace = _pykernels.pivot_inplace
lex_ratio_row = _pykernels.lex_ratio_row
lexmin_violation = _pykernels.lexmin_violation
BACKEND = "python"


def available_backends() -> list[str]:
    return list(_BACKENDS)


def set_backend(name: str) -> None:
    global pivot_inplace, lex_ratio_row, lexmin_violation, BACKEND
    try:
        mod = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable kernel backend {name!r}; have {available_backends()}") from None
    pivot_inplace = mod.pivot_inplace
    lex_ratio_row = mod.lex_ratio_row
    lexmin_violation = mod.lexmin_violation
    BACKEND = name


@contextmanager
def using_backend(name: str):
    previous = BACKEND
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


if _ckernels is not None and os.environ.get("POLYLRS_PURE_PYTHON") != "1":
    set_backend("compiled")
