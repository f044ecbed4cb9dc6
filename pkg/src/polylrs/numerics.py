"""Scalar arithmetic: exact rationals by default, floats with zero-snapping on request.

Every number that enters the library goes through :func:`to_scalar` for the
active :class:`TolerancePolicy`. In rational mode scalars are
:class:`fractions.Fraction`; in float mode they are Python floats (or float64
inside numpy arrays).
"""

from __future__ import annotations

import math
import re
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

import numpy as np

Scalar = Union[Fraction, float]

MACHINE_EPS = sys.float_info.epsilon

ZERO = Fraction(0)
ONE = Fraction(1)

_NUMBER_RE = re.compile(r"[+-]?(?:\d+\.\d+|\d+/\d+|\d+)")


class Mode(str, Enum):
    RATIONAL = "rational"
    FLOAT = "float"


@dataclass(frozen=True)
class TolerancePolicy:
    """Arithmetic mode plus the two thresholds used by the float heuristics.

    ``zero_snap``: dictionary entries with ``|x| <= zero_snap`` are set to 0.
    ``feas_slack``: nonnegativity tests accept ``x >= -feas_slack``.
    Both are exactly 0 in rational mode.
    """

    mode: Mode = Mode.RATIONAL
    zero_snap: Scalar = ZERO
    feas_slack: Scalar = ZERO

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.mode is Mode.RATIONAL:
            if self.zero_snap != 0 or self.feas_slack != 0:
                raise ValueError("tolerances must be exactly 0 in rational mode")
            object.__setattr__(self, "zero_snap", ZERO)
            object.__setattr__(self, "feas_slack", ZERO)
        else:
            zs, fs = float(self.zero_snap), float(self.feas_slack)
            if not (math.isfinite(zs) and math.isfinite(fs)) or zs < 0 or fs < 0:
                raise ValueError("tolerances must be finite and nonnegative")
            object.__setattr__(self, "zero_snap", zs)
            object.__setattr__(self, "feas_slack", fs)

    @classmethod
    def rational(cls) -> TolerancePolicy:
        return cls(Mode.RATIONAL)

    @classmethod
    def floating(cls, zero_snap: float | None = None, feas_slack: float | None = None) -> TolerancePolicy:
        """Float mode; defaults are 100 and 10 machine epsilons."""
        return cls(
            Mode.FLOAT,
            100 * MACHINE_EPS if zero_snap is None else zero_snap,
            10 * MACHINE_EPS if feas_slack is None else feas_slack,
        )

    @property
    def exact(self) -> bool:
        return self.mode is Mode.RATIONAL

    @property
    def dtype(self):
        return object if self.exact else np.float64

    def scalar(self, x) -> Scalar:
        return to_scalar(x, self)

    def array(self, values) -> np.ndarray:
        """numpy array of scalars for this mode (object dtype holding Fractions when exact)."""
        arr = np.asarray(values, dtype=object)
        out = np.empty(arr.shape, dtype=self.dtype)
        flat_in, flat_out = arr.reshape(-1), out.reshape(-1)
        for i, x in enumerate(flat_in):
            flat_out[i] = to_scalar(x, self)
        return out

    @property
    def zero(self) -> Scalar:
        return ZERO if self.exact else 0.0

    @property
    def one(self) -> Scalar:
        return ONE if self.exact else 1.0


RATIONAL = TolerancePolicy.rational()
FLOAT = TolerancePolicy.floating()


def to_scalar(x, policy: TolerancePolicy = RATIONAL) -> Scalar:
    """Coerce ``x`` to the scalar type of ``policy``.

    Strings follow the file grammar. Python floats entering rational mode are
    read through their shortest decimal repr, so ``0.1`` becomes ``1/10``.
    """
    if isinstance(x, str):
        return parse_scalar(x, policy)
    if policy.exact:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (bool, np.bool_)):
            return Fraction(int(x))
        if isinstance(x, (int, np.integer)):
            return Fraction(int(x))
        if isinstance(x, (float, np.floating)):
            if not math.isfinite(x):
                raise ValueError(f"non-finite value {x!r}")
            return Fraction(repr(float(x)))
        return Fraction(x)
    value = float(x)
    if not math.isfinite(value):
        raise ValueError(f"non-finite value {x!r}")
    return value


def parse_scalar(text: str, policy: TolerancePolicy = RATIONAL) -> Scalar:
    """Parse an integer, ``digits.digits`` decimal, or ``p/q`` rational (q > 0)."""
    token = text.strip()
    if not _NUMBER_RE.fullmatch(token):
        raise ValueError(f"malformed number {text!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        value = Fraction(int(num), int(den))
    else:
        value = Fraction(token)
    return value if policy.exact else float(value)


def format_scalar(x: Scalar) -> str:
    """Reduced ``p/q`` (or integer) for rationals, 17 significant digits for floats."""
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".17g")
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_effectively_zero(x: Scalar, policy: TolerancePolicy = RATIONAL) -> bool:
    if policy.exact:
        return x == 0
    return abs(x) <= policy.zero_snap


def is_feasibly_nonneg(x: Scalar, policy: TolerancePolicy = RATIONAL) -> bool:
    if policy.exact:
        return x >= 0
    return x >= -policy.feas_slack
