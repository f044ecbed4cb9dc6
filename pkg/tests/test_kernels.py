"""The compiled and pure-Python kernels must agree exactly."""

import random
from fractions import Fraction as F

import numpy as np
import pytest

from polylrs import _pykernels, kernels
from polylrs.enumeration import lrs
from polylrs.dictionary import build_initial_dictionary
from polyfix import random_pointed

compiled = pytest.mark.skipif("compiled" not in kernels.available_backends(), reason="extension not built")


def test_backend_switching():
    before = kernels.BACKEND
    with kernels.using_backend("python"):
        assert kernels.BACKEND == "python" and kernels.pivot_inplace is _pykernels.pivot_inplace
    assert kernels.BACKEND == before
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


def random_tableau(rng, exact):
    m, d = rng.randint(2, 7), rng.randint(1, 3)
    vals = [[rng.randint(-4, 4) for _ in range(m + d + 2)] for _ in range(m + 1)]
    if exact:
        return np.array([[F(v, rng.randint(1, 3)) for v in row] for row in vals], dtype=object), d
    return np.array(vals, dtype=np.float64) / 3.0, d


@compiled
@pytest.mark.parametrize("exact", [True, False], ids=["fraction", "float"])
def test_pivot_parity(exact):
    from polylrs import _ckernels

    rng = random.Random(5)
    for _ in range(200):
        T, d = random_tableau(rng, exact)
        t, s = rng.randrange(T.shape[0]), rng.randrange(T.shape[1] - 1)
        if T[t, s] == 0:
            continue
        A, B = T.copy(), T.copy()
        _pykernels.pivot_inplace(A, t, s, 1e-14)
        _ckernels.pivot_inplace(B, t, s, 1e-14)
        assert np.array_equal(A, B)


@compiled
@pytest.mark.parametrize("exact", [True, False], ids=["fraction", "float"])
def test_ratio_and_lexmin_parity(exact):
    from polylrs import _ckernels

    rng = random.Random(6)
    for _ in range(300):
        T, d = random_tableau(rng, exact)
        # force some ties and degenerate rows
        if rng.random() < 0.3:
            T[-1] = T[-2]
        if rng.random() < 0.5:
            T[rng.randrange(T.shape[0]), -1] = 0
        s = rng.randrange(T.shape[1] - 1)
        assert _pykernels.lex_ratio_row(T, s, d) == _ckernels.lex_ratio_row(T, s, d)
        m = T.shape[0] - 1
        variables = list(range(1, m + d + 2))
        rng.shuffle(variables)
        basis, cobasis = variables[: m + 1], variables[m + 1 :]
        v = rng.choice([0] + cobasis)
        assert _pykernels.lexmin_violation(T, basis, cobasis, v) == _ckernels.lexmin_violation(T, basis, cobasis, v)


@compiled
def test_enumeration_parity():
    rng = random.Random(10)
    for P, v in random_pointed(rng, 20):
        D = build_initial_dictionary(P, v)
        with kernels.using_backend("python"):
            a = lrs(D)
        with kernels.using_backend("compiled"):
            b = lrs(D)
        assert a.vertices == b.vertices and a.ray_pairs == b.ray_pairs and a.pivots == b.pivots


def test_environment_forces_fallback():
    import os
    import subprocess
    import sys

    env = dict(os.environ, POLYLRS_PURE_PYTHON="1")
    proc = subprocess.run(
        [sys.executable, "-c", "from polylrs import kernels; print(kernels.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.stdout.strip() == "python"
