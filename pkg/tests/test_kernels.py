import os
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest

from streamsparse import _pykernels, kernels
from streamsparse.dense import DenseWeights

cy = pytest.importorskip("streamsparse._kernels")


def random_matrix(rng, n, hi=4, dtype=np.int64):
    a = np.triu(rng.integers(0, hi, (n, n)), 1)
    return (a + a.T).astype(dtype)


def test_backend_selected():
    assert kernels.backend() == "cython"


@pytest.mark.parametrize("dtype", [np.int64, np.float64])
def test_compiled_matches_python_stoer_wagner(dtype):
    rng = np.random.default_rng(7)
    for _ in range(300):
        mat = random_matrix(rng, int(rng.integers(2, 14)), dtype=dtype)
        v1, m1 = _pykernels.stoer_wagner(mat)
        v2, m2 = cy.stoer_wagner(mat)
        assert v1 == v2
        assert (m1 == m2).all()


@pytest.mark.parametrize("dtype", [np.int64, np.float64, object])
def test_edge_strength_routes_agree(dtype):
    rng = np.random.default_rng(11)
    for _ in range(300):
        n = int(rng.integers(2, 12))
        mat = random_matrix(rng, n)
        u, v = sorted(rng.choice(n, 2, replace=False).tolist())
        mat[u, v] += 1
        mat[v, u] += 1
        ref = _pykernels.edge_strength(mat, u, v)
        assert kernels.edge_strength(mat.astype(dtype), u, v) == ref


def test_stoer_wagner_input_untouched():
    mat = random_matrix(np.random.default_rng(1), 8)
    before = mat.copy()
    kernels.stoer_wagner(mat)
    assert (mat == before).all()


def test_stoer_wagner_needs_two_vertices():
    with pytest.raises(ValueError):
        _pykernels.stoer_wagner(np.zeros((1, 1), dtype=np.int64))
    with pytest.raises(ValueError):
        cy.stoer_wagner(np.zeros((1, 1), dtype=np.int64))


class TestDenseWeights:
    def test_shared_denominator(self):
        dw = DenseWeights(3)
        dw.add(0, 1, Fraction(1, 2))
        dw.add(1, 2, Fraction(1, 3))
        assert dw.denom == 6
        assert dw.mat[0, 1] == 3 and dw.mat[1, 2] == 2
        assert dw.value(dw.mat[1].sum()) == Fraction(5, 6)

    def test_remove_restores(self):
        dw = DenseWeights(3)
        dw.add(0, 1, 2)
        before = dw.mat.copy()
        dw.add(0, 2, 1)
        dw.remove(0, 2, 1)
        assert (dw.mat == before).all()

    def test_promotes_to_object_instead_of_overflowing(self):
        dw = DenseWeights(3)
        dw.add(0, 1, 1)
        for p in (2**31 - 1, 2**61 - 1):
            dw.add(1, 2, Fraction(1, p))
        assert dw.mat.dtype == object
        assert dw.value(dw.mat[1, 2]) == Fraction(1, 2**31 - 1) + Fraction(1, 2**61 - 1)
        value, _ = kernels.stoer_wagner(dw.mat)
        assert dw.value(value) == Fraction(1, 2**31 - 1) + Fraction(1, 2**61 - 1)

    def test_float_mode(self):
        dw = DenseWeights(2, exact=False)
        dw.add(0, 1, Fraction(1, 3))
        assert dw.mat.dtype == np.float64
        assert dw.value(dw.mat[0, 1]) == pytest.approx(1 / 3)


RUN = """
from fractions import Fraction
from streamsparse import kernels
from streamsparse.edgelist import format_edge_list
from streamsparse.stream import SparsifyConfig, run_stream
from streamsparse.streamkit import StreamSpec, generate
s = run_stream(SparsifyConfig(Fraction(1, 2), 10, rho_override=1, seed=3),
               generate(StreamSpec("gnp", {"n": 10, "p": 0.6}, "uniform_shuffle", 3)))
print(kernels.backend())
print(format_edge_list(s.H, weights=True), end="")
"""


def test_env_var_selects_fallback_with_identical_output():
    outputs = {}
    for flag in ("", "1"):
        env = dict(os.environ, STREAMSPARSE_PURE_PYTHON=flag)
        res = subprocess.run([sys.executable, "-c", RUN], env=env, capture_output=True, text=True, check=True)
        backend, _, body = res.stdout.partition("\n")
        outputs[backend] = body
    assert set(outputs) == {"cython", "python"}
    assert outputs["cython"] == outputs["python"]
