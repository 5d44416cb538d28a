import numpy as np
import pytest

from qecalg import kernel


def _random_case(rng, s, n):
    mat = rng.standard_normal((s, s)) + 1j * rng.standard_normal((s, s))
    vec = rng.standard_normal(s ** n) + 1j * rng.standard_normal(s ** n)
    return mat, vec


def _einsum_reference(mat, vec, n):
    s = mat.shape[0]
    t = vec.reshape((s,) * n)
    for axis in range(n):
        t = np.tensordot(mat, t, axes=([1], [axis]))
        t = np.moveaxis(t, 0, axis)
    return t.reshape(-1)


@pytest.mark.parametrize("s,n", [(2, 1), (2, 5), (3, 3), (4, 4), (9, 2)])
def test_python_kernel_matches_tensordot(s, n):
    rng = np.random.default_rng(s * 100 + n)
    mat, vec = _random_case(rng, s, n)
    got = kernel.apply_axiswise(mat, vec, n, backend="python")
    assert np.abs(got - _einsum_reference(mat, vec, n)).max() < 1e-9


@pytest.mark.skipif(not kernel.HAVE_COMPILED, reason="compiled kernel not built")
@pytest.mark.parametrize("s,n", [(2, 1), (2, 6), (3, 3), (4, 4), (9, 2)])
def test_compiled_matches_python(s, n):
    rng = np.random.default_rng(s * 10 + n)
    mat, vec = _random_case(rng, s, n)
    a = kernel.apply_axiswise(mat, vec, n, backend="python")
    b = kernel.apply_axiswise(mat, vec, n, backend="compiled")
    assert np.abs(a - b).max() < 1e-9


def test_thread_count_does_not_change_result():
    rng = np.random.default_rng(7)
    mat, vec = _random_case(rng, 4, 8)
    base = kernel.apply_axiswise(mat, vec, 8, threads=1, backend="python")
    for threads in (2, 3, 8):
        same = kernel.apply_axiswise(mat, vec, 8, threads=threads, backend="python")
        assert np.array_equal(base, same)


def test_input_is_not_mutated():
    rng = np.random.default_rng(8)
    mat, vec = _random_case(rng, 4, 3)
    keep = vec.copy()
    for backend in ("python", "compiled") if kernel.HAVE_COMPILED else ("python",):
        kernel.apply_axiswise(mat, vec, 3, backend=backend)
        assert np.array_equal(vec, keep)


def test_shape_validation():
    with pytest.raises(ValueError):
        kernel.apply_axiswise(np.eye(4), np.zeros(17), 2)
    with pytest.raises(ValueError):
        kernel.apply_axiswise(np.eye(3), np.zeros(9), 2, backend="nope")
