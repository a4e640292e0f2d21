import numpy as np
import pytest

from hypforge import kernels


def _random_quads(shape, seed):
    rng = np.random.default_rng(seed)
    return rng.integers(-3, 4, size=shape + (4,)).astype(np.int64)


def test_numpy_matmul_matches_scalar_product():
    # multiply two 1x1 quad matrices and compare with the Scalar product
    from hypforge.scalar import Scalar
    A = _random_quads((1, 1), 0)
    B = _random_quads((1, 1), 1)
    out = kernels._quad_matmul_numpy(A, B)
    sa = Scalar(*(int(v) for v in A[0, 0]))
    sb = Scalar(*(int(v) for v in B[0, 0]))
    assert Scalar(*(int(v) for v in out[0, 0])) == sa * sb


@pytest.mark.skipif(not kernels.USE_NUMBA, reason="numba path disabled")
@pytest.mark.parametrize("shape", [(1, 1, 1), (3, 5, 2), (16, 16, 16)])
def test_numba_matches_numpy(shape):
    m, k, n = shape
    A = _random_quads((m, k), 2)
    B = _random_quads((k, n), 3)
    assert np.array_equal(kernels._quad_matmul_numba(A, B),
                          kernels._quad_matmul_numpy(A, B))


def test_dispatcher_shape_check():
    A = _random_quads((2, 3), 4)
    B = _random_quads((4, 2), 5)
    with pytest.raises(ValueError):
        kernels.quad_matmul(A, B)


def test_elementwise_and_conjugate():
    A = _random_quads((4, 4), 6)
    B = _random_quads((4, 4), 7)
    prod = kernels.quad_mul_elementwise(A, B)
    # the (i sqrt2) component of a product of rational entries vanishes
    rational_a = A.copy()
    rational_a[..., 1:] = 0
    conj = kernels.quad_conjugate(A)
    assert np.array_equal(conj[..., :2], A[..., :2])
    assert np.array_equal(conj[..., 2:], -A[..., 2:])
    # conjugation distributes over the elementwise product
    lhs = kernels.quad_conjugate(prod)
    rhs = kernels.quad_mul_elementwise(kernels.quad_conjugate(A),
                                       kernels.quad_conjugate(B))
    assert np.array_equal(lhs, rhs)
