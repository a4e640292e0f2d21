"""Integer quad-component contraction kernels.

Exact tensors store their components as int64 arrays with a trailing
axis of length 4 holding the coordinates of a + b*sqrt(2) + i*c +
i*d*sqrt(2) (a shared denominator is tracked by the caller).  Every
contraction in the pipeline funnels through ``quad_matmul``, so that is
the one hot kernel: it gets a numba @njit implementation and a pure
numpy fallback, selected once at import time by the environment flag
``HYPFORGE_NUMBA`` (set it to 0/false/off to force the numpy path).
"""

from __future__ import annotations

import os

import numpy as np

_FALSEY = {"0", "false", "no", "off"}
USE_NUMBA = os.environ.get("HYPFORGE_NUMBA", "1").strip().lower() not in _FALSEY


def _quad_matmul_numpy(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """(M,K,4) x (K,N,4) -> (M,N,4), exact int64."""
    a0, a1, a2, a3 = A[..., 0], A[..., 1], A[..., 2], A[..., 3]
    b0, b1, b2, b3 = B[..., 0], B[..., 1], B[..., 2], B[..., 3]
    out = np.empty((A.shape[0], B.shape[1], 4), dtype=np.int64)
    out[..., 0] = a0 @ b0 + 2 * (a1 @ b1) - a2 @ b2 - 2 * (a3 @ b3)
    out[..., 1] = a0 @ b1 + a1 @ b0 - a2 @ b3 - a3 @ b2
    out[..., 2] = a0 @ b2 + a2 @ b0 + 2 * (a1 @ b3) + 2 * (a3 @ b1)
    out[..., 3] = a0 @ b3 + a3 @ b0 + a1 @ b2 + a2 @ b1
    return out


if USE_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _quad_matmul_numba(A, B):  # pragma: no cover - exercised via wrapper
        M, K = A.shape[0], A.shape[1]
        N = B.shape[1]
        out = np.zeros((M, N, 4), dtype=np.int64)
        for m in range(M):
            for k in range(K):
                a0 = A[m, k, 0]
                a1 = A[m, k, 1]
                a2 = A[m, k, 2]
                a3 = A[m, k, 3]
                if a0 == 0 and a1 == 0 and a2 == 0 and a3 == 0:
                    continue
                for n in range(N):
                    b0 = B[k, n, 0]
                    b1 = B[k, n, 1]
                    b2 = B[k, n, 2]
                    b3 = B[k, n, 3]
                    out[m, n, 0] += a0 * b0 + 2 * a1 * b1 - a2 * b2 - 2 * a3 * b3
                    out[m, n, 1] += a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
                    out[m, n, 2] += a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1)
                    out[m, n, 3] += a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1
        return out

    def quad_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
        if A.shape[1] != B.shape[0]:
            raise ValueError("inner dimensions do not match: "
                             f"{A.shape} x {B.shape}")
        return _quad_matmul_numba(np.ascontiguousarray(A),
                                  np.ascontiguousarray(B))
else:
    quad_matmul = _quad_matmul_numpy


def quad_mul_elementwise(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Broadcasting elementwise quad product (not a hot path)."""
    a0, a1, a2, a3 = A[..., 0], A[..., 1], A[..., 2], A[..., 3]
    b0, b1, b2, b3 = B[..., 0], B[..., 1], B[..., 2], B[..., 3]
    return np.stack([
        a0 * b0 + 2 * a1 * b1 - a2 * b2 - 2 * a3 * b3,
        a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
        a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1),
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
    ], axis=-1)


def quad_conjugate(A: np.ndarray) -> np.ndarray:
    """Complex conjugation of the quad components."""
    out = A.copy()
    out[..., 2] = -out[..., 2]
    out[..., 3] = -out[..., 3]
    return out
