"""Connecting operators: n=8 base family and the two doubling steps.

Operators are kept in the sqrt(2)-scaled convention: the stored arrays
are sqrt(2) times the true operators, which makes every entry a Gaussian
integer.  Arrays have shape (n, N, N, 4) in the quad component layout of
:mod:`hypforge.tensor` (slots 0 and 2 hold the real and imaginary
integer parts).  In this convention the Clifford relation reads

    U_i L_j^T + U_j L_i^T = 2 g_ij I

where U are the upper operators and L the lowered ones.

The doubling steps assemble block matrices on an 8x8 (then 2x2) block
grid.  The free signs that the assembly leaves open (each operator may
be globally negated without affecting the Clifford relation or
antisymmetry) are fixed here to the unique choice, up to equivalence,
that reproduces the reference sedenion tables downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .kernels import quad_matmul
from .tensor import Tensor


def _cmat(N: int) -> np.ndarray:
    return np.zeros((N, N, 4), dtype=np.int64)


def _mul_i(M: np.ndarray) -> np.ndarray:
    """Multiply a quad matrix by the imaginary unit."""
    out = np.empty_like(M)
    out[..., 0] = -M[..., 2]
    out[..., 1] = -M[..., 3]
    out[..., 2] = M[..., 0]
    out[..., 3] = M[..., 1]
    return out


def _tr(M: np.ndarray) -> np.ndarray:
    return np.transpose(M, (1, 0, 2))


@dataclass
class ConnOps:
    """A family of n connecting operators on an N-dimensional spinor space.

    ops_upper/ops_lower hold the sqrt(2)-scaled operators; eps is the
    metric spinor as an integer symmetric permutation matrix (None for
    the intermediate stage, which never needs it).
    """

    n: int
    N: int
    ops_upper: np.ndarray  # (n, N, N, 4) int64, sqrt(2)-scaled
    ops_lower: np.ndarray
    eps: Optional[np.ndarray] = None  # (N, N) int64
    metric: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.metric is None:
            self.metric = np.ones(self.n, dtype=np.int64)

    def upper_tensor(self) -> Tensor:
        """True-normalized upper operators as an exact Tensor."""
        return _unscale(self.ops_upper, ("v", "su", "su"))

    def lower_tensor(self) -> Tensor:
        return _unscale(self.ops_lower, ("v", "sl", "sl"))

    def eps_tensor(self, kinds=("su", "su")) -> Tensor:
        if self.eps is None:
            raise ValueError("metric spinor not available at this stage")
        return Tensor.from_ints(kinds, self.eps)


def _unscale(scaled: np.ndarray, kinds) -> Tensor:
    """Divide a Gaussian-integer quad array by sqrt(2) exactly."""
    num = np.zeros_like(scaled)
    num[..., 1] = scaled[..., 0]
    num[..., 3] = scaled[..., 2]
    if scaled[..., 1].any() or scaled[..., 3].any():
        raise ValueError("scaled operators must have Gaussian-integer entries")
    return Tensor(kinds, num, 2)


def base_operators_n8() -> ConnOps:
    """The eight 8x8 operators and the metric spinor of the base family."""
    U = np.zeros((8, 8, 8, 4), dtype=np.int64)
    entries = {
        1: [((1, 2), 0, 1), ((3, 4), 0, 1), ((5, 6), 0, -1), ((7, 8), 0, -1)],
        2: [((1, 2), -1, 0), ((3, 4), 1, 0), ((5, 6), -1, 0), ((7, 8), 1, 0)],
        3: [((1, 3), 0, -1), ((2, 4), 0, 1), ((5, 7), 0, 1), ((6, 8), 0, -1)],
        4: [((1, 3), 1, 0), ((2, 4), 1, 0), ((5, 7), 1, 0), ((6, 8), 1, 0)],
        5: [((1, 4), 0, 1), ((2, 3), 0, 1), ((5, 8), 0, -1), ((6, 7), 0, -1)],
        6: [((1, 4), -1, 0), ((2, 3), 1, 0), ((5, 8), -1, 0), ((6, 7), 1, 0)],
    }
    for i, lst in entries.items():
        for (a, b), re, im in lst:
            U[i - 1, a - 1, b - 1, 0] = re
            U[i - 1, a - 1, b - 1, 2] = im
        U[i - 1] -= _tr(U[i - 1])
    for a, b in ((1, 5), (2, 6), (3, 7), (4, 8)):
        U[6, a - 1, b - 1, 2] = 1
        U[6, b - 1, a - 1, 2] = -1
        U[7, a - 1, b - 1, 0] = 1
        U[7, b - 1, a - 1, 0] = 1
    eps = np.zeros((8, 8), dtype=np.int64)
    for a in range(4):
        eps[a, a + 4] = 1
        eps[a + 4, a] = 1
    L = np.stack([_eps_sandwich(U[i], eps) for i in range(8)])
    return ConnOps(8, 8, U, L, eps)


def _eps_sandwich(M: np.ndarray, eps: np.ndarray) -> np.ndarray:
    E = np.zeros(eps.shape + (4,), dtype=np.int64)
    E[..., 0] = eps
    return quad_matmul(quad_matmul(E, M), E)


def _mm(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return quad_matmul(A, B)


# Block-grid data for the +6 step.  Greek letter blocks are eps-blocks
# with the listed coefficient; placements give (block row, block col,
# sign) in the upper triangle of the 8x8 grid.  The lower triangle
# follows by antisymmetry of the assembled matrix.
_UPPER_GREEK = {
    "xi": [(1, 4, 1), (2, 3, -1)], "gamma": [(1, 6, 1), (2, 5, -1)],
    "alpha": [(1, 7, -1), (3, 5, -1)], "beta": [(2, 8, 1), (4, 6, 1)],
    "delta": [(3, 8, 1), (4, 7, -1)], "zeta": [(5, 8, -1), (6, 7, 1)],
}
_LOWER_GREEK = {
    "zeta": [(1, 4, -1), (2, 3, 1)], "delta": [(1, 6, -1), (2, 5, 1)],
    "beta": [(1, 7, -1), (3, 5, -1)], "alpha": [(2, 8, 1), (4, 6, 1)],
    "gamma": [(3, 8, -1), (4, 7, 1)], "xi": [(5, 8, 1), (6, 7, -1)],
}
# New operators n+1..n+6 as greek combinations; "i" marks a factor of
# the imaginary unit, the integer the sign.
_NEW_OPS = [
    {"alpha": (1, "i"), "beta": (-1, "i")},
    {"alpha": (1, ""), "beta": (1, "")},
    {"gamma": (1, ""), "delta": (-1, "")},
    {"gamma": (1, "i"), "delta": (1, "i")},
    {"xi": (1, ""), "zeta": (-1, "")},
    {"xi": (1, "i"), "zeta": (1, "i")},
]
# Embedding block positions for the inherited operators.
_EMB_POS = [(1, 8), (2, 7), (3, 6), (4, 5)]


def bott_step_plus6(ops: ConnOps) -> ConnOps:
    """n -> n+6, spinor space N -> 8N."""
    if ops.eps is None:
        raise ValueError("input stage must carry its metric spinor")
    n, N = ops.n, ops.N
    M = 8 * N
    E = np.zeros((N, N, 4), dtype=np.int64)
    E[..., 0] = ops.eps
    upper = np.zeros((n + 6, M, M, 4), dtype=np.int64)
    lower = np.zeros((n + 6, M, M, 4), dtype=np.int64)

    def put(dst, r, c, B):
        dst[N * (r - 1):N * r, N * (c - 1):N * c] += B

    for i in range(n):
        U = ops.ops_upper[i]
        emb_u = [_mm(U, E), _mm(E, _tr(U)), _mm(E, _tr(U)), _mm(U, E)]
        emb_l = [_mm(E, U), _mm(_tr(U), E), _mm(_tr(U), E), _mm(E, U)]
        for (r, c), Bu, Bl in zip(_EMB_POS, emb_u, emb_l):
            put(upper[i], r, c, Bu)
            put(lower[i], r, c, Bl)
    for j, comb in enumerate(_NEW_OPS):
        for greek, (sign, unit) in comb.items():
            B = _mul_i(E) if unit == "i" else E
            for r, c, s in _UPPER_GREEK[greek]:
                put(upper[n + j], r, c, sign * s * B)
            for r, c, s in _LOWER_GREEK[greek]:
                put(lower[n + j], r, c, sign * s * B)
    for arr in (upper, lower):
        for k in range(n + 6):
            tri = np.triu(np.ones((M, M), dtype=np.int64), 0)[..., None]
            arr[k] = arr[k] * tri - _tr(arr[k] * tri)
    return ConnOps(n + 6, M, upper, lower, eps=None)


def bott_step_plus2(ops: ConnOps) -> ConnOps:
    """n+6 -> n+8, spinor space N' -> 2N'."""
    n, N = ops.n, ops.N
    M = 2 * N
    upper = np.zeros((n + 2, M, M, 4), dtype=np.int64)
    for i in range(n):
        upper[i][:N, :N] = ops.ops_upper[i]
        upper[i][N:, N:] = -_tr(ops.ops_lower[i])
    eyeq = np.zeros((N, N, 4), dtype=np.int64)
    eyeq[np.arange(N), np.arange(N), 0] = 1
    upper[n][:N, N:] = _mul_i(eyeq)
    upper[n][N:, :N] = -_mul_i(eyeq)
    upper[n + 1][:N, N:] = eyeq
    upper[n + 1][N:, :N] = eyeq
    eps = np.zeros((M, M), dtype=np.int64)
    eps[:N, N:] = np.eye(N, dtype=np.int64)
    eps[N:, :N] = np.eye(N, dtype=np.int64)
    lower = np.stack([_eps_sandwich(upper[i], eps) for i in range(n + 2)])
    return ConnOps(n + 2, M, upper, lower, eps=eps)


@dataclass
class CliffordReport:
    n: int
    violations: List[Tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_clifford(ops: ConnOps) -> CliffordReport:
    """Check U_i L_j^T + U_j L_i^T = 2 g_ij I exactly for all i <= j."""
    bad = []
    eye2 = np.zeros((ops.N, ops.N, 4), dtype=np.int64)
    eye2[np.arange(ops.N), np.arange(ops.N), 0] = 2
    zero = np.zeros_like(eye2)
    for i in range(ops.n):
        for j in range(i, ops.n):
            S = quad_matmul(ops.ops_upper[i], _tr(ops.ops_lower[j])) + \
                quad_matmul(ops.ops_upper[j], _tr(ops.ops_lower[i]))
            want = eye2 if i == j else zero
            if not np.array_equal(S, want):
                bad.append((i, j))
    return CliffordReport(ops.n, bad)


def operator_chain() -> Tuple[ConnOps, ConnOps, ConnOps]:
    """The full 8 -> 14 -> 16 construction."""
    c8 = base_operators_n8()
    c14 = bott_step_plus6(c8)
    c16 = bott_step_plus2(c14)
    return c8, c14, c16
