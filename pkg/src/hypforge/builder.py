"""Spinor-route algebra factory.

Chains the connecting-operator construction into multiplication tables:
controlling spinor -> inclusion operator -> generating 16-dimensional
table -> 15 orthogonal basis transforms -> canonical combination, plus
the theta-decomposition of a table against a family of connecting
operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from ._transform_data import TRANSFORM_ENTRIES
from .cayley import MultTable
from .clifford import ConnOps
from .scalar import Scalar
from .tensor import Tensor


def controlling_spinor(n: int) -> np.ndarray:
    """Integer spinor X^A with two unit entries."""
    if n == 8:
        X = np.zeros(8, dtype=np.int64)
        X[0] = X[4] = 1
    elif n == 16:
        X = np.zeros(128, dtype=np.int64)
        X[0] = X[64] = 1
    else:
        raise ValueError(f"unsupported dimension {n}")
    return X


def inclusion_operator(ops: ConnOps, X: np.ndarray) -> Tensor:
    """P_{jA} = sum_B eta_{jBA} X^B, exact, true normalization."""
    if X.shape != (ops.N,):
        raise ValueError("spinor length does not match the operator family")
    L = ops.lower_tensor()  # ('v','sl','sl'), indices (j, B, A)
    Xt = Tensor.from_ints(("su",), X)
    return Xt.contract([0], L, [1])  # -> ('v','sl'): (j, A)


def generating_constants(ops: ConnOps, P: Tensor) -> MultTable:
    """Constants sqrt(2) * eta_i^{AB} P_{jA} P_{kB}; identity at the last slot."""
    U = ops.upper_tensor()  # (i, A, B)
    T1 = U.contract([1], P, [1])   # (i, B, j)
    T2 = T1.contract([1], P, [1])  # (i, j, k)
    T2 = T2.scale(Scalar.sqrt2())
    if not T2.is_integer():
        bad = np.argwhere((T2.num[..., 1:] != 0).any(axis=-1))
        where = tuple(int(v) for v in bad[0][:3]) if len(bad) else "?"
        raise ValueError(f"non-integer generating constant at {where}")
    prov = {"route": "spinor", "params": {"stage": "generating"}}
    return MultTable(T2.as_int_array(), identity_index=ops.n - 1, provenance=prov)


@dataclass
class Transform:
    """Signed permutation of basis labels, 1-based source slots to 0-based
    final indices."""

    index: int
    matrix: np.ndarray  # (16, 16) int64, rows final, cols source slot-1

    def is_orthogonal(self) -> bool:
        return np.array_equal(self.matrix @ self.matrix.T,
                              np.eye(16, dtype=np.int64))


def basis_transforms() -> List[Transform]:
    out = []
    for I in sorted(TRANSFORM_ENTRIES):
        m = np.zeros((16, 16), dtype=np.int64)
        for r, c, v in TRANSFORM_ENTRIES[I]:
            m[r, c - 1] = v
        out.append(Transform(I, m))
    return out


def transform_constants(t: MultTable, S: Transform) -> MultTable:
    """Apply the signed permutation to all three table indices."""
    c = np.einsum("ia,jb,kc,abc->ijk", S.matrix, S.matrix, S.matrix,
                  t.constants)
    new_id = int(np.argmax(np.abs(S.matrix[:, t.identity_index])))
    return MultTable(c, identity_index=new_id, provenance=t.provenance)


def eta0_constants(n: int, identity_index: int = 0) -> MultTable:
    """The symmetric scalar-part table e_i e_j = <e_i,e>e_j + <e_j,e>e_i - g_ij e."""
    c = np.zeros((n, n, n), dtype=np.int64)
    e = identity_index
    for j in range(n):
        c[e, j, j] += 1
        c[j, e, j] += 1
        c[j, j, e] -= 1
    return MultTable(c, identity_index=e)


def canonical_combination(eta_gen: MultTable,
                          transforms: Optional[List[Transform]] = None,
                          weights: Optional[List[Fraction]] = None) -> MultTable:
    """Combine the 15 transformed copies into the canonical table."""
    if transforms is None:
        transforms = basis_transforms()
    n = eta_gen.dim
    if weights is None:
        weights = [Fraction(1, 3)] * len(transforms)
    total = np.zeros((n, n, n), dtype=object)
    for S, w in zip(transforms, weights):
        total = total + w * transform_constants(eta_gen, S).constants
    # the eta_0 coefficient keeps the identity normalized:
    # sum of weights on identity cells must come out to 1 overall
    w0 = 1 - sum(weights)
    total = total + w0 * eta0_constants(n).constants
    out = np.zeros((n, n, n), dtype=np.int64)
    for idx, v in np.ndenumerate(total):
        f = Fraction(v)
        if f.denominator != 1:
            raise ValueError(f"non-integer canonical constant at {idx}")
        out[idx] = int(f)
    prov = {"route": "spinor", "params": {"stage": "canonical"}}
    return MultTable(out, identity_index=0, provenance=prov)


@dataclass
class SpinTensor:
    N: int
    entries: Tensor  # ('su','su'), symmetric

    def normalization(self, eps_lower: Tensor) -> Scalar:
        return self.entries.contract([0, 1], eps_lower, [0, 1]).item(())


def _aligned_ops(t: MultTable, ops: ConnOps) -> Tuple[Tensor, Tensor]:
    """True-normalized operators reordered so the identity direction of
    the family comes first, matching the table's identity at index 0."""
    if t.identity_index != 0:
        raise ValueError("decompose expects the identity at index 0")
    if ops.n != t.dim:
        raise ValueError("operator family does not match table dimension")
    U = ops.upper_tensor()
    E = ops.eps_tensor(("sl", "sl"))
    u = U.contract([1, 2], E, [0, 1])  # (i,); identity covector * N/sqrt2
    idvec = [u.item((i,)) for i in range(ops.n)]
    idx = next(i for i, v in enumerate(idvec) if not v.is_zero())
    order = [idx] + [i for i in range(ops.n) if i != idx]
    return U.take(order), ops.lower_tensor().take(order)


def decompose(t: MultTable, ops: ConnOps):
    """Split t into scalar part and totally antisymmetric part, and solve
    for the controlling spin-tensor; verifies exact reconstruction."""
    n, N = t.dim, ops.N
    U, L = _aligned_ops(t, ops)
    eta0 = eta0_constants(n)
    eta_a = Tensor.from_ints(("v", "v", "v"), t.constants - eta0.constants)
    anti = eta_a.antisymmetrize([0, 1, 2])
    if anti != eta_a:
        raise ValueError("antisymmetric part is not totally antisymmetric; "
                         "table fails the decomposition precondition")
    if eta_a.num[0].any() or eta_a.num[:, 0].any() or eta_a.num[:, :, 0].any():
        raise ValueError("antisymmetric part meets the identity direction")
    # particular solution for theta_a
    M1 = eta_a.contract([0], L, [0])          # (m, r, X, Y)
    M2 = M1.contract([0, 2], U, [0, 1])       # (r, Y, C)
    th_a = M2.contract([0, 1], U, [0, 2])     # (C, D)
    pref = Scalar(0, -Fraction(2, 3 * N))     # -(4 / (3 sqrt(2) N))
    th_a = th_a.scale(pref)
    th0 = ops.eps_tensor(("su", "su")).scale(Fraction(2, N))

    def rebuild(theta: Tensor) -> Tensor:
        T1 = theta.contract([0], L, [1])      # (D, j, A)
        T2 = T1.contract([2], U, [1])         # (D, j, i, B)
        T3 = T2.contract([0, 3], L, [1, 2])   # (j, i, k)
        return T3.transpose([1, 0, 2]).scale(Scalar.sqrt2())

    if rebuild(th_a) != eta_a:
        raise ValueError("reconstruction of the antisymmetric part failed")
    if rebuild(th0 + th_a) != t.as_tensor():
        raise ValueError("full reconstruction failed")
    return SpinTensor(N, th0), SpinTensor(N, th_a), eta_a


def spinor_pipeline(emit_gen: bool = False):
    """End-to-end spinor route for dimension 16."""
    from .clifford import operator_chain, verify_clifford
    c8, c14, c16 = operator_chain()
    for stage in (c8, c14, c16):
        rep = verify_clifford(stage)
        if not rep.ok:
            raise RuntimeError(f"Clifford check failed at n={stage.n}: "
                               f"{rep.violations[:4]}")
    X = controlling_spinor(16)
    P = inclusion_operator(c16, X)
    gen = generating_constants(c16, P)
    if emit_gen:
        return gen
    return canonical_combination(gen)
