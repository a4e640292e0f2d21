"""Cayley-Dickson route: doubling construction, elements, conjugation.

Tables are stored as integer structure constant arrays c[i,j,k] meaning
e_i * e_j = sum_k c[i,j,k] e_k, with the identity at index 0 and the
Euclidean metric.  The doubling step multiplies pairs (a, b) by

    (a, b)(c, d) = (ac - conj(d) b,  b conj(c) + d a)

with conjugation (a, b) -> (conj(a), -b), and orders the doubled basis
as (old basis, old basis * i) so the new units satisfy
e_{r + m} = e_r * e_m for the adjoined unit e_m.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

import numpy as np

from .scalar import Scalar
from .tensor import Tensor


class MultTable:
    """Structure constants of an n-dimensional metric algebra."""

    def __init__(self, constants: np.ndarray, identity_index: int = 0,
                 provenance: Optional[dict] = None):
        constants = np.asarray(constants, dtype=np.int64)
        if constants.ndim != 3 or len(set(constants.shape)) != 1:
            raise ValueError("constants must be a cubic rank-3 array")
        self.constants = constants
        self.dim = constants.shape[0]
        self.identity_index = identity_index
        self.provenance = provenance or {}

    def check_identity(self) -> bool:
        e = self.identity_index
        n = self.dim
        want = np.zeros((n, n), dtype=np.int64)
        ok = True
        for j in range(n):
            row = np.zeros(n, dtype=np.int64)
            row[j] = 1
            ok &= np.array_equal(self.constants[e, j], row)
            ok &= np.array_equal(self.constants[j, e], row)
        return bool(ok)

    def _nonzeros(self):
        if not hasattr(self, "_nz"):
            idx = np.nonzero(self.constants)
            self._nz = list(zip(idx[0].tolist(), idx[1].tolist(),
                                idx[2].tolist(),
                                self.constants[idx].tolist()))
        return self._nz

    def metric_diagonal(self) -> np.ndarray:
        return np.ones(self.dim, dtype=np.int64)

    def as_tensor(self) -> Tensor:
        return Tensor.from_ints(("v", "v", "v"), self.constants)

    def __eq__(self, other):
        if not isinstance(other, MultTable):
            return NotImplemented
        return (self.dim == other.dim
                and self.identity_index == other.identity_index
                and np.array_equal(self.constants, other.constants))

    def __repr__(self):
        return f"MultTable(dim={self.dim}, identity={self.identity_index})"


class Element:
    """Algebra element as a coefficient vector of Scalars."""

    def __init__(self, coeffs: Sequence):
        self.coeffs: List[Scalar] = [Scalar.coerce(c) for c in coeffs]

    @staticmethod
    def basis(n: int, r: int) -> "Element":
        c = [Scalar(0)] * n
        c[r] = Scalar(1)
        return Element(c)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "Element") -> "Element":
        return Element([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Element") -> "Element":
        return Element([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Element":
        return Element([-a for a in self.coeffs])

    def scale(self, s) -> "Element":
        s = Scalar.coerce(s)
        return Element([a * s for a in self.coeffs])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"Element({self.coeffs})"


def cd_double(t: MultTable) -> MultTable:
    """One doubling step: dimension m -> 2m."""
    if t.identity_index != 0:
        raise ValueError("doubling expects the identity at index 0")
    m = t.dim
    C = t.constants
    D = np.zeros((2 * m, 2 * m, 2 * m), dtype=np.int64)
    # (a,0)(c,0) = (ac, 0)
    D[:m, :m, :m] = C
    # (a,0)(0,d) = (0, da)
    D[:m, m:, m:] = np.transpose(C, (1, 0, 2))
    # (0,b)(c,0) = (0, b conj(c));  conj(e_c) = 2 d_{c0} e_0 - e_c
    T = -C.copy()
    T[:, 0, :] += 2 * C[:, 0, :]
    D[m:, :m, m:] = T
    # (0,b)(0,d) = (-conj(d) b, 0) = (e_d e_b - 2 d_{d0} e_b, 0)
    T2 = np.transpose(C, (1, 0, 2)).copy()
    T2[:, 0, :] -= 2 * np.eye(m, dtype=np.int64)
    D[m:, m:, :m] = T2
    prov = {"route": "cayley-dickson", "params": {"dim": 2 * m}}
    return MultTable(D, 0, prov)


def cd_generate(k: int, cap: int = 8) -> MultTable:
    """k doubling steps from the 1-dimensional real table."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > cap:
        raise ValueError(f"k={k} exceeds the resource cap {cap}")
    t = MultTable(np.ones((1, 1, 1), dtype=np.int64), 0,
                  {"route": "cayley-dickson", "params": {"dim": 1}})
    for _ in range(k):
        t = cd_double(t)
    return t


def conjugate(x: Element) -> Element:
    out = [-c for c in x.coeffs]
    out[0] = x.coeffs[0]
    return Element(out)


def metric(x: Element, y: Element) -> Scalar:
    if x.dim != y.dim:
        raise ValueError("dimension mismatch")
    s = Scalar(0)
    for a, b in zip(x.coeffs, y.coeffs):
        s = s + a * b
    return s


def multiply(t: MultTable, x: Element, y: Element) -> Element:
    if x.dim != t.dim or y.dim != t.dim:
        raise ValueError("dimension mismatch")
    out = [Scalar(0)] * t.dim
    for i, j, k, v in t._nonzeros():
        c = x.coeffs[i] * y.coeffs[j]
        if c:
            out[k] = out[k] + c * v
    return Element(out)


def inverse(t: MultTable, x: Element) -> Element:
    q = metric(x, x)
    if q.is_zero():
        raise ZeroDivisionError("zero element has no inverse")
    return conjugate(x).scale(q.inverse())
