"""Small dense exact tensors with index-kind bookkeeping.

A ``Tensor`` holds an int64 component array whose trailing axis of
length 4 carries the coordinates of a + b*sqrt(2) + i*c + i*d*sqrt(2),
together with one shared positive denominator.  That representation is
closed under addition, scaling and contraction, and keeps contractions
as plain integer matrix products (see :mod:`hypforge.kernels`).

Each tensor axis is tagged with an index kind:

* ``'v'``   vector index (Euclidean metric, so raised and lowered
  positions agree and two ``'v'`` indices may be contracted directly),
* ``'su'``  upper spinor index,
* ``'sl'``  lower spinor index.

Contraction checks that the paired kinds are compatible (``v`` with
``v``, ``su`` with ``sl``).
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence, Tuple

import numpy as np

from .kernels import quad_matmul, quad_mul_elementwise, quad_conjugate
from .scalar import Scalar

KINDS = ("v", "su", "sl")


def _contractible(k1: str, k2: str) -> bool:
    return {k1, k2} == {"su", "sl"} or (k1 == k2 == "v")


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class Tensor:
    __slots__ = ("kinds", "num", "den")

    def __init__(self, kinds: Sequence[str], num: np.ndarray, den: int = 1,
                 normalize: bool = True):
        kinds = tuple(kinds)
        for k in kinds:
            if k not in KINDS:
                raise ValueError(f"unknown index kind {k!r}")
        num = np.asarray(num, dtype=np.int64)
        if num.ndim != len(kinds) + 1 or num.shape[-1] != 4:
            raise ValueError("component array must have shape dims + (4,)")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        self.kinds = kinds
        self.num = num
        self.den = int(den)
        if normalize:
            self._normalize()

    # -- construction -------------------------------------------------

    @staticmethod
    def zeros(kinds: Sequence[str], shape: Sequence[int]) -> "Tensor":
        return Tensor(kinds, np.zeros(tuple(shape) + (4,), dtype=np.int64))

    @staticmethod
    def from_scalars(kinds: Sequence[str], values: np.ndarray) -> "Tensor":
        """Build from an object array (or nested list) of Scalar."""
        values = np.asarray(values, dtype=object)
        den = 1
        for s in values.flat:
            for f in Scalar.coerce(s).quad():
                den = den * f.denominator // math.gcd(den, f.denominator)
        num = np.zeros(values.shape + (4,), dtype=np.int64)
        for idx in np.ndindex(values.shape):
            q = Scalar.coerce(values[idx]).quad()
            num[idx] = [int(f * den) for f in q]
        return Tensor(kinds, num, den)

    @staticmethod
    def from_ints(kinds: Sequence[str], values: np.ndarray,
                  den: int = 1) -> "Tensor":
        """Build a purely rational tensor from an integer array."""
        values = np.asarray(values, dtype=np.int64)
        num = np.zeros(values.shape + (4,), dtype=np.int64)
        num[..., 0] = values
        return Tensor(kinds, num, den)

    # -- bookkeeping --------------------------------------------------

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.num.shape[:-1]

    def _normalize(self):
        g = math.gcd(int(np.gcd.reduce(np.abs(self.num), axis=None)), self.den)
        if g > 1:
            self.num = self.num // g
            self.den //= g

    def item(self, idx) -> Scalar:
        q = self.num[idx if isinstance(idx, tuple) else (idx,)]
        d = self.den
        return Scalar(Fraction(int(q[0]), d), Fraction(int(q[1]), d),
                      Fraction(int(q[2]), d), Fraction(int(q[3]), d))

    def is_zero(self) -> bool:
        return not self.num.any()

    def is_integer(self) -> bool:
        return self.den == 1 and not self.num[..., 1:].any()

    def as_int_array(self) -> np.ndarray:
        if not self.is_integer():
            raise ValueError("tensor has non-integer components")
        return self.num[..., 0].copy()

    # -- linear operations --------------------------------------------

    def _check_same_kind(self, other: "Tensor"):
        if self.kinds != other.kinds or self.shape != other.shape:
            raise ValueError("tensor kind/shape mismatch")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_same_kind(other)
        den = self.den * other.den // math.gcd(self.den, other.den)
        num = self.num * (den // self.den) + other.num * (den // other.den)
        return Tensor(self.kinds, num, den)

    def __neg__(self) -> "Tensor":
        return Tensor(self.kinds, -self.num, self.den, normalize=False)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def scale(self, s) -> "Tensor":
        s = Scalar.coerce(s) if not isinstance(s, Scalar) else s
        q = s.quad()
        sden = 1
        for f in q:
            sden = sden * f.denominator // math.gcd(sden, f.denominator)
        sq = np.array([int(f * sden) for f in q], dtype=np.int64)
        num = quad_mul_elementwise(self.num, sq)
        return Tensor(self.kinds, num, self.den * sden)

    def conjugate(self) -> "Tensor":
        return Tensor(self.kinds, quad_conjugate(self.num), self.den,
                      normalize=False)

    def take(self, order: Sequence[int], axis: int = 0) -> "Tensor":
        """Reorder slices along one axis."""
        num = np.take(self.num, np.asarray(order, dtype=np.int64), axis=axis)
        return Tensor(self.kinds, num, self.den, normalize=False)

    def transpose(self, order: Sequence[int]) -> "Tensor":
        kinds = tuple(self.kinds[i] for i in order)
        num = np.transpose(self.num, tuple(order) + (len(self.kinds),))
        return Tensor(kinds, num, self.den, normalize=False)

    # -- contraction --------------------------------------------------

    def contract(self, axes1: Sequence[int], other: "Tensor",
                 axes2: Sequence[int]) -> "Tensor":
        """Contract self[axes1] against other[axes2] pairwise."""
        axes1, axes2 = list(axes1), list(axes2)
        if len(axes1) != len(axes2):
            raise ValueError("axis lists differ in length")
        for a1, a2 in zip(axes1, axes2):
            if self.shape[a1] != other.shape[a2]:
                raise ValueError("contracted extents differ")
            if not _contractible(self.kinds[a1], other.kinds[a2]):
                raise ValueError(
                    f"cannot contract kind {self.kinds[a1]!r} with "
                    f"{other.kinds[a2]!r}")
        keep1 = [i for i in range(len(self.kinds)) if i not in axes1]
        keep2 = [i for i in range(len(other.kinds)) if i not in axes2]
        A = np.transpose(self.num, tuple(keep1) + tuple(axes1) + (self.num.ndim - 1,))
        B = np.transpose(other.num, tuple(axes2) + tuple(keep2) + (other.num.ndim - 1,))
        m = int(np.prod([self.shape[i] for i in keep1], dtype=np.int64))
        k = int(np.prod([self.shape[i] for i in axes1], dtype=np.int64))
        n = int(np.prod([other.shape[i] for i in keep2], dtype=np.int64))
        out = quad_matmul(A.reshape(m, k, 4), B.reshape(k, n, 4))
        shape = tuple(self.shape[i] for i in keep1) + \
            tuple(other.shape[i] for i in keep2) + (4,)
        kinds = tuple(self.kinds[i] for i in keep1) + \
            tuple(other.kinds[i] for i in keep2)
        return Tensor(kinds, out.reshape(shape), self.den * other.den)

    def trace(self, ax1: int, ax2: int) -> "Tensor":
        """Contract two axes of the same tensor."""
        if not _contractible(self.kinds[ax1], self.kinds[ax2]):
            raise ValueError("incompatible kinds for trace")
        keep = [i for i in range(len(self.kinds)) if i not in (ax1, ax2)]
        moved = np.transpose(self.num, tuple(keep) + (ax1, ax2, self.num.ndim - 1))
        num = np.trace(moved, axis1=-3, axis2=-2)
        return Tensor(tuple(self.kinds[i] for i in keep), num, self.den)

    # -- (anti)symmetrization -----------------------------------------

    def _symmetrize(self, axes: Sequence[int], signed: bool) -> "Tensor":
        axes = list(axes)
        total = np.zeros_like(self.num)
        for perm in permutations(range(len(axes))):
            order = list(range(len(self.kinds)))
            for slot, p in zip(axes, perm):
                order[slot] = axes[p]
            arr = np.transpose(self.num, tuple(order) + (self.num.ndim - 1,))
            total += _perm_sign(list(perm)) * arr if signed else arr
        return Tensor(self.kinds, total, self.den * math.factorial(len(axes)))

    def symmetrize(self, axes: Sequence[int]) -> "Tensor":
        return self._symmetrize(axes, signed=False)

    def antisymmetrize(self, axes: Sequence[int]) -> "Tensor":
        return self._symmetrize(axes, signed=True)

    # -- comparison ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.kinds == other.kinds and self.den == other.den
                and np.array_equal(self.num, other.num))

    def __repr__(self):
        return f"Tensor(kinds={self.kinds}, shape={self.shape}, den={self.den})"


def delta(n: int, kinds: Sequence[str] = ("su", "sl")) -> Tensor:
    num = np.zeros((n, n, 4), dtype=np.int64)
    num[np.arange(n), np.arange(n), 0] = 1
    return Tensor(kinds, num)
