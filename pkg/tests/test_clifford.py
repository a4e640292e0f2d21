import numpy as np
import pytest

from hypforge import clifford
from hypforge.scalar import Scalar


def test_base_operator_shapes():
    ops = clifford.base_operators_n8()
    assert ops.n == 8 and ops.N == 8
    assert ops.ops_upper.shape == (8, 8, 8, 4)
    assert ops.eps is not None


def test_base_operator_entries():
    # scaled entries: sqrt2 * eta_1 has +i at row 1, col 2 (0-based 0,1)
    ops = clifford.base_operators_n8()
    U = ops.ops_upper
    assert tuple(U[0, 0, 1]) == (0, 0, 1, 0)
    assert tuple(U[0, 1, 0]) == (0, 0, -1, 0)
    # the symmetric operator: sqrt2 * eta_8 has +1 at row 5, col 1 (0-based 4,0)
    assert tuple(U[7, 4, 0]) == (1, 0, 0, 0)
    assert tuple(U[7, 0, 4]) == (1, 0, 0, 0)


def test_base_metric_pairing():
    eps = clifford.base_operators_n8().eps
    # pairing permutation: |A - B| = 4
    nz = np.argwhere(eps != 0)
    assert len(nz) == 8
    for a, b in nz:
        assert abs(int(a) - int(b)) == 4


@pytest.mark.parametrize("stage", [0, 1, 2])
def test_clifford_relations(chain, stage):
    ops = chain[stage]
    rep = clifford.verify_clifford(ops)
    assert rep.ok, rep.violations[:3]


def test_stage_dimensions(chain):
    assert [o.n for o in chain] == [8, 14, 16]
    assert [o.N for o in chain] == [8, 64, 128]


def test_mutant_operator_fails():
    ops = clifford.base_operators_n8()
    bad = clifford.ConnOps(
        n=ops.n, N=ops.N,
        ops_upper=ops.ops_upper.copy(), ops_lower=ops.ops_lower.copy(),
        eps=ops.eps, metric=ops.metric)
    bad.ops_upper[2] = -bad.ops_upper[2]  # flip one operator on one side only
    rep = clifford.verify_clifford(bad)
    assert not rep.ok
    assert rep.violations


def test_true_normalization():
    ops = clifford.base_operators_n8()
    U = ops.upper_tensor()
    # the true operator carries a 1/sqrt2 from the stored scaling
    assert U.item((0, 0, 1)) == Scalar.i() * Scalar.inv_sqrt2()


def test_lower_is_eps_sandwich():
    ops = clifford.base_operators_n8()
    eps = ops.eps
    for i in range(ops.n):
        want = np.einsum("ab,bcq,cd->adq", eps, ops.ops_upper[i], eps)
        assert np.array_equal(ops.ops_lower[i], want)
