import numpy as np
import pytest

from hypforge import cayley, verifier


def _mutate(t, i, j, rng):
    C = t.constants.copy()
    ks = np.flatnonzero(C[i, j])
    k = int(rng.choice(ks))
    C[i, j, k] = -C[i, j, k]
    return cayley.MultTable(C, t.identity_index, t.provenance)


def test_axioms_pass_on_quaternions():
    rep = verifier.check_axioms(cayley.cd_generate(2))
    assert rep.ok


def test_full_suite_on_octonion(oct_table):
    rep = verifier.run_suite(oct_table, "all")
    assert rep.ok
    # the only expected negative is the recorded alternative bracket
    # placement, which is informational
    for r in rep.failures():
        assert not r.hard


def test_full_suite_on_canonical_sedenion(sed_spinor):
    rep = verifier.run_suite(sed_spinor, "all")
    assert rep.ok


def test_moufang_hard_only_at_dim8(oct_table, sed_spinor):
    r8 = verifier.check_moufang(oct_table)
    assert all(r.hard for r in r8.results)
    r16 = verifier.check_moufang(sed_spinor)
    assert all(not r.hard for r in r16.results)
    # the recorded dim-16 verdict on imaginary pairs is a pass
    assert all(r.passed for r in r16.results)


def test_quaternions_associative():
    t = cayley.cd_generate(2)
    C = t.constants
    lhs = np.einsum("abc,cxk->abxk", C, C, optimize=True)
    rhs = np.einsum("bxc,ack->abxk", C, C, optimize=True)
    assert np.array_equal(lhs, rhs)
    assert verifier.check_derived_identities(t).ok


def test_identity_row_mutant_caught(oct_table):
    C = oct_table.constants.copy()
    C[0, 3, 3] = -1
    bad = cayley.MultTable(C, 0, oct_table.provenance)
    rep = verifier.check_axioms(bad)
    assert not rep.ok
    names = [r.name for r in rep.failures()]
    assert "identity-left" in names


def test_off_identity_mutant_caught(oct_table):
    rng = np.random.default_rng(3)
    bad = _mutate(oct_table, 2, 5, rng)
    rep = verifier.run_suite(bad, "all")
    assert not rep.ok
    assert any(r.witness for r in rep.failures() if r.hard)


def test_report_serialization(oct_table):
    rep = verifier.check_structural_identities(oct_table)
    doc = rep.to_dict()
    assert doc["ok"] is True
    assert all("name" in r and "passed" in r for r in doc["results"])
    assert "report for" in str(rep)
    assert rep.to_json().startswith("{")


def test_compare_exact(oct_table):
    assert verifier.compare_tables(oct_table, oct_table, "exact").ok
    rng = np.random.default_rng(4)
    bad = _mutate(oct_table, 1, 2, rng)
    rep = verifier.compare_tables(oct_table, bad, "exact")
    assert not rep.ok
    assert rep.results[0].witness is not None


def test_compare_signed_permutation(oct_table):
    C = oct_table.constants
    perm = [0, 2, 1, 3, 4, 5, 6, 7]
    Cs = C[np.ix_(perm, perm, perm)]
    other = cayley.MultTable(Cs, 0, oct_table.provenance)
    rep = verifier.compare_tables(oct_table, other, "iso")
    assert rep.ok
    w = rep.results[0].witness
    assert w["perm"][0] == 0 and w["signs"][0] == 1


def test_compare_dim_mismatch(oct_table):
    small = cayley.cd_generate(2)
    rep = verifier.compare_tables(oct_table, small, "exact")
    assert not rep.ok


def test_compare_non_isomorphic(oct_table):
    # flipping a single structure constant breaks the algebra, so no
    # signed permutation can relate the tables
    rng = np.random.default_rng(9)
    bad = _mutate(oct_table, 3, 6, rng)
    rep = verifier.compare_tables(oct_table, bad, "iso")
    assert not rep.ok


def test_seed_determinism(oct_table):
    a = verifier.check_derived_identities(oct_table, seed=12)
    b = verifier.check_derived_identities(oct_table, seed=12)
    assert a.to_dict() == b.to_dict()


def test_env_seed(monkeypatch):
    monkeypatch.setenv("HYPFORGE_SEED", "77")
    assert verifier.resolve_seed(None) == 77
    assert verifier.resolve_seed(5) == 5
    monkeypatch.delenv("HYPFORGE_SEED")
    assert verifier.resolve_seed(None) == verifier.DEFAULT_SEED
