"""Identity suite for multiplication tables.

Runs exact checks of the algebra axioms, the tensor-level structural
identities, the derived product identities, and the Moufang identities
against a MultTable, and compares two tables up to a signed basis
permutation. Every check is a finite integer computation; randomized
checks draw small integer coefficients from a seeded generator, so a
pass always means exact equality.
"""

import json
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from .cayley import MultTable

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 64
COEFF_RANGE = 3


def resolve_seed(seed: Optional[int] = None) -> int:
    """Pick the effective seed: explicit argument, else the HYPFORGE_SEED
    environment variable, else the fixed default."""
    if seed is not None:
        return int(seed)
    env = os.environ.get("HYPFORGE_SEED")
    if env is not None:
        return int(env)
    return DEFAULT_SEED


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: Optional[dict] = None
    hard: bool = True

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": bool(self.passed), "hard": self.hard}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    table_id: str
    results: List[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results if r.hard)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    def extend(self, other: "Report") -> "Report":
        self.results.extend(other.results)
        return self

    def to_dict(self) -> dict:
        return {
            "table_id": self.table_id,
            "ok": self.ok,
            "results": [r.to_dict() for r in self.results],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def __str__(self) -> str:
        lines = ["report for %s: %s" % (self.table_id, "ok" if self.ok else "FAILED")]
        for r in self.results:
            tag = "pass" if r.passed else "FAIL"
            note = "" if r.hard else " (recorded verdict)"
            lines.append("  [%s] %s%s" % (tag, r.name, note))
            if r.witness is not None and not r.passed:
                lines.append("         witness: %s" % (r.witness,))
        return "\n".join(lines)


def _witness(diff: np.ndarray, labels) -> Optional[dict]:
    idx = np.argwhere(diff != 0)
    if idx.size == 0:
        return None
    first = idx[0]
    return {lab: int(v) for lab, v in zip(labels, first)}


def _result(name: str, diff: np.ndarray, labels, hard: bool = True) -> CheckResult:
    w = _witness(diff, labels)
    return CheckResult(name, w is None, w, hard)


def _mul(C: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.einsum("i,j,ijk->k", x, y, C, optimize=True)


def _random_elements(n: int, count: int, rng) -> np.ndarray:
    return rng.integers(-COEFF_RANGE, COEFF_RANGE + 1, size=(count, n)).astype(np.int64)


def _conj_vec(x: np.ndarray, e: int) -> np.ndarray:
    out = -x.copy()
    out[e] = x[e]
    return out


def check_axioms(t: MultTable, seed: Optional[int] = None,
                 samples: int = DEFAULT_SAMPLES) -> Report:
    """Identity element, norm/inverse behaviour, and the weakly
    alternative and flexible identities, on basis pairs and on their
    full linearizations."""
    C = t.constants
    n = t.dim
    e = t.identity_index
    rep = Report("dim-%d" % n)
    eye = np.eye(n, dtype=np.int64)

    rep.results.append(_result("identity-left", C[e] - eye, ("j", "k")))
    rep.results.append(_result("identity-right", C[:, e, :] - eye, ("i", "k")))

    # x xbar = <x,x> e, checked on seeded random integer elements
    rng = np.random.default_rng(resolve_seed(seed))
    xs = _random_elements(n, samples, rng)
    bad = np.zeros(samples, dtype=np.int64)
    for s in range(samples):
        x = xs[s]
        prod = _mul(C, x, _conj_vec(x, e))
        want = np.zeros(n, dtype=np.int64)
        want[e] = int(x @ x)
        bad[s] = int(np.any(prod != want))
    rep.results.append(_result("norm-from-conjugate", bad, ("sample",)))

    # (x xbar) y = <x,x> y for random pairs
    ys = _random_elements(n, samples, rng)
    bad = np.zeros(samples, dtype=np.int64)
    for s in range(samples):
        x, y = xs[s], ys[s]
        lhs = _mul(C, _mul(C, x, _conj_vec(x, e)), y)
        bad[s] = int(np.any(lhs != (x @ x) * y))
    rep.results.append(_result("norm-times-element", bad, ("sample",)))

    # weakly alternative identity (aa)b - a(ab) = b(aa) - (ba)a on basis pairs
    AA = np.einsum("iic->ic", C)
    lhs = (np.einsum("ic,cjk->ijk", AA, C, optimize=True)
           - np.einsum("ijc,ick->ijk", C, C, optimize=True))
    rhs = (np.einsum("ic,jck->ijk", AA, C, optimize=True)
           - np.einsum("jic,cik->ijk", C, C, optimize=True))
    rep.results.append(_result("weak-alternative-basis", lhs - rhs, ("i", "j", "k")))

    # its linearization over all basis triples
    lhs = (np.einsum("xyc,cbk->xybk", C, C, optimize=True)
           + np.einsum("yxc,cbk->xybk", C, C, optimize=True)
           - np.einsum("ybc,xck->xybk", C, C, optimize=True)
           - np.einsum("xbc,yck->xybk", C, C, optimize=True))
    rhs = (np.einsum("xyc,bck->xybk", C, C, optimize=True)
           + np.einsum("yxc,bck->xybk", C, C, optimize=True)
           - np.einsum("bxc,cyk->xybk", C, C, optimize=True)
           - np.einsum("byc,cxk->xybk", C, C, optimize=True))
    rep.results.append(_result("weak-alternative-linearized", lhs - rhs,
                               ("x", "y", "b", "k")))

    # flexible identity a(ba) = (ab)a on basis pairs
    lhs = np.einsum("jic,ick->ijk", C, C, optimize=True)
    rhs = np.einsum("ijc,cik->ijk", C, C, optimize=True)
    rep.results.append(_result("flexible-basis", lhs - rhs, ("i", "j", "k")))

    # its linearization x(by) + y(bx) = (xb)y + (yb)x on basis triples
    lhs = (np.einsum("byc,xck->xybk", C, C, optimize=True)
           + np.einsum("bxc,yck->xybk", C, C, optimize=True))
    rhs = (np.einsum("xbc,cyk->xybk", C, C, optimize=True)
           + np.einsum("ybc,cxk->xybk", C, C, optimize=True))
    rep.results.append(_result("flexible-linearized", lhs - rhs,
                               ("x", "y", "b", "k")))

    # bilinearity holds structurally for any constants cube
    rep.results.append(CheckResult("distributivity-structural", True))
    return rep


def _eta0_cube(n: int, e: int) -> np.ndarray:
    out = np.zeros((n, n, n), dtype=np.int64)
    for r in range(n):
        out[e, r, r] += 1
        out[r, e, r] += 1
        out[r, r, e] -= 1
    return out


def check_structural_identities(t: MultTable) -> Report:
    """Tensor-level identities of the structure constants: the scalar
    part formula, the symmetric-slot bracket identity, the vanishing
    identity component of the antisymmetric part, and the weak
    normalization identity (with its dim-8 reduction)."""
    C = t.constants
    n = t.dim
    e = t.identity_index
    rep = Report("dim-%d" % n)

    # symmetric part equals the rank-one scalar structure
    sym = C + np.transpose(C, (1, 0, 2))
    rep.results.append(_result("scalar-part", sym - 2 * _eta0_cube(n, e),
                               ("i", "j", "k")))

    # bracket identity: symmetrizing the outer slots equals symmetrizing
    # the middle slot with each outer slot in turn
    A = C + np.einsum("kji->ijk", C)
    B = np.einsum("jik->ijk", C) + np.einsum("jki->ijk", C)
    rep.results.append(_result("outer-bracket", A - B, ("i", "j", "k")))

    # the variant pairing the first slot with the last fails for these
    # tables; record which placement holds
    B2 = C + np.einsum("ikj->ijk", C)
    alt = not np.any(A - B2)
    rep.results.append(CheckResult("outer-bracket-alt-placement", alt, None,
                                   hard=False))

    # antisymmetric part has no identity component
    anti = C - np.transpose(C, (1, 0, 2))
    rep.results.append(_result("antisymmetric-no-identity", anti[:, :, e],
                               ("i", "j")))

    # weak normalization identity
    X = np.einsum("ijk,lmk->ijlm", C, C, optimize=True)
    Y = np.einsum("jir,mlr->ijlm", C, C, optimize=True)
    lhs = X + np.einsum("ljim->ijlm", X)
    rhs = Y + np.einsum("ljim->ijlm", Y)
    rep.results.append(_result("weak-normalization", lhs - rhs,
                               ("i", "j", "l", "m")))

    if n == 8:
        eye = np.eye(n, dtype=np.int64)
        target = 2 * np.einsum("jm,il->ijlm", eye, eye)
        rep.results.append(_result("normalization-dim8", rhs - target,
                                   ("i", "j", "l", "m")))
    return rep


def _powers(C: np.ndarray, a: np.ndarray, top: int) -> List[np.ndarray]:
    """Left-nested powers a^1..a^top with a^k = a^(k-1) a; flexibility
    makes the nesting immaterial where the identities below use them."""
    out = [None] * (top + 1)
    out[1] = a
    for k in range(2, top + 1):
        out[k] = _mul(C, out[k - 1], a)
    return out


def check_derived_identities(t: MultTable, seed: Optional[int] = None,
                             samples: int = DEFAULT_SAMPLES) -> Report:
    """Derived product identities: the symmetrized flexible law on all
    basis triples, the four-term expansions on all basis triples, and
    the sampled non-multilinear identities (alternative-elastic, Jordan,
    cubic exchanges, power associativity)."""
    C = t.constants
    n = t.dim
    e = t.identity_index
    rep = Report("dim-%d" % n)
    opt = {"optimize": True}

    # (zx)y + (yx)z = z(xy) + y(xz) over all basis triples
    lhs = (np.einsum("zxc,cyk->zxyk", C, C, **opt)
           + np.einsum("yxc,czk->zxyk", C, C, **opt))
    rhs = (np.einsum("xyc,zck->zxyk", C, C, **opt)
           + np.einsum("xzc,yck->zxyk", C, C, **opt))
    rep.results.append(_result("symmetrized-flexible", lhs - rhs,
                               ("z", "x", "y", "k")))

    # first four-term expansion over basis triples (a, b, x)
    t61l = (np.einsum("abc,cad,dxk->abxk", C, C, C, **opt)
            - np.einsum("axc,bcd,adk->abxk", C, C, C, **opt))
    t61r = (np.einsum("abc,acd,xdk->abxk", C, C, C, **opt)
            - np.einsum("axc,cbd,dak->abxk", C, C, C, **opt)
            + np.einsum("axc,bad,cdk->abxk", C, C, C, **opt)
            - np.einsum("xac,abd,cdk->abxk", C, C, C, **opt))
    rep.results.append(_result("four-term-left", t61l - t61r, ("a", "b", "x", "k")))

    # second four-term expansion
    t62l = (np.einsum("bac,acd,xdk->abxk", C, C, C, **opt)
            - np.einsum("xac,cbd,dak->abxk", C, C, C, **opt))
    t62r = (np.einsum("bac,cad,dxk->abxk", C, C, C, **opt)
            - np.einsum("xac,bcd,adk->abxk", C, C, C, **opt)
            + np.einsum("abc,xad,cdk->abxk", C, C, C, **opt)
            - np.einsum("bac,axd,cdk->abxk", C, C, C, **opt))
    rep.results.append(_result("four-term-right", t62l - t62r, ("a", "b", "x", "k")))

    # their combination
    rep.results.append(_result("four-term-combined",
                               (t61l - t62l) - (t61r - t62r),
                               ("a", "b", "x", "k")))

    # symmetrized-product variants; S carries twice the symmetrized product
    S = C + np.transpose(C, (1, 0, 2))
    l64a = (np.einsum("abc,cad,dxk->abxk", S, C, C, **opt)
            + np.einsum("xac,abd,cdk->abxk", C, S, C, **opt))
    r64a = (np.einsum("abc,axd,cdk->abxk", S, C, C, **opt)
            + np.einsum("abc,acd,xdk->abxk", S, C, C, **opt))
    rep.results.append(_result("symmetrized-expansion-a", l64a - r64a,
                               ("a", "b", "x", "k")))
    l64b = (np.einsum("axc,bcd,adk->abxk", S, C, C, **opt)
            + np.einsum("axc,bad,cdk->abxk", S, C, C, **opt))
    r64b = (np.einsum("abc,axd,cdk->abxk", C, S, C, **opt)
            + np.einsum("axc,cbd,dak->abxk", S, C, C, **opt))
    rep.results.append(_result("symmetrized-expansion-b", l64b - r64b,
                               ("a", "b", "x", "k")))

    # sampled non-multilinear identities on random integer elements
    rng = np.random.default_rng(resolve_seed(seed))
    avs = _random_elements(n, samples, rng)
    bvs = _random_elements(n, samples, rng)

    def sampled(name, fn):
        bad = np.zeros(samples, dtype=np.int64)
        for s in range(samples):
            bad[s] = int(fn(avs[s], bvs[s]))
        rep.results.append(_result(name, bad, ("sample",)))

    def alt_elastic(a, b):
        aa = _mul(C, a, a)
        lhs = (_mul(C, aa, b) - _mul(C, a, _mul(C, a, b))
               - _mul(C, a, _mul(C, b, a)))
        rhs = (_mul(C, b, aa) - _mul(C, _mul(C, b, a), a)
               - _mul(C, _mul(C, a, b), a))
        return np.any(lhs != rhs)

    sampled("alternative-elastic", alt_elastic)

    def jordan(a, b):
        p = _powers(C, a, 3)
        for k in range(1, 4):
            for l in range(1, 4):
                lhs = _mul(C, p[k], _mul(C, b, p[l]))
                rhs = _mul(C, _mul(C, p[k], b), p[l])
                if np.any(lhs != rhs):
                    return True
        return False

    sampled("jordan-family", jordan)

    def cubic_chain_a(y, x):
        y2 = _mul(C, y, y)
        u = _mul(C, y2, x) - _mul(C, x, y2)
        lhs1 = _mul(C, u, y)
        rhs1 = _mul(C, y2, _mul(C, x, y)) - _mul(C, _mul(C, x, y), y2)
        lhs2 = _mul(C, y, u)
        rhs2 = _mul(C, y2, _mul(C, y, x)) - _mul(C, _mul(C, y, x), y2)
        return np.any(lhs1 != rhs1) or np.any(lhs2 != rhs2)

    sampled("cubic-commutator", cubic_chain_a)

    def cubic_exchange(a, y):
        p = _powers(C, a, 3)
        comm = _mul(C, y, p[3]) - _mul(C, p[3], y)
        lhs1 = _mul(C, _mul(C, y, p[2]), a) - _mul(C, a, _mul(C, p[2], y))
        lhs2 = _mul(C, _mul(C, y, a), p[2]) - _mul(C, p[2], _mul(C, a, y))
        return np.any(lhs1 != comm) or np.any(lhs2 != comm)

    sampled("cubic-exchange", cubic_exchange)

    def power_assoc(a, _b):
        a2 = _mul(C, a, a)
        return np.any(_mul(C, a, a2) != _mul(C, a2, a))

    sampled("power-associativity", power_assoc)
    return rep


def _moufang_defect(C: np.ndarray) -> np.ndarray:
    """((ab)a)x - a(b(ax)) + x(a(ba)) - ((xa)b)a over all basis triples."""
    opt = {"optimize": True}
    return (np.einsum("abc,cad,dxk->abxk", C, C, C, **opt)
            - np.einsum("axc,bcd,adk->abxk", C, C, C, **opt)
            + np.einsum("bac,acd,xdk->abxk", C, C, C, **opt)
            - np.einsum("xac,cbd,dak->abxk", C, C, C, **opt))


def _conditional_defect(C: np.ndarray) -> np.ndarray:
    """x(a(a,b)) - ((a,x)b)a + (a,x)(ba) - (xa)(b,a), doubled to stay in
    integers, over all basis triples."""
    opt = {"optimize": True}
    S = C + np.transpose(C, (1, 0, 2))
    return (np.einsum("abc,acd,xdk->abxk", S, C, C, **opt)
            - np.einsum("axc,cbd,dak->abxk", S, C, C, **opt)
            + np.einsum("axc,bad,cdk->abxk", S, C, C, **opt)
            - np.einsum("xac,bad,cdk->abxk", C, S, C, **opt))


def check_moufang(t: MultTable) -> Report:
    """Moufang identity checks. For dim 8 both forms are hard assertions
    over all basis triples. For larger tables the claim is restricted to
    imaginary basis pairs and the outcome is recorded, not asserted."""
    C = t.constants
    n = t.dim
    e = t.identity_index
    rep = Report("dim-%d" % n)
    d66 = _moufang_defect(C)
    d65 = _conditional_defect(C)
    if n <= 8:
        rep.results.append(_result("moufang-basis", d66, ("a", "b", "x", "k")))
        rep.results.append(_result("moufang-symmetrized", d65,
                                   ("a", "b", "x", "k")))
    else:
        imag = [r for r in range(n) if r != e]
        sub66 = d66[np.ix_(imag, imag)]
        sub65 = d65[np.ix_(imag, imag)]
        rep.results.append(_result("moufang-imaginary-pairs", sub66,
                                   ("a", "b", "x", "k"), hard=False))
        rep.results.append(_result("moufang-symmetrized-imaginary", sub65,
                                   ("a", "b", "x", "k"), hard=False))
    return rep


def run_suite(t: MultTable, suite: str = "all", seed: Optional[int] = None,
              samples: int = DEFAULT_SAMPLES) -> Report:
    """Run one named suite or all of them against a table."""
    suites = {
        "axioms": lambda: check_axioms(t, seed, samples),
        "structural": lambda: check_structural_identities(t),
        "derived": lambda: check_derived_identities(t, seed, samples),
        "moufang": lambda: check_moufang(t),
    }
    if suite == "all":
        rep = Report("dim-%d" % t.dim)
        for name in ("axioms", "structural", "derived", "moufang"):
            rep.extend(suites[name]())
        return rep
    if suite not in suites:
        raise ValueError("unknown suite %r" % suite)
    return suites[suite]()


def compare_tables(t1: MultTable, t2: MultTable, mode: str = "exact") -> Report:
    """Compare two tables entrywise, or search for a signed basis
    permutation fixing the identity that carries one to the other."""
    rep = Report("compare-dim-%d" % t1.dim)
    if t1.dim != t2.dim:
        rep.results.append(CheckResult("dimensions-match", False,
                                       {"dim1": t1.dim, "dim2": t2.dim}))
        return rep
    if mode == "exact":
        same = (t1.identity_index == t2.identity_index
                and np.array_equal(t1.constants, t2.constants))
        w = None
        if not same and t1.identity_index == t2.identity_index:
            w = _witness(t1.constants - t2.constants, ("i", "j", "k"))
        rep.results.append(CheckResult("exact-match", same, w))
        return rep
    if mode != "iso":
        raise ValueError("unknown compare mode %r" % mode)
    found = _signed_permutation(t1, t2)
    if found is None:
        rep.results.append(CheckResult("signed-permutation-match", False))
    else:
        perm, signs = found
        rep.results.append(CheckResult(
            "signed-permutation-match", True,
            {"perm": [int(p) for p in perm], "signs": [int(s) for s in signs]}))
    return rep


def _signed_permutation(t1: MultTable, t2: MultTable):
    """Backtracking search for (perm, signs) with perm[0] = 0 mapping
    t1 onto t2: signed images of assigned generators constrain products,
    so most branches die immediately."""
    n = t1.dim
    C1 = np.asarray(t1.constants)
    C2 = np.asarray(t2.constants)
    if t1.identity_index != 0 or t2.identity_index != 0:
        o1 = [t1.identity_index] + [r for r in range(n) if r != t1.identity_index]
        o2 = [t2.identity_index] + [r for r in range(n) if r != t2.identity_index]
        C1 = C1[np.ix_(o1, o1, o1)]
        C2 = C2[np.ix_(o2, o2, o2)]

    def single(vec):
        nz = np.flatnonzero(vec)
        if len(nz) != 1 or abs(vec[nz[0]]) != 1:
            return None
        return int(nz[0]), int(vec[nz[0]])

    perm = np.full(n, -1, dtype=np.int64)
    signs = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    perm[0], signs[0], used[0] = 0, 1, True

    def propagate(i, j):
        """If e_i e_j lands on an unassigned index, its image is forced."""
        got = single(C1[i, j])
        if got is None:
            return True, None
        k, c = got
        if perm[k] >= 0:
            want = signs[i] * signs[j] * c * signs[k]
            return C2[perm[i], perm[j], perm[k]] == want, None
        img = single(C2[perm[i], perm[j]])
        if img is None:
            return False, None
        tk, tc = img
        if used[tk]:
            return False, None
        return True, (k, tk, signs[i] * signs[j] * c * tc)

    def assign(r):
        if r == n:
            mapped = np.einsum("i,j,k,ijk->ijk", signs, signs, signs, C1)
            return np.array_equal(C2[np.ix_(perm, perm, perm)], mapped)
        if perm[r] >= 0:
            return assign(r + 1)
        for cand in range(1, n):
            if used[cand]:
                continue
            for s in (1, -1):
                stack = []
                perm[r], signs[r], used[cand] = cand, s, True
                stack.append(r)
                ok = True
                frontier = [r]
                while ok and frontier:
                    nxt = []
                    for i in range(n):
                        if perm[i] < 0:
                            continue
                        for j in frontier:
                            for (a, b) in ((i, j), (j, i)):
                                good, forced = propagate(a, b)
                                if not good:
                                    ok = False
                                    break
                                if forced is not None:
                                    k, tk, sk = forced
                                    if perm[k] >= 0:
                                        if perm[k] != tk or signs[k] != sk:
                                            ok = False
                                            break
                                    else:
                                        perm[k], signs[k] = tk, sk
                                        used[tk] = True
                                        stack.append(k)
                                        nxt.append(k)
                            if not ok:
                                break
                        if not ok:
                            break
                    frontier = nxt
                if ok and assign(r + 1):
                    return True
                for k in stack:
                    used[perm[k]] = False
                    perm[k], signs[k] = -1, 0
        return False

    if assign(1):
        # rebuild the completed assignment for the caller
        return perm.copy(), signs.copy()
    return None
