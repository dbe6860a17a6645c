"""Property and theorem checks over the cyclic class, reported one line each."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from . import _kernels, cyclic
from .automata import hom_exists, isomorphic, make_cyclic_automaton, rho_subset
from .classes import Atom, And, check_closure_property, eval_expr
from .congruence import RelationSet, fold_closure, saturate_rules


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def __str__(self):
        tail = f": {self.detail}" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}{tail}"


def _first_false(mask, *axes):
    idx = np.argwhere(~mask)
    if idx.size == 0:
        return None
    return tuple(int(axes[k][i]) for k, i in enumerate(idx[0]))


def lattice_laws(N: int) -> list[Check]:
    u = np.arange(N + 1, dtype=np.int64)
    J = _kernels.gcd_outer(u, u)
    M = _kernels.lcm_outer(u, u)
    checks = []
    scalar = all(
        J[a, b] == cyclic.join(a, b) and M[a, b] == cyclic.meet(a, b)
        for a in range(N + 1)
        for b in range(N + 1)
    )
    checks.append(Check("join/meet tables match scalar gcd/lcm", scalar))
    bad = _first_false((J == J.T) & (M == M.T), u, u)
    checks.append(Check("commutativity", bad is None, f"counterexample {bad}" if bad else ""))
    d = np.arange(N + 1)
    bad = _first_false((J[d, d] == u) & (M[d, d] == u), u)
    checks.append(Check("idempotence", bad is None, f"counterexample {bad}" if bad else ""))
    # join(a, meet(a, b)) = a and meet(a, join(a, b)) = a
    ab_j = np.gcd(u[:, None], M)
    ab_m = np.lcm(u[:, None], J)
    bad = _first_false((ab_j == u[:, None]) & (ab_m == u[:, None]), u, u)
    checks.append(Check("absorption", bad is None, f"counterexample {bad}" if bad else ""))
    # (a v b) v c = a v (b v c), and the same for meets
    lhs_j = J[J[:, :, None], u[None, None, :]]
    rhs_j = J[u[:, None, None], J[None, :, :]]
    lhs_m = _kernels.lcm_outer(M.ravel(), u).reshape(N + 1, N + 1, N + 1)
    rhs_m = _kernels.lcm_outer(u, M.ravel()).reshape(N + 1, N + 1, N + 1)
    bad = _first_false((lhs_j == rhs_j) & (lhs_m == rhs_m), u, u, u)
    checks.append(Check("associativity", bad is None, f"counterexample {bad}" if bad else ""))
    le = np.array([[cyclic.le(a, b) for b in range(N + 1)] for a in range(N + 1)])
    ok = (le == (J == u[None, :])) & (le == (M == u[:, None]))
    bad = _first_false(ok, u, u)
    checks.append(Check("order compatibility le <=> join=b <=> meet=a", bad is None, f"counterexample {bad}" if bad else ""))
    units = (
        cyclic.sup_set([]) == 0
        and cyclic.inf_set([]) == 1
        and all(
            cyclic.join(n, 1) == 1
            and cyclic.meet(n, 1) == n
            and cyclic.join(n, 0) == n
            and cyclic.meet(n, 0) == 0
            for n in range(N + 1)
        )
    )
    checks.append(Check("top [1], bottom [0], empty sup/inf", units))
    return checks


def no_complements(a_max: int = 30, b_max: int = 10000) -> Check:
    a = np.arange(a_max + 1, dtype=np.int64)
    b = np.arange(b_max + 1, dtype=np.int64)
    hit = (_kernels.gcd_outer(a, b) == 1) & (_kernels.lcm_outer(a, b) == 0)
    pairs = {tuple(sorted((int(a[i]), int(b[j])))) for i, j in np.argwhere(hit)}
    ok = pairs <= {(0, 1)}
    return Check(f"complements only for top/bottom (a<={a_max}, b<={b_max})", ok, "" if ok else f"found {sorted(pairs)}")


def hom_criterion(n_max: int) -> Check:
    for n in range(1, n_max + 1):
        A = make_cyclic_automaton(n)
        for m in range(1, n_max + 1):
            B = make_cyclic_automaton(m)
            div = n % m == 0
            if not (rho_subset(A, B) == div == hom_exists(A, B)):
                return Check("hom([n],[m]) <=> m|n <=> rho subset", False, f"n={n}, m={m}")
    return Check(f"hom([n],[m]) <=> m|n <=> rho subset (n,m<={n_max})", True)


def defining_relations(n_max: int, fold_max: int) -> list[Check]:
    bad = next((n for n in range(1, n_max + 1) if cyclic.closure_unary(RelationSet.unary([(n, 0)])) != n), None)
    checks = [Check(f"closure of n=0 is [n] (n<={n_max})", bad is None, f"n={bad}" if bad else "")]
    bad = next(
        (
            n
            for n in range(1, fold_max + 1)
            if not isomorphic(fold_closure(RelationSet.unary([(n, 0)])), make_cyclic_automaton(n))
        ),
        None,
    )
    checks.append(Check(f"folding n=0 gives the n-cycle (n<={fold_max})", bad is None, f"n={bad}" if bad else ""))
    return checks


def saturation_agreement(entry_max: int = 12, length_bound: int = 20) -> Check:
    for n in range(entry_max + 1):
        for m in range(n + 1):
            rel = RelationSet.unary([(n, m)])
            got = saturate_rules(rel, length_bound, "five-rule-unary").period()
            if got != cyclic.closure_unary(rel):
                return Check("five-rule saturation period = closure", False, f"relation {n}={m}")
    return Check(f"five-rule saturation period = closure (single pairs <= {entry_max})", True)


def worked_examples(N: int) -> list[Check]:
    checks = []
    ex3 = And((Atom.of("coFr", 1), Atom.of("contraFr", 1), Atom.of("Fr", 6), Atom.of("cocontraFr", 6)))
    got = eval_expr(ex3, N).indices()
    want = [m for m in (2, 3) if m <= N]
    checks.append(Check(f"{ex3} = {{2, 3}}", got == want, "" if got == want else f"got {got}"))
    got = eval_expr(Atom.of("contraFr", 1), N).indices()
    want = [m for m in range(N + 1) if m != 1]
    checks.append(Check("contraFr(1=0) = all but [1]", got == want))
    full = list(range(N + 1))
    ok = eval_expr(Atom.of("Fr", 0), N).indices() == full == eval_expr(Atom.of("coFr", 1), N).indices()
    checks.append(Check("Fr(0=0) and coFr(1=0) impose no restriction", ok))
    return checks


def _coprime_pair(values) -> tuple[int, int] | None:
    for a, b in combinations_with_replacement(values, 2):
        if math.gcd(a, b) == 1:
            return a, b
    return None


def _coprime_cofactors(g: int, N: int) -> tuple[int, int] | None:
    for a in range(2, min(g, N) + 1):
        b, r = divmod(g, a)
        if r == 0 and 1 < b <= N and math.gcd(a, b) == 1:
            return a, b
    return None


def _closure_line(expr, N, op, expect_closed: bool, why: str = ""):
    ce = check_closure_property(expr, N, op)
    found = "closed" if ce is None else f"counterexample {ce}"
    expected = "closed" if expect_closed else "counterexample"
    ok = (ce is None) == expect_closed
    detail = found if ok else f"{found}, expected {expected}{' ' + why if why else ''}"
    return Check(f"{expr} {op}", ok, detail)


def theorem_suite(N: int, g_max: int = 50) -> list[Check]:
    """Fr/coFr classes are lattices, contraFr/cocontraFr semilattices, mixed neither."""
    checks = []
    for g in range(1, g_max + 1):
        for kind in ("Fr", "coFr"):
            for op in ("join", "meet"):
                checks.append(_closure_line(Atom.of(kind, g), N, op, True))
        contra = Atom.of("contraFr", g)
        nondiv = [m for m in range(1, N + 1) if g % m]
        pair = _coprime_pair(nondiv)
        checks.append(_closure_line(contra, N, "meet", True))
        checks.append(_closure_line(contra, N, "join", pair is None, f"(coprime non-divisors {pair})" if pair else ""))
        cocontra = Atom.of("cocontraFr", g)
        cof = _coprime_cofactors(g, N)
        checks.append(_closure_line(cocontra, N, "join", True))
        checks.append(_closure_line(cocontra, N, "meet", cof is None, f"(coprime cofactors {cof})" if cof else ""))
    mixed = And((Atom.of("contraFr", 1), Atom.of("cocontraFr", 6)))
    neither = N >= 3
    checks.append(_closure_line(mixed, N, "join", not neither))
    checks.append(_closure_line(mixed, N, "meet", not neither))
    return checks


def run_all(N: int) -> list[Check]:
    small = min(N, 50)
    checks = []
    checks += lattice_laws(min(N, 200))
    checks.append(no_complements())
    checks.append(hom_criterion(small))
    checks += defining_relations(max(N, 1), small)
    checks.append(saturation_agreement())
    checks += worked_examples(N)
    checks += theorem_suite(N, small)
    return checks
