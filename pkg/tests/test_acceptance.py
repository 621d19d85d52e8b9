"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary
(see conftest.py). All comparisons are exact; only runtimes carry limits.
Run standalone with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import time
from itertools import combinations
from math import comb

import pytest

from kleinfan import polycone
from kleinfan.gitfan import (build_arrangement, chamber_C_K, chamber_witness, in_interior, is_chamber,
                             is_q_factorial, picard_rank, rho_functional, sigma_K, sigma_prime_K,
                             verify_main_theorem)
from kleinfan.polycone import cone_eq, cone_from_h, cone_from_v, contains, face, relint_point
from kleinfan.render import render_slice
from kleinfan.rootsys import DynkinType, build_root_system

RESULTS: dict[int, tuple[bool, str]] = {}

TYPES = [f"A{r}" for r in range(1, 9)] + [f"D{r}" for r in range(4, 9)] + ["E6", "E7", "E8"]

# runtime limits in seconds
LIMIT_FIGURE = 1.0
LIMIT_ROOTS = 5.0
LIMIT_CHAMBER_SWEEP = 120.0
LIMIT_SWEEP = 600.0
LIMIT_E8 = 300.0


def record(num: int, ok: bool, detail: str):
    RESULTS[num] = (ok, detail)
    assert ok, detail


def rs_of(name):
    return build_root_system(DynkinType.parse(name))


def subsets(rs):
    return [K for k in range(rs.rank + 1) for K in combinations(rs.nodes, k)]


def test_criterion_1_figure():
    t0 = time.perf_counter()
    rs = rs_of("A2")
    a = build_arrangement(rs, 3)
    sig = {K: sigma_K(rs, 3, K) for K in subsets(rs)}
    svg = render_slice(a, list(sig.values()))
    walls = svg.count('class="wall"')
    dims = {K: s.dim for K, s in sig.items()}
    ray = polycone.face(a.F, [rho_functional(rs, 1), rho_functional(rs, 2)])
    elapsed = time.perf_counter() - t0
    ok = (walls == 6 and dims == {(): 3, (1,): 2, (2,): 2, (1, 2): 1}
          and cone_eq(sig[(1, 2)].cone, ray) and elapsed < LIMIT_FIGURE)
    record(1, ok, f"walls={walls} dims={[dims[K] for K in sorted(dims, key=len)]} time={elapsed:.3f}s")


def closed_form(t: DynkinType):
    r = t.rank
    if t.family == "A":
        return comb(r + 1, 2), r + 1
    if t.family == "D":
        return r * (r - 1), 2 * r - 2
    return {6: 36, 7: 63, 8: 120}[r], {6: 12, 7: 18, 8: 30}[r]


def closed_form_delta(t: DynkinType):
    r = t.rank
    if t.family == "A":
        return (1,) * (r + 1)
    if t.family == "D":
        return (1, 1) + (2,) * (r - 3) + (1, 1)
    return {6: (1, 1, 2, 2, 3, 2, 1), 7: (1, 2, 2, 3, 4, 3, 2, 1), 8: (1, 2, 3, 4, 6, 5, 4, 3, 2)}[r]


def test_criterion_2_root_systems():
    t0 = time.perf_counter()
    build_root_system.cache_clear()
    bad = []
    for name in TYPES:
        t = DynkinType.parse(name)
        rs = build_root_system(t)
        count, h = closed_form(t)
        if (len(rs.positive_roots), rs.coxeter, rs.delta) != (count, h, closed_form_delta(t)) \
                or sum(rs.delta) != h:
            bad.append(name)
    elapsed = time.perf_counter() - t0
    record(2, not bad and elapsed < LIMIT_ROOTS, f"{len(TYPES)} types, mismatches={bad} time={elapsed:.3f}s")


def test_criterion_3_arrangement_count():
    bad = []
    for name in TYPES:
        rs = rs_of(name)
        for n in (1, 2, 3):
            if len(build_arrangement(rs, n).hyperplanes) != 1 + (2 * n - 1) * len(rs.positive_roots):
                bad.append((name, n))
    record(3, not bad, f"{3 * len(TYPES)} (type, n) pairs, mismatches={bad}")


def test_criterion_4_chamber_sweep():
    t0 = time.perf_counter()
    bad, total = [], 0
    for name in ("A2", "A3", "D4"):
        rs = rs_of(name)
        for n in (2, 3):
            a = build_arrangement(rs, n)
            for K in subsets(rs):
                total += 1
                ck = chamber_C_K(rs, n, K)
                if not (is_chamber(a, ck) and in_interior(ck.cone, chamber_witness(rs, n, K))):
                    bad.append((name, n, K))
    elapsed = time.perf_counter() - t0
    record(4, not bad and elapsed < LIMIT_CHAMBER_SWEEP, f"{total} cases, failures={bad} time={elapsed:.2f}s")


def test_criterion_5_characterisation_sweep():
    t0 = time.perf_counter()
    bad, total = [], 0
    for name in ("A2", "A3"):
        rs = rs_of(name)
        for n in (2, 3):
            for K in subsets(rs):
                total += 1
                rep = verify_main_theorem(rs, n, K)
                if rep.overall is not True:
                    failed = "".join(c.name[1] for c in rep.clauses if c.passed is not True)
                    bad.append(f"{name} n={n} K={set(K) or '{}'} clauses={failed}")
    elapsed = time.perf_counter() - t0
    record(5, not bad and elapsed < LIMIT_SWEEP, f"{total} cases, failures={bad} time={elapsed:.2f}s")


def test_criterion_6_picard():
    bad = []
    for name in ("A2", "A3"):
        rs = rs_of(name)
        for n in (2, 3):
            a = build_arrangement(rs, n)
            for K in subsets(rs):
                r = rs.rank
                p = relint_point(sigma_K(rs, n, K).cone)
                ok = picard_rank(a, p) == r - len(K) + 1 and is_q_factorial(a, p)
                sp = sigma_prime_K(rs, n, K).cone
                # sigma'_I is the origin; the zero vector is its only point
                q = relint_point(sp) if sp.dim else (0,) * (r + 1)
                ok = ok and picard_rank(a, q) == r - len(K) and is_q_factorial(a, q)
                if not ok:
                    bad.append((name, n, K))
    record(6, not bad, f"failures={bad}")


def test_criterion_7_e8_targeted():
    t0 = time.perf_counter()
    rs = rs_of("E8")
    bad = []
    for K in ((), (1,), rs.nodes):
        rep = verify_main_theorem(rs, 2, K, uniqueness=False)
        if [c.passed for c in rep.clauses] != [True] * 5:
            bad.append(K)
    elapsed = time.perf_counter() - t0
    record(7, not bad and elapsed < LIMIT_E8, f"failures={bad} time={elapsed:.2f}s")


def random_cone_case(rng: random.Random):
    d = rng.randint(1, 5)
    total = rng.randint(0, 12)
    n_eq = rng.randint(0, min(2, total))
    rows = []
    while len(rows) < total:
        v = [rng.randint(-10, 10) for _ in range(d)]
        if any(v):
            rows.append(v)
    return rows[:n_eq], rows[n_eq:], d


def kernel_invariants_hold(eqs, ineqs, d, rng) -> bool:
    c = cone_from_h(eqs, ineqs, d)
    # round trip through both representations
    if not cone_eq(cone_from_v(list(c.rays), list(c.lineality), d), c):
        return False
    if not cone_eq(cone_from_h(list(c.equalities), list(c.inequalities), d), c):
        return False
    if c.dim == 0:
        return True
    # relative interior point: inside, and strictly inside every non-implied inequality
    p = relint_point(c)
    if not contains(c, p) or any(g(p) <= 0 for g in c.inequalities):
        return False
    # faces
    if c.inequalities:
        T = rng.sample(list(c.inequalities), rng.randint(1, len(c.inequalities)))
        f = face(c, T)
        vanish = all(g(x) == 0 for g in T for x in c.rays)
        if f.dim > c.dim or (f.dim == c.dim) != vanish or not polycone.is_face_of(f, c):
            return False
    return True


def test_criterion_8_kernel_suite():
    rng = random.Random(20240601)
    failures = []
    for i in range(1000):
        eqs, ineqs, d = random_cone_case(rng)
        if not kernel_invariants_hold(eqs, ineqs, d, rng):
            failures.append(i)
    record(8, not failures, f"1000 cones, failures={failures[:10]}")


if __name__ == "__main__":
    for name, fn in sorted((k, v) for k, v in dict(globals()).items() if k.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            pass
    for num, (ok, detail) in sorted(RESULTS.items()):
        print(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
