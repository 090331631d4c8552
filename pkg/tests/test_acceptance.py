"""Acceptance criteria, one test each.

Every test records a one-line verdict; ``conftest.py`` prints them at the end
of the run. Run directly with ``python tests/test_acceptance.py`` for the same
report without pytest.
"""

from __future__ import annotations

import random
import time

import pytest

from konig.coloring import color_edges, verify_coloring
from konig.errors import NegativeEntry, NotBipartite
from konig.factorization import (
    color_via_regularization,
    one_factorization,
    power_of_two_factorization,
    regularize,
    verify_factorization,
)
from konig.graph import as_bipartite, to_general, two_coloring
from konig.instances import (
    fixture,
    random_bounded_degree_bipartite,
    random_equal_line_sum_matrix,
    random_regular_bipartite,
    random_regular_support,
)
from konig.matrix import (
    count_nonzero_members_bruteforce,
    decompose_into_permutations,
    nonzero_member,
    support_decomposition,
    verify_decomposition,
)

from oracles import is_perfect_matching, is_proper, nonzero_permutations

RESULTS: list[str] = []


def record(tag: str, ok: bool, detail: str) -> None:
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] {tag}: {detail}")
    assert ok, detail


def best_time(fn, repeat: int = 5) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def _check_factorization(g, fz, k) -> bool:
    if len(fz) != k:
        return False
    seen: set[int] = set()
    for f in fz.factors:
        if seen & f.edges or not is_perfect_matching(g.n_left, g.n_right, g.edges, f.edges):
            return False
        seen |= f.edges
    return seen == set(range(g.m)) and verify_factorization(g, fz)[0]


def _bounded_instance(seed: int, max_side: int = 20, max_delta: int = 6):
    rng = random.Random(seed)
    nl, nr = rng.randint(1, max_side), rng.randint(1, max_side)
    d = rng.randint(1, max_delta)
    capacity = min(nl, nr) * d
    m = rng.randint(capacity // 2, capacity)  # dense enough to force path swaps
    return random_bounded_degree_bipartite(nl, nr, d, m, seed)


def test_c01_counterexample():
    m = fixture("koenig_counterexample_matrix")

    def run():
        count = count_nonzero_members_bruteforce(m)
        try:
            nonzero_member(m)
        except NegativeEntry:
            return count, True
        return count, False

    count, rejected = run()
    elapsed = best_time(run)
    ok = count == 0 and rejected and elapsed < 1e-3
    record("C1 counterexample", ok,
           f"members={count}, NegativeEntry={rejected}, {elapsed * 1e3:.3f} ms (< 1 ms)")


def test_c02_nonzero_member():
    failures = 0
    t = time.perf_counter()
    for seed in range(500):
        n, s = 1 + seed % 6, 1 + (seed // 6) % 5
        m = random_equal_line_sum_matrix(n, s, seed)
        p = nonzero_member(m)
        if not all(m[i, k] > 0 for i, k in enumerate(p)) or count_nonzero_members_bruteforce(m) < 1:
            failures += 1
    elapsed = time.perf_counter() - t
    record("C2 nonzero member", failures == 0 and elapsed < 10,
           f"500 matrices, {failures} failures, {elapsed:.2f} s (< 10 s)")


def test_c03_edge_coloring():
    failures = 0
    t = time.perf_counter()
    for seed in range(1000):
        g = _bounded_instance(seed)
        delta = g.max_degree()
        for k in (delta, delta + 1):
            c = color_edges(g, k)
            if not (verify_coloring(g, c)[0] and is_proper(g.edges, c.assignment, k)):
                failures += 1
    elapsed = time.perf_counter() - t
    record("C3 edge coloring", failures == 0 and elapsed < 10,
           f"1000 graphs x 2 values of k, {failures} failures, {elapsed:.2f} s (< 10 s)")


def test_c04_one_factorization():
    failures = 0
    t = time.perf_counter()
    for seed in range(300):
        n, k = 1 + seed % 50, 1 + seed % 8
        g = random_regular_bipartite(n, k, seed)
        if not _check_factorization(g, one_factorization(g), k):
            failures += 1
    elapsed = time.perf_counter() - t
    record("C4 one-factorization", failures == 0 and elapsed < 10,
           f"300 regular graphs, {failures} failures, {elapsed:.2f} s (< 10 s)")


def test_c05_support_bound():
    failures = 0
    for seed in range(200):
        n = 1 + seed % 6
        k = min(n, 1 + (seed // 6) % 3)
        m = random_regular_support(n, k, seed)
        count = count_nonzero_members_bruteforce(m)
        d = support_decomposition(m)
        members = set(nonzero_permutations(m.rows))
        if count < k or len(d) != k or not verify_decomposition(m, d)[0] or not set(d.parts) <= members:
            failures += 1
    record("C5 support bound", failures == 0, f"200 supports, {failures} failures")


def test_c06_regularization():
    failures = 0
    for seed in range(200):
        g = _bounded_instance(seed + 10_000, max_side=12)
        k = g.max_degree()
        host = regularize(g, k).host
        host_ok = host.regular_degree() == (k if host.m else 0) and two_coloring(to_general(host)).is_bipartite
        c = color_via_regularization(g, k)
        if not (host_ok and verify_coloring(g, c)[0] and is_proper(g.edges, c.assignment, k)):
            failures += 1
    record("C6 regularization coloring", failures == 0, f"200 graphs, {failures} failures")


def test_c07_power_of_two_cross_check():
    failures = 0
    count = 0
    for m in range(5):
        for seed in range(40):
            n = 1 + (seed * 7 + m) % 32
            g = random_regular_bipartite(n, 2**m, seed)
            count += 1
            if not (_check_factorization(g, power_of_two_factorization(g), 2**m)
                    and _check_factorization(g, one_factorization(g), 2**m)):
                failures += 1
    record("C7 engine cross-check", failures == 0, f"{count} graphs (degree 1..16), {failures} failures")


def test_c08_fixtures():
    cube = fixture("cube")
    fz = one_factorization(cube)
    cube_ok = _check_factorization(cube, fz, 3) and [len(f) for f in fz] == [4, 4, 4]

    try:
        as_bipartite(fixture("petersen"))
        petersen_ok = False
    except NotBipartite as exc:
        w = exc.witness
        petersen_ok = len(w.edges) == 5 and w.vertices[0] == w.vertices[-1]

    k33 = fixture("k33")
    table = [[-1] * 3 for _ in range(3)]
    for c, f in enumerate(one_factorization(k33).factors):
        for e in f.edges:
            i, j = k33.edges[e]
            table[i][j] = c
    latin = all(sorted(row) == [0, 1, 2] for row in table) and \
        all(sorted(col) == [0, 1, 2] for col in zip(*table))
    record("C8 fixtures", cube_ok and petersen_ok and latin,
           f"cube 3x4 matchings={cube_ok}, Petersen odd walk 5={petersen_ok}, K33 Latin square={latin}")


def test_c09_round_trip():
    failures = 0
    for seed in range(300):
        n, s = 1 + seed % 8, seed % 7
        m = random_equal_line_sum_matrix(n, s, seed + 50_000)
        d = decompose_into_permutations(m)
        if len(d) != s or d.sum_matrix(n) != m:
            failures += 1
    record("C9 permutation round trip", failures == 0, f"300 matrices, {failures} failures")


@pytest.mark.parametrize("shuffled", [False, True], ids=["generated-order", "shuffled-order"])
def test_c10_scale(shuffled):
    from konig.graph import BipartiteMultigraph

    g = random_regular_bipartite(6250, 16, 2026)
    if shuffled:
        edges = list(g.edges)
        random.Random(1).shuffle(edges)
        g = BipartiteMultigraph(g.n_left, g.n_right, edges)
    t = time.perf_counter()
    c = color_edges(g, 16)
    elapsed = time.perf_counter() - t
    verified = verify_coloring(g, c)[0]
    record(f"C10 scale ({'shuffled' if shuffled else 'generated'} edge order)",
           g.m == 100_000 and verified and elapsed < 5,
           f"{g.m} edges, 16 colors, {elapsed:.2f} s (< 5 s), verified={verified}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
