"""Acceptance criteria, one test per criterion.

Each test prints exactly one pass/fail line; run with -s to see them
alongside the pytest dots.  Wall-clock bounds are asserted where the
criterion carries one.
"""

import random
import time
from math import comb

from csfkit import (
    Tree,
    csf_deletion_contraction,
    csf_forest,
    csf_power_sum,
    csf_tree,
    csf_weighted,
    enumerate_trees,
    f_polynomial_direct,
    f_polynomial_from_csf,
    find_collisions,
    forest_level_value,
    generalized_degree_sequence,
    identity_matrix,
    inclusion_exclusion_rhs,
    level_sum,
    matrix_multiply,
    path_sequence,
    sign_binomial_matrix,
    subtree_derivative,
    subtree_polynomial,
    stats_from_subtree_polynomial,
    trunk,
    twig_sequence,
    verify_distinct,
)
from helpers import random_tree, random_weighted_multigraph, random_permutation

EXPECTED_COUNTS_13_16 = {13: 1301, 14: 3159, 15: 7741, 16: 19320}


def report(num, slug, ok, detail=""):
    line = f"[acceptance] criterion {num:02d} {'PASS' if ok else 'FAIL'} {slug}"
    if detail:
        line += f" ({detail})"
    print(line, flush=True)
    assert ok, line


def test_criterion_01_transform_round_trip():
    t0 = time.perf_counter()
    checked = 0
    ok = True
    for n in range(1, 13):
        for t in enumerate_trees(n):
            if f_polynomial_from_csf(csf_tree(t), t.n) != f_polynomial_direct(t):
                ok = False
                break
            checked += 1
        if not ok:
            break
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 300
    report(1, "sigma-transform equals direct F on all trees through n=12", ok,
           f"{checked} trees, {elapsed:.1f} s")


def test_criterion_02_distinctness_through_16():
    t0 = time.perf_counter()
    reports = verify_distinct(16, jobs=2)
    elapsed = time.perf_counter() - t0
    counts_ok = all(
        rep.tree_count == EXPECTED_COUNTS_13_16[rep.order]
        for rep in reports if rep.order in EXPECTED_COUNTS_13_16)
    no_collisions = all(
        rep.collisions == [] and rep.distinct_csf_count == rep.tree_count
        for rep in reports)
    ok = counts_ok and no_collisions and elapsed < 1800
    report(2, "tree CSFs pairwise distinct through n=16", ok,
           f"counts 13..16 = {[r.tree_count for r in reports[-4:]]}, {elapsed:.1f} s")


def test_criterion_03_unicyclic_collisions():
    t0 = time.perf_counter()
    found = find_collisions("unicyclic", 6)
    t1 = time.perf_counter()
    none_small = find_collisions("unicyclic", 3)
    t2 = time.perf_counter()
    ok = len(found) >= 1 and none_small == [] and (t1 - t0) < 10 and (t2 - t1) < 10
    report(3, "unicyclic collision exists at n=6 and not at n=3", ok,
           f"{len(found)} pair(s) at n=6, {t1 - t0:.1f} s")


def test_criterion_04_route_equality():
    ok = True
    checked_trees = 0
    for n in range(1, 11):
        for t in enumerate_trees(n):
            a = csf_power_sum(t).poly
            if not (csf_deletion_contraction(t).poly == a
                    and csf_forest(t).poly == a
                    and csf_tree(t).poly == a):
                ok = False
                break
            checked_trees += 1
        if not ok:
            break
    rng = random.Random(20240819)
    checked_weighted = 0
    while ok and checked_weighted < 200:
        g, w = random_weighted_multigraph(rng)
        if csf_weighted(g, w).poly != csf_deletion_contraction(g, w).poly:
            ok = False
        checked_weighted += 1
    report(4, "independent CSF routes agree", ok,
           f"{checked_trees} trees, {checked_weighted} weighted multigraphs")


def test_criterion_05_derivative_identity():
    ok = True
    checked = 0
    for n in range(1, 11):
        for t in enumerate_trees(n):
            x = csf_tree(t).poly
            for j in range(1, n + 1):
                if subtree_derivative(t, j) != x.partial_derivative(j):
                    ok = False
                    break
            if not ok:
                break
            checked += 1
        if not ok:
            break
    report(5, "subtree sums realize every p_j partial derivative, trees n<=10",
           ok, f"{checked} trees, all j")


def test_criterion_06_forest_level_sums():
    rng = random.Random(61)
    ok = True
    for _ in range(100):
        t = random_tree(rng, rng.randint(1, 12))
        kill = [i for i in range(t.n - 1) if rng.random() < 0.35]
        f = t.delete_edges(kill)
        x = csf_forest(f)
        j = len(f.components())
        for k in range(0, f.n + 1):
            if level_sum(x, k) != forest_level_value(f.n, j, k):
                ok = False
                break
        if not ok:
            break
    report(6, "forest level sums match the closed form, 100 seeded forests", ok)


def test_criterion_07_inclusion_exclusion():
    rng = random.Random(71)
    ok = True
    checked = 0
    while checked < 100:
        g, w = random_weighted_multigraph(rng)
        if not g.edges:
            continue
        size = rng.randint(1, len(g.edges))
        s = set(rng.sample(range(len(g.edges)), size))
        if inclusion_exclusion_rhs(g, w, s) != csf_weighted(g, w).poly:
            ok = False
            break
        checked += 1
    report(7, "edge-set inclusion-exclusion identity, 100 seeded instances",
           ok, f"{checked} triples")


def test_criterion_08_involution_matrices():
    ok = True
    checked = 0
    for n in range(2, 17):
        for i in range(1, n):
            for k in range(1, n - i + 1):
                a = sign_binomial_matrix(k, n, i)
                if matrix_multiply(a, a) != identity_matrix(k):
                    ok = False
                    break
                checked += 1
            if not ok:
                break
        if not ok:
            break
    report(8, "sign-binomial matrices square to the identity, n<=16", ok,
           f"{checked} matrices")


def test_criterion_09_subtree_polynomial_stats():
    ok = True
    checked = 0
    for n in range(1, 13):
        for t in enumerate_trees(n):
            degs, paths = stats_from_subtree_polynomial(subtree_polynomial(t), t.n)
            expect = list(t.degree_sequence())
            while expect and expect[-1] == 0:
                expect.pop()
            if list(degs) != expect or tuple(paths) != path_sequence(t):
                ok = False
                break
            checked += 1
        if not ok:
            break
    rng = random.Random(91)
    relabelings = 0
    while ok and relabelings < 10:
        t = random_tree(rng, rng.randint(3, 12))
        perm = random_permutation(rng, t.n)
        t2 = Tree(t.n, [(perm[u], perm[v]) for u, v in t.edges])
        if (len(trunk(t)) != len(trunk(t2))
                or twig_sequence(t) != twig_sequence(t2)
                or path_sequence(t) != path_sequence(t2)):
            ok = False
        relabelings += 1
    report(9, "subtree polynomial recovers degree and path data, n<=12", ok,
           f"{checked} trees, {relabelings} relabelings")


def test_criterion_10_generalized_degree_projection():
    ok = True
    checked = 0
    for n in range(1, 11):
        for t in enumerate_trees(n):
            sliced = {}
            for (size, e, d), c in generalized_degree_sequence(t).items():
                if size >= 1 and e == size - 1:
                    sliced[(size, d)] = sliced.get((size, d), 0) + c
            if sliced != dict(f_polynomial_direct(t).terms):
                ok = False
                break
            checked += 1
        if not ok:
            break
    report(10, "generalized degree sequence projects onto F, trees n<=10",
           ok, f"{checked} trees")
