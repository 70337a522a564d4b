"""Distinctness verification, collision search, and the identity selftest.

verify_distinct streams every free tree of each order, computes X_T by
the fast tree DP, and groups trees by a stable 128-bit digest of the
canonical CSF serialization.  The digest (blake2b-128 with a fixed
person constant; chosen for bit-stable output across runs and platforms,
not for cryptographic strength) is only an accelerator: every candidate
collision inside a digest bucket is confirmed or refuted by exact
serialization equality, which coincides with polynomial equality because
the serialization is canonical.

find_collisions does the unicyclic analogue, where genuine collisions
exist.  selftest bundles the cross-route identities into named checks,
each reporting a minimal counterexample on failure.
"""

import json
import time
from dataclasses import dataclass, field
from hashlib import blake2b
from itertools import combinations
from multiprocessing import Pool
from pathlib import Path

from . import invariants
from .canon import canonical_certificate, small_graph_certificate
from .csf import (
    corollary_difference,
    csf_deletion_contraction,
    csf_forest,
    csf_power_sum,
    csf_tree,
    csf_weighted,
    forest_level_value,
    inclusion_exclusion_rhs,
    level_sum,
    subtree_derivative,
)
from .enumeration import classify, enumerate_trees, enumerate_unicyclic
from .errors import CapacityError
from .formats import format_edge_list, format_graph6
from .graphs import Graph, Tree, VertexWeighting, path_sequence, trunk, twig_sequence
from .invariants import (
    f_polynomial_direct,
    generalized_degree_sequence,
    identity_matrix,
    matrix_multiply,
    sign_binomial_matrix,
    stats_from_subtree_polynomial,
    subtree_polynomial,
)

VERIFY_CAP = 20
HASH_PERSON = b"csfkit.csf.v1"


def csf_hash(serialization: str) -> str:
    """Stable 128-bit digest of a canonical CSF serialization."""
    return blake2b(serialization.encode("utf-8"), digest_size=16,
                   person=HASH_PERSON).hexdigest()


@dataclass
class VerificationReport:
    order: int
    graph_class: str
    tree_count: int
    distinct_csf_count: int
    collisions: list
    elapsed_ms: int
    config: dict = field(default_factory=dict)

    def to_json_dict(self):
        return {
            "order": self.order,
            "class": self.graph_class,
            "tree_count": self.tree_count,
            "distinct_csf_count": self.distinct_csf_count,
            "collisions": [list(pair) for pair in self.collisions],
            "elapsed_ms": self.elapsed_ms,
            "config": dict(self.config),
        }


def _tree_job(payload):
    n, edges = payload
    t = Tree(n, edges)
    cert = canonical_certificate(t).bytes.decode("ascii")
    ser = csf_tree(t).poly.serialize()
    return cert, csf_hash(ser), ser


def _stream_results(n, jobs):
    payloads = ((n, t.edges) for t in enumerate_trees(n))
    if jobs <= 1:
        for p in payloads:
            yield _tree_job(p)
        return
    with Pool(processes=jobs) as pool:
        # imap keeps submission order, so the reduce is order-stable no
        # matter how the pool schedules the work
        yield from pool.imap(_tree_job, payloads, chunksize=64)


def verify_distinct(max_n: int, jobs: int = 1):
    """Check pairwise distinctness of tree CSFs for every order <= max_n.

    Returns one VerificationReport per order.  Identical collision sets
    for any jobs count; jobs = 1 runs fully in-process.
    """
    if not isinstance(max_n, int) or max_n < 1:
        raise ValueError("max_n must be a positive integer")
    if max_n > VERIFY_CAP:
        raise CapacityError(f"verification capped at max_n = {VERIFY_CAP}")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    reports = []
    for n in range(1, max_n + 1):
        t0 = time.perf_counter()
        buckets = {}
        count = 0
        for cert, digest, ser in _stream_results(n, jobs):
            count += 1
            buckets.setdefault(digest, []).append((cert, ser))
        distinct = 0
        pairs = []
        for digest in sorted(buckets):
            groups = {}
            for cert, ser in buckets[digest]:
                groups.setdefault(ser, []).append(cert)
            distinct += len(groups)
            for certs in groups.values():
                if len(certs) > 1:
                    pairs.extend(combinations(sorted(certs), 2))
        pairs.sort()
        elapsed = int((time.perf_counter() - t0) * 1000)
        reports.append(VerificationReport(
            order=n,
            graph_class="trees",
            tree_count=count,
            distinct_csf_count=distinct,
            collisions=pairs,
            elapsed_ms=elapsed,
            config={"max_n": max_n, "jobs": jobs},
        ))
    return reports


def canonical_graph6(g: Graph) -> str:
    """graph6 of the canonically relabeled graph; equal iff isomorphic."""
    n, _, placed = small_graph_certificate(g)
    return format_graph6(Graph(n, list(placed)))


def find_collisions(graph_class: str, n: int):
    """All non-isomorphic same-CSF pairs in the class, deterministically.

    Returns a list of (certificate, certificate, shared CSF serialization)
    with canonical-graph6 certificates.
    """
    if graph_class != "unicyclic":
        raise ValueError(f"unsupported class: {graph_class!r}")
    if not isinstance(n, int) or not 3 <= n <= 8:
        raise CapacityError("collision search supports unicyclic graphs with 3 <= n <= 8")
    groups = {}
    for g in enumerate_unicyclic(n):
        ser = csf_power_sum(g).poly.serialize()
        groups.setdefault(ser, []).append(canonical_graph6(g))
    out = []
    for ser in sorted(groups):
        certs = sorted(groups[ser])
        if len(certs) > 1:
            out.extend((a, b, ser) for a, b in combinations(certs, 2))
    out.sort()
    return out


def _counterexample(g: Graph) -> str:
    if g.is_simple():
        return format_graph6(g)
    return format_edge_list(g).replace("\n", "; ").strip("; ")


def _first_failure(instances, predicate):
    # instances: iterable of graphs; predicate returns True on pass
    for g in instances:
        try:
            if not predicate(g):
                return False, _counterexample(g)
        except Exception:
            return False, _counterexample(g)
    return True, ""


def _weighted_instances():
    # fixed multigraph zoo: loops, parallels, zero weights
    yield Graph(1, [(0, 0)]), VertexWeighting((1,))
    yield Graph(2, [(0, 1), (0, 1)]), VertexWeighting((2, 1))
    yield Graph(3, [(0, 1), (1, 2), (0, 2), (1, 1)]), VertexWeighting((1, 1, 1))
    yield Graph(3, [(0, 1), (1, 2)]), VertexWeighting((2, 0, 1))
    yield Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]), VertexWeighting((1, 2, 1, 3))
    yield Graph(4, [(0, 1), (0, 1), (2, 3)]), VertexWeighting((1, 1, 4, 0))


def _forest_instances(max_n):
    for n in range(1, min(max_n, 6) + 1):
        for t in enumerate_trees(n):
            yield t
    if max_n >= 5:
        # one genuinely disconnected forest: P_3 + K_2
        yield Graph(5, [(0, 1), (1, 2), (3, 4)])


def selftest(max_n: int = 7):
    """Run the named identity checks; returns (ok, [(name, ok, counterexample)]).

    max_n bounds the tree corpora; max_n = 1 makes most checks vacuous.
    """
    trees = [t for n in range(1, max_n + 1) for t in enumerate_trees(n)]
    small_trees = [t for t in trees if t.n <= 6]
    results = []

    def run(name, ok_counter):
        ok, cx = ok_counter
        results.append((name, ok, cx))

    def routes_agree(t):
        a = csf_power_sum(t).poly
        return (a == csf_deletion_contraction(t).poly
                and a == csf_forest(t).poly
                and a == csf_tree(t).poly)
    run("route-equality-trees", _first_failure(small_trees, routes_agree))

    def weighted_routes_agree(pair):
        g, w = pair
        return csf_weighted(g, w).poly == csf_deletion_contraction(g, w).poly
    ok, cx = True, ""
    for g, w in _weighted_instances():
        try:
            if not weighted_routes_agree((g, w)):
                ok, cx = False, _counterexample(g)
                break
        except Exception:
            ok, cx = False, _counterexample(g)
            break
    run("route-equality-weighted", (ok, cx))

    def derivative_ok(f):
        x = csf_forest(f).poly
        return all(x.partial_derivative(j) == subtree_derivative(f, j)
                   for j in range(1, f.n + 1))
    run("derivative-identity", _first_failure(_forest_instances(max_n), derivative_ok))

    def level_ok(f):
        x = csf_forest(f)
        j = len(f.components())
        return all(level_sum(x, k) == forest_level_value(f.n, j, k)
                   for k in range(0, f.n + 1))
    run("level-sums", _first_failure(_forest_instances(max_n), level_ok))

    def incl_excl_ok(pair):
        g, w = pair
        if not g.edges:
            return True
        s = set(range(0, len(g.edges), 2))
        s.add(0)
        return inclusion_exclusion_rhs(g, w, s) == csf_weighted(g, w).poly
    ok, cx = True, ""
    for g, w in _weighted_instances():
        try:
            if not incl_excl_ok((g, w)):
                ok, cx = False, _counterexample(g)
                break
        except Exception:
            ok, cx = False, _counterexample(g)
            break
    run("inclusion-exclusion", (ok, cx))

    def corollary_ok(args):
        g, s, h, t = args
        lhs, rhs = corollary_difference(g, s, h, t)
        return lhs == rhs
    # triangle move: u=0, v1=1, v2=2 plus an anchor path; H rewires 0-1 to 1-2
    g_tm = Graph(4, [(0, 1), (0, 2), (2, 3)])
    h_tm = Graph(4, [(1, 2), (0, 2), (2, 3)])
    # two 6-vertex two-branch trees with the trunk edge contracted
    g_h6 = Graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])
    h_h6 = Graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])
    instances = [
        (g_tm, {1}, h_tm, {1}),
        (g_h6, {3}, h_h6, {3}),
        (g_tm, {0, 2}, g_tm, {0, 2}),
    ]
    ok, cx = True, ""
    for args in instances:
        try:
            if not corollary_ok(args):
                ok, cx = False, _counterexample(args[0])
                break
        except Exception:
            ok, cx = False, _counterexample(args[0])
            break
    run("corollary-difference", (ok, cx))

    def sigma_ok(t):
        return invariants.f_polynomial_from_csf(csf_tree(t), t.n) == f_polynomial_direct(t)
    run("sigma-vs-direct", _first_failure(trees, sigma_ok))

    def omega_ok(t):
        x = csf_tree(t)
        return invariants.omega_check(x, t.n) == invariants.f_polynomial_from_csf(x, t.n)
    run("omega-route", _first_failure(trees, omega_ok))

    ok, cx = True, ""
    for n in range(2, 11):
        for i in range(1, n):
            for k in range(1, n - i + 1):
                a = sign_binomial_matrix(k, n, i)
                if matrix_multiply(a, a) != identity_matrix(k):
                    ok, cx = False, f"(k={k}, n={n}, i={i})"
                    break
            if not ok:
                break
        if not ok:
            break
    run("involution", (ok, cx))

    def stats_ok(t):
        degs, paths = stats_from_subtree_polynomial(subtree_polynomial(t), t.n)
        direct_degs = list(t.degree_sequence())
        while direct_degs and direct_degs[-1] == 0:
            direct_degs.pop()
        return degs == tuple(direct_degs) and paths == path_sequence(t)
    run("subtree-stats", _first_failure(trees, stats_ok))

    def projection_ok(t):
        gds = generalized_degree_sequence(t)
        sliced = {}
        for (size, e, d), c in gds.items():
            if size >= 1 and e == size - 1:
                key = (size, d)
                sliced[key] = sliced.get(key, 0) + c
        return sliced == f_polynomial_direct(t).terms
    run("gds-projection", _first_failure([t for t in trees if t.n <= 8], projection_ok))

    overall = all(ok for _, ok, _ in results)
    return overall, results


def compute_report(g: Graph, what: str) -> dict:
    """The JSON-ready document behind the compute subcommand."""
    if what not in ("csf", "invariants", "transform"):
        raise ValueError(f"unknown computation: {what!r}")
    doc = {"what": what, "n": g.n, "edge_count": len(g.edges)}
    if what == "csf":
        result = csf_power_sum(g)
        ser = result.poly.serialize()
        doc["source_order"] = result.source_order
        doc["csf"] = ser
        doc["csf_hash"] = csf_hash(ser)
        doc["term_count"] = len(result.poly)
        return doc
    t = Tree.from_graph(g)
    if what == "invariants":
        s_poly = subtree_polynomial(t)
        degs, paths = stats_from_subtree_polynomial(s_poly, t.n)
        doc["degree_sequence"] = list(t.degree_sequence())
        doc["path_sequence"] = list(path_sequence(t))
        doc["twig_sequence"] = list(twig_sequence(t))
        doc["trunk_order"] = len(trunk(t))
        doc["subtree_polynomial"] = s_poly.serialize()
        doc["f_polynomial"] = f_polynomial_direct(t).serialize()
        doc["stats_from_subtree_polynomial"] = {
            "degrees": list(degs), "paths": list(paths)}
        doc["classification"] = classify(t)
        return doc
    x = csf_tree(t)
    via_sigma = invariants.f_polynomial_from_csf(x, t.n)
    direct = f_polynomial_direct(t)
    doc["f_from_csf"] = via_sigma.serialize()
    doc["f_direct"] = direct.serialize()
    doc["equal"] = via_sigma == direct
    return doc


def write_reports(reports, directory):
    """One JSON per order plus a CSV summary; returns written paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for rep in reports:
        p = directory / f"verify_n{rep.order:02d}.json"
        p.write_text(json.dumps(rep.to_json_dict(), sort_keys=True, indent=2) + "\n",
                     encoding="utf-8")
        paths.append(p)
    summary = directory / "summary.csv"
    lines = ["n,trees,distinct,collisions,ms"]
    for rep in reports:
        lines.append(f"{rep.order},{rep.tree_count},{rep.distinct_csf_count},"
                     f"{len(rep.collisions)},{rep.elapsed_ms}")
    summary.write_text("\n".join(lines) + "\n", encoding="utf-8")
    paths.append(summary)
    return paths
