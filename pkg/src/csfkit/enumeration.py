"""Exhaustive generation of non-isomorphic free trees and small
unicyclic graphs.

Free trees are generated by the canonical level-sequence successor
scheme: rooted trees on n vertices correspond to canonical level
sequences (each entry is the depth of a vertex in preorder, root depth
1, and each subtree's sequence is lexicographically maximal among its
siblings' reorderings).  Starting from the path (1,2,...,n) the
successor rule walks every canonical sequence exactly once, ending at
the star (1,2,2,...,2).  Each free tree is then kept exactly once by a
center-rooting filter: a generated rooted tree survives iff its rooted
code equals the free certificate of its underlying tree.  Rooted codes
determine rooted isomorphism and automorphisms preserve the center set,
so exactly one generated rooted tree per free isomorphism class
survives, with no certificate bookkeeping across items.

Unicyclic graphs are produced the blunt way the small cap invites:
add every non-edge to every tree and deduplicate by the small-graph
canonical form.
"""

from .canon import canonical_certificate, rooted_code, small_graph_certificate
from .errors import CapacityError
from .graphs import Graph, Tree

TREE_CAP = 22
UNICYCLIC_MIN, UNICYCLIC_MAX = 3, 10

# Non-isomorphic free trees on 1..12 vertices; pinned by an independent
# brute-force oracle (Pruefer enumeration + certificate dedup) in tests.
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)


def _level_sequences(n):
    """Canonical level sequences of rooted trees on n vertices."""
    seq = list(range(1, n + 1))
    while True:
        yield seq
        p = -1
        for i in range(n - 1, -1, -1):
            if seq[i] > 2:
                p = i
                break
        if p < 0:
            return
        q = -1
        for i in range(p - 1, -1, -1):
            if seq[i] == seq[p] - 1:
                q = i
                break
        period = p - q
        nxt = seq[:p]
        while len(nxt) < n:
            nxt.append(nxt[-period])
        seq = nxt


def _edges_from_levels(levels):
    # parent of vertex i is the nearest earlier vertex one level up
    edges = []
    for i in range(1, len(levels)):
        for j in range(i - 1, -1, -1):
            if levels[j] == levels[i] - 1:
                edges.append((j, i))
                break
    return edges


def enumerate_trees(n: int):
    """Yield one representative per isomorphism class of free trees on n
    vertices (1 <= n <= 22)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    if n > TREE_CAP:
        raise CapacityError(f"tree enumeration capped at n = {TREE_CAP}")
    if n == 1:
        yield Tree(1)
        return
    if n == 2:
        yield Tree(2, [(0, 1)])
        return
    for levels in _level_sequences(n):
        t = Tree(n, _edges_from_levels(levels))
        code = rooted_code(t.adjacency_sets(), 0)
        if code.encode("ascii") == canonical_certificate(t).bytes:
            yield t


def classify(t: Tree) -> str:
    """path, spider, two-branch, or other, by the count of degree->=3 vertices."""
    branches = sum(1 for d in t.degrees() if d >= 3)
    if branches == 0:
        return "path"
    if branches == 1:
        return "spider"
    if branches == 2:
        return "two-branch"
    return "other"


def enumerate_unicyclic(n: int):
    """Yield one representative per isomorphism class of connected simple
    graphs with n vertices and n edges (3 <= n <= 10).

    Every unicyclic graph is a tree plus one extra edge, so adding each
    non-edge to each tree and deduplicating by canonical form is
    exhaustive.
    """
    if not isinstance(n, int) or not UNICYCLIC_MIN <= n <= UNICYCLIC_MAX:
        raise CapacityError(
            f"unicyclic enumeration supports {UNICYCLIC_MIN} <= n <= {UNICYCLIC_MAX}")
    seen = set()
    for t in enumerate_trees(n):
        present = set(t._normalized_edges())
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in present:
                    continue
                g = Graph(n, list(t.edges) + [(u, v)])
                cert = small_graph_certificate(g)
                if cert not in seen:
                    seen.add(cert)
                    yield g
