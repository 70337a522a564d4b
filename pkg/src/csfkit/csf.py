"""Chromatic symmetric functions in the power-sum basis.

Three independent routes compute the same object:

  * csf_power_sum / csf_weighted: the signed edge-subset expansion
    X = sum over A of E of (-1)^|A| p_pi(A), where pi(A) lists the
    component orders (total component weights, in the weighted case)
    of the spanning subgraph (V, A).
  * csf_deletion_contraction: the weighted recursion
    X(G) = X(G-e) - X(G/e) down to edgeless graphs.
  * csf_forest: product of the component CSFs.

csf_tree is a fourth, tree-only route: a rooted component-splitting DP
that is far faster than the 2^|E| expansion and makes the exhaustive
distinctness verification tractable on one core.  It is cross-checked
against csf_power_sum in the tests.

Subset-expansion strategy (documented choice): a depth-first include /
exclude walk over edge indices carrying an incremental union-find with
rollback.  When an edge's endpoints are already connected, the walk
returns immediately: pairing each remaining subset B with B xor {e}
shows the two halves cancel exactly, since adding e never changes
components but flips the sign.  Only acyclic subsets therefore reach a
leaf.  Loops are the degenerate case (endpoints always connected), which
yields the zero polynomial for any graph with a loop.
"""

from bisect import bisect_left, insort
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .canon import are_isomorphic
from .errors import CapacityError
from .graphs import Graph, Tree, VertexWeighting, as_forest, contract_edges, enumerate_subtrees
from .psym import ONE, PPolynomial, p_of_partition

SUBSET_EDGE_CAP = 64


@dataclass(frozen=True)
class CsfResult:
    """A CSF plus the degree it should be homogeneous of."""

    poly: PPolynomial
    source_order: int

    def __post_init__(self):
        if not self.poly.is_homogeneous(self.source_order):
            raise ValueError("CSF is not homogeneous of the stated order")


def _subset_expansion(n, edges, weights):
    """Signed counts {pi(A): sum of (-1)^|A|} over edge subsets A."""
    m = len(edges)
    if m > SUBSET_EDGE_CAP:
        raise CapacityError(f"edge-subset expansion capped at {SUBSET_EDGE_CAP} edges, got {m}")
    parent = list(range(n))
    size = [1] * n
    rootw = list(weights)
    parts = sorted(w for w in weights if w)
    acc = {}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def walk(i, sign):
        if i == m:
            key = tuple(reversed(parts))
            acc[key] = acc.get(key, 0) + sign
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            # include/exclude of this edge cancel exactly; nothing survives
            return
        walk(i + 1, sign)
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        wu, wv = rootw[ru], rootw[rv]
        if wu:
            parts.pop(bisect_left(parts, wu))
        if wv:
            parts.pop(bisect_left(parts, wv))
        if wu or wv:
            insort(parts, wu + wv)
        parent[rv] = ru
        size[ru] += size[rv]
        rootw[ru] = wu + wv
        walk(i + 1, -sign)
        parent[rv] = rv
        size[ru] -= size[rv]
        rootw[ru] = wu
        if wu or wv:
            parts.pop(bisect_left(parts, wu + wv))
        if wv:
            insort(parts, wv)
        if wu:
            insort(parts, wu)

    walk(0, 1)
    return acc


def csf_power_sum(g: Graph) -> CsfResult:
    """X_G by the edge-subset expansion; zero when g has a loop."""
    acc = _subset_expansion(g.n, g.edges, (1,) * g.n)
    return CsfResult(PPolynomial(acc), g.n)


def csf_weighted(g: Graph, w: VertexWeighting) -> CsfResult:
    """X_(G,w) by the weighted edge-subset expansion.

    A component of total weight 0 contributes the part 0, and p_0 = 1,
    so zero parts are dropped from the partition.
    """
    if len(w) != g.n:
        raise ValueError("weighting length does not match vertex count")
    acc = _subset_expansion(g.n, g.edges, w.weights)
    return CsfResult(PPolynomial(acc), w.total())


def _pick_edge(g: Graph):
    # Contracting a non-loop edge drops the vertex count by one; a loop
    # keeps it.  Pick the minimizer, tie-broken by lowest index: the
    # first non-loop edge, else the first loop.
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            return i
    return 0 if g.edges else None


def _edgeless_csf(w: VertexWeighting) -> PPolynomial:
    return p_of_partition(tuple(sorted((x for x in w.weights if x), reverse=True)))


def _deletion_contraction(g: Graph, w: VertexWeighting) -> PPolynomial:
    pick = _pick_edge(g)
    if pick is None:
        return _edgeless_csf(w)
    u, v = g.edges[pick]
    if u == v:
        # G/e = G-e for a loop, so the two branches are equal and cancel
        return PPolynomial()
    gd = g.delete_edges({pick})
    gc, wc = contract_edges(g, w, {pick})
    return _deletion_contraction(gd, w) - _deletion_contraction(gc, wc)


def csf_deletion_contraction(g: Graph, w: VertexWeighting = None) -> CsfResult:
    """X_(G,w) by the deletion-contraction recursion (unit weights if w is None)."""
    if w is None:
        w = VertexWeighting.unit(g.n)
    if len(w) != g.n:
        raise ValueError("weighting length does not match vertex count")
    return CsfResult(_deletion_contraction(g, w), w.total())


def csf_forest(f: Graph) -> CsfResult:
    """X_F as the product of its components' CSFs."""
    as_forest(f)
    poly = ONE
    for comp in f.components():
        poly = poly * csf_power_sum(f.induced_subgraph(comp)).poly
    return CsfResult(poly, f.n)


def _tree_partition_counts(t: Graph):
    """{pi(A): |{A}|} over the 2^(n-1) edge subsets of a tree.

    Rooted DP: the state at a vertex is a map from (size of the still-open
    component containing the vertex, partition of completed component
    sizes) to the number of edge subsets realizing it.  A child edge is
    either cut (the child's open component closes) or kept (open sizes
    add).  Linear passes over the state dicts replace the exponential
    subset walk; signs are recovered at the end from the part count,
    since |A| = n - l(pi(A)).
    """
    n = t.n
    adj = t.adjacency_sets()
    parent = [-1] * n
    order = []
    seen = [False] * n
    seen[0] = True
    stack = [0]
    while stack:
        v = stack.pop()
        order.append(v)
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                stack.append(u)
    state = [None] * n
    for v in reversed(order):
        sv = {(1, ()): 1}
        for u in adj[v]:
            if parent[u] != v:
                continue
            su = state[u]
            state[u] = None
            nxt = {}
            get = nxt.get
            for (s1, mu1), c1 in sv.items():
                for (s2, mu2), c2 in su.items():
                    cc = c1 * c2
                    cut = (s1, tuple(sorted(mu1 + mu2 + (s2,), reverse=True)))
                    keep = (s1 + s2, tuple(sorted(mu1 + mu2, reverse=True)))
                    nxt[cut] = get(cut, 0) + cc
                    nxt[keep] = get(keep, 0) + cc
            sv = nxt
        state[v] = sv
    counts = {}
    for (s, mu), c in state[0].items():
        lam = tuple(sorted(mu + (s,), reverse=True))
        counts[lam] = counts.get(lam, 0) + c
    return counts


def csf_tree(t: Graph) -> CsfResult:
    """X_T for a tree, by the rooted component-splitting DP."""
    if not isinstance(t, Tree):
        t = Tree.from_graph(t)
    n = t.n
    terms = {lam: (c if (n - len(lam)) % 2 == 0 else -c)
             for lam, c in _tree_partition_counts(t).items()}
    return CsfResult(PPolynomial(terms), n)


def coefficient(x: CsfResult, parts):
    """The coefficient c_lambda of p_lambda in x."""
    return x.poly.coefficient(tuple(parts))


def level_sum(x: CsfResult, k: int):
    """Sum of c_lambda over partitions with exactly k parts."""
    return sum(c for lam, c in x.poly.terms.items() if len(lam) == k)


def forest_level_value(n: int, j: int, k: int) -> int:
    """The closed form (-1)^(n-k) C(n-j, k-j) the level sum must equal
    for an n-vertex forest with j components (0 when k < j)."""
    if k < j:
        return 0
    val = comb(n - j, k - j)
    return val if (n - k) % 2 == 0 else -val


def subtree_derivative(f: Graph, j: int) -> PPolynomial:
    """(-1)^(j-1) sum of X_(F - V(H)) over j-vertex subtrees H of the forest F.

    Equals the formal partial derivative of X_F with respect to p_j.
    """
    if not isinstance(j, int) or j < 1:
        raise ValueError("j must be a positive integer")
    as_forest(f)
    total = PPolynomial()
    for w_set in enumerate_subtrees(f):
        if len(w_set) == j:
            total = total + csf_power_sum(f.delete_vertices(w_set)).poly
    return total if j % 2 == 1 else -total


def inclusion_exclusion_rhs(g: Graph, w: VertexWeighting, s) -> PPolynomial:
    """The right side of the inclusion-exclusion identity over a nonempty
    edge set S: sum over nonempty I subset S of (-1)^(|I|-1) X_(G-I, w),
    plus (-1)^|S| X_(G/S, w_{G/S}).  Equals X_(G,w)."""
    s = sorted(set(s))
    if not s:
        raise ValueError("S must be a nonempty set of edge indices")
    total = PPolynomial()
    for r in range(1, len(s) + 1):
        for subset in combinations(s, r):
            term = csf_weighted(g.delete_edges(subset), w).poly
            total = total + (term if r % 2 == 1 else -term)
    gc, wc = contract_edges(g, w, set(s))
    term = csf_weighted(gc, wc).poly
    return total + (term if len(s) % 2 == 0 else -term)


def _deletion_sum(g: Graph, s) -> PPolynomial:
    total = PPolynomial()
    for r in range(1, len(s) + 1):
        for subset in combinations(s, r):
            term = csf_power_sum(g.delete_edges(subset)).poly
            total = total + (term if r % 2 == 1 else -term)
    return total


def corollary_difference(g: Graph, s, h: Graph, t):
    """Both sides of the contraction-elimination identity.

    lhs = X_G - X_H; rhs = the deletion inclusion-exclusion sum over S
    minus the one over T.  Requires the unit-weighted contractions G/S
    and H/T to be isomorphic as weighted graphs, which makes the two
    contraction terms equal.  lhs = rhs then needs those terms to carry
    the same sign: for acyclic S and T the isomorphism already forces
    |S| = |T| (both equal the drop in vertex count), and when the common
    contraction has a loop both terms vanish; outside those cases a
    parity mismatch (-1)^|S| != (-1)^|T| leaves the sides differing by
    twice the contraction term.
    """
    s, t = sorted(set(s)), sorted(set(t))
    if not s or not t:
        raise ValueError("S and T must be nonempty edge-index sets")
    if not g.is_simple() or not h.is_simple():
        raise ValueError("the identity is stated for simple graphs")
    gc, gw = contract_edges(g, VertexWeighting.unit(g.n), set(s))
    hc, hw = contract_edges(h, VertexWeighting.unit(h.n), set(t))
    if not are_isomorphic(gc, hc, gw.weights, hw.weights):
        raise ValueError("precondition failed: G/S and H/T are not isomorphic as weighted graphs")
    lhs = csf_power_sum(g).poly - csf_power_sum(h).poly
    rhs = _deletion_sum(g, s) - _deletion_sum(h, t)
    return lhs, rhs
