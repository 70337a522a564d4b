"""Multigraphs with loops, vertex weights, and tree-structure queries.

Vertices are 0..n-1.  Edges are an indexed sequence of unordered endpoint
pairs; loops (u == v) and duplicate pairs are allowed and preserved.  Edge
subsets everywhere are sets of edge *indices*, which is what the CSF
subset expansion and deletion/contraction identities address.

Tree-specific queries (subtree enumeration, trunk, twigs, path counts)
live here as functions; csf-engine and invariants consume them.
"""

from collections import Counter, deque

from .errors import NotATreeError


class DisjointSet:
    """Union-find with path halving; small and allocation-light."""

    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


class Graph:
    """Finite multigraph; immutable by convention after construction."""

    def __init__(self, n, edges=()):
        if not isinstance(n, int) or n < 0:
            raise ValueError("vertex count must be a nonnegative integer")
        es = []
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e!r} out of range for n={n}")
            es.append((u, v))
        self.n = n
        self.edges = tuple(es)

    @property
    def m(self):
        return len(self.edges)

    def _normalized_edges(self):
        # identity is the labeled edge multiset; edge order and direction
        # only matter for index-based operations, not equality
        return tuple(sorted((u, v) if u <= v else (v, u) for u, v in self.edges))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._normalized_edges() == other._normalized_edges()

    def __hash__(self):
        return hash((self.n, self._normalized_edges()))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={list(self.edges)!r})"

    def has_loop(self):
        return any(u == v for u, v in self.edges)

    def is_simple(self):
        seen = set()
        for u, v in self._normalized_edges():
            if u == v or (u, v) in seen:
                return False
            seen.add((u, v))
        return True

    def degrees(self):
        """Degree of each vertex; a loop contributes 2 to its endpoint."""
        d = [0] * self.n
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def adjacency_sets(self):
        """Neighbor sets ignoring multiplicity and loops (traversal view)."""
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    def components(self, edge_subset=None):
        """Connected components of the spanning subgraph (V, edge_subset).

        edge_subset is a set of edge indices; None means all edges.
        Returns a list of frozensets ordered by smallest member.
        """
        dsu = DisjointSet(self.n)
        if edge_subset is None:
            for u, v in self.edges:
                dsu.union(u, v)
        else:
            for i in edge_subset:
                u, v = self.edges[i]
                dsu.union(u, v)
        groups = {}
        for v in range(self.n):
            groups.setdefault(dsu.find(v), []).append(v)
        return [frozenset(g) for _, g in sorted(groups.items())]

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def is_forest(self):
        if not self.is_simple():
            return False
        return len(self.edges) + len(self.components()) == self.n

    def delete_edges(self, s):
        """Same vertices, edges with indices in s removed (order kept)."""
        s = set(s)
        return Graph(self.n, [e for i, e in enumerate(self.edges) if i not in s])

    def delete_vertices(self, w_set):
        """Remove the vertices in w_set and all incident edges.

        Survivors are relabeled 0..n'-1 preserving their original order.
        """
        w_set = set(w_set)
        keep = [v for v in range(self.n) if v not in w_set]
        relabel = {v: i for i, v in enumerate(keep)}
        edges = [(relabel[u], relabel[v]) for u, v in self.edges
                 if u not in w_set and v not in w_set]
        return Graph(len(keep), edges)

    def induced_subgraph(self, w_set):
        """Subgraph induced on w_set, vertices relabeled in sorted order."""
        return self.delete_vertices(set(range(self.n)) - set(w_set))

    def degree_sequence(self):
        """(d_1, d_2, ...) where d_i counts vertices of degree i.

        Length is n-1 for simple graphs; extended when multi-edges or
        loops push a degree past n-1.  Degree-0 vertices are not counted.
        """
        degs = self.degrees()
        top = max(self.n - 1, max(degs, default=0))
        counts = Counter(degs)
        return tuple(counts.get(i, 0) for i in range(1, top + 1))

    def boundary_and_interior(self, w_set):
        """(e, d): edges inside w_set, and edges with exactly one end in it."""
        w_set = set(w_set)
        e = d = 0
        for u, v in self.edges:
            inside = (u in w_set) + (v in w_set)
            if inside == 2:
                e += 1
            elif inside == 1:
                d += 1
        return e, d


class VertexWeighting:
    """Nonnegative integer weight per vertex."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        ws = tuple(weights)
        for w in ws:
            if not isinstance(w, int) or isinstance(w, bool) or w < 0:
                raise ValueError(f"weights must be nonnegative integers, got {w!r}")
        self.weights = ws

    @classmethod
    def unit(cls, n):
        return cls((1,) * n)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, v):
        return self.weights[v]

    def __eq__(self, other):
        if not isinstance(other, VertexWeighting):
            return NotImplemented
        return self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"VertexWeighting({list(self.weights)!r})"

    def total(self):
        return sum(self.weights)

    def of_set(self, w_set):
        return sum(self.weights[v] for v in w_set)


def contract_edges(g: Graph, w: VertexWeighting, s):
    """Contract the edges with indices in s; weights add across merges.

    Loop edges in s are simply deleted (weights untouched).  Parallel
    edges and loops *created* by the contraction are kept.  The result
    does not depend on any ordering of s.  Merged classes are relabeled
    by their smallest original vertex.
    """
    s = set(s)
    if not s:
        raise ValueError("contraction set must be nonempty")
    if len(w) != g.n:
        raise ValueError("weighting length does not match vertex count")
    dsu = DisjointSet(g.n)
    for i in s:
        u, v = g.edges[i]
        if u != v:
            dsu.union(u, v)
    roots = sorted({dsu.find(v) for v in range(g.n)})
    relabel = {r: i for i, r in enumerate(roots)}
    new_weights = [0] * len(roots)
    for v in range(g.n):
        new_weights[relabel[dsu.find(v)]] += w[v]
    edges = [(relabel[dsu.find(u)], relabel[dsu.find(v)])
             for i, (u, v) in enumerate(g.edges) if i not in s]
    return Graph(len(roots), edges), VertexWeighting(new_weights)


class Tree(Graph):
    """A connected, simple, loop-free graph on n vertices with n-1 edges."""

    def __init__(self, n, edges=()):
        super().__init__(n, edges)
        if n < 1:
            raise NotATreeError("a tree has at least one vertex")
        if len(self.edges) != n - 1:
            raise NotATreeError(f"tree on {n} vertices needs {n - 1} edges, got {len(self.edges)}")
        if not self.is_simple():
            raise NotATreeError("tree must be simple and loop-free")
        if not self.is_connected():
            raise NotATreeError("tree must be connected")

    @classmethod
    def from_graph(cls, g: Graph):
        return cls(g.n, g.edges)

    def leaves(self):
        return [v for v, d in enumerate(self.degrees()) if d == 1]


def as_forest(g: Graph) -> Graph:
    """Validate that g is a forest (simple, acyclic); return it unchanged."""
    if not g.is_forest():
        raise NotATreeError("input must be a forest (simple and acyclic)")
    return g


def enumerate_subtrees(t: Graph):
    """Yield every nonempty vertex set inducing a connected subgraph.

    For a forest these are exactly the subtree vertex sets of its
    components.  Each set is yielded exactly once, as a frozenset.

    Enumeration grows a connected set from its minimum vertex, banning
    each branch vertex after its subtree of extensions is exhausted, so
    no set is produced twice.
    """
    as_forest(t)
    adj = t.adjacency_sets()

    def grow(cur, cand, banned):
        # cur is connected; cand holds the addable neighbors of cur.
        # After every superset through u is emitted, u joins the ban set
        # for the remaining branches, which kills duplicates.
        yield frozenset(cur)
        banned = set(banned)
        for u in sorted(cand):
            new_cand = (cand | adj[u]) - cur - banned
            new_cand.discard(u)
            yield from grow(cur | {u}, new_cand, banned)
            banned.add(u)

    def walk_roots():
        for root in range(t.n):
            below = set(range(root))
            yield from grow({root}, adj[root] - below, below)

    return walk_roots()


def trunk(t: Tree):
    """Smallest subtree containing all vertices of degree >= 3.

    Empty frozenset when no such vertex exists (paths); for a spider this
    is the single branch vertex.
    """
    degs = t.degrees()
    branch = {v for v in range(t.n) if degs[v] >= 3}
    if not branch:
        return frozenset()
    # Strip leaves of the tree repeatedly, never removing branch vertices;
    # what survives is the Steiner tree of the branch set.
    adj = [set(a) for a in t.adjacency_sets()]
    alive = set(range(t.n))
    queue = deque(v for v in alive if len(adj[v]) <= 1 and v not in branch)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for u in adj[v]:
            adj[u].discard(v)
            if u in alive and len(adj[u]) <= 1 and u not in branch:
                queue.append(u)
        adj[v].clear()
    return frozenset(alive)


class TwigSequence:
    """counts[i] is the number of twigs of length i+1."""

    __slots__ = ("counts",)

    def __init__(self, counts):
        cs = list(counts)
        while cs and cs[-1] == 0:
            cs.pop()
        if any(c < 0 for c in cs):
            raise ValueError("twig counts must be nonnegative")
        self.counts = tuple(cs)

    def of_length(self, length):
        if length < 1 or length > len(self.counts):
            return 0
        return self.counts[length - 1]

    def total(self):
        return sum(self.counts)

    def __eq__(self, other):
        if not isinstance(other, TwigSequence):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self):
        return hash(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __repr__(self):
        return f"TwigSequence({list(self.counts)!r})"


def twig_sequence(f: Graph) -> TwigSequence:
    """Twig lengths of a forest, collected into a TwigSequence.

    A twig runs from a leaf to the first vertex of degree >= 3 in its
    component; its length is the number of edges on that walk (the branch
    vertex itself is not part of the twig).  A component that is a bare
    path has no branch vertex and contributes ONE twig, the whole path.
    An isolated vertex contributes nothing (there is no length-0 twig).
    """
    as_forest(f)
    adj = f.adjacency_sets()
    degs = f.degrees()
    lengths = []
    for comp in f.components():
        if len(comp) == 1:
            continue
        if all(degs[v] <= 2 for v in comp):
            lengths.append(len(comp) - 1)
            continue
        for v in comp:
            if degs[v] != 1:
                continue
            prev, cur, steps = None, v, 0
            while degs[cur] < 3:
                nxt = next(u for u in adj[cur] if u != prev)
                prev, cur = cur, nxt
                steps += 1
            lengths.append(steps)
    counts = Counter(lengths)
    top = max(counts, default=0)
    return TwigSequence(counts.get(i, 0) for i in range(1, top + 1))


def path_sequence(f: Graph):
    """(s_1, s_2, ...): s_i is the number of vertex pairs at distance i.

    In a forest each pair at finite distance determines a unique path, so
    this counts paths by length.  Trailing zeros are trimmed.
    """
    as_forest(f)
    adj = f.adjacency_sets()
    counts = Counter()
    for src in range(f.n):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        for v, d in dist.items():
            if v > src:
                counts[d] += 1
    top = max(counts, default=0)
    return tuple(counts.get(i, 0) for i in range(1, top + 1))


def tree_distance_pairs(t: Graph):
    """All-pairs distances of a forest as {(u, v): d} with u < v."""
    as_forest(t)
    adj = t.adjacency_sets()
    out = {}
    for src in range(t.n):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        for v, d in dist.items():
            if v > src:
                out[(src, v)] = d
    return out


def components(g: Graph, edge_subset=None):
    return g.components(edge_subset)


def delete_edges(g: Graph, s):
    return g.delete_edges(s)


def degree_sequence(g: Graph):
    return g.degree_sequence()


def boundary_and_interior(g: Graph, w_set):
    return g.boundary_and_interior(w_set)
