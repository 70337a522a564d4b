"""Tree invariants: the subtree polynomial S_T(q,r), the generalized
degree polynomial F_T(x,y), and the sigma-transform that recovers F_T
from the power-sum coefficients of X_T.

The transform is the computational heart: with c_lambda the p-basis
coefficients of X_T,

    f_T(i,j) = sum over lambda of sigma(lambda,i,j) c_lambda,
    sigma(lambda,i,j) = (-1)^(n-j-1) C(n-i-l+1, j-l+1) m_i(lambda),

where l = l(lambda), m_i counts parts of size i, and out-of-range
binomials are 0.  omega_check computes the same coefficients as scalar
products against the graded pieces of Omega_n; sign_binomial_matrix is
the involution A with A^2 = I underlying the inversion.

Degree extraction from S_T is valid for degrees >= 2 only: the identity
sum over k >= i of C(k,i)(-1)^(i+k) s_T(k,k) counts the vertices of
degree i through star subtrees K_{1,k} centered at each vertex, but a
single edge is one subtree with two centers, so s_T(1,1) = |E| is half
of what the i = 1 instance needs.  d_1 is recovered by complement, and
the i = 1 case is deliberately not computed from the formula.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb

from .csf import CsfResult
from .errors import CapacityError, ConsistencyError
from .graphs import Graph, Tree, enumerate_subtrees
from .partitions import partitions, z_of
from .psym import PPolynomial

GENERALIZED_DEGREE_CAP = 24


class BivariatePolynomial:
    """Sparse bivariate polynomial with exact integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in dict(terms).items():
                i, j = key
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"coefficient must be an integer, got {c!r}")
                if c != 0:
                    clean[(int(i), int(j))] = c
        self._terms = clean

    @property
    def terms(self):
        return dict(self._terms)

    def coefficient(self, i, j):
        return self._terms.get((i, j), 0)

    def evaluate(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self._terms.items())

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def serialize(self) -> str:
        lines = [f"({i},{j}): {c}" for (i, j), c in sorted(self._terms.items())]
        return "\n".join(lines)

    @classmethod
    def deserialize(cls, text: str) -> "BivariatePolynomial":
        terms = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            try:
                key_s, _, c_s = line.partition(":")
                i_s, j_s = key_s.strip().strip("()").split(",")
                key = (int(i_s), int(j_s))
                c = int(c_s.strip())
            except ValueError as exc:
                raise ValueError(f"malformed bivariate line: {raw!r}") from exc
            if key in terms:
                raise ValueError(f"duplicate exponent pair: {key!r}")
            terms[key] = c
        return cls(terms)

    def __repr__(self):
        return f"BivariatePolynomial({dict(sorted(self._terms.items()))!r})"


def subtree_polynomial(t: Tree) -> BivariatePolynomial:
    """S_T(q,r): sum over subtrees of q^(#edges) r^(#leaf edges).

    Leaf edges of a subtree S are the edges of S incident with leaves of
    S; a single vertex contributes q^0 r^0, a single edge q^1 r^1.
    """
    if not isinstance(t, Tree):
        t = Tree.from_graph(t)
    counts = Counter()
    for w_set in enumerate_subtrees(t):
        if len(w_set) == 1:
            counts[(0, 0)] += 1
            continue
        inner = [(u, v) for u, v in t.edges if u in w_set and v in w_set]
        deg = Counter()
        for u, v in inner:
            deg[u] += 1
            deg[v] += 1
        leaf_edges = sum(1 for u, v in inner if deg[u] == 1 or deg[v] == 1)
        counts[(len(inner), leaf_edges)] += 1
    return BivariatePolynomial(counts)


def stats_from_subtree_polynomial(s: BivariatePolynomial, n: int):
    """(degrees, paths) of an n-vertex tree, read off its S_T.

    paths[i-1] = s(i,2) for i >= 2 and paths[0] = s(1,1) = n - 1.
    degrees[i-1] for i >= 2 comes from the alternating-binomial star
    count; d_1 is n minus the rest (the formula's i = 1 instance is
    wrong by design, see the module docstring).  Trailing zeros are
    trimmed from both sequences.
    """
    degs = [0] * max(n - 1, 0)
    for i in range(2, n):
        degs[i - 1] = sum(comb(k, i) * (-1) ** (i + k) * s.coefficient(k, k)
                          for k in range(i, n))
    if n >= 2:
        degs[0] = n - sum(degs)
    paths = [0] * max(n - 1, 0)
    if n >= 2:
        paths[0] = s.coefficient(1, 1)
    for i in range(2, n):
        paths[i - 1] = s.coefficient(i, 2)
    while degs and degs[-1] == 0:
        degs.pop()
    while paths and paths[-1] == 0:
        paths.pop()
    return tuple(degs), tuple(paths)


def f_polynomial_direct(t: Tree) -> BivariatePolynomial:
    """F_T(x,y) = sum over subtrees H of x^|H| y^d(V(H)), by enumeration."""
    if not isinstance(t, Tree):
        t = Tree.from_graph(t)
    counts = Counter()
    for w_set in enumerate_subtrees(t):
        _, d = t.boundary_and_interior(w_set)
        counts[(len(w_set), d)] += 1
    return BivariatePolynomial(counts)


def sigma(lam, i: int, j: int, n: int) -> int:
    """The transform coefficient sigma(lambda, i, j) for lambda of n."""
    lam = tuple(lam)
    if sum(lam) != n:
        raise ValueError(f"{lam!r} is not a partition of {n}")
    mult = lam.count(i)
    if mult == 0:
        return 0
    length = len(lam)
    top, low = n - i - length + 1, j - length + 1
    if low < 0 or top < 0 or low > top:
        return 0
    val = comb(top, low) * mult
    return val if (n - j - 1) % 2 == 0 else -val


def _poly_of(x):
    return x.poly if isinstance(x, CsfResult) else x


def _checked_coefficient(value, i, j):
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise ConsistencyError(
                f"transform produced non-integral f({i},{j}) = {value}; input is not a tree CSF")
        value = value.numerator
    if value < 0:
        raise ConsistencyError(
            f"transform produced negative f({i},{j}) = {value}; input is not a tree CSF")
    return value


def f_polynomial_from_csf(x, n: int) -> BivariatePolynomial:
    """F_T recovered from a tree CSF by the sigma-transform.

    Accepts a CsfResult or a bare PPolynomial.  Raises ConsistencyError
    when the input is not homogeneous of degree n or when any recovered
    coefficient is negative or non-integral.
    """
    poly = _poly_of(x)
    if not poly.is_homogeneous(n) or not poly:
        raise ConsistencyError(f"input is not a nonzero homogeneous CSF of degree {n}")
    terms = {}
    for i in range(1, n + 1):
        for j in range(0, n - i + 1):
            total = 0
            for lam, c in poly.terms.items():
                s = sigma(lam, i, j, n)
                if s:
                    total += s * c
            total = _checked_coefficient(total, i, j)
            if total:
                terms[(i, j)] = total
    return BivariatePolynomial(terms)


@lru_cache(maxsize=4096)
def _omega_piece(n: int, i: int, j: int) -> PPolynomial:
    # The (i,j)-graded piece of Omega_n: sum of sigma(lam,i,j) p_lam / z_lam.
    terms = {}
    for lam in partitions(n):
        s = sigma(lam, i, j, n)
        if s:
            terms[lam] = Fraction(s, z_of(lam))
    return PPolynomial(terms)


def omega_check(x, n: int) -> BivariatePolynomial:
    """F_T via scalar products against Omega_n's graded pieces.

    Agrees with f_polynomial_from_csf exactly; same consistency errors.
    """
    poly = _poly_of(x)
    if not poly.is_homogeneous(n) or not poly:
        raise ConsistencyError(f"input is not a nonzero homogeneous CSF of degree {n}")
    terms = {}
    for i in range(1, n + 1):
        for j in range(0, n - i + 1):
            value = _omega_piece(n, i, j).scalar_product(poly)
            value = _checked_coefficient(value, i, j)
            if value:
                terms[(i, j)] = value
    return BivariatePolynomial(terms)


def sign_binomial_matrix(k: int, n: int, i: int):
    """The k x k involution A with a_{m,j} = (-1)^(n-m-1) C(n-i-j, m-j).

    Rows and columns are indexed 1..k mathematically; entry [m-1][j-1]
    holds a_{m,j}.  A @ A is the identity for the valid parameter range.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    rows = []
    for m in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            if m < j or n - i - j < 0 or m - j > n - i - j:
                row.append(0)
            else:
                val = comb(n - i - j, m - j)
                row.append(val if (n - m - 1) % 2 == 0 else -val)
        rows.append(row)
    return rows


def matrix_multiply(a, b):
    """Plain integer matrix product (square, same size)."""
    k = len(a)
    return [[sum(a[r][t] * b[t][c] for t in range(k)) for c in range(k)]
            for r in range(k)]


def identity_matrix(k: int):
    return [[1 if r == c else 0 for c in range(k)] for r in range(k)]


def generalized_degree_sequence(g: Graph) -> Counter:
    """The multiset {(|W|, e(W), d(W)) : W subset of V}, empty set included.

    Brute force over all 2^n subsets; capped at n = 24.
    """
    n = g.n
    if n > GENERALIZED_DEGREE_CAP:
        raise CapacityError(f"generalized degree sequence capped at n = {GENERALIZED_DEGREE_CAP}")
    # A loop's mask is a single bit, so it lands in e(W) or nowhere,
    # never in the boundary count.
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    counts = Counter()
    for w in range(1 << n):
        e = d = 0
        for full in masks:
            inter = w & full
            if inter == full:
                e += 1
            elif inter:
                d += 1
        counts[(bin(w).count("1"), e, d)] += 1
    return counts
