"""Classical invariants of a tree and the subtree polynomial.

Builds an 8-vertex two-branch tree and reads off its degree sequence,
path sequence, trunk, twigs, subtree polynomial, and generalized degree
polynomial, then shows which of them the subtree polynomial determines.
"""

from csfkit import (
    Tree,
    classify,
    f_polynomial_direct,
    path_sequence,
    stats_from_subtree_polynomial,
    subtree_polynomial,
    trunk,
    twig_sequence,
)


def main():
    # two branch vertices (1 and 4) joined by a path
    t = Tree(8, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6), (6, 7)])
    print("Tree edges:", list(t.edges))
    print("Class:", classify(t))
    print()

    print("Degree sequence (d_i = vertices of degree i):", tuple(t.degree_sequence()))
    print("Path sequence (paths by length):", path_sequence(t))
    print("Trunk (smallest subtree spanning branch vertices):", sorted(trunk(t)))
    print("Twig lengths (leaf walks, counted by length):", tuple(twig_sequence(t)))
    print()

    s = subtree_polynomial(t)
    print("Subtree polynomial S(q, r), coefficient of q^edges r^leaf_edges:")
    for line in s.serialize().splitlines():
        print(f"    {line}")
    print()

    degs, paths = stats_from_subtree_polynomial(s, t.n)
    print("Recovered from S alone:")
    print("    degree sequence:", degs)
    print("    path sequence:  ", paths)
    print()

    f = f_polynomial_direct(t)
    print("Generalized degree polynomial F(x, y), coefficient of x^i y^j ==")
    print("number of i-vertex subtrees with j boundary edges:")
    for line in f.serialize().splitlines():
        print(f"    {line}")


if __name__ == "__main__":
    main()
