"""Chromatic symmetric functions by three independent routes.

Computes X for small graphs via the signed edge-subset expansion, the
deletion-contraction recurrence, and (for trees) the component-size
dynamic program, and shows they agree.  Also demonstrates vertex
weights, parallel edges, loops, and the derivative identity.
"""

from csfkit import (
    Graph,
    Tree,
    VertexWeighting,
    csf_deletion_contraction,
    csf_power_sum,
    csf_tree,
    csf_weighted,
    subtree_derivative,
)


def show(label, poly):
    print(f"{label}:")
    for line in poly.serialize().splitlines() or ["0"]:
        print(f"    {line}")
    print()


def main():
    p4 = Tree(4, [(0, 1), (1, 2), (2, 3)])
    k3 = Graph(3, [(0, 1), (1, 2), (0, 2)])

    show("X of the 4-path (subset expansion)", csf_power_sum(p4).poly)
    show("X of the triangle", csf_power_sum(k3).poly)

    print("Three routes, one answer:")
    a = csf_power_sum(p4).poly
    b = csf_deletion_contraction(p4).poly
    c = csf_tree(p4).poly
    print(f"    subset expansion == deletion-contraction: {a == b}")
    print(f"    subset expansion == tree DP:              {a == c}")
    print()

    print("Vertex weights ride along as part sizes; a weight-0 vertex")
    print("contributes nothing but still constrains colors:")
    g = Graph(3, [(0, 1), (1, 2)])
    show("X of a 3-path with weights (1,0,2)",
         csf_weighted(g, VertexWeighting((1, 0, 2))).poly)

    print("Parallel edges are redundant; loops annihilate:")
    doubled = Graph(2, [(0, 1), (0, 1)])
    show("X with a doubled edge", csf_power_sum(doubled).poly)
    looped = Graph(2, [(0, 1), (1, 1)])
    show("X with a loop (identically zero)", csf_power_sum(looped).poly)

    print("The p_j partial derivative of X equals a signed sum of X over")
    print("the forest minus each j-vertex subtree:")
    x = csf_tree(p4).poly
    for j in (1, 2, 3):
        same = x.partial_derivative(j) == subtree_derivative(p4, j)
        print(f"    j = {j}: {same}")


if __name__ == "__main__":
    main()
