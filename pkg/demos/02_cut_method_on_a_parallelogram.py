"""Wiener index of a parallelogram from its convex edge cuts.

Each class of parallel edges splits Z_{n,k} into two convex halves; the
Wiener index is the sum of |A| * |B| over the classes.
"""

from nanocone import build_Z, theta_star_classes, wiener

inst = build_Z(4, 2)
g = inst.graph
cuts = theta_star_classes(g)

print(f"{inst.name}: {g.vertex_count} vertices, {g.edge_count} edges, {len(cuts)} cuts")
for c in cuts:
    print(f"  {len(c.edges)} edges  sides {len(c.side_a):>2} x {len(c.side_b):>2} = {c.product}")
total = sum(c.product for c in cuts)
print("sum of products:", total)
print("all-pairs BFS:  ", wiener(g))
