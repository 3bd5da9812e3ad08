"""Hyper-Wiener index of the nanocone G_n, three ways.

Brute force over all pairs, the closed polynomial, and the sector
difference 5 * (WW(M_{2n,n}) - WW(Z_{n,n})).
"""

from nanocone import build_cone, build_M, build_Z, eval_formula, hyper_wiener

print(f"{'n':>2} {'|V|':>5} {'brute':>10} {'closed':>10} {'sectors':>10}")
for n in range(9):
    g = build_cone(n).graph
    brute = hyper_wiener(g)
    closed = eval_formula("WW_cone", (n,))
    sectors = 5 * (hyper_wiener(build_M(2 * n, n).graph) - hyper_wiener(build_Z(n, n).graph))
    print(f"{n:>2} {g.vertex_count:>5} {brute:>10} {closed:>10} {sectors:>10}")
    assert brute == closed == sectors
