"""The five sectors of G_n and the graphs they glue into."""

from nanocone import build_cone, sector_partition
from nanocone.families import sector_bijection, sector_model, sector_union
from nanocone.graph import d_lambda, w_lambda

n = 2
cone = build_cone(n)
parts = sector_partition(cone)
print(f"G_{n}: sectors of sizes {[len(p) for p in parts]}")

for count in (1, 2, 3):
    model = sector_model(cone, count)
    bij = sector_bijection(cone, count)
    some = next(iter(bij.items()))
    print(f"{count} sector(s) ~ {model.name}, e.g. cone {some[0]} -> lattice {some[1]}")

# ordered-pair distance sums from one sector to the whole cone
every = range(cone.graph.vertex_count)
for lam in (1, 2):
    row = [d_lambda(cone.graph, f, every, lam) for f in parts]
    m = w_lambda(sector_union(cone, 3)[0], lam)
    z = w_lambda(sector_union(cone, 2)[0], lam)
    print(f"lambda={lam}: D(F_s, V) = {row}, 2(W(M) - W(Z)) = {2 * (m - z)}, "
          f"2 W(G) = {2 * w_lambda(cone.graph, lam)}")
