"""A first tour of the ABS index.

The atom-bond sum-connectivity index of a graph sums, over the edges,
sqrt((d_u + d_v - 2)/(d_u + d_v)).  Each summand lives in [0, 1), so
the index of a graph is always strictly below its edge count (except
for edgeless graphs, where it is 0).
"""

from absindex import (
    abs_index,
    complete_graph,
    edge_contributions,
    encode_graph6,
    from_edges,
)

print("== Single edges contribute nothing when both endpoints are leaves ==")
k2 = from_edges(2, [(0, 1)])
print(f"K_2: ABS = {abs_index(k2):.10f}")

print()
print("== Regular graphs have one repeated summand ==")
c5 = from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
print(f"C_5: ABS = {abs_index(c5):.10f}  (= 5 * sqrt(1/2))")
k4 = complete_graph(4)
print(f"K_4: ABS = {abs_index(k4):.10f}  (= 6 * sqrt(2/3))")

print()
print("== Edge-by-edge breakdown of a small irregular graph ==")
# a triangle with a tail
g = from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
print(f"graph6: {encode_graph6(g)}")
for c in edge_contributions(g):
    u, v = c.edge
    print(f"  edge ({u},{v}) degrees ({c.du},{c.dv}) -> {c.value:.10f}")
print(f"total: {abs_index(g):.10f}")

print()
print("== Adding any edge strictly increases the index ==")
before = abs_index(g)
after = abs_index(g.add_edge(1, 3))
print(f"before {before:.10f} -> after {after:.10f} (margin {after - before:.10f})")
