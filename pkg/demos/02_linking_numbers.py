"""Linking numbers two ways, and a scan over a small spatial graph.

The projection route counts signed crossings in an exactly-generic
projection; the cone route counts signed passes through a spanning cone.
They are independent computations that must agree integer for integer.
"""

from plgraph import (
    ClosedPolygon,
    ExactPoint,
    LinearEmbedding,
    SpatialGraph,
    find_generic_apex,
    find_generic_direction,
    linking_number_cone,
    linking_number_projection,
    pairwise_link_scan,
)

P = ExactPoint

square = ClosedPolygon([P(1, 1, 0), P(-1, 1, 0), P(-1, -1, 0), P(1, -1, 0)])
threaded = ClosedPolygon([P(0, 0, 0), P(1, 0, 1), P(2, 0, 0), P(1, 0, -1)])

direction = find_generic_direction(square, threaded)
print("generic projection direction:", direction)
lk_p = linking_number_projection(square, threaded, direction)
apex = find_generic_apex(square, threaded)
lk_c = linking_number_cone(square, apex, threaded)
print(f"projection says {lk_p}, cone says {lk_c}")
print("reversing one curve negates:",
      linking_number_projection(square.reversed(), threaded, direction))

print()
print("== pairwise scan over an embedded graph ==")
g = SpatialGraph(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
pos = {
    0: P(2, 0, 0), 1: P(-1, 2, 0), 2: P(-1, -2, 0),
    3: P(1, 0, 2), 4: P(1, 0, -2), 5: P(4, 0, 0),
}
report = pairwise_link_scan(LinearEmbedding(g, pos), max_cycle_len=3)
for pair in report.pairs:
    print(f"cycles {pair.cycle_a} / {pair.cycle_b}: lk = {pair.linking_number}")
