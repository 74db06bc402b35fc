"""A walk through the exact kernel: rational points and tolerance-free tests.

Every classification below is a sign computation over arbitrary-precision
rationals, so answers like "these segments cross at (1/2, 1/2, 0)" are exact
statements, not approximations.
"""

from fractions import Fraction

from plgraph import (
    ExactPoint,
    Segment,
    Triangle,
    orient3d,
    segment_segment_classify,
    segment_triangle_classify,
)

P = ExactPoint

print("== orientation of four points ==")
print("unit tetrahedron:", orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)))
print("coplanar:        ", orient3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(1, 1, 0)))

print()
print("== segment / segment ==")
res = segment_segment_classify(
    Segment(P(0, 0, 0), P(1, 1, 0)), Segment(P(1, 0, 0), P(0, 1, 0))
)
print("square diagonals:", res.kind, "at", res.point)

# A near miss that floating point could not certify: the segments pass within
# 1e-12 of each other but provably do not touch.
tiny = Fraction(1, 10 ** 12)
res = segment_segment_classify(
    Segment(P(0, 0, 0), P(1, 0, 0)), Segment(P(Fraction(1, 2), -1, tiny),
                                             P(Fraction(1, 2), 1, tiny))
)
print("near miss at distance 1e-12:", res.kind)

print()
print("== segment / triangle ==")
tri = Triangle(P(-1, -1, 0), P(2, -1, 0), P(-1, 2, 0))
for seg, label in [
    (Segment(P(0, 0, -1), P(0, 0, 1)), "through the open triangle"),
    (Segment(P(-1, -1, -1), P(-1, -1, 1)), "through a vertex"),
    (Segment(P(-2, 0, 0), P(2, 0, 0)), "coplanar chord"),
]:
    r = segment_triangle_classify(seg, tri)
    print(f"{label}: {r.kind}", "at", r.witness_point())
