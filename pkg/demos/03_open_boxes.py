#!/usr/bin/env python3
"""Open boxes, two ways: co-sieve tables and face families.

A box shape lists included dimensions (both faces present), extra
dimensions (faces absent), a filling dimension (one face present), and the
polarity naming which end that face sits at.  The geometric form is a
natural table on the co-sieve generated by the applicable faces; the
algebraic form is just the family of cubes at those faces, pairwise
compatible.  Nerve and realization convert between them, bijectively.
"""

from kanlab import (
    FaceLabel,
    NEGATIVE,
    ONE,
    POSITIVE,
    ZERO,
    afm,
    algebraic_box,
    box_projection,
    canonical_dims,
    canonical_shape,
    check_adjacency,
    check_naive_coherence,
    enumerate_boxes,
    minimal_interval,
    nerve,
    realize,
    sieve_members,
)

minimal = minimal_interval(2)
SEG = "0,1"

print("== shapes and their applicable faces ==")
for n_inc, n_ext, pol in [(0, 0, POSITIVE), (1, 0, POSITIVE), (0, 1, NEGATIVE)]:
    shape = canonical_shape(n_inc, n_ext, pol)
    print(f"{shape}: faces {[str(l) for l in afm(shape)]}")

print()
print("== the co-sieve: everything factoring through an applicable face ==")
shape = canonical_shape(1, 0, POSITIVE)
for k in range(3):
    members = sieve_members(shape, canonical_dims(k))
    print(f"members into {canonical_dims(k)}: {len(members)}")
print("sample member:", sieve_members(shape, canonical_dims(1))[0])

print()
print("== an algebraic box in the minimal interval ==")
family = {
    FaceLabel("x1", ZERO): SEG,    # left wall: the segment
    FaceLabel("x1", ONE): "1,1",   # right wall: constant 1
    FaceLabel("y", ZERO): SEG,     # floor: the segment
}
print("adjacency check:", check_adjacency(minimal, shape, family))
print("unrestricted coherence check:", check_naive_coherence(minimal, shape, family))

broken = dict(family)
broken[FaceLabel("x1", ONE)] = "0,0"
print("after breaking the right wall:")
print(" ", check_adjacency(minimal, shape, broken))

print()
print("== nerve and realization invert each other ==")
box = algebraic_box(shape, family)
beta = realize(minimal, box)
print("realized table sizes:", {k: len(t) for k, t in beta.table.items()})
print("nerve of the realization == original box:", nerve(beta) == box)

print()
print("== box projection restricts a complete cube ==")
for square in minimal.carrier(2):
    b = box_projection(minimal, shape, square)
    faces = ", ".join(f"{l}:{c}" for l, c in b.faces)
    print(f"  {square:8s} |-> {faces}")

print()
print("== boxes are scarce in the minimal interval ==")
print("valid boxes of that shape:", len(enumerate_boxes(minimal, shape)))
print("of which", sum(1 for _ in minimal.carrier(2)), "arise as projections of squares")
