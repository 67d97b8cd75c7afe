#!/usr/bin/env python3
"""Two candidate intervals, as finite cubical sets.

The minimal interval has two points, one connecting line, and nothing else
beyond forced degeneracies.  The codiscrete interval has one cube per
assignment of cube corners to {0,1} — including an inverse for the segment
and connection squares in every direction.
"""

from kanlab import (
    DimSet,
    ONE,
    ZERO,
    canonical_dims,
    check_functor_laws,
    codiscrete_nerve,
    corner_values,
    face,
    geometric_of_algebraic,
    minimal_interval,
)
from kanlab.cubical import corners

minimal = minimal_interval(2)
codiscrete = codiscrete_nerve(("0", "1"), 2)
SEG = "0,1"

print("== carrier sizes ==")
print("dim:        ", list(range(3)))
print("minimal:    ", [len(minimal.carrier(n)) for n in range(3)])
print("codiscrete: ", [len(codiscrete.carrier(n)) for n in range(3)])
print("(codiscrete dimension n holds 2^(2^n) corner assignments)")

print()
print("== the segment and its ends ==")
print("segment id:", SEG)
print("end at 0:", codiscrete.action(face(DimSet(), "x", ZERO), SEG))
print("end at 1:", codiscrete.action(face(DimSet(), "x", ONE), SEG))
print("the codiscrete interval also holds the reverse segment '1,0';")
print("the minimal interval does not:", "1,0" not in minimal.carrier(1))

print()
print("== all sixteen codiscrete squares, by corner values ==")
I2 = canonical_dims(2)
for c in codiscrete.carrier(2):
    values = corner_values(codiscrete, I2, c)
    marks = " ".join(f"{v}={val}" for v, val in zip(corners(2), values))
    inside = "  (also in minimal)" if c in minimal.carrier(2) else ""
    print(f"  {c:10s} {marks}{inside}")

print()
print("== laws hold by exhaustive check ==")
print("minimal functor laws:   ", check_functor_laws(minimal))
print("codiscrete functor laws:", check_functor_laws(codiscrete))

print()
print("== a cube is the same thing as its full aspect table ==")
kappa = geometric_of_algebraic(minimal, DimSet(["x"]), SEG)
print("aspects of the segment at dimension 0:")
for m, value in kappa.table[0].items():
    print(f"  {m} -> {value}")
