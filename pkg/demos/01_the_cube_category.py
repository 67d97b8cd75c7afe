#!/usr/bin/env python3
"""A tour of the cube category: named dimensions and their morphisms.

Objects are finite sets of dimension names; a morphism sends each name to a
codomain name (injectively) or to one of the interval end points 0, 1.
Composition chases names and absorbs end points.
"""

from kanlab import (
    DimSet,
    ONE,
    ZERO,
    canonical_form,
    compose,
    enumerate_morphisms,
    face,
    identity,
    inclusion,
    morphism,
    recompose,
    reconcilable,
    swap,
)

xy = DimSet(["x", "y"])
z = DimSet(["z"])

print("== building blocks ==")
print("identity on {x,y}:     ", identity(xy))
print("face x=0 over {y}:     ", face(DimSet(["y"]), "x", ZERO))
print("inclusion of z:        ", inclusion(DimSet(["y"]), "z"))
print("exchange of x and y:   ", swap(DimSet(), "x", "y"))

print()
print("== composition absorbs end points ==")
collapse = morphism(DimSet(["x"]), DimSet(), {"x": ZERO})
widen = inclusion(DimSet(), "z")
print(f"({collapse}) ; ({widen}) =", compose(collapse, widen))

# a degenerate cube's faces give back the original cube: include then face
roundtrip = compose(inclusion(DimSet(), "y"), face(DimSet(), "y", ZERO))
print("include y then face y=0:", roundtrip, "== identity:", roundtrip == identity(DimSet()))

print()
print("== every morphism factors: specialize, rename, include ==")
f = morphism(xy, z, {"x": ZERO, "y": "z"})
cf = canonical_form(f)
print("morphism:       ", f)
print("specializations:", dict(cf.specializations))
print("renaming:       ", dict(cf.renaming))
print("inclusions:     ", cf.inclusions)
print("recomposed OK:  ", recompose(cf) == f)

print()
print("== how many morphisms are there? ==")
for I, J in [(DimSet(), DimSet()), (DimSet(["x"]), DimSet()), (xy, z), (xy, xy)]:
    print(f"|hom({I}, {J})| = {len(enumerate_morphisms(I, J))}")

print()
print("== reconciliation: when do two faces share an aspect? ==")
fx = morphism(xy, DimSet(["y"]), {"x": ZERO, "y": "y"})
fy = morphism(xy, DimSet(["x"]), {"x": "x", "y": ONE})
print("x=0 and y=1 reconcile:", reconcilable(fx, fy, 2))
gx0 = face(DimSet(), "x", ZERO)
gx1 = face(DimSet(), "x", ONE)
print("x=0 and x=1 reconcile:", reconcilable(gx0, gx1, 2))
