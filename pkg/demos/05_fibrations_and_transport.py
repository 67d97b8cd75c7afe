#!/usr/bin/env python3
"""Fibrations of cubical sets, and transport along a line.

A map of cubical sets is a fibration candidate; boxes in the total space
lie over index cubes in the base.  Filling a one-face box over a base line
moves fiber points from one end to the other: transport.
"""

from kanlab import (
    check_map_naturality,
    check_uniform_fib,
    codiscrete_nerve,
    codiscrete_relabeling,
    fibers,
    is_kan,
    is_kan_fibration,
    minimal_interval,
    product_with,
    synthesize_uniform_fib,
    terminal_map,
    total_space,
    transport,
)
from kanlab.fibration import constant_family, fibers_family, pair_id

codiscrete = codiscrete_nerve(("0", "1"), 2)
minimal = minimal_interval(2)
SEG = "0,1"

print("== a cubical set is Kan iff its terminal map is a Kan fibration ==")
for X, name in ((codiscrete, "codiscrete"), (minimal, "minimal")):
    plain = is_kan(X).kan
    fib = is_kan_fibration(terminal_map(X)).kan
    print(f"{name:10s}: is_kan={plain}  terminal map fibration={fib}")

print()
print("== families of fibers and total spaces ==")
F = codiscrete_nerve(("u", "v"), 2)
Y, p = product_with(codiscrete, F)
print("product total space sizes:", [len(Y.carrier(n)) for n in range(3)])
print("projection is natural:", check_map_naturality(p).ok)
print("fiber over the point '0':", fibers(p, 0, "0"))
back = fibers_family(p)
Y2, _ = total_space(back)
print("fibers then total space rebuilds the same sizes:",
      [len(Y2.carrier(n)) for n in range(3)])

print()
print("== a relabeling fibration and its transport ==")
relabel = codiscrete_relabeling({"a0": "0", "a1": "1"}, 2)
print("total space points:", relabel.source.carrier(0))
print("base points:       ", relabel.target.carrier(0))
table = synthesize_uniform_fib(relabel)
print("uniform filling table found:", table is not None,
      "| uniform:", check_uniform_fib(relabel, table).ok)

print()
print("transport along the segment 0->1:")
print("  a0 |->", transport(relabel, table, SEG, "a0"))
print("transport back along the reverse segment 1->0:")
print("  a1 |->", transport(relabel, table, "1,0", "a1"))
print("transport along a degenerate line stays put:")
print("  a0 |->", transport(relabel, table, "0,0", "a0"))
