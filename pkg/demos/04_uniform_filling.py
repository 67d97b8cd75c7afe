#!/usr/bin/env python3
"""Filling open boxes, uniformly.

The Kan condition asks for a filler for every box.  The minimal interval
fails it — there is a box asking the segment to compose with itself, and
no square answers.  The codiscrete interval satisfies it, and the filler
can be chosen uniformly: naturality in the extra dimensions, here checked
exhaustively and found independently by backtracking search.
"""

from kanlab import (
    FaceLabel,
    ONE,
    POSITIVE,
    ZERO,
    algebraic_box,
    canonical_shape,
    check_section_property,
    check_uniform,
    codiscrete_filler,
    codiscrete_filler_table,
    codiscrete_nerve,
    fillers,
    is_kan,
    minimal_interval,
    synthesize_uniform,
)

minimal = minimal_interval(2)
codiscrete = codiscrete_nerve(("0", "1"), 2)
SEG = "0,1"

print("== the minimal interval is not Kan ==")
verdict = is_kan(minimal)
print("is_kan:", verdict.kan)
print("witness box:", verdict.witness)
print("its fillers:", fillers(minimal, verdict.witness.shape, verdict.witness))

print()
print("== the same box fills codiscretely ==")
shape = canonical_shape(1, 0, POSITIVE)
box = algebraic_box(
    shape,
    {
        FaceLabel("x1", ZERO): SEG,
        FaceLabel("x1", ONE): "1,1",
        FaceLabel("y", ZERO): SEG,
    },
)
print("fillers in the codiscrete interval:", fillers(codiscrete, shape, box))
print("closed-form corner copy gives:     ", codiscrete_filler(("0", "1"), shape, box))

print()
print("== a filling table for every box, both polarities ==")
table = codiscrete_filler_table(codiscrete)
print("boxes covered:", len(table.entries))
print("section property:", check_section_property(table))
print("uniformity:      ", check_uniform(codiscrete, table))

print()
print("== the backtracking search agrees ==")
found = synthesize_uniform(codiscrete)
print("search found a table:", found is not None)
print("it is a uniform section:",
      check_section_property(found).ok and check_uniform(codiscrete, found).ok)
forced = sum(
    1 for b in found.boxes() if len(fillers(codiscrete, b.shape, b)) == 1
)
print(f"boxes with a unique filler: {forced} of {len(found.entries)}")

print()
print("== and refutes the minimal interval ==")
print("synthesize_uniform(minimal):", synthesize_uniform(minimal))
