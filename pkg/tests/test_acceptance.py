"""The acceptance gate: one test per criterion, one printed line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Every expected value is exact; each criterion also enforces its
wall-clock budget.
"""

import time
from contextlib import contextmanager
from itertools import product

import pytest

from kanlab import (
    DimSet,
    FaceLabel,
    NEGATIVE,
    ONE,
    POSITIVE,
    ZERO,
    afm,
    algebraic_box,
    box_action,
    box_projection,
    canonical_dims,
    canonical_shape,
    canonical_shapes,
    check_adjacency,
    check_fib_section_property,
    check_geometric_lifting,
    check_naive_coherence,
    check_section_property,
    check_uniform,
    check_uniform_fib,
    codiscrete_filler_table,
    codiscrete_nerve,
    codiscrete_relabeling,
    corner_values,
    enumerate_morphisms,
    fib_fillers,
    fillers,
    filling_to_geometric,
    geom_box_action,
    geometric_of_algebraic,
    geometric_to_filling,
    is_kan,
    is_kan_fibration,
    nerve,
    product_with,
    realize,
    sieve_members,
    synthesize_uniform,
    synthesize_uniform_fib,
    terminal_map,
    transport,
)
from kanlab.boxes import GeomBox
from kanlab.fibration import pair_id, synthesize_uniform_fib
from oracles import all_families, brute_force_boxes, semantic_face

SEG = "0,1"


@contextmanager
def criterion(num: int, description: str, budget_seconds: float):
    start = time.time()
    try:
        yield
    except Exception:
        print(f"[criterion {num:2d}] FAIL  {description}")
        raise
    elapsed = time.time() - start
    print(f"[criterion {num:2d}] PASS  {description}  ({elapsed:.1f}s)")
    assert elapsed < budget_seconds, f"criterion {num} exceeded {budget_seconds}s"


@pytest.fixture(scope="module")
def filler_table3(codiscrete3):
    return codiscrete_filler_table(codiscrete3)


def small_shapes():
    for polarity in (POSITIVE, NEGATIVE):
        for n_inc, n_ext in [(0, 0), (1, 0), (0, 1), (1, 1)]:
            yield canonical_shape(n_inc, n_ext, polarity)


def test_c01_interval_cardinalities(codiscrete3, minimal2):
    with criterion(1, "interval carrier cardinalities", 1.0):
        assert [len(codiscrete3.carrier(n)) for n in range(4)] == [2, 4, 16, 256]
        assert [len(minimal2.carrier(n)) for n in range(3)] == [2, 3, 4]


def test_c02_figure_one_reproduction(codiscrete2, minimal2):
    with criterion(2, "the 16 squares match the 16 corner diagrams one-to-one", 1.0):
        I = canonical_dims(2)
        profiles = {
            c: corner_values(codiscrete2, I, c) for c in codiscrete2.carrier(2)
        }
        assert len(profiles) == 16
        assert set(profiles.values()) == {
            tuple(map(str, bits)) for bits in product((0, 1), repeat=4)
        }
        # the diagrams drawn in the minimal interval: two constant squares
        # and the two projection squares (the segment stretched each way)
        assert profiles["0,0,0,0"] == ("0", "0", "0", "0")
        assert profiles["1,1,1,1"] == ("1", "1", "1", "1")
        assert profiles["0,0,1,1"] == ("0", "0", "1", "1")
        assert profiles["0,1,0,1"] == ("0", "1", "0", "1")
        assert set(minimal2.carrier(2)) == {"0,0,0,0", "0,0,1,1", "0,1,0,1", "1,1,1,1"}


def test_c03_nerve_realization_bijection(codiscrete2, minimal2):
    with criterion(3, "nerve and realization are mutually inverse", 30.0):
        total = 0
        for X in (codiscrete2, minimal2):
            for shape in small_shapes():
                for b in brute_force_boxes(X, shape):
                    beta = realize(X, b)
                    assert nerve(beta) == b
                    assert realize(X, nerve(beta)) == beta
                    total += 1
        assert total == 2 * (
            (2 + 16 + 4 + 256)      # codiscrete, per polarity
            + (2 + 7 + 3 + 8)       # minimal, per polarity
        )


def test_c04_naturality_in_extra_dimensions(codiscrete2, minimal2):
    with criterion(4, "the bijection is natural in the extra dimensions", 30.0):
        Z1 = DimSet(["z1"])
        actions = {
            0: enumerate_morphisms(DimSet(), Z1),
            1: enumerate_morphisms(Z1, Z1) + enumerate_morphisms(Z1, DimSet()),
        }
        for X in (codiscrete2, minimal2):
            for shape in small_shapes():
                boxes = brute_force_boxes(X, shape)
                for h in actions[len(shape.extra)]:
                    for b in boxes:
                        beta = realize(X, b)
                        left = nerve(geom_box_action(X, h, beta))
                        right = box_action(X, h, b)
                        assert left == right


def test_c05_projection_compatibility(codiscrete2, minimal2):
    with criterion(5, "geometric and algebraic box projections agree", 5.0):
        for X in (codiscrete2, minimal2):
            for shape in canonical_shapes(2):
                dims = shape.dims
                for c in X.carrier(len(dims)):
                    kappa = geometric_of_algebraic(X, dims, c)
                    restricted = GeomBox(
                        X,
                        shape,
                        {
                            k: {
                                m: kappa.value(m)
                                for m in sieve_members(shape, canonical_dims(k))
                            }
                            for k in range(X.bound + 1)
                        },
                    )
                    assert nerve(restricted) == box_projection(X, shape, c)


def test_c06_adjacency_iff_naive_coherence(codiscrete2, minimal2):
    with criterion(6, "adjacency is equivalent to unrestricted coherence", 60.0):
        for X in (codiscrete2, minimal2):
            for shape in small_shapes():
                for family in all_families(X, shape):
                    adjacent = check_adjacency(X, shape, family).ok
                    coherent = check_naive_coherence(X, shape, family).ok
                    assert adjacent == coherent


def test_c07_kan_failure_of_the_minimal_interval(minimal2):
    with criterion(7, "the minimal interval is not Kan, witnessed", 5.0):
        verdict = is_kan(minimal2)
        assert not verdict.kan
        witness = verdict.witness
        assert fillers(minimal2, witness.shape, witness) == []
        # independent re-verification: read every square's faces off its corners
        dims = witness.shape.dims
        assert len(minimal2.carrier(len(dims))) == 4
        for square in minimal2.carrier(len(dims)):
            assert any(
                semantic_face(square, dims, label) != witness.face(label)
                for label in afm(witness.shape)
            )


def test_c08_uniform_kan_success_of_the_codiscrete_interval(codiscrete3, codiscrete2, filler_table3):
    with criterion(8, "the corner-copy filler is a uniform section at bound 3", 300.0):
        polarities = {b.shape.polarity for b in filler_table3.boxes()}
        assert polarities == {POSITIVE, NEGATIVE}
        assert check_section_property(filler_table3).ok
        assert check_uniform(codiscrete3, filler_table3).ok
        synthesized = synthesize_uniform(codiscrete2)
        assert synthesized is not None
        assert check_section_property(synthesized).ok
        assert check_uniform(codiscrete2, synthesized).ok


def test_c09_filling_operation_equivalence(codiscrete3, filler_table3):
    with criterion(9, "algebraic and geometric filling operations interchange", 60.0):
        geometric = filling_to_geometric(codiscrete3, filler_table3)
        assert check_geometric_lifting(codiscrete3, geometric).ok
        assert geometric_to_filling(codiscrete3, geometric) == filler_table3


def test_c10_fibration_layer(codiscrete2, minimal2):
    with criterion(10, "fibration verdicts and transport behave", 30.0):
        for X in (codiscrete2, minimal2):
            assert is_kan_fibration(terminal_map(X)).kan == is_kan(X).kan
        relabeling = codiscrete_relabeling({"a0": "0", "a1": "1"}, 2)
        table = synthesize_uniform_fib(relabeling)
        assert table is not None
        assert check_fib_section_property(relabeling, table).ok
        assert check_uniform_fib(relabeling, table).ok
        assert transport(relabeling, table, SEG, "a0") == "a1"
        assert transport(relabeling, table, "0,0", "a0") == "a0"
        assert transport(relabeling, table, "1,1", "a1") == "a1"
        # a trivial product fibration, filled by pairs of independent fillers
        from kanlab import FillingTable, codiscrete_filler
        from kanlab.fibration import enumerate_fib_boxes

        F = codiscrete_nerve(("u", "v"), 2)
        Y, p = product_with(codiscrete2, F)
        entries = {}
        for shape in canonical_shapes(2):
            for fb in enumerate_fib_boxes(p, shape):
                f_faces = {l: c.split("|")[1] for l, c in fb.box.faces}
                f_fill = codiscrete_filler(
                    ("u", "v"), shape, algebraic_box(shape, f_faces)
                )
                entries[fb] = pair_id(fb.index, f_fill)
        pair_table = FillingTable(Y, entries)
        assert check_fib_section_property(p, pair_table).ok
        assert check_uniform_fib(p, pair_table).ok
        for v in ("u", "v"):
            assert transport(p, pair_table, SEG, pair_id("0", v)) == pair_id("1", v)
            assert transport(p, pair_table, "0,0", pair_id("0", v)) == pair_id("0", v)
