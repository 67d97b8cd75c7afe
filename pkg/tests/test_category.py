from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kanlab import (
    CubeMorphism,
    DimSet,
    DomainMismatch,
    FaceLabel,
    NameClash,
    ONE,
    ZERO,
    augment,
    canonical_dims,
    canonical_form,
    compose,
    enumerate_morphisms,
    extend,
    face,
    face_instance,
    identity,
    inclusion,
    morphism,
    ordered_renaming,
    orthogonal,
    recompose,
    reconcilable,
    reconciliations,
    swap,
)
from oracles import all_maps, morphism_key

EMPTY = DimSet()
X = DimSet(["x"])
XY = DimSet(["x", "y"])
Z = DimSet(["z"])


def all_canonical_morphisms(max_size):
    out = []
    for n in range(max_size + 1):
        for m in range(max_size + 1):
            out.extend(enumerate_morphisms(canonical_dims(n), canonical_dims(m)))
    return out


# -- identity and composition ------------------------------------------------

def test_identity_empty():
    e = identity(EMPTY)
    assert e.dom == EMPTY and e.cod == EMPTY and e.mapping == ()


def test_identity_singleton():
    assert identity(X)("x") == "x"


def test_identity_is_left_and_right_unit():
    for n in range(3):
        I = canonical_dims(n)
        for m in range(3):
            for f in enumerate_morphisms(I, canonical_dims(m)):
                assert compose(identity(I), f) == f
                assert compose(f, identity(f.cod)) == f


def test_compose_inclusion_then_face_is_identity():
    assert compose(inclusion(EMPTY, "y"), face(EMPTY, "y", ZERO)) == identity(EMPTY)


def test_compose_propagates_endpoints_through_inclusion():
    f = morphism(X, EMPTY, {"x": ZERO})
    assert compose(f, inclusion(EMPTY, "z")) == morphism(X, Z, {"x": ZERO})


def test_compose_rejects_mismatched_middles():
    with pytest.raises(DomainMismatch):
        compose(face(EMPTY, "x", ZERO), face(EMPTY, "x", ONE))


def test_associativity_exhaustive_up_to_size_three():
    # intern morphisms so the triple loop runs on integers
    morphs = all_canonical_morphisms(3)
    index = {f: i for i, f in enumerate(morphs)}
    by_dom = {}
    for f in morphs:
        by_dom.setdefault(f.dom, []).append(f)
    comp = {}
    for f in morphs:
        for g in by_dom[f.cod]:
            comp[(index[f], index[g])] = index[compose(f, g)]
    for (i, j), ij in comp.items():
        for k_ in by_dom[morphs[j].cod]:
            k = index[k_]
            assert comp[(ij, k)] == comp[(i, comp[(j, k)])]


def test_kleisli_endpoint_absorption():
    for n in range(3):
        for m in range(3):
            for f in enumerate_morphisms(canonical_dims(n), canonical_dims(m)):
                for g in enumerate_morphisms(f.cod, canonical_dims(1)):
                    fg = compose(f, g)
                    for x in f.dom:
                        if not isinstance(f(x), str):
                            assert fg(x) == f(x)


# -- the special morphisms ---------------------------------------------------

def test_face_smallest():
    f = face(EMPTY, "y", ZERO)
    assert f.dom == DimSet(["y"]) and f.cod == EMPTY and f("y") == ZERO


def test_face_keeps_ambient_names():
    f = face(X, "y", ONE)
    assert f("x") == "x" and f("y") == ONE and f.cod == X


def test_face_rejects_existing_name():
    with pytest.raises(NameClash):
        face(X, "x", ZERO)


def test_distinct_faces_commute_for_all_name_pairs():
    pool = ["a", "b", "c", "x"]
    for x, y in product(pool, pool):
        if x == y:
            continue
        for bx, by in product((ZERO, ONE), repeat=2):
            left = compose(face(DimSet([x]), y, by), face(EMPTY, x, bx))
            right = compose(face(DimSet([y]), x, bx), face(EMPTY, y, by))
            assert left == right


def test_inclusion_empty():
    f = inclusion(EMPTY, "x")
    assert f.dom == EMPTY and f.cod == X and f.mapping == ()


def test_swap_two_names():
    f = swap(EMPTY, "x", "y")
    assert f("x") == "y" and f("y") == "x"


def test_swap_requires_freshness():
    with pytest.raises(NameClash):
        swap(X, "x", "y")
    with pytest.raises(NameClash):
        swap(EMPTY, "x", "x")


def test_extend_adds_one_pair():
    f = morphism(X, EMPTY, {"x": ZERO})
    g = extend(f, "u", "v")
    assert g("u") == "v" and g("x") == ZERO and g.cod == DimSet(["v"])


def test_augment_example():
    h = morphism(Z, EMPTY, {"z": ZERO})
    g = augment(X, h)
    assert g == morphism(DimSet(["x", "z"]), X, {"x": "x", "z": ZERO})


def test_augment_requires_disjointness():
    h = morphism(Z, EMPTY, {"z": ZERO})
    with pytest.raises(NameClash):
        augment(Z, h)


def test_inclusions_commute_as_morphisms():
    left = compose(inclusion(X, "u"), inclusion(X | {"u"}, "v"))
    right = compose(inclusion(X, "v"), inclusion(X | {"v"}, "u"))
    assert left == right


# -- canonical forms -----------------------------------------------------------

def test_canonical_form_of_identity():
    cf = canonical_form(identity(XY))
    assert cf.specializations == ()
    assert dict(cf.renaming) == {"x": "x", "y": "y"}
    assert len(cf.inclusions) == 0


def test_canonical_form_example():
    f = morphism(XY, Z, {"x": ZERO, "y": "z"})
    cf = canonical_form(f)
    assert cf.specializations == (("x", ZERO),)
    assert cf.renaming == (("y", "z"),)
    assert len(cf.inclusions) == 0
    assert recompose(cf) == f


def test_canonical_form_roundtrip_exhaustive():
    for f in all_canonical_morphisms(3):
        assert recompose(canonical_form(f)) == f


def test_canonical_form_roundtrip_named_sets():
    A = DimSet(["a", "b", "c"])
    B = DimSet(["p", "q"])
    for f in enumerate_morphisms(A, B) + enumerate_morphisms(B, A):
        assert recompose(canonical_form(f)) == f


def test_canonical_form_is_a_function_of_the_morphism():
    f1 = CubeMorphism(XY, Z, (("x", ZERO), ("y", "z")))
    f2 = CubeMorphism(XY, Z, (("y", "z"), ("x", ZERO)))
    assert f1 == f2
    assert canonical_form(f1) == canonical_form(f2)


@st.composite
def random_morphisms(draw):
    pool = ["a", "b", "c", "d", "p", "q", "r", "s"]
    dom = DimSet(draw(st.sets(st.sampled_from(pool[:4]), max_size=4)))
    cod = DimSet(draw(st.sets(st.sampled_from(pool[4:]), max_size=4)))
    available = list(cod.names)
    values = {}
    for x in dom:
        choice = draw(st.sampled_from(["0", "1", "name"]))
        if choice == "name" and available:
            values[x] = available.pop(draw(st.integers(0, len(available) - 1)))
        else:
            values[x] = draw(st.sampled_from([ZERO, ONE]))
    return morphism(dom, cod, values)


@settings(max_examples=200)
@given(random_morphisms())
def test_canonical_form_roundtrip_random(f):
    assert recompose(canonical_form(f)) == f


# -- orthogonality and reconciliation ----------------------------------------

def test_orthogonal_examples():
    assert orthogonal(FaceLabel("x", ZERO), FaceLabel("y", ONE))
    assert not orthogonal(FaceLabel("x", ZERO), FaceLabel("x", ONE))
    assert not orthogonal(FaceLabel("x", ZERO), FaceLabel("x", ZERO))


def test_orthogonality_as_commuting_instances():
    ambient = DimSet(["x1", "x2", "w"])
    labels = [FaceLabel(d, b) for d in ("x1", "x2") for b in (ZERO, ONE)]
    for l1, l2 in product(labels, labels):
        if l1.dim == l2.dim:
            continue
        f1 = face_instance(l1, ambient)
        f2 = face_instance(l2, ambient)
        left = compose(f1, face_instance(l2, f1.cod))
        right = compose(f2, face_instance(l1, f2.cod))
        assert left == right


def test_same_dimension_faces_have_no_common_composite():
    f1 = face_instance(FaceLabel("x", ZERO), XY)
    f2 = face_instance(FaceLabel("x", ONE), XY)
    assert list(reconciliations(f1, f2, 3)) == []


def test_face_maps_are_epimorphisms():
    for n in range(1, 4):
        I = canonical_dims(n)
        f = face_instance(FaceLabel("d1", ZERO), I)
        for m in range(4):
            K = canonical_dims(m)
            gs = enumerate_morphisms(f.cod, K)
            for g1 in gs:
                for g2 in gs:
                    if compose(f, g1) == compose(f, g2):
                        assert g1 == g2


def test_reconcilable_same_face_yields_identities():
    f = face(EMPTY, "x", ZERO)
    assert reconcilable(f, f, 2) == (identity(EMPTY), identity(EMPTY))


def test_reconcilable_orthogonal_faces_yield_face_instances():
    f1 = face_instance(FaceLabel("x", ZERO), XY)
    f2 = face_instance(FaceLabel("y", ONE), XY)
    g1, g2 = reconcilable(f1, f2, 2)
    assert g1 == morphism(DimSet(["y"]), EMPTY, {"y": ONE})
    assert g2 == morphism(X, EMPTY, {"x": ZERO})


def test_reconcilable_opposite_ends_absent():
    f1 = face(EMPTY, "x", ZERO)
    f2 = face(EMPTY, "x", ONE)
    assert reconcilable(f1, f2, 2) is None


def test_reconciliation_witnesses_really_reconcile():
    f1 = face_instance(FaceLabel("x", ZERO), XY)
    f2 = face_instance(FaceLabel("y", ZERO), XY)
    found = list(reconciliations(f1, f2, 2))
    assert found
    for g1, g2 in found:
        assert compose(f1, g1) == compose(f2, g2)


# -- enumeration ---------------------------------------------------------------

def test_enumeration_counts():
    assert len(enumerate_morphisms(EMPTY, EMPTY)) == 1
    assert len(enumerate_morphisms(X, EMPTY)) == 2
    # 3^2 raw maps minus the single non-injective one
    assert len(enumerate_morphisms(XY, Z)) == 8


def test_enumeration_matches_brute_force_maps():
    for I, J in [(EMPTY, EMPTY), (X, Z), (XY, Z), (XY, XY), (Z, XY), (XY, EMPTY)]:
        got = {morphism_key(f) for f in enumerate_morphisms(I, J)}
        assert got == all_maps(I, J)


def test_enumeration_is_duplicate_free_and_deterministic():
    ms = enumerate_morphisms(XY, Z)
    assert len(set(ms)) == len(ms)
    assert ms == enumerate_morphisms(XY, Z)


def test_ordered_renaming_round_trip():
    A = DimSet(["a", "b"])
    sigma = ordered_renaming(A, canonical_dims(2))
    assert compose(sigma, ordered_renaming(canonical_dims(2), A)) == identity(A)
