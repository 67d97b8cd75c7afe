"""Morphisms of cubical sets as fibration candidates.

A `CubicalMap` is a dimension-indexed family of functions commuting with
the actions.  Its fibers form a pointwise family (a set per base cube,
with lifts along morphisms); conversely a pointwise family has a total
space fibered over the base by first projection, and the two constructions
invert each other up to the evident relabeling y <-> (p(y), y).

A box in a fibration is a box in the total space lying over an index cube
in the base: each face maps to the matching aspect of the index.  Filling
then demands a filler that both projects onto the box and maps onto the
index, and uniformity is naturality in the extra dimensions exactly as for
plain cubical sets, with the action extended to the index by augmentation.

`transport` moves points between the fibers over the two ends of a base
line, by filling the one-face box at the positive end and reading off the
other end of the filler.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .category import (
    CubeMorphism,
    DimSet,
    FaceLabel,
    ONE,
    ZERO,
    augment,
    face,
    face_instance,
)
from .boxes import (
    AlgBox,
    BoxShape,
    Polarity,
    afm,
    algebraic_box,
    box_action,
    box_projection,
    canonical_shape,
    canonical_shapes,
    enumerate_boxes,
    face_codomain,
)
from .cubical import CubeId, FiniteCubicalSet, codiscrete_nerve, one_point
from .errors import (
    DimensionOverflow,
    FiberMismatch,
    UnknownCube,
    ValidationError,
)
from .kan import FillingTable, KanVerdict, _search_uniform, extra_actions, fillers
from .report import Report


class CubicalMap:
    """A family of functions Y_n -> X_n, natural in the cube category."""

    def __init__(
        self,
        source: FiniteCubicalSet,
        target: FiniteCubicalSet,
        components: Sequence[Mapping[CubeId, CubeId]],
    ):
        if source.bound != target.bound:
            raise ValidationError(
                f"source bound {source.bound} != target bound {target.bound}"
            )
        if len(components) != source.bound + 1:
            raise ValidationError(
                f"expected {source.bound + 1} components, got {len(components)}"
            )
        self.source = source
        self.target = target
        self.components = tuple(dict(c) for c in components)
        for n, comp in enumerate(self.components):
            if set(comp) != set(source.carrier(n)):
                raise ValidationError(f"component {n} is not total on the source carrier")
            for y, x in comp.items():
                if x not in target.carrier(n):
                    raise ValidationError(
                        f"component {n} sends {y} to {x}, not a target dimension-{n} cube"
                    )

    @property
    def bound(self) -> int:
        return self.source.bound

    def apply(self, n: int, y: CubeId) -> CubeId:
        try:
            return self.components[n][y]
        except KeyError:
            raise UnknownCube(f"{y!r} is not a dimension-{n} cube of the source") from None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CubicalMap)
            and self.source == other.source
            and self.target == other.target
            and self.components == other.components
        )

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class MapNaturalityViolation:
    generator: CubeMorphism
    cube: CubeId
    left: CubeId
    right: CubeId

    def __str__(self) -> str:
        return (
            f"naturality along {self.generator} at {self.cube}: "
            f"map-then-act {self.left} != act-then-map {self.right}"
        )


def check_map_naturality(p: CubicalMap) -> Report:
    """Commutation with every generator action (hence with all morphisms)."""
    violations = []
    targets = {g: t for g, t in p.target.generators()}
    for g, table in p.source.generators():
        n, m = len(g.dom), len(g.cod)
        ttable = targets[g]
        for y in p.source.carrier(n):
            left = ttable[p.apply(n, y)]
            right = p.apply(m, table[y])
            if left != right:
                violations.append(MapNaturalityViolation(g, y, left, right))
    return Report(tuple(violations))


def fibers(p: CubicalMap, I: "DimSet | int", x: CubeId) -> tuple[CubeId, ...]:
    """The source cubes lying over x."""
    n = I if isinstance(I, int) else len(I)
    if x not in p.target.carrier(n):
        raise UnknownCube(f"{x!r} is not a dimension-{n} cube of the target")
    return tuple(y for y in p.source.carrier(n) if p.apply(n, y) == x)


def identity_map(X: FiniteCubicalSet) -> CubicalMap:
    return CubicalMap(X, X, [{c: c for c in X.carrier(n)} for n in range(X.bound + 1)])


def terminal_map(X: FiniteCubicalSet) -> CubicalMap:
    pt = one_point(X.bound)
    return CubicalMap(X, pt, [{c: "pt" for c in X.carrier(n)} for n in range(X.bound + 1)])


def compose_maps(p: CubicalMap, q: CubicalMap) -> CubicalMap:
    if p.target != q.source:
        raise ValidationError("maps are not composable")
    return CubicalMap(
        p.source,
        q.target,
        [
            {y: q.apply(n, p.apply(n, y)) for y in p.source.carrier(n)}
            for n in range(p.bound + 1)
        ],
    )


@dataclass(frozen=True)
class SectionMapViolation:
    dim: int
    cube: CubeId
    got: CubeId

    def __str__(self) -> str:
        return f"section composed with the projection moves {self.cube} to {self.got} at dim {self.dim}"


def check_section(p: CubicalMap, s: CubicalMap) -> Report:
    """s goes X -> Y, is natural, and composes with p to the identity on X."""
    if s.source != p.target or s.target != p.source:
        raise ValidationError("the candidate section does not go back from base to total space")
    violations: list[object] = list(check_map_naturality(s).violations)
    for n in range(p.bound + 1):
        for x in p.target.carrier(n):
            back = p.apply(n, s.apply(n, x))
            if back != x:
                violations.append(SectionMapViolation(n, x, back))
    return Report(tuple(violations))


# ---------------------------------------------------------------------------
# pointwise families and the total space

class PointwiseFamily:
    """A set per base cube, with a lift per generator action."""

    def __init__(
        self,
        base: FiniteCubicalSet,
        fiber_sets: Mapping[tuple[int, CubeId], Sequence[CubeId]],
        lifts: Mapping[tuple[CubeMorphism, CubeId], Mapping[CubeId, CubeId]],
    ):
        self.base = base
        self.fiber_sets = {k: tuple(sorted(v)) for k, v in fiber_sets.items()}
        self.lifts = {k: dict(v) for k, v in lifts.items()}
        for n in range(base.bound + 1):
            for x in base.carrier(n):
                if (n, x) not in self.fiber_sets:
                    raise ValidationError(f"missing fiber over dimension-{n} cube {x}")
        for (g, x), table in self.lifts.items():
            n = len(g.dom)
            gx = base.action(g, x)
            if set(table) != set(self.fiber_sets[(n, x)]):
                raise ValidationError(f"lift along {g} over {x} is not total on the fiber")
            for v, w in table.items():
                if w not in self.fiber_sets[(len(g.cod), gx)]:
                    raise ValidationError(
                        f"lift along {g} over {x} sends {v} outside the fiber over {gx}"
                    )

    def fiber(self, n: int, x: CubeId) -> tuple[CubeId, ...]:
        return self.fiber_sets[(n, x)]

    def lift(self, g: CubeMorphism, x: CubeId) -> dict[CubeId, CubeId]:
        return self.lifts[(g, x)]


def constant_family(X: FiniteCubicalSet, F: FiniteCubicalSet) -> PointwiseFamily:
    """The same fiber F everywhere; lifts are F's own actions."""
    if X.bound != F.bound:
        raise ValidationError("base and fiber must share a bound")
    fiber_sets = {
        (n, x): F.carrier(n) for n in range(X.bound + 1) for x in X.carrier(n)
    }
    lifts = {}
    for g, table in F.generators():
        for x in X.carrier(len(g.dom)):
            lifts[(g, x)] = table
    return PointwiseFamily(X, fiber_sets, lifts)


def pair_id(x: CubeId, y: CubeId) -> CubeId:
    return f"{x}|{y}"


def total_space(fam: PointwiseFamily) -> tuple[FiniteCubicalSet, CubicalMap]:
    """Glue the fibers into one cubical set, fibered by first projection."""
    X = fam.base
    carriers = [
        [pair_id(x, y) for x in X.carrier(n) for y in fam.fiber(n, x)]
        for n in range(X.bound + 1)
    ]

    def lifted(g: CubeMorphism, table: Mapping[CubeId, CubeId]) -> dict[CubeId, CubeId]:
        n = len(g.dom)
        out = {}
        for x in X.carrier(n):
            lift = fam.lift(g, x)
            for y in fam.fiber(n, x):
                out[pair_id(x, y)] = pair_id(table[x], lift[y])
        return out

    faces = {}
    swaps = {}
    degens = {}
    for key, g, table in X.generator_entries():
        if key[0] == "face":
            faces[key[1:]] = lifted(g, table)
        elif key[0] == "swap":
            swaps[key[1:]] = lifted(g, table)
        else:
            degens[key[1]] = lifted(g, table)
    Y = FiniteCubicalSet(X.bound, carriers, faces, swaps, degens)
    components = [
        {pair_id(x, y): x for x in X.carrier(n) for y in fam.fiber(n, x)}
        for n in range(X.bound + 1)
    ]
    return Y, CubicalMap(Y, X, components)


def fibers_family(p: CubicalMap) -> PointwiseFamily:
    """The fibers of a map, with lifts by the source action."""
    X = p.target
    fiber_sets = {
        (n, x): fibers(p, n, x) for n in range(X.bound + 1) for x in X.carrier(n)
    }
    lifts = {}
    for g, table in p.source.generators():
        n = len(g.dom)
        for x in X.carrier(n):
            lifts[(g, x)] = {y: table[y] for y in fiber_sets[(n, x)]}
    return PointwiseFamily(X, fiber_sets, lifts)


def product_with(X: FiniteCubicalSet, F: FiniteCubicalSet) -> tuple[FiniteCubicalSet, CubicalMap]:
    """The product projection X x F -> X, via the constant family."""
    return total_space(constant_family(X, F))


def codiscrete_relabeling(
    label_map: Mapping[str, str], bound: int
) -> CubicalMap:
    """The map of codiscrete nerves induced by relabeling the objects."""
    src = codiscrete_nerve(label_map.keys(), bound)
    tgt = codiscrete_nerve(set(label_map.values()), bound)
    components = []
    for n in range(bound + 1):
        comp = {}
        for c in src.carrier(n):
            comp[c] = ",".join(label_map[v] for v in c.split(","))
        components.append(comp)
    return CubicalMap(src, tgt, components)


# ---------------------------------------------------------------------------
# boxes in a fibration

@dataclass(frozen=True)
class FibAlgBox:
    """A box in the total space together with the index cube it lies over."""

    index: CubeId
    box: AlgBox

    def __str__(self) -> str:
        return f"{self.box} over {self.index}"


@dataclass(frozen=True)
class LyingOverViolation:
    label: FaceLabel
    face_image: CubeId
    index_aspect: CubeId

    def __str__(self) -> str:
        return (
            f"face {self.label} maps to {self.face_image} but the index aspect "
            f"is {self.index_aspect}"
        )


def check_lying_over(p: CubicalMap, fb: FibAlgBox) -> Report:
    """Every face maps to the matching aspect of the index cube."""
    shape = fb.box.shape
    k = len(shape.dims) - 1
    violations = []
    for f in afm(shape):
        left = p.apply(k, fb.box.face(f))
        right = p.target.action(face_instance(f, shape.dims), fb.index)
        if left != right:
            violations.append(LyingOverViolation(f, left, right))
    return Report(tuple(violations))


def fib_box_projection(p: CubicalMap, shape: BoxShape, c: CubeId) -> FibAlgBox:
    """Project a total-space cube to its box and the index it lies over."""
    n = len(shape.dims)
    if c not in p.source.carrier(n):
        raise UnknownCube(f"{c!r} is not a dimension-{n} cube of the total space")
    return FibAlgBox(p.apply(n, c), box_projection(p.source, shape, c))


def enumerate_fib_boxes(p: CubicalMap, shape: BoxShape) -> list[FibAlgBox]:
    """All boxes over all compatible index cubes."""
    n = len(shape.dims)
    if n > p.bound:
        raise DimensionOverflow(f"box dimensions {n} above bound {p.bound}")
    out = []
    for b in enumerate_boxes(p.source, shape):
        for kappa in p.target.carrier(n):
            fb = FibAlgBox(kappa, b)
            if check_lying_over(p, fb).ok:
                out.append(fb)
    return out


def fib_fillers(p: CubicalMap, fb: FibAlgBox) -> list[CubeId]:
    """Fillers of the box that also map onto the index cube."""
    shape = fb.box.shape
    n = len(shape.dims)
    return [
        c
        for c in fillers(p.source, shape, fb.box)
        if p.apply(n, c) == fb.index
    ]


def is_kan_fibration(p: CubicalMap) -> KanVerdict:
    """Does every box-over-index have a filler over that index?"""
    report = check_map_naturality(p)
    if not report.ok:
        raise ValidationError(f"not a cubical map: {report.first()}")
    for shape in canonical_shapes(p.bound):
        for fb in enumerate_fib_boxes(p, shape):
            if not fib_fillers(p, fb):
                return KanVerdict(False, fb)
    return KanVerdict(True, None)


def fib_box_action(p: CubicalMap, h: CubeMorphism, fb: FibAlgBox) -> FibAlgBox:
    """Extra-dimension action on box and index together."""
    shape = fb.box.shape
    full = shape.included | {shape.filling}
    return FibAlgBox(
        p.target.action(augment(full, h), fb.index),
        box_action(p.source, h, fb.box),
    )


def check_uniform_fib(p: CubicalMap, table: FillingTable) -> Report:
    """Naturality of a fibration filling table in the extra dimensions."""
    violations = []
    for fb in table.boxes():
        shape = fb.box.shape
        full = shape.included | {shape.filling}
        for h in extra_actions(shape, p.bound):
            left = p.source.action(augment(full, h), table[fb])
            right = table[fib_box_action(p, h, fb)]
            if left != right:
                violations.append((fb, h, left, right))
    return Report(tuple(violations))


def check_fib_section_property(p: CubicalMap, table: FillingTable) -> Report:
    violations = []
    for fb in table.boxes():
        c = table[fb]
        if fib_box_projection(p, fb.box.shape, c) != fb:
            violations.append(f"filler {c} of {fb} does not project back to it")
    return Report(tuple(violations))


def synthesize_uniform_fib(p: CubicalMap, budget: int = 10**6) -> Optional[FillingTable]:
    """Uniform filling for a fibration, by the same search as for sets."""
    report = check_map_naturality(p)
    if not report.ok:
        raise ValidationError(f"not a cubical map: {report.first()}")
    boxes: list[FibAlgBox] = []
    for shape in canonical_shapes(p.bound):
        boxes.extend(enumerate_fib_boxes(p, shape))
    boxes.sort(key=lambda fb: (len(fb.box.shape.extra), str(fb)))

    edge_cache: dict[FibAlgBox, list] = {}

    def out_edges(fb: FibAlgBox):
        cached = edge_cache.get(fb)
        if cached is None:
            shape = fb.box.shape
            full = shape.included | {shape.filling}
            cached = []
            for h in extra_actions(shape, p.bound):
                aug_table = p.source.action_table(augment(full, h))
                cached.append((aug_table.__getitem__, fib_box_action(p, h, fb)))
            edge_cache[fb] = cached
        return cached

    assignment = _search_uniform(boxes, lambda fb: fib_fillers(p, fb), out_edges, budget)
    return None if assignment is None else FillingTable(p.source, assignment)


# ---------------------------------------------------------------------------
# transport

TRANSPORT_SHAPE = canonical_shape(0, 0, Polarity.POSITIVE)


def transport(p: CubicalMap, table: FillingTable, kappa: CubeId, y0: CubeId) -> CubeId:
    """Move y0 across the base line kappa, via the one-face-box filler.

    y0 must lie in the fiber over the line's start; the result lies in the
    fiber over its end.
    """
    line_dims = DimSet([TRANSPORT_SHAPE.filling])
    if kappa not in p.target.carrier(1):
        raise UnknownCube(f"{kappa!r} is not a line of the base")
    start = p.target.action(face(DimSet(), TRANSPORT_SHAPE.filling, ZERO), kappa)
    if y0 not in fibers(p, 0, start):
        raise FiberMismatch(f"{y0!r} is not in the fiber over the start {start!r} of {kappa!r}")
    box = algebraic_box(
        TRANSPORT_SHAPE, {FaceLabel(TRANSPORT_SHAPE.filling, ZERO): y0}
    )
    filler = table[FibAlgBox(kappa, box)]
    return p.source.action(face(DimSet(), TRANSPORT_SHAPE.filling, ONE), filler)
