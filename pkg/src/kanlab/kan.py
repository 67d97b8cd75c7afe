"""Filling: sections of box projections, uniformity, and synthesis.

A filling table assigns to every algebraic box (of every representative
shape whose full dimensions fit the bound, both polarities) a filler cube
whose projection is the box.  Uniformity is naturality in the extra
dimensions: acting on the box and filling must agree with filling and then
acting, for every morphism h between canonical extra-dimension sets.

`synthesize_uniform` searches for such a table by backtracking: boxes are
assigned in order of extra-dimension count, every assignment is propagated
along all non-identity h-actions, and conflicts backtrack the last free
choice.  Exhausting all choices proves nonexistence; running out of budget
raises instead of concluding.

`codiscrete_filler` is a closed-form filling rule for codiscrete nerves:
corners on an included face copy that face's value, and boxes with no
included dimensions extend their starting face degenerately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional

from .category import (
    CubeMorphism,
    DimSet,
    FaceLabel,
    ONE,
    ZERO,
    augment,
    canonical_dims,
    compose,
    enumerate_morphisms,
    identity,
)
from .boxes import (
    AlgBox,
    BoxShape,
    GeomBox,
    Polarity,
    afm,
    algebraic_box,
    box_action,
    box_projection,
    canonical_extra_dims,
    canonical_shapes,
    check_adjacency,
    enumerate_boxes,
    geom_box_action,
    realize,
    nerve,
    sieve_members,
)
from .cubical import (
    CubeId,
    FiniteCubicalSet,
    GeometricCube,
    corner_index,
    corners,
    decode_assignment,
    encode_assignment,
    geometric_of_algebraic,
    algebraic_of_geometric,
)
from .errors import AdjacencyViolation, BudgetExhausted, DimensionOverflow, ValidationError
from .report import Report


def _projection_index(X: FiniteCubicalSet, shape: BoxShape) -> dict[AlgBox, list[CubeId]]:
    """Group the full carrier by box projection, once per shape."""
    key = ("projection-index", shape)
    index = X._derived.get(key)
    if index is None:
        index = {}
        for c in X.carrier(len(shape.dims)):
            index.setdefault(box_projection(X, shape, c), []).append(c)
        X._derived[key] = index
    return index


def fillers(X: FiniteCubicalSet, shape: BoxShape, b: AlgBox) -> list[CubeId]:
    """All cubes whose box projection is b, in carrier order."""
    n = len(shape.dims)
    if n > X.bound:
        raise DimensionOverflow(f"box dimensions {n} above bound {X.bound}")
    return list(_projection_index(X, shape).get(b, ()))


@dataclass(frozen=True)
class KanVerdict:
    kan: bool
    witness: Optional[object] = None

    def __bool__(self) -> bool:
        return self.kan


def is_kan(X: FiniteCubicalSet) -> KanVerdict:
    """Does every box of every shape within the bound have a filler?"""
    for shape in canonical_shapes(X.bound):
        for b in enumerate_boxes(X, shape):
            if not fillers(X, shape, b):
                return KanVerdict(False, b)
    return KanVerdict(True, None)


# ---------------------------------------------------------------------------
# filling tables and uniformity

class FillingTable:
    """A chosen filler per algebraic box."""

    def __init__(self, base: FiniteCubicalSet, entries: Mapping[AlgBox, CubeId]):
        self.base = base
        self.entries = dict(entries)

    def __getitem__(self, b: AlgBox) -> CubeId:
        try:
            return self.entries[b]
        except KeyError:
            raise ValidationError(f"filling table has no entry for {b}") from None

    def __contains__(self, b: AlgBox) -> bool:
        return b in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def boxes(self) -> list[AlgBox]:
        return sorted(self.entries, key=str)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FillingTable) and self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class SectionViolation:
    box: AlgBox
    filler: CubeId

    def __str__(self) -> str:
        return f"filler {self.filler} of {self.box} does not project back to it"


def check_section_property(table: FillingTable) -> Report:
    """Every table entry projects back onto its box."""
    X = table.base
    violations = []
    for b in table.boxes():
        c = table[b]
        if box_projection(X, b.shape, c) != b:
            violations.append(SectionViolation(b, c))
    return Report(tuple(violations))


@dataclass(frozen=True)
class UniformityViolation:
    shape: BoxShape
    h: CubeMorphism
    box: AlgBox
    left: CubeId
    right: CubeId

    def __str__(self) -> str:
        return (
            f"uniformity at {self.box} along {self.h}: acting on the filler gives "
            f"{self.left} but the filler of the acted box is {self.right}"
        )


class UniformityReport(Report):
    pass


def extra_actions(shape: BoxShape, bound: int) -> list[CubeMorphism]:
    """Non-identity morphisms from the shape's extras into canonical extra sets,

    restricted to targets keeping the acted shape's full dimensions within
    the bound.
    """
    out = []
    max_extra = bound - len(shape.included) - 1
    for m2 in range(0, max_extra + 1):
        for h in enumerate_morphisms(shape.extra, canonical_extra_dims(m2)):
            if not h.is_identity():
                out.append(h)
    return out


def check_uniform(X: FiniteCubicalSet, table: FillingTable) -> UniformityReport:
    """Naturality of the table in the extra dimensions."""
    violations = []
    for b in table.boxes():
        shape = b.shape
        full = shape.included | {shape.filling}
        for h in extra_actions(shape, X.bound):
            left = X.action(augment(full, h), table[b])
            right = table[box_action(X, h, b)]
            if left != right:
                violations.append(UniformityViolation(shape, h, b, left, right))
    return UniformityReport(tuple(violations))


# ---------------------------------------------------------------------------
# synthesis

def _search_uniform(
    items: list,
    fillers_of: Callable[[object], list[CubeId]],
    out_edges: Callable[[object], list[tuple[Callable[[CubeId], CubeId], object]]],
    budget: int,
) -> Optional[dict]:
    """Backtracking assignment with eager propagation along action edges.

    `items` are the boxes in assignment order; `out_edges(b)` yields
    (push, image) pairs meaning: the image box's filler must be push(filler
    of b).  Returns a total assignment, None when every choice fails, and
    raises BudgetExhausted when the step budget runs out.
    """
    domains = {b: fillers_of(b) for b in items}
    if any(not d for d in domains.values()):
        return None
    domain_sets = {b: set(d) for b, d in domains.items()}
    assignment: dict = {}
    steps = 0

    def propagate(start, trail) -> bool:
        queue = [start]
        while queue:
            src = queue.pop()
            value = assignment[src]
            for push, img in out_edges(src):
                forced = push(value)
                if img in assignment:
                    if assignment[img] != forced:
                        return False
                else:
                    if forced not in domain_sets[img]:
                        return False
                    assignment[img] = forced
                    trail.append(img)
                    queue.append(img)
        return True

    def solve(idx: int) -> bool:
        nonlocal steps
        while idx < len(items) and items[idx] in assignment:
            idx += 1
        if idx == len(items):
            return True
        b = items[idx]
        for c in domains[b]:
            steps += 1
            if steps > budget:
                raise BudgetExhausted(f"uniform filling search exceeded {budget} steps")
            assignment[b] = c
            trail = [b]
            if propagate(b, trail) and solve(idx + 1):
                return True
            for x in trail:
                del assignment[x]
        return False

    return dict(assignment) if solve(0) else None


def synthesize_uniform(X: FiniteCubicalSet, budget: int = 10**6) -> Optional[FillingTable]:
    """Search for a table passing both the section property and uniformity.

    Returns None when provably no uniform table exists (some box has no
    filler, or all filler choices conflict); raises BudgetExhausted when the
    step budget runs out first.
    """
    boxes: list[AlgBox] = []
    for shape in canonical_shapes(X.bound):
        boxes.extend(enumerate_boxes(X, shape))
    boxes.sort(key=lambda b: (len(b.shape.extra), str(b)))

    edge_cache: dict[AlgBox, list] = {}

    def out_edges(b: AlgBox):
        cached = edge_cache.get(b)
        if cached is None:
            shape = b.shape
            full = shape.included | {shape.filling}
            cached = []
            for h in extra_actions(shape, X.bound):
                aug_table = X.action_table(augment(full, h))
                cached.append((aug_table.__getitem__, box_action(X, h, b)))
            edge_cache[b] = cached
        return cached

    assignment = _search_uniform(
        boxes, lambda b: fillers(X, b.shape, b), out_edges, budget
    )
    return None if assignment is None else FillingTable(X, assignment)


# ---------------------------------------------------------------------------
# the closed-form codiscrete filler

def codiscrete_filler(objects: Iterable[str], shape: BoxShape, b: AlgBox) -> CubeId:
    """Fill a box of a codiscrete nerve by corner copying.

    With included dimensions, every corner of the would-be cube lies on an
    included face and copies its value there (adjacency makes the choice of
    face immaterial).  With none, the starting face extends degenerately
    along the filling dimension.
    """
    labels = sorted({str(o) for o in objects})
    dims = shape.dims
    names = dims.names
    n = len(names)
    k = n - 1
    decoded = {
        f: decode_assignment(c, k) for f, c in b.faces
    }
    report = _corner_adjacency(shape, decoded)
    if report is not None:
        raise AdjacencyViolation(report)
    fill_pos = names.index(shape.filling)
    included_pos = [(names.index(d), d) for d in shape.included]
    values = []
    for v in corners(n):
        if included_pos:
            pos, d = included_pos[0]
            face_vals = decoded[FaceLabel(d, ONE if v[pos] else ZERO)]
            values.append(face_vals[corner_index(v[:pos] + v[pos + 1:])])
        else:
            start = decoded[FaceLabel(shape.filling, shape.polarity.start)]
            values.append(start[corner_index(v[:fill_pos] + v[fill_pos + 1:])])
    for value in values:
        if value not in labels:
            raise ValidationError(f"face value {value!r} is not one of the objects")
    return encode_assignment(values)


def _corner_adjacency(shape: BoxShape, decoded) -> Optional[str]:
    """Adjacency for corner assignments, checked directly on shared corners."""
    names = shape.dims.names
    labels = afm(shape)
    for a, f1 in enumerate(labels):
        for f2 in labels[a + 1:]:
            if f1.dim == f2.dim:
                continue
            rest1 = [x for x in names if x != f1.dim]
            rest2 = [x for x in names if x != f2.dim]
            for v in corners(len(names) - 2):
                corner = dict(zip([x for x in names if x not in (f1.dim, f2.dim)], v))
                corner[f1.dim] = 1 if f1.end is ONE else 0
                corner[f2.dim] = 1 if f2.end is ONE else 0
                c1 = decoded[f1][corner_index(tuple(corner[x] for x in rest1))]
                c2 = decoded[f2][corner_index(tuple(corner[x] for x in rest2))]
                if c1 != c2:
                    return (
                        f"adjacency ({f1}, {f2}): corner values disagree, {c1} != {c2}"
                    )
    return None


def codiscrete_filler_table(X: FiniteCubicalSet) -> FillingTable:
    """The corner-copy filler on every box of every shape within the bound.

    X must be a codiscrete nerve; its points are the object labels.
    """
    objects = X.carrier(0)
    entries = {}
    for shape in canonical_shapes(X.bound):
        for b in enumerate_boxes(X, shape):
            entries[b] = codiscrete_filler(objects, shape, b)
    return FillingTable(X, entries)


# ---------------------------------------------------------------------------
# the geometric side of a filling table

@dataclass(frozen=True)
class LiftingViolation:
    box: AlgBox
    message: str

    def __str__(self) -> str:
        return f"lifting at {self.box}: {self.message}"


def filling_to_geometric(
    X: FiniteCubicalSet, table: FillingTable
) -> dict[AlgBox, tuple[GeomBox, GeometricCube]]:
    """Realize every box and take the full aspect table of its filler."""
    out = {}
    for b in table.boxes():
        beta = realize(X, b)
        kappa = geometric_of_algebraic(X, b.shape.dims, table[b])
        out[b] = (beta, kappa)
    return out


def geometric_to_filling(
    X: FiniteCubicalSet, geometric: Mapping[AlgBox, tuple[GeomBox, GeometricCube]]
) -> FillingTable:
    """Convert back: nerve each box, identity-aspect each cube."""
    entries = {}
    for _, (beta, kappa) in sorted(geometric.items(), key=lambda e: str(e[0])):
        entries[nerve(beta)] = algebraic_of_geometric(kappa)
    return FillingTable(X, entries)


def _cube_precompose(X: FiniteCubicalSet, kappa: GeometricCube, aug: CubeMorphism) -> GeometricCube:
    """The aspect table of kappa reindexed along aug (new shape = cod(aug))."""
    table = {
        k: {
            m: kappa.value(compose(aug, m))
            for m in enumerate_morphisms(aug.cod, canonical_dims(k))
        }
        for k in range(X.bound + 1)
    }
    return GeometricCube(X, aug.cod, table)


def check_geometric_lifting(
    X: FiniteCubicalSet, geometric: Mapping[AlgBox, tuple[GeomBox, GeometricCube]]
) -> Report:
    """The lifting squares, in co-sieve form.

    Restriction: each filler's aspect table restricts to its box on every
    co-sieve member.  Uniformity: reindexing the filler along an extra-
    dimension action gives the filler of the acted box.
    """
    violations = []
    by_box = dict(geometric)
    for b, (beta, kappa) in sorted(by_box.items(), key=lambda e: str(e[0])):
        for k in range(X.bound + 1):
            for m in sieve_members(b.shape, canonical_dims(k)):
                if kappa.value(m) != beta.value(m):
                    violations.append(
                        LiftingViolation(
                            b, f"restriction along {m}: {kappa.value(m)} != {beta.value(m)}"
                        )
                    )
        shape = b.shape
        full = shape.included | {shape.filling}
        for h in extra_actions(shape, X.bound):
            acted = box_action(X, h, nerve(beta))
            if acted not in by_box:
                violations.append(LiftingViolation(b, f"acted box along {h} not covered"))
                continue
            kappa_acted = by_box[acted][1]
            expected = _cube_precompose(X, kappa, augment(full, h))
            if kappa_acted != expected:
                violations.append(
                    LiftingViolation(b, f"reindexed filler along {h} differs from the chosen one")
                )
    return Report(tuple(violations))
