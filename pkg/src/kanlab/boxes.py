"""Open boxes: shapes, applicable faces, co-sieves, and the two box forms.

A box shape has included dimensions (both faces present), extra dimensions
(no faces present), one filling dimension (one face present, at the end
named by the polarity), and a polarity.  The applicable face maps `afm` are
the faces a complete cube of that shape would have on the included and
filling dimensions.

An algebraic box is a family of cubes indexed by the applicable faces,
pairwise compatible on orthogonal faces (`check_adjacency`).  A geometric
box is a natural table from the box co-sieve — the post-composition closure
of the applicable face instances — into a cubical set.  `nerve` and
`realize` convert between the two and are mutually inverse.

The bound constrains what each operation touches: adjacency, nerve and
realization only need the face codomains within the bound, so a shape may
have one more total dimension than the bound; filling-related operations
(`box_projection` and everything in `kan`) need the full box dimensions
within the bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .category import (
    CubeMorphism,
    DimSet,
    EndPoint,
    FaceLabel,
    ONE,
    ZERO,
    augment,
    canonical_dims,
    compose,
    enumerate_morphisms,
    face_instance,
    ordered_renaming,
    orthogonal,
    reconciliations,
)
from .cubical import CubeId, FiniteCubicalSet, GeometricCube
from .errors import (
    AdjacencyViolation,
    DimensionOverflow,
    DomainMismatch,
    NameClash,
    ShapeMismatch,
    UnknownCube,
)
from .report import Report


class Polarity(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"

    @property
    def start(self) -> EndPoint:
        """The end of the filling dimension that carries the starting face."""
        return ZERO if self is Polarity.POSITIVE else ONE

    def flip(self) -> "Polarity":
        return Polarity.NEGATIVE if self is Polarity.POSITIVE else Polarity.POSITIVE

    def __str__(self) -> str:
        return self.value


POSITIVE = Polarity.POSITIVE
NEGATIVE = Polarity.NEGATIVE


@dataclass(frozen=True)
class BoxShape:
    included: DimSet
    extra: DimSet
    filling: str
    polarity: Polarity

    def __post_init__(self):
        if (
            not self.included.isdisjoint(self.extra)
            or self.filling in self.included
            or self.filling in self.extra
        ):
            raise NameClash(
                f"included {self.included}, extra {self.extra} and filling "
                f"{self.filling!r} must be pairwise disjoint"
            )

    @property
    def dims(self) -> DimSet:
        return self.included | self.extra | {self.filling}

    def with_extra(self, extra: DimSet) -> "BoxShape":
        return BoxShape(self.included, extra, self.filling, self.polarity)

    def __str__(self) -> str:
        return f"({self.included};{self.extra};{self.filling};{self.polarity})"


def afm(shape: BoxShape) -> tuple[FaceLabel, ...]:
    """The applicable face maps: both ends of each included dim plus the start."""
    labels = [FaceLabel(d, b) for d in shape.included for b in (ZERO, ONE)]
    labels.append(FaceLabel(shape.filling, shape.polarity.start))
    return tuple(sorted(labels, key=FaceLabel.sort_key))


def face_codomain(shape: BoxShape, label: FaceLabel) -> DimSet:
    return shape.dims - {label.dim}


def sieve_member(shape: BoxShape, m: CubeMorphism) -> bool:
    """Membership in the box co-sieve.

    m factors through the instance of an applicable face exactly when it
    sends that face's dimension to the face's end point.
    """
    if m.dom != shape.dims:
        return False
    return any(m(f.dim) == f.end for f in afm(shape))


@lru_cache(maxsize=None)
def _sieve_members(shape: BoxShape, K: DimSet) -> tuple[CubeMorphism, ...]:
    return tuple(m for m in enumerate_morphisms(shape.dims, K) if sieve_member(shape, m))


def sieve_members(shape: BoxShape, K: DimSet) -> list[CubeMorphism]:
    """All co-sieve members into K, in enumeration order."""
    return list(_sieve_members(shape, K))


FaceFamily = Mapping[FaceLabel, CubeId]


@dataclass(frozen=True)
class AlgBox:
    """A box shape plus one cube per applicable face."""

    shape: BoxShape
    faces: tuple[tuple[FaceLabel, CubeId], ...]

    def __post_init__(self):
        items = tuple(sorted(dict(self.faces).items(), key=lambda e: e[0].sort_key()))
        object.__setattr__(self, "faces", items)
        if tuple(l for l, _ in items) != afm(self.shape):
            raise ShapeMismatch(
                f"face family keys {[str(l) for l, _ in items]} != applicable faces "
                f"{[str(l) for l in afm(self.shape)]}"
            )
        object.__setattr__(self, "_faces", dict(items))

    def face(self, label: FaceLabel) -> CubeId:
        return self._faces[label]

    @property
    def faces_map(self) -> dict[FaceLabel, CubeId]:
        return dict(self.faces)

    def __str__(self) -> str:
        body = ",".join(f"{l}:{c}" for l, c in self.faces)
        return f"Box{self.shape}[{body}]"


def algebraic_box(shape: BoxShape, faces: FaceFamily) -> AlgBox:
    return AlgBox(shape, tuple(faces.items()))


def _faces_of(faces: "AlgBox | FaceFamily") -> dict[FaceLabel, CubeId]:
    return faces.faces_map if isinstance(faces, AlgBox) else dict(faces)


def _validate_family(X: FiniteCubicalSet, shape: BoxShape, faces: dict[FaceLabel, CubeId]):
    labels = afm(shape)
    if set(faces) != set(labels):
        raise ShapeMismatch(
            f"face family keys {sorted(str(l) for l in faces)} != applicable faces "
            f"{[str(l) for l in labels]}"
        )
    k = len(shape.dims) - 1
    if k > X.bound:
        raise DimensionOverflow(f"faces live at dimension {k}, above bound {X.bound}")
    for l in labels:
        if faces[l] not in X.carrier(k):
            raise UnknownCube(f"face {l} value {faces[l]!r} is not a dimension-{k} cube")


@dataclass(frozen=True)
class AdjacencyViolationEntry:
    f1: FaceLabel
    f2: FaceLabel
    left: CubeId
    right: CubeId

    def __str__(self) -> str:
        return (
            f"adjacency ({self.f1}, {self.f2}): aspects disagree, "
            f"{self.left} != {self.right}"
        )


def check_adjacency(X: FiniteCubicalSet, shape: BoxShape, faces: "AlgBox | FaceFamily") -> Report:
    """Pairwise compatibility of the family on orthogonal face pairs."""
    family = _faces_of(faces)
    _validate_family(X, shape, family)
    labels = afm(shape)
    violations = []
    for a, f1 in enumerate(labels):
        for f2 in labels[a + 1:]:
            if not orthogonal(f1, f2):
                continue
            left = X.action(face_instance(f2, face_codomain(shape, f1)), family[f1])
            right = X.action(face_instance(f1, face_codomain(shape, f2)), family[f2])
            if left != right:
                violations.append(AdjacencyViolationEntry(f1, f2, left, right))
    return Report(tuple(violations))


@dataclass(frozen=True)
class CoherenceViolationEntry:
    f1: FaceLabel
    f2: FaceLabel
    g1: CubeMorphism
    g2: CubeMorphism
    left: CubeId
    right: CubeId

    def __str__(self) -> str:
        return (
            f"coherence ({self.f1}, {self.f2}) reconciled by {self.g1} and {self.g2}: "
            f"{self.left} != {self.right}"
        )


def _reconciliation_pairs(shape: BoxShape, bound: int):
    """All (f1, f2, g1, g2) with f1;g1 = f2;g2, f's applicable, within bound."""
    labels = afm(shape)
    dims = shape.dims
    out = []
    for a, f1 in enumerate(labels):
        for f2 in labels[a:]:
            i1 = face_instance(f1, dims)
            i2 = face_instance(f2, dims)
            for g1, g2 in reconciliations(i1, i2, bound):
                out.append((f1, f2, g1, g2))
    return out


_RECONCILIATION_CACHE: dict[tuple[BoxShape, int], list] = {}


def check_naive_coherence(
    X: FiniteCubicalSet, shape: BoxShape, faces: "AlgBox | FaceFamily"
) -> Report:
    """The unrestricted compatibility condition, over all reconciling pairs.

    Quantifies over every pair of applicable faces and every witness pair
    of morphisms equalizing their instances into canonical sets within the
    bound.  Equivalent to `check_adjacency`; kept as an independent route.
    """
    family = _faces_of(faces)
    _validate_family(X, shape, family)
    key = (shape, X.bound)
    pairs = _RECONCILIATION_CACHE.get(key)
    if pairs is None:
        pairs = _reconciliation_pairs(shape, X.bound)
        _RECONCILIATION_CACHE[key] = pairs
    violations = []
    for f1, f2, g1, g2 in pairs:
        left = X.action_table(g1)[family[f1]]
        right = X.action_table(g2)[family[f2]]
        if left != right:
            violations.append(CoherenceViolationEntry(f1, f2, g1, g2, left, right))
    return Report(tuple(violations))


# ---------------------------------------------------------------------------
# geometric boxes

class GeomBox:
    """A natural table from the box co-sieve into a cubical set.

    Stored at canonical codomains; see `GeometricCube` for the convention.
    """

    __slots__ = ("base", "shape", "table")

    def __init__(
        self,
        base: FiniteCubicalSet,
        shape: BoxShape,
        table: Mapping[int, Mapping[CubeMorphism, CubeId]],
    ):
        self.base = base
        self.shape = shape
        self.table = {k: dict(t) for k, t in table.items()}

    def value(self, m: CubeMorphism) -> CubeId:
        k = len(m.cod)
        canon = canonical_dims(k)
        if m.cod == canon:
            return self.table[k][m]
        return self.table[k][compose(m, ordered_renaming(m.cod, canon))]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GeomBox)
            and self.shape == other.shape
            and self.table == other.table
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GeomBox(shape={self.shape})"


@dataclass(frozen=True)
class GeomBoxViolation:
    message: str

    def __str__(self) -> str:
        return self.message


def check_geom_box(beta: GeomBox) -> Report:
    """Key-set exactness and naturality of a geometric box table."""
    X = beta.base
    violations = []
    for k in range(X.bound + 1):
        expected = sieve_members(beta.shape, canonical_dims(k))
        if set(beta.table.get(k, ())) != set(expected):
            violations.append(
                GeomBoxViolation(f"co-sieve table at dimension {k} has the wrong key set")
            )
    if violations:
        return Report(tuple(violations))
    for k in sorted(beta.table):
        for m, c in sorted(beta.table[k].items(), key=lambda e: str(e[0])):
            for k2 in range(X.bound + 1):
                for g in enumerate_morphisms(canonical_dims(k), canonical_dims(k2)):
                    if beta.value(compose(m, g)) != X.action(g, c):
                        violations.append(
                            GeomBoxViolation(
                                f"naturality fails at {m} ; {g}: table value "
                                f"{beta.value(compose(m, g))} != action value {X.action(g, c)}"
                            )
                        )
    return Report(tuple(violations))


def nerve(beta: GeomBox) -> AlgBox:
    """Read off the family of cubes at the applicable face instances."""
    family = {
        f: beta.value(face_instance(f, beta.shape.dims)) for f in afm(beta.shape)
    }
    return algebraic_box(beta.shape, family)


def realize(X: FiniteCubicalSet, b: AlgBox) -> GeomBox:
    """Extend a face family to the whole co-sieve along factorizations.

    Adjacency makes the value independent of the chosen factorization; the
    family must pass `check_adjacency`.
    """
    report = check_adjacency(X, b.shape, b)
    if not report.ok:
        raise AdjacencyViolation(str(report.first()))
    labels = afm(b.shape)
    dims = b.shape.dims
    table: dict[int, dict[CubeMorphism, CubeId]] = {}
    for k in range(X.bound + 1):
        entries = {}
        for m in sieve_members(b.shape, canonical_dims(k)):
            f = next(l for l in labels if m(l.dim) == l.end)
            rest = morphism_drop(m, f.dim)
            entries[m] = X.action_table(rest)[b.face(f)]
        table[k] = entries
    return GeomBox(X, b.shape, table)


def morphism_drop(m: CubeMorphism, dim: str) -> CubeMorphism:
    """Remove one domain dimension from a morphism (its residual factor)."""
    values = {x: v for x, v in m.mapping if x != dim}
    return CubeMorphism(m.dom - {dim}, m.cod, tuple(values.items()))


def box_projection(X: FiniteCubicalSet, shape: BoxShape, c: CubeId) -> AlgBox:
    """Restrict a complete cube to the applicable faces of the shape."""
    n = len(shape.dims)
    if n > X.bound:
        raise DimensionOverflow(f"box dimensions {n} above bound {X.bound}")
    if c not in X.carrier(n):
        raise UnknownCube(f"{c!r} is not a dimension-{n} cube")
    family = {f: X.action(face_instance(f, shape.dims), c) for f in afm(shape)}
    return algebraic_box(shape, family)


def box_action(X: FiniteCubicalSet, h: CubeMorphism, b: AlgBox) -> AlgBox:
    """Functorial action on the extra dimensions: map h over every face."""
    shape = b.shape
    if h.dom != shape.extra:
        raise DomainMismatch(f"dom {h.dom} of h != extra dimensions {shape.extra}")
    new_shape = shape.with_extra(h.cod)
    family = {}
    for f in afm(shape):
        residual = (shape.included | {shape.filling}) - {f.dim}
        family[f] = X.action(augment(residual, h), b.face(f))
    return algebraic_box(new_shape, family)


def geom_box_action(X: FiniteCubicalSet, h: CubeMorphism, beta: GeomBox) -> GeomBox:
    """The co-sieve form of `box_action`: precompose with the augmentation."""
    shape = beta.shape
    if h.dom != shape.extra:
        raise DomainMismatch(f"dom {h.dom} of h != extra dimensions {shape.extra}")
    new_shape = shape.with_extra(h.cod)
    aug = augment(shape.included | {shape.filling}, h)
    table = {
        k: {
            m: beta.value(compose(aug, m))
            for m in sieve_members(new_shape, canonical_dims(k))
        }
        for k in range(X.bound + 1)
    }
    return GeomBox(X, new_shape, table)


# ---------------------------------------------------------------------------
# enumeration

def canonical_shape(n_included: int, n_extra: int, polarity: Polarity) -> BoxShape:
    """The representative shape with names x1.. / z1.. / y."""
    if n_included > 9 or n_extra > 9:
        raise DimensionOverflow("shapes with more than 9 included or extra dims unsupported")
    return BoxShape(
        DimSet(f"x{i}" for i in range(1, n_included + 1)),
        DimSet(f"z{i}" for i in range(1, n_extra + 1)),
        "y",
        polarity,
    )


def canonical_extra_dims(n: int) -> DimSet:
    if n > 9:
        raise DimensionOverflow("extra dimension sets above size 9 unsupported")
    return DimSet(f"z{i}" for i in range(1, n + 1))


def canonical_shapes(
    max_total_dims: int, polarities: Iterable[Polarity] = (POSITIVE, NEGATIVE)
) -> Iterator[BoxShape]:
    """All representative shapes with |included| + |extra| + 1 <= max_total_dims."""
    for total in range(1, max_total_dims + 1):
        for n_included in range(total):
            n_extra = total - 1 - n_included
            for polarity in polarities:
                yield canonical_shape(n_included, n_extra, polarity)


def enumerate_boxes(X: FiniteCubicalSet, shape: BoxShape) -> list[AlgBox]:
    """All adjacency-satisfying face families, by incremental search."""
    labels = afm(shape)
    k = len(shape.dims) - 1
    if k > X.bound:
        raise DimensionOverflow(f"faces live at dimension {k}, above bound {X.bound}")
    carrier = X.carrier(k)
    out: list[AlgBox] = []
    chosen: dict[FaceLabel, CubeId] = {}

    def compatible(f2: FaceLabel, c2: CubeId) -> bool:
        for f1, c1 in chosen.items():
            if not orthogonal(f1, f2):
                continue
            left = X.action(face_instance(f2, face_codomain(shape, f1)), c1)
            right = X.action(face_instance(f1, face_codomain(shape, f2)), c2)
            if left != right:
                return False
        return True

    def extend_family(idx: int) -> None:
        if idx == len(labels):
            out.append(algebraic_box(shape, chosen))
            return
        label = labels[idx]
        for c in carrier:
            if compatible(label, c):
                chosen[label] = c
                extend_family(idx + 1)
                del chosen[label]

    extend_family(0)
    return out
