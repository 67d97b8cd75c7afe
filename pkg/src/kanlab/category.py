"""The category of named cubes.

Objects are finite sets of dimension names.  A morphism assigns to every
name of its domain either a name of its codomain or one of the two interval
end points, injectively on the name part.  Composition is Kleisli-style:
end points are absorbed, names are chased.

Every morphism factors uniquely into end-point specializations, followed by
a bijective renaming, followed by inclusions of the leftover codomain names
(`canonical_form` / `recompose`).  Face maps that touch distinct dimensions
commute; `reconcilable` searches for common-composite witnesses up to a
dimension bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, Optional, Union

from .errors import DimensionOverflow, DomainMismatch, NameClash


class EndPoint(Enum):
    """The two ends of the abstract interval."""

    ZERO = "0"
    ONE = "1"

    def flip(self) -> "EndPoint":
        return EndPoint.ONE if self is EndPoint.ZERO else EndPoint.ZERO

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"EndPoint.{self.name}"


ZERO = EndPoint.ZERO
ONE = EndPoint.ONE

# What a domain name may be sent to.
Target = Union[str, EndPoint]


def _checked_name(name: object) -> str:
    if not isinstance(name, str) or not name.isidentifier():
        raise NameClash(f"dimension names must be identifier strings, got {name!r}")
    return name


class DimSet:
    """An immutable set of dimension names, iterated in sorted order."""

    __slots__ = ("_names",)

    def __init__(self, names: Iterable[str] = ()):
        self._names = tuple(sorted({_checked_name(n) for n in names}))

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    def __iter__(self) -> Iterator[str]:
        return iter(self._names)

    def __len__(self) -> int:
        return len(self._names)

    def __contains__(self, name: object) -> bool:
        return name in self._names

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DimSet) and self._names == other._names

    def __hash__(self) -> int:
        return hash(self._names)

    def __or__(self, other: "DimSet | Iterable[str]") -> "DimSet":
        return DimSet((*self._names, *other))

    def __sub__(self, other: "DimSet | Iterable[str]") -> "DimSet":
        drop = set(other)
        return DimSet(n for n in self._names if n not in drop)

    def __le__(self, other: "DimSet") -> bool:
        return set(self._names) <= set(other._names)

    def isdisjoint(self, other: "DimSet | Iterable[str]") -> bool:
        return set(self._names).isdisjoint(other)

    def position(self, name: str) -> int:
        """1-based rank of `name` in sort order."""
        return self._names.index(name) + 1

    def __repr__(self) -> str:
        return "{" + ",".join(self._names) + "}"


EMPTY = DimSet()


def canonical_dims(n: int) -> DimSet:
    """The canonical n-element name set d1 < d2 < ... < dn."""
    if not 0 <= n <= 9:
        raise DimensionOverflow(f"canonical name sets support sizes 0..9, got {n}")
    return DimSet(f"d{i}" for i in range(1, n + 1))


def _fmt_target(v: Target) -> str:
    return str(v)


@dataclass(frozen=True)
class CubeMorphism:
    """A function from dom into cod-plus-end-points, injective on names."""

    dom: DimSet
    cod: DimSet
    mapping: tuple[tuple[str, Target], ...]

    def __post_init__(self):
        items = tuple(sorted(dict(self.mapping).items()))
        object.__setattr__(self, "mapping", items)
        assignments = dict(items)
        if tuple(sorted(assignments)) != self.dom.names:
            raise DomainMismatch(
                f"mapping keys {sorted(assignments)} do not cover dom {self.dom}"
            )
        hits = []
        for x, v in items:
            if isinstance(v, EndPoint):
                continue
            if v not in self.cod:
                raise DomainMismatch(f"{x} is sent to {v!r}, which is not in cod {self.cod}")
            hits.append(v)
        if len(hits) != len(set(hits)):
            raise NameClash(f"not injective on names: {items}")
        object.__setattr__(self, "_map", assignments)

    def __call__(self, name: str) -> Target:
        return self._map[name]

    @property
    def as_dict(self) -> dict[str, Target]:
        return dict(self.mapping)

    def is_identity(self) -> bool:
        return self.dom == self.cod and all(v == x for x, v in self.mapping)

    def is_renaming(self) -> bool:
        """Bijective and end-point free."""
        return len(self.dom) == len(self.cod) and all(
            isinstance(v, str) for _, v in self.mapping
        )

    def __str__(self) -> str:
        body = ",".join(f"{x}>{_fmt_target(v)}" for x, v in self.mapping)
        return f"[{body}]:{self.dom}->{self.cod}"


def morphism(dom: DimSet, cod: DimSet, assignment: Mapping[str, Target]) -> CubeMorphism:
    return CubeMorphism(dom, cod, tuple(assignment.items()))


def identity(I: DimSet) -> CubeMorphism:
    return morphism(I, I, {x: x for x in I})


def compose(f: CubeMorphism, g: CubeMorphism) -> CubeMorphism:
    """Diagrammatic composite: first f, then g.  End points pass through."""
    if f.cod != g.dom:
        raise DomainMismatch(f"cod {f.cod} of the first factor != dom {g.dom} of the second")
    values = {
        x: (v if isinstance(v, EndPoint) else g(v)) for x, v in f.mapping
    }
    return morphism(f.dom, g.cod, values)


def face(I: DimSet, x: str, b: EndPoint) -> CubeMorphism:
    """Specialize the fresh dimension x to the end point b: I+{x} -> I."""
    if x in I:
        raise NameClash(f"face dimension {x} already in {I}")
    values: dict[str, Target] = {y: y for y in I}
    values[x] = b
    return morphism(I | {x}, I, values)


def inclusion(I: DimSet, x: str) -> CubeMorphism:
    """Degeneracy: I -> I+{x} for fresh x."""
    if x in I:
        raise NameClash(f"inclusion dimension {x} already in {I}")
    return morphism(I, I | {x}, {y: y for y in I})


def swap(I: DimSet, x: str, y: str) -> CubeMorphism:
    """Exchange the fresh dimensions x and y over I."""
    if x == y:
        raise NameClash(f"cannot exchange {x} with itself")
    if x in I or y in I:
        raise NameClash(f"exchange dimensions {x},{y} must be fresh for {I}")
    values: dict[str, Target] = {z: z for z in I}
    values[x], values[y] = y, x
    return morphism(I | {x, y}, I | {x, y}, values)


def extend(f: CubeMorphism, x: str, y: str) -> CubeMorphism:
    """Extend f: I -> J to I+{x} -> J+{y} by sending x to y."""
    if x in f.dom:
        raise NameClash(f"{x} already in dom {f.dom}")
    if y in f.cod:
        raise NameClash(f"{y} already in cod {f.cod}")
    values = dict(f.mapping)
    values[x] = y
    return morphism(f.dom | {x}, f.cod | {y}, values)


def augment(I: DimSet, h: CubeMorphism) -> CubeMorphism:
    """Act as h on dom(h) and as the identity on the disjoint set I."""
    if not I.isdisjoint(h.dom) or not I.isdisjoint(h.cod):
        raise NameClash(f"{I} is not disjoint from {h.dom} and {h.cod}")
    values: dict[str, Target] = {x: x for x in I}
    values.update(h.as_dict)
    return morphism(I | h.dom, I | h.cod, values)


def ordered_renaming(I: DimSet, J: DimSet) -> CubeMorphism:
    """The order-preserving bijection I -> J (sizes must agree)."""
    if len(I) != len(J):
        raise DomainMismatch(f"no order-preserving bijection {I} -> {J}")
    return morphism(I, J, dict(zip(I.names, J.names)))


@dataclass(frozen=True)
class FaceLabel:
    """A face map named by its dimension and end, polymorphic in the ambient set."""

    dim: str
    end: EndPoint

    def sort_key(self) -> tuple[str, str]:
        return (self.dim, self.end.value)

    def __str__(self) -> str:
        return f"{self.dim}@{self.end}"


def face_instance(label: FaceLabel, dom: DimSet) -> CubeMorphism:
    """The instance of a polymorphic face map out of the ambient set dom."""
    if label.dim not in dom:
        raise DomainMismatch(f"face dimension {label.dim} not in {dom}")
    return face(dom - {label.dim}, label.dim, label.end)


def orthogonal(f1: FaceLabel, f2: FaceLabel) -> bool:
    """Faces on distinct dimensions commute; faces on the same one do not."""
    return f1.dim != f2.dim


@dataclass(frozen=True)
class CanonicalForm:
    """Specializations, then a bijective renaming, then inclusions.

    The domain is the disjoint union of the specialization and renaming
    keys; the codomain is the renaming image plus the inclusions.
    """

    specializations: tuple[tuple[str, EndPoint], ...]
    renaming: tuple[tuple[str, str], ...]
    inclusions: DimSet

    @property
    def dom(self) -> DimSet:
        return DimSet(x for x, _ in self.specializations) | DimSet(x for x, _ in self.renaming)

    @property
    def cod(self) -> DimSet:
        return DimSet(v for _, v in self.renaming) | self.inclusions


def canonical_form(f: CubeMorphism) -> CanonicalForm:
    specs = []
    renames = []
    for x, v in f.mapping:
        if isinstance(v, EndPoint):
            specs.append((x, v))
        else:
            renames.append((x, v))
    hit = DimSet(v for _, v in renames)
    return CanonicalForm(tuple(specs), tuple(renames), f.cod - hit)


def recompose(cf: CanonicalForm) -> CubeMorphism:
    """Re-multiply the three blocks; inverse of `canonical_form`."""
    cur = cf.dom
    result = identity(cur)
    for x, b in cf.specializations:
        result = compose(result, face(cur - {x}, x, b))
        cur = cur - {x}
    image = DimSet(v for _, v in cf.renaming)
    result = compose(result, morphism(cur, image, dict(cf.renaming)))
    cur = image
    for x in cf.inclusions:
        result = compose(result, inclusion(cur, x))
        cur = cur | {x}
    return result


@lru_cache(maxsize=None)
def _enumerate_morphisms(I: DimSet, J: DimSet) -> tuple[CubeMorphism, ...]:
    alternatives: list[Target] = list(J.names) + [ZERO, ONE]
    out = []
    for choice in product(alternatives, repeat=len(I)):
        hits = [v for v in choice if isinstance(v, str)]
        if len(hits) != len(set(hits)):
            continue
        out.append(CubeMorphism(I, J, tuple(zip(I.names, choice))))
    return tuple(out)


def enumerate_morphisms(I: DimSet, J: DimSet) -> list[CubeMorphism]:
    """All morphisms I -> J, lexicographic in (sorted dom, cod names then 0 then 1)."""
    return list(_enumerate_morphisms(I, J))


def reconciliations(
    f1: CubeMorphism, f2: CubeMorphism, bound: int
) -> Iterator[tuple[CubeMorphism, CubeMorphism]]:
    """All witness pairs (g1, g2) with f1;g1 = f2;g2 into canonical sets of size <= bound.

    Witnesses into arbitrarily-named sets transfer along the renaming
    bijection, so canonical codomains are exhaustive up to that renaming.
    """
    if f1.dom != f2.dom:
        raise DomainMismatch(f"reconcilable needs a common domain, got {f1.dom} and {f2.dom}")
    for k in range(bound + 1):
        K = canonical_dims(k)
        g2s = enumerate_morphisms(f2.cod, K)
        for g1 in enumerate_morphisms(f1.cod, K):
            left = compose(f1, g1)
            for g2 in g2s:
                if left == compose(f2, g2):
                    yield g1, g2


def reconcilable(
    f1: CubeMorphism, f2: CubeMorphism, bound: int
) -> Optional[tuple[CubeMorphism, CubeMorphism]]:
    """The first reconciling pair within the bound, or None."""
    return next(reconciliations(f1, f2, bound), None)
