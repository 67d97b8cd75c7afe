"""Dimension-truncated cubical sets as explicit finite data.

A `FiniteCubicalSet` stores, for each dimension 0..bound, a carrier of cube
identifiers at the canonical name set d1 < ... < dn, plus action tables for
the generating morphisms:

* face (n, i, b): specialize d_i to the end point b, then rename the
  survivors order-preservingly back onto d1..d(n-1);
* swap (n, i): exchange d_i and d_(i+1);
* degen n: include the next canonical name d_(n+1).

Carriers at arbitrarily-named sets are identified with the canonical one of
the same size by the order-preserving renaming, so the action of any
morphism is computed by decomposing it into generators through that
identification.  The action of an order-preserving renaming is therefore
the identity on identifiers.

Two concrete cubical sets are provided.  `codiscrete_nerve(objects)` has as
n-cubes all assignments of the 2^n cube corners to the object set; its
identifiers spell out the corner values in lexicographic corner order,
joined by commas.  `minimal_interval()` is the smallest interval candidate:
the sub-presheaf of `codiscrete_nerve({0,1})` holding exactly the constant
assignments and single-coordinate projections.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .category import (
    CanonicalForm,
    CubeMorphism,
    DimSet,
    EndPoint,
    ONE,
    ZERO,
    canonical_dims,
    canonical_form,
    compose,
    enumerate_morphisms,
    identity,
    morphism,
    ordered_renaming,
)
from .errors import DimensionOverflow, UnknownCube, ValidationError
from .report import Report

CubeId = str


# ---------------------------------------------------------------------------
# generator morphisms between canonical name sets

def canonical_face(n: int, i: int, b: EndPoint) -> CubeMorphism:
    """d_i specialized to b, survivors renamed onto d1..d(n-1)."""
    dom = canonical_dims(n)
    cod = canonical_dims(n - 1)
    values: dict[str, object] = {}
    for j in range(1, n + 1):
        if j == i:
            values[f"d{j}"] = b
        elif j < i:
            values[f"d{j}"] = f"d{j}"
        else:
            values[f"d{j}"] = f"d{j - 1}"
    return morphism(dom, cod, values)


def canonical_swap(n: int, i: int) -> CubeMorphism:
    """Exchange d_i and d_(i+1) at dimension n."""
    dom = canonical_dims(n)
    values = {f"d{j}": f"d{j}" for j in range(1, n + 1)}
    values[f"d{i}"], values[f"d{i + 1}"] = f"d{i + 1}", f"d{i}"
    return morphism(dom, dom, values)


def canonical_degen(n: int) -> CubeMorphism:
    """Include the next canonical name: d1..dn -> d1..d(n+1)."""
    return morphism(
        canonical_dims(n), canonical_dims(n + 1), {f"d{j}": f"d{j}" for j in range(1, n + 1)}
    )


class FiniteCubicalSet:
    """Carriers plus generator action tables, truncated at `bound`."""

    def __init__(
        self,
        bound: int,
        carriers: Sequence[Iterable[CubeId]],
        faces: Mapping[tuple[int, int, EndPoint], Mapping[CubeId, CubeId]],
        swaps: Mapping[tuple[int, int], Mapping[CubeId, CubeId]],
        degens: Mapping[int, Mapping[CubeId, CubeId]],
    ):
        if bound < 0:
            raise ValidationError("bound must be >= 0")
        if len(carriers) != bound + 1:
            raise ValidationError(f"expected {bound + 1} carriers, got {len(carriers)}")
        self.bound = bound
        self.carriers: tuple[tuple[CubeId, ...], ...] = tuple(
            tuple(sorted(set(c))) for c in carriers
        )
        self._carrier_sets = tuple(frozenset(c) for c in self.carriers)
        self._faces = {k: dict(t) for k, t in faces.items()}
        self._swaps = {k: dict(t) for k, t in swaps.items()}
        self._degens = {k: dict(t) for k, t in degens.items()}
        self._action_memo: dict[CubeMorphism, dict[CubeId, CubeId]] = {}
        # scratch space for memoized derived structure (projection indexes etc.)
        self._derived: dict = {}
        self._validate_tables()

    def _validate_tables(self) -> None:
        def check(table, label, src, tgt):
            if set(table) != self._carrier_sets[src]:
                raise ValidationError(f"{label} is not total on the dimension-{src} carrier")
            for c, v in table.items():
                if v not in self._carrier_sets[tgt]:
                    raise ValidationError(f"{label} sends {c} to {v}, not a dimension-{tgt} cube")

        for n in range(1, self.bound + 1):
            for i in range(1, n + 1):
                for b in (ZERO, ONE):
                    key = (n, i, b)
                    if key not in self._faces:
                        raise ValidationError(f"missing face table {key}")
                    check(self._faces[key], f"face {key}", n, n - 1)
            for i in range(1, n):
                key = (n, i)
                if key not in self._swaps:
                    raise ValidationError(f"missing swap table {key}")
                check(self._swaps[key], f"swap {key}", n, n)
        for n in range(0, self.bound):
            if n not in self._degens:
                raise ValidationError(f"missing degeneracy table {n}")
            check(self._degens[n], f"degeneracy {n}", n, n + 1)

    # -- carriers ----------------------------------------------------------

    def carrier(self, I: "DimSet | int") -> tuple[CubeId, ...]:
        n = I if isinstance(I, int) else len(I)
        if not 0 <= n <= self.bound:
            raise DimensionOverflow(f"dimension {n} above bound {self.bound}")
        return self.carriers[n]

    def has_cube(self, n: int, c: CubeId) -> bool:
        return 0 <= n <= self.bound and c in self._carrier_sets[n]

    # -- generator bookkeeping ---------------------------------------------

    def generator_entries(
        self,
    ) -> list[tuple[tuple, CubeMorphism, dict[CubeId, CubeId]]]:
        """(key, morphism, table) for every generator, in a fixed order.

        Keys are ("face", n, i, b), ("swap", n, i) and ("degen", n).
        """
        out = []
        for n in range(1, self.bound + 1):
            for i in range(1, n + 1):
                for b in (ZERO, ONE):
                    out.append(
                        (("face", n, i, b), canonical_face(n, i, b), self._faces[(n, i, b)])
                    )
            for i in range(1, n):
                out.append((("swap", n, i), canonical_swap(n, i), self._swaps[(n, i)]))
        for n in range(0, self.bound):
            out.append((("degen", n), canonical_degen(n), self._degens[n]))
        return out

    def generators(self) -> list[tuple[CubeMorphism, dict[CubeId, CubeId]]]:
        """All generator morphisms with their tables, in a fixed order."""
        return [(g, table) for _, g, table in self.generator_entries()]

    # -- the functorial action ---------------------------------------------

    def action(self, f: CubeMorphism, c: CubeId) -> CubeId:
        """Apply f to the cube c by generator decomposition.

        c is read as a cube at dom(f) through the order-preserving renaming
        of dom(f) onto the canonical set of the same size.
        """
        n, m = len(f.dom), len(f.cod)
        if m > self.bound:
            raise DimensionOverflow(f"codomain dimension {m} above bound {self.bound}")
        if n > self.bound or c not in self._carrier_sets[n]:
            raise UnknownCube(f"{c!r} is not a dimension-{n} cube")
        cod_pos = {name: j + 1 for j, name in enumerate(f.cod.names)}
        specs: list[tuple[int, EndPoint]] = []
        targets: list[int] = []
        for r, name in enumerate(f.dom.names, start=1):
            v = f(name)
            if isinstance(v, EndPoint):
                specs.append((r, v))
            else:
                targets.append(cod_pos[v])
        cur = c
        cur_n = n
        # peel specializations from the highest index down, so lower
        # indices are untouched by the re-canonicalization
        for r, b in reversed(specs):
            cur = self._faces[(cur_n, r, b)][cur]
            cur_n -= 1
        s = len(targets)
        for p in range(s, m):
            cur = self._degens[p][cur]
        if m > 1:
            seq = targets + sorted(set(range(1, m + 1)) - set(targets))
            done = False
            while not done:
                done = True
                for j in range(m - 1):
                    if seq[j] > seq[j + 1]:
                        cur = self._swaps[(m, j + 1)][cur]
                        seq[j], seq[j + 1] = seq[j + 1], seq[j]
                        done = False
        return cur

    def action_table(self, f: CubeMorphism) -> dict[CubeId, CubeId]:
        """The action of f on the whole carrier, memoized."""
        table = self._action_memo.get(f)
        if table is None:
            table = {c: self.action(f, c) for c in self.carriers[len(f.dom)]}
            self._action_memo[f] = table
        return table

    # -- equality ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteCubicalSet)
            and self.bound == other.bound
            and self.carriers == other.carriers
            and self._faces == other._faces
            and self._swaps == other._swaps
            and self._degens == other._degens
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        sizes = ",".join(str(len(c)) for c in self.carriers)
        return f"FiniteCubicalSet(bound={self.bound}, sizes=[{sizes}])"


def action(X: FiniteCubicalSet, f: CubeMorphism, c: CubeId) -> CubeId:
    return X.action(f, c)


# ---------------------------------------------------------------------------
# functor-law checking

@dataclass(frozen=True)
class IdentityLawViolation:
    dim: int
    cube: CubeId
    got: CubeId

    def __str__(self) -> str:
        return f"identity at dim {self.dim} moves {self.cube} to {self.got}"


@dataclass(frozen=True)
class CompositionLawViolation:
    f: CubeMorphism
    g: CubeMorphism
    cube: CubeId
    chained: CubeId
    direct: CubeId

    def __str__(self) -> str:
        return (
            f"composite {self.f} ; {self.g} on {self.cube}: "
            f"chained {self.chained} != direct {self.direct}"
        )


def check_functor_laws(X: FiniteCubicalSet) -> Report:
    """Exhaustively compare chained and direct actions within the bound."""
    violations: list[object] = []
    morphs = {
        (n, m): enumerate_morphisms(canonical_dims(n), canonical_dims(m))
        for n in range(X.bound + 1)
        for m in range(X.bound + 1)
    }
    for n in range(X.bound + 1):
        table = X.action_table(identity(canonical_dims(n)))
        for c, v in table.items():
            if v != c:
                violations.append(IdentityLawViolation(n, c, v))
    for n in range(X.bound + 1):
        for m in range(X.bound + 1):
            for f in morphs[(n, m)]:
                tf = X.action_table(f)
                for k in range(X.bound + 1):
                    for g in morphs[(m, k)]:
                        tg = X.action_table(g)
                        th = X.action_table(compose(f, g))
                        for c, fc in tf.items():
                            if tg[fc] != th[c]:
                                violations.append(
                                    CompositionLawViolation(f, g, c, tg[fc], th[c])
                                )
    return Report(tuple(violations))


# ---------------------------------------------------------------------------
# geometric cubes (natural transformations out of a free-standing cube)

class GeometricCube:
    """The full aspect table of a cube: one value per morphism out of `shape`.

    Tables are stored at canonical codomains; `value` answers for any other
    codomain by composing with the order-preserving renaming, whose action
    is the identity on identifiers.
    """

    __slots__ = ("base", "shape", "table")

    def __init__(
        self,
        base: FiniteCubicalSet,
        shape: DimSet,
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
            isinstance(other, GeometricCube)
            and self.shape == other.shape
            and self.table == other.table
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"GeometricCube(shape={self.shape})"


@dataclass(frozen=True)
class NaturalityViolation:
    f: CubeMorphism
    g: CubeMorphism
    expected: CubeId
    got: CubeId

    def __str__(self) -> str:
        return f"table({self.f};{self.g}) = {self.got} but action gives {self.expected}"


def geometric_of_algebraic(X: FiniteCubicalSet, I: DimSet, c: CubeId) -> GeometricCube:
    """Fill the aspect table of c with the action of every morphism out of I."""
    if len(I) > X.bound or c not in X.carrier(len(I)):
        raise UnknownCube(f"{c!r} is not a dimension-{len(I)} cube")
    table = {
        k: {f: X.action_table(f)[c] for f in enumerate_morphisms(I, canonical_dims(k))}
        for k in range(X.bound + 1)
    }
    return GeometricCube(X, I, table)


def algebraic_of_geometric(kappa: GeometricCube) -> CubeId:
    """The cube at the identity aspect; inverse to `geometric_of_algebraic`."""
    return kappa.value(identity(kappa.shape))


def check_natural_cube(kappa: GeometricCube) -> Report:
    """Verify naturality of the table against the base's action."""
    X = kappa.base
    violations = []
    for k in range(X.bound + 1):
        expected = set(enumerate_morphisms(kappa.shape, canonical_dims(k)))
        if set(kappa.table.get(k, ())) != expected:
            return Report((f"aspect table at dimension {k} has the wrong key set",))
    for k, entries in sorted(kappa.table.items()):
        for f, c in sorted(entries.items(), key=lambda e: str(e[0])):
            for k2 in range(X.bound + 1):
                for g in enumerate_morphisms(canonical_dims(k), canonical_dims(k2)):
                    direct = kappa.value(compose(f, g))
                    chained = X.action(g, c)
                    if direct != chained:
                        violations.append(NaturalityViolation(f, g, chained, direct))
    return Report(tuple(violations))


# ---------------------------------------------------------------------------
# corner assignments and the two intervals

def corners(n: int) -> list[tuple[int, ...]]:
    """All corners of the n-cube in lexicographic order."""
    return list(product((0, 1), repeat=n))


def corner_index(v: tuple[int, ...]) -> int:
    idx = 0
    for b in v:
        idx = idx * 2 + b
    return idx


def encode_assignment(values: Sequence[str]) -> CubeId:
    return ",".join(values)


def decode_assignment(c: CubeId, n: int) -> tuple[str, ...]:
    values = tuple(c.split(","))
    if len(values) != 2 ** n:
        raise UnknownCube(f"{c!r} does not decode to a dimension-{n} corner assignment")
    return values


def vertex_morphism(I: DimSet, v: tuple[int, ...]) -> CubeMorphism:
    """The corner v of the I-cube, as the all-end-points morphism I -> {}."""
    ends = [ONE if b else ZERO for b in v]
    return morphism(I, DimSet(), dict(zip(I.names, ends)))


def corner_values(X: FiniteCubicalSet, I: DimSet, c: CubeId) -> tuple[CubeId, ...]:
    """The points at all corners of c, via the all-end-points actions."""
    return tuple(X.action(vertex_morphism(I, v), c) for v in corners(len(I)))


def _corner_pullback(f: CubeMorphism, w: tuple[int, ...]) -> tuple[int, ...]:
    """Precompose the corner w of the cod(f)-cube with f."""
    pos = {name: j for j, name in enumerate(f.cod.names)}
    out = []
    for name in f.dom.names:
        v = f(name)
        if isinstance(v, EndPoint):
            out.append(1 if v is ONE else 0)
        else:
            out.append(w[pos[v]])
    return tuple(out)


def corner_action(f: CubeMorphism, values: Sequence[str]) -> tuple[str, ...]:
    """The action of f on a corner assignment, by corner pullback."""
    return tuple(values[corner_index(_corner_pullback(f, w))] for w in corners(len(f.cod)))


def _check_label(label: str) -> str:
    if not label or "," in label or "|" in label:
        raise ValidationError(f"object labels must be nonempty and free of ',' and '|': {label!r}")
    return label


def _semantic_tables(bound, carrier_values):
    """Build generator tables by corner pullback on decoded assignments."""
    def table(g: CubeMorphism) -> dict[CubeId, CubeId]:
        n = len(g.dom)
        return {
            encode_assignment(vals): encode_assignment(corner_action(g, vals))
            for vals in carrier_values[n]
        }

    faces = {
        (n, i, b): table(canonical_face(n, i, b))
        for n in range(1, bound + 1)
        for i in range(1, n + 1)
        for b in (ZERO, ONE)
    }
    swaps = {
        (n, i): table(canonical_swap(n, i))
        for n in range(2, bound + 1)
        for i in range(1, n)
    }
    degens = {n: table(canonical_degen(n)) for n in range(0, bound)}
    return faces, swaps, degens


def codiscrete_nerve(objects: Iterable[str], bound: int) -> FiniteCubicalSet:
    """All corner assignments into the object set, acting by corner pullback."""
    labels = tuple(sorted({_check_label(str(o)) for o in objects}))
    if not labels:
        raise ValidationError("the object set must be nonempty")
    carrier_values = [
        [tuple(vals) for vals in product(labels, repeat=2 ** n)] for n in range(bound + 1)
    ]
    carriers = [[encode_assignment(vals) for vals in vs] for vs in carrier_values]
    faces, swaps, degens = _semantic_tables(bound, carrier_values)
    return FiniteCubicalSet(bound, carriers, faces, swaps, degens)


def minimal_interval(bound: int) -> FiniteCubicalSet:
    """Two points, one connecting line, and only forced degeneracies.

    Realized inside `codiscrete_nerve({0,1})` as the constants plus the
    single-coordinate projections; the carrier at dimension n has 2 + n
    members (2 at dimension 0).
    """
    carrier_values = []
    for n in range(bound + 1):
        members = {("0",) * 2 ** n, ("1",) * 2 ** n}
        for i in range(n):
            members.add(tuple(str(v[i]) for v in corners(n)))
        carrier_values.append(sorted(members))
    carriers = [[encode_assignment(vals) for vals in vs] for vs in carrier_values]
    faces, swaps, degens = _semantic_tables(bound, carrier_values)
    # action closure of the sub-presheaf is enforced by constructor validation
    return FiniteCubicalSet(bound, carriers, faces, swaps, degens)


def one_point(bound: int) -> FiniteCubicalSet:
    """The terminal cubical set: one cube per dimension."""
    pt = {"pt": "pt"}
    carriers = [["pt"] for _ in range(bound + 1)]
    faces = {
        (n, i, b): dict(pt)
        for n in range(1, bound + 1)
        for i in range(1, n + 1)
        for b in (ZERO, ONE)
    }
    swaps = {(n, i): dict(pt) for n in range(2, bound + 1) for i in range(1, n)}
    degens = {n: dict(pt) for n in range(0, bound)}
    return FiniteCubicalSet(bound, carriers, faces, swaps, degens)
