"""JSON file formats and loaders, plus a DOT emitter.

Formats (all JSON, all textual):

* morphism       {"dom":["x","y"], "cod":["z"], "map":{"x":"0","y":"z"}}
                 where "0"/"1" are the end points and anything else names a
                 codomain dimension;
* cubical set    {"bound":N, "carriers":{"0":[ids],...},
                  "actions":[{"morphism":..., "table":{id:id}}, ...]}
                 with one action record per generator (canonical faces,
                 adjacent swaps, next-name inclusions); extra records are
                 allowed and validated against the derived action;
* box            {"shape":{"included":[..],"extra":[..],"filling":"y",
                  "polarity":"positive"}, "faces":{"x1@0":id, ...}};
* filling table  [{"shape":..., "faces":..., "filler":id}, ...], with an
                 extra "index" field for tables over a fibration;
* cubical map    {"source":path-or-inline, "target":path-or-inline,
                  "components":{"0":{y:x},...}}.

Structural problems raise ParseError; semantic ones (functor laws,
naturality) raise ValidationError naming the first violation.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .category import (
    CubeMorphism,
    DimSet,
    EndPoint,
    FaceLabel,
    ONE,
    ZERO,
    morphism,
)
from .cubical import CubeId, FiniteCubicalSet, check_functor_laws
from .boxes import AlgBox, BoxShape, Polarity, algebraic_box
from .errors import KanlabError, ParseError, ValidationError
from .fibration import CubicalMap, FibAlgBox, check_map_naturality
from .kan import FillingTable


# ---------------------------------------------------------------------------
# morphisms

def morphism_to_dict(f: CubeMorphism) -> dict:
    return {
        "dom": list(f.dom.names),
        "cod": list(f.cod.names),
        "map": {x: str(v) for x, v in f.mapping},
    }


def _parse_target(v: Any) -> "str | EndPoint":
    if v == "0":
        return ZERO
    if v == "1":
        return ONE
    if isinstance(v, str):
        return v
    raise ParseError(f"bad morphism target {v!r}")


def morphism_from_dict(data: Any) -> CubeMorphism:
    try:
        dom = DimSet(data["dom"])
        cod = DimSet(data["cod"])
        values = {x: _parse_target(v) for x, v in data["map"].items()}
    except (KeyError, TypeError, AttributeError, KanlabError) as e:
        raise ParseError(f"bad morphism record: {e}") from None
    try:
        return morphism(dom, cod, values)
    except KanlabError as e:
        raise ParseError(f"bad morphism record: {e}") from None


# ---------------------------------------------------------------------------
# cubical sets

def cubical_set_to_dict(X: FiniteCubicalSet) -> dict:
    return {
        "bound": X.bound,
        "carriers": {str(n): list(X.carrier(n)) for n in range(X.bound + 1)},
        "actions": [
            {"morphism": morphism_to_dict(g), "table": dict(table)}
            for _, g, table in X.generator_entries()
        ],
    }


def cubical_set_from_dict(data: Any) -> FiniteCubicalSet:
    try:
        bound = int(data["bound"])
        raw_carriers = data["carriers"]
        raw_actions = data["actions"]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad cubical-set file: {e}") from None
    carriers = []
    for n in range(bound + 1):
        if str(n) not in raw_carriers:
            raise ParseError(f"bad cubical-set file: missing carrier {n}")
        carriers.append([str(c) for c in raw_carriers[str(n)]])

    provided: dict[CubeMorphism, dict[CubeId, CubeId]] = {}
    for record in raw_actions:
        try:
            g = morphism_from_dict(record["morphism"])
            table = {str(k): str(v) for k, v in record["table"].items()}
        except (KeyError, TypeError, AttributeError) as e:
            raise ParseError(f"bad action record: {e}") from None
        provided[g] = table

    from .cubical import canonical_degen, canonical_face, canonical_swap

    faces, swaps, degens = {}, {}, {}
    expected: dict[CubeMorphism, tuple] = {}
    for n in range(1, bound + 1):
        for i in range(1, n + 1):
            for b in (ZERO, ONE):
                expected[canonical_face(n, i, b)] = ("face", n, i, b)
        for i in range(1, n):
            expected[canonical_swap(n, i)] = ("swap", n, i)
    for n in range(0, bound):
        expected[canonical_degen(n)] = ("degen", n)
    for g, key in expected.items():
        if g not in provided:
            raise ParseError(f"missing generator action record for {g}")
        if key[0] == "face":
            faces[key[1:]] = provided[g]
        elif key[0] == "swap":
            swaps[key[1:]] = provided[g]
        else:
            degens[key[1]] = provided[g]
    X = FiniteCubicalSet(bound, carriers, faces, swaps, degens)
    report = check_functor_laws(X)
    if not report.ok:
        raise ValidationError(f"functor laws fail: {report.first()}")
    for g, table in provided.items():
        if g in expected:
            continue
        derived = X.action_table(g)
        if derived != table:
            diff = next(c for c in derived if derived[c] != table.get(c))
            raise ValidationError(
                f"extra action record for {g} disagrees with the derived action at {diff}"
            )
    return X


# ---------------------------------------------------------------------------
# boxes and filling tables

def shape_to_dict(shape: BoxShape) -> dict:
    return {
        "included": list(shape.included.names),
        "extra": list(shape.extra.names),
        "filling": shape.filling,
        "polarity": shape.polarity.value,
    }


def shape_from_dict(data: Any) -> BoxShape:
    try:
        return BoxShape(
            DimSet(data["included"]),
            DimSet(data["extra"]),
            str(data["filling"]),
            Polarity(data["polarity"]),
        )
    except (KeyError, TypeError, ValueError, KanlabError) as e:
        raise ParseError(f"bad shape record: {e}") from None


def _face_key(label: FaceLabel) -> str:
    return f"{label.dim}@{label.end}"


def _face_from_key(key: str) -> FaceLabel:
    dim, _, end = key.rpartition("@")
    if end not in ("0", "1") or not dim:
        raise ParseError(f"bad face key {key!r}")
    return FaceLabel(dim, ZERO if end == "0" else ONE)


def box_to_dict(b: AlgBox) -> dict:
    return {
        "shape": shape_to_dict(b.shape),
        "faces": {_face_key(l): c for l, c in b.faces},
    }


def box_from_dict(data: Any) -> AlgBox:
    shape = shape_from_dict(data.get("shape"))
    try:
        faces = {_face_from_key(k): str(v) for k, v in data["faces"].items()}
    except (KeyError, TypeError, AttributeError) as e:
        raise ParseError(f"bad box record: {e}") from None
    try:
        return algebraic_box(shape, faces)
    except KanlabError as e:
        raise ParseError(f"bad box record: {e}") from None


def filling_table_to_list(table: FillingTable) -> list:
    records = []
    for key in table.boxes():
        if isinstance(key, FibAlgBox):
            record = box_to_dict(key.box)
            record["index"] = key.index
        else:
            record = box_to_dict(key)
        record["filler"] = table[key]
        records.append(record)
    return records


def filling_table_from_list(data: Any, base: FiniteCubicalSet) -> FillingTable:
    if not isinstance(data, list):
        raise ParseError("a filling table file must hold a list of records")
    entries: dict[AlgBox, CubeId] = {}
    for record in data:
        b = box_from_dict(record)
        try:
            entries[b] = str(record["filler"])
        except (KeyError, TypeError) as e:
            raise ParseError(f"bad filling record: {e}") from None
    return FillingTable(base, entries)


def fib_filling_table_from_list(data: Any, p: CubicalMap) -> FillingTable:
    if not isinstance(data, list):
        raise ParseError("a filling table file must hold a list of records")
    entries: dict[FibAlgBox, CubeId] = {}
    for record in data:
        b = box_from_dict(record)
        try:
            entries[FibAlgBox(str(record["index"]), b)] = str(record["filler"])
        except (KeyError, TypeError) as e:
            raise ParseError(f"bad fibration filling record: {e}") from None
    return FillingTable(p.source, entries)


# ---------------------------------------------------------------------------
# cubical maps

def map_to_dict(p: CubicalMap, source: Any = None, target: Any = None) -> dict:
    """source/target default to inline cubical-set objects."""
    return {
        "source": source if source is not None else cubical_set_to_dict(p.source),
        "target": target if target is not None else cubical_set_to_dict(p.target),
        "components": {
            str(n): dict(p.components[n]) for n in range(p.bound + 1)
        },
    }


def _resolve_set(ref: Any, base_dir: Path) -> FiniteCubicalSet:
    if isinstance(ref, str):
        return load_cubical_set(base_dir / ref)
    if isinstance(ref, dict):
        return cubical_set_from_dict(ref)
    raise ParseError(f"a cubical-set reference must be a path or an inline object, got {type(ref).__name__}")


def map_from_dict(data: Any, base_dir: "Path | str" = ".") -> CubicalMap:
    base = Path(base_dir)
    try:
        source_ref = data["source"]
        target_ref = data["target"]
        raw = data["components"]
    except (KeyError, TypeError) as e:
        raise ParseError(f"bad map file: {e}") from None
    source = _resolve_set(source_ref, base)
    target = _resolve_set(target_ref, base)
    components = []
    for n in range(source.bound + 1):
        if str(n) not in raw:
            raise ParseError(f"bad map file: missing component {n}")
        components.append({str(y): str(x) for y, x in raw[str(n)].items()})
    p = CubicalMap(source, target, components)
    report = check_map_naturality(p)
    if not report.ok:
        raise ValidationError(f"naturality fails: {report.first()}")
    return p


# ---------------------------------------------------------------------------
# files

def _load_json(path: "Path | str") -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}") from None


def save_json(data: Any, path: "Path | str") -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_cubical_set(path: "Path | str") -> FiniteCubicalSet:
    return cubical_set_from_dict(_load_json(path))


def save_cubical_set(X: FiniteCubicalSet, path: "Path | str") -> None:
    save_json(cubical_set_to_dict(X), path)


def load_map(path: "Path | str") -> CubicalMap:
    return map_from_dict(_load_json(path), Path(path).parent)


def load_filling_table(path: "Path | str", base: FiniteCubicalSet) -> FillingTable:
    return filling_table_from_list(_load_json(path), base)


def load_fib_filling_table(path: "Path | str", p: CubicalMap) -> FillingTable:
    return fib_filling_table_from_list(_load_json(path), p)


def detect_file_kind(path: "Path | str") -> str:
    """'set', 'map' or 'table', by the top-level structure."""
    data = _load_json(path)
    if isinstance(data, list):
        return "table"
    if isinstance(data, dict) and "components" in data:
        return "map"
    if isinstance(data, dict) and "carriers" in data:
        return "set"
    raise ParseError(f"{path} is not a recognized file kind")


# ---------------------------------------------------------------------------
# DOT emission

def to_dot(X: FiniteCubicalSet, name: str = "cubes") -> str:
    """Carriers as ranked layers, generator face actions as labeled edges."""
    lines = [f"digraph {name} {{", "\trankdir=BT;"]
    for n in range(X.bound + 1):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for c in X.carrier(n):
            lines.append(f'\t\t"{n}/{c}" [label="{c}"];')
        lines.append("\t}")
    for key, _, table in X.generator_entries():
        if key[0] != "face":
            continue
        _, n, i, b = key
        for c, v in table.items():
            lines.append(f'\t"{n}/{c}" -> "{n - 1}/{v}" [label="d{i}@{b}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
