"""The ``.hr.json`` interchange format.

A document is a UTF-8 JSON object::

    {"name": str, "elements": [str, ...], "zero": str, "one": str,
     "add": n x n array of nonempty label lists,
     "mul": n x n array of labels}

Labels, not indices, are used at the boundary.  Add cells are order
insensitive on input and sorted by element index on output.  :func:`dumps`
is canonical, so ``dumps(loads(text)) == text`` for any emitted text.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .core import HyperringTable, bits
from .errors import StructureError

SUFFIX = ".hr.json"


class FormatError(StructureError):
    """A document cannot be parsed or does not follow the schema."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise FormatError(msg)


def from_document(doc) -> HyperringTable:
    _require(isinstance(doc, dict), "document must be a JSON object")
    missing = [k for k in ("name", "elements", "zero", "one", "add", "mul") if k not in doc]
    _require(not missing, f"missing key(s): {', '.join(missing)}")
    name, labels = doc["name"], doc["elements"]
    _require(isinstance(name, str), "'name' must be a string")
    _require(
        isinstance(labels, list) and labels and all(isinstance(x, str) for x in labels),
        "'elements' must be a nonempty array of strings",
    )
    _require(len(set(labels)) == len(labels), "'elements' must be distinct")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)

    def elem(value, where: str) -> int:
        _require(isinstance(value, str), f"{where}: expected an element label, got {value!r}")
        _require(value in index, f"{where}: undeclared element {value!r}")
        return index[value]

    zero = elem(doc["zero"], "zero")
    one = elem(doc["one"], "one")

    def square(key: str):
        rows = doc[key]
        _require(isinstance(rows, list) and len(rows) == n, f"'{key}' must have {n} rows")
        for i, row in enumerate(rows):
            _require(
                isinstance(row, list) and len(row) == n,
                f"'{key}' row {labels[i]!r} must have {n} entries",
            )
        return rows

    add = []
    for i, row in enumerate(square("add")):
        out = []
        for j, cell in enumerate(row):
            where = f"add[{labels[i]}][{labels[j]}]"
            _require(isinstance(cell, list), f"{where}: expected an array of labels")
            _require(len(cell) > 0, f"{where}: empty cell")
            m = 0
            for v in cell:
                m |= 1 << elem(v, where)
            out.append(m)
        add.append(tuple(out))

    mul = []
    for i, row in enumerate(square("mul")):
        out = []
        for j, cell in enumerate(row):
            where = f"mul[{labels[i]}][{labels[j]}]"
            if isinstance(cell, list):
                raise FormatError(
                    f"{where}: set-valued multiplication is not supported "
                    "(multiplicative and general hyperrings are out of scope)"
                )
            out.append(elem(cell, where))
        mul.append(tuple(out))

    return HyperringTable(
        labels=tuple(labels), zero=zero, one=one, add=tuple(add), mul=tuple(mul), name=name
    )


def loads(text: str) -> HyperringTable:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_document(doc)


def load(path) -> HyperringTable:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"{path}: {exc}") from None
    try:
        return loads(text)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def to_document(table: HyperringTable) -> dict:
    lab = table.labels
    return {
        "name": table.name,
        "elements": list(lab),
        "zero": lab[table.zero],
        "one": lab[table.one],
        "add": [[[lab[z] for z in bits(c)] for c in row] for row in table.add],
        "mul": [[lab[v] for v in row] for row in table.mul],
    }


def dumps(table: HyperringTable) -> str:
    doc = to_document(table)
    enc = lambda v: json.dumps(v, ensure_ascii=False)  # noqa: E731
    lines = ["{"]
    lines.append(f'  "name": {enc(doc["name"])},')
    lines.append(f'  "elements": {enc(doc["elements"])},')
    lines.append(f'  "zero": {enc(doc["zero"])},')
    lines.append(f'  "one": {enc(doc["one"])},')
    for key, last in (("add", False), ("mul", True)):
        rows = doc[key]
        lines.append(f'  "{key}": [')
        for i, row in enumerate(rows):
            sep = "," if i < len(rows) - 1 else ""
            lines.append(f"    {enc(row)}{sep}")
        lines.append("  ]" + ("" if last else ","))
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump(table: HyperringTable, path) -> None:
    Path(path).write_text(dumps(table), encoding="utf-8")


def bundled(name: str) -> HyperringTable:
    """Load a fixture shipped in ``krasner/data`` (e.g. ``"r8"``)."""
    ref = resources.files("krasner") / "data" / f"{name}{SUFFIX}"
    return loads(ref.read_text(encoding="utf-8"))


def bundled_path(name: str) -> Path:
    return Path(str(resources.files("krasner") / "data" / f"{name}{SUFFIX}"))
