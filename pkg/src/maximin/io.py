"""Configuration files.

A configuration file is a JSON document::

    {
      "field": "complex",
      "n": 2,
      "vectors": [
        [[1.0, 0.0], [0.0, 0.0]],
        ...
      ]
    }

Real rows are n numbers; complex rows are n ``[re, im]`` pairs. Every number
is written with 17 significant digits so files round-trip exactly.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import Configuration, Field, validate_config
from .errors import ParseError


def fmt17(x: float) -> str:
    s = format(float(x), ".17g")
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def fmt12(x: float) -> str:
    return format(float(x), ".12g")


def dumps_config(config: Configuration) -> str:
    rows = []
    for vec in config.vectors:
        if config.field is Field.REAL:
            cells = [fmt17(x) for x in vec]
        else:
            cells = [f"[{fmt17(z.real)}, {fmt17(z.imag)}]" for z in vec]
        rows.append("    [" + ", ".join(cells) + "]")
    return (
        "{\n"
        f'  "field": "{config.field.value}",\n'
        f'  "n": {config.n},\n'
        '  "vectors": [\n' + ",\n".join(rows) + "\n  ]\n}\n"
    )


def loads_config(text: str) -> Configuration:
    try:
        doc = json.loads(text)
        field = Field(doc["field"])
        n = int(doc["n"])
        vectors = doc["vectors"]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as err:
        raise ParseError(f"bad configuration document: {err}") from err
    return validate_config(field, n, vectors)


def write_config(config: Configuration, path) -> None:
    Path(path).write_text(dumps_config(config))


def read_config(path) -> Configuration:
    return loads_config(Path(path).read_text())
