"""Deterministic JSON documents for command output.

Floats are written with 17 significant digits so that repeated runs are
byte-identical and values round-trip exactly.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .geometry import is_inf

SCHEMA = "disk-squeeze/1"


def _float(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    if x == 0.0:
        return "0.0"  # also folds -0.0
    text = format(x, ".17g")
    if "." not in text and "e" not in text:
        text += ".0"
    return text


def to_plain(obj):
    """Replace complex numbers, numpy scalars and tuples by JSON-ready values."""
    if is_inf(obj):
        return "inf"
    if hasattr(obj, "to_json"):
        return to_plain(obj.to_json())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [to_plain(v) for v in obj]
    return obj


def _encode(obj, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list)) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level + 1) for v in obj) + "]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _float(obj)
    if isinstance(obj, int):
        return str(obj)
    return json.dumps(obj)


def dumps(doc, indent: int = 2) -> str:
    return _encode(to_plain(doc), indent, 0) + "\n"


def make_report(command: str, inputs: dict, **fields) -> dict:
    doc = {"schema": SCHEMA, "command": command, "inputs": inputs}
    doc.update(fields)
    return doc
