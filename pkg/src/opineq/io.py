"""JSON fixture formats.

Matrices: { "n": int, "re": [[...]], "im": [[...]] } with "im" omitted for
real matrices. Maps: { "variant": ..., variant fields }. All floats are
emitted losslessly (round-trip exact), so fixtures reproduce bit-identical
matrices.
"""
from __future__ import annotations

import json
import sys
from typing import Optional

import numpy as np

from .maps import (Compression, DirectSum, InducedCongruence, Pinching,
                   PositiveMap, Scaled, UnitaryMixture)


def matrix_to_json(a: np.ndarray) -> dict:
    """Square matrices carry "n"; rectangular blocks (isometries) carry
    "rows"/"cols" instead."""
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {a.shape}")
    if a.shape[0] == a.shape[1]:
        out = {"n": int(a.shape[0])}
    else:
        out = {"rows": int(a.shape[0]), "cols": int(a.shape[1])}
    out["re"] = [[float(v) for v in row] for row in a.real]
    if np.iscomplexobj(a) and np.any(a.imag != 0):
        out["im"] = [[float(v) for v in row] for row in a.imag]
    return out


def matrix_from_json(obj: dict) -> np.ndarray:
    if "n" in obj:
        shape = (int(obj["n"]), int(obj["n"]))
    else:
        shape = (int(obj["rows"]), int(obj["cols"]))
    re = np.asarray(obj["re"], dtype=float)
    if re.shape != shape:
        raise ValueError(f"re block has shape {re.shape}, expected {shape}")
    if "im" in obj:
        im = np.asarray(obj["im"], dtype=float)
        if im.shape != shape:
            raise ValueError(f"im block has shape {im.shape}, expected {shape}")
        return re + 1j * im
    return re


def map_to_json(phi: PositiveMap) -> dict:
    if isinstance(phi, UnitaryMixture):
        return {"variant": "unitary_mixture",
                "weights": [float(w) for w in phi.weights],
                "unitaries": [matrix_to_json(u) for u in phi.unitaries]}
    if isinstance(phi, Pinching):
        return {"variant": "pinching", "dim": phi.input_dim,
                "blocks": [list(b) for b in phi.blocks]}
    if isinstance(phi, Compression):
        return {"variant": "compression", "isometry": matrix_to_json(phi.v)}
    if isinstance(phi, Scaled):
        return {"variant": "scaled", "weight": phi.weight,
                "dim": phi.input_dim,
                "inner": None if phi.inner is None else map_to_json(phi.inner)}
    if isinstance(phi, DirectSum):
        return {"variant": "direct_sum", "maps": [map_to_json(m) for m in phi.maps]}
    if isinstance(phi, InducedCongruence):
        return {"variant": "induced_congruence", "base": map_to_json(phi.base),
                "anchor": matrix_to_json(phi.anchor)}
    raise TypeError(f"no JSON form for map type {type(phi).__name__}")


def map_from_json(obj: dict) -> PositiveMap:
    variant = obj.get("variant")
    if variant == "unitary_mixture":
        return UnitaryMixture([matrix_from_json(u) for u in obj["unitaries"]],
                              obj["weights"])
    if variant == "pinching":
        return Pinching(obj["blocks"], int(obj["dim"]))
    if variant == "compression":
        return Compression(matrix_from_json(obj["isometry"]))
    if variant == "scaled":
        inner = obj.get("inner")
        return Scaled(float(obj["weight"]), int(obj["dim"]),
                      None if inner is None else map_from_json(inner))
    if variant == "direct_sum":
        return DirectSum([map_from_json(m) for m in obj["maps"]])
    if variant == "induced_congruence":
        return InducedCongruence(map_from_json(obj["base"]),
                                 matrix_from_json(obj["anchor"]))
    raise ValueError(f"unknown map variant {variant!r}")


def dump_json(record: dict, path: Optional[str] = None, indent: int = 2) -> str:
    """Serialize a record; write to `path` ('-' or None means stdout-ready
    string only)."""
    text = json.dumps(record, indent=indent, sort_keys=False)
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text


def load_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


__all__ = ["matrix_to_json", "matrix_from_json", "map_to_json",
           "map_from_json", "dump_json", "load_json"]
