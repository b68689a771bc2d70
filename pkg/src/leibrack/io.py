"""JSON definition files for algebras, racks, groups, digroups, dialgebras and models.

Exact scalars are written as ``"p/q"`` strings (``q`` omitted when 1); floats
use Python's shortest round-trip ``repr``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from . import exactla as la
from .digroup import FiniteDigroup
from .exactla import Subspace
from .leibniz import Dialgebra, LeibnizAlgebra, Representation
from .lierack import LinearLieGroupModel
from .rack import FiniteGroup, FiniteRack


class SchemaError(ValueError):
    """A definition file is not valid JSON or does not match the expected layout."""


def _need(d: dict, *keys: str) -> None:
    if not isinstance(d, dict):
        raise SchemaError("expected a JSON object at top level")
    missing = [k for k in keys if k not in d]
    if missing:
        raise SchemaError(f"missing field(s): {', '.join(missing)}")


def _scalar_out(x) -> Any:
    if isinstance(x, (float, np.floating)):
        return float(x)
    return la.format_rational(x)


def _scalar_in(x):
    if isinstance(x, bool):
        raise SchemaError("booleans are not scalars")
    if isinstance(x, float):
        return x
    try:
        return la.as_rational(x)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad scalar {x!r}") from exc


def _matrix_out(m) -> list:
    return [[_scalar_out(v) for v in row] for row in np.asarray(m)]


def _exact_matrix_in(rows, shape=None) -> np.ndarray:
    vals = [[_scalar_in(v) for v in row] for row in rows]
    if any(isinstance(v, float) for row in vals for v in row):
        out = np.array(vals, dtype=float)
    else:
        out = la.rational_matrix(vals) if vals else la.zeros(0, 0)
    if shape is not None and out.shape != shape and not (out.size == 0 and 0 in shape):
        raise SchemaError(f"matrix of shape {out.shape}, expected {shape}")
    return out.reshape(shape) if shape is not None and out.size == 0 else out


def _int_table(t, n: int, name: str) -> np.ndarray:
    try:
        a = np.array(t, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{name} must be an integer table") from exc
    if a.shape != (n, n) and not (n == 0 and a.size == 0):
        raise SchemaError(f"{name} has shape {a.shape}, expected ({n}, {n})")
    return a.reshape(n, n)


# -- algebras ----------------------------------------------------------------------

def _brackets_out(c: np.ndarray) -> list:
    out = []
    n = c.shape[0]
    for i in range(n):
        for j in range(n):
            if any(v != 0 for v in c[i, j]):
                out.append({"i": i, "j": j, "val": [_scalar_out(v) for v in c[i, j]]})
    return out


def _brackets_in(items, n: int, what: str = "brackets") -> np.ndarray:
    c = la.zeros(n, n, n)
    floats = False
    for b in items:
        _need(b, "i", "j", "val")
        i, j = b["i"], b["j"]
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < n and 0 <= j < n):
            raise SchemaError(f"{what}: index out of range in {b}")
        if len(b["val"]) != n:
            raise SchemaError(f"{what}: value of ({i},{j}) has length {len(b['val'])}, expected {n}")
        vals = [_scalar_in(v) for v in b["val"]]
        floats |= any(isinstance(v, float) for v in vals)
        for k, v in enumerate(vals):
            c[i, j, k] = v
    return np.array(c, dtype=float) if floats else c


def algebra_to_dict(g: LeibnizAlgebra) -> dict:
    return {"dim": g.dim, "basis": list(g.basis_names), "brackets": _brackets_out(g.c)}


def algebra_from_dict(d: dict) -> LeibnizAlgebra:
    _need(d, "dim", "brackets")
    n = d["dim"]
    if not isinstance(n, int) or n < 0:
        raise SchemaError("dim must be a non-negative integer")
    names = tuple(d.get("basis") or ())
    if names and len(names) != n:
        raise SchemaError("basis length does not match dim")
    return LeibnizAlgebra(_brackets_in(d["brackets"], n), names)


def representation_to_dict(r: Representation) -> dict:
    return {"module_dim": r.module_dim, "rho": [_matrix_out(m) for m in r.rho]}


def representation_from_dict(d: dict) -> Representation:
    _need(d, "module_dim", "rho")
    m = d["module_dim"]
    return Representation(m, tuple(_exact_matrix_in(r, (m, m)) for r in d["rho"]))


def dialgebra_to_dict(a: Dialgebra) -> dict:
    return {"dim": a.dim, "basis": list(a.basis_names), "vdash": _brackets_out(a.vdash),
            "dashv": _brackets_out(a.dashv)}


def dialgebra_from_dict(d: dict) -> Dialgebra:
    _need(d, "dim", "vdash", "dashv")
    n = d["dim"]
    return Dialgebra(_brackets_in(d["vdash"], n, "vdash"), _brackets_in(d["dashv"], n, "dashv"),
                     tuple(d.get("basis") or ()))


def subspace_to_dict(s: Subspace) -> dict:
    return {"ambient_dim": s.ambient_dim, "basis": [[_scalar_out(v) for v in row] for row in s.basis]}


def subspace_from_dict(d: dict) -> Subspace:
    _need(d, "ambient_dim", "basis")
    n = d["ambient_dim"]
    rows = [[_scalar_in(v) for v in row] for row in d["basis"]]
    if any(len(r) != n for r in rows):
        raise SchemaError("subspace basis vector has the wrong length")
    return Subspace.span(rows, n)


# -- tables ------------------------------------------------------------------------

def rack_to_dict(q: FiniteRack) -> dict:
    return {"size": q.size, "point": q.point, "table": q.table.tolist()}


def rack_from_dict(d: dict) -> FiniteRack:
    _need(d, "size", "point", "table")
    n = d["size"]
    try:
        return FiniteRack(n, d["point"], _int_table(d["table"], n, "table"))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def group_to_dict(g: FiniteGroup) -> dict:
    return {"size": g.size, "unit": g.unit, "table": g.table.tolist(), "inv": list(g.inv)}


def group_from_dict(d: dict) -> FiniteGroup:
    _need(d, "size", "table", "inv")
    n = d["size"]
    try:
        return FiniteGroup(n, d.get("unit", d.get("point", 0)), _int_table(d["table"], n, "table"), tuple(d["inv"]))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def digroup_to_dict(g: FiniteDigroup) -> dict:
    return {"size": g.size, "unit": g.unit, "vdash": g.vdash.tolist(), "dashv": g.dashv.tolist(),
            "inv": list(g.inv)}


def digroup_from_dict(d: dict) -> FiniteDigroup:
    _need(d, "size", "unit", "vdash", "dashv", "inv")
    n = d["size"]
    if not 0 <= d["unit"] < max(n, 1) or any(not 0 <= i < n for i in d["inv"]):
        raise SchemaError("unit or inverse map outside the carrier")
    try:
        return FiniteDigroup(n, d["unit"], _int_table(d["vdash"], n, "vdash"),
                             _int_table(d["dashv"], n, "dashv"), tuple(d["inv"]))
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


# -- models ------------------------------------------------------------------------

def model_to_dict(m: LinearLieGroupModel) -> dict:
    return {"ambient": m.ambient, "lie_basis": [np.asarray(a, dtype=float).tolist() for a in m.lie_basis],
            "module_dim": m.module_dim, "rho": [np.asarray(r, dtype=float).tolist() for r in m.rho_basis]}


def model_from_dict(d: dict) -> LinearLieGroupModel:
    _need(d, "ambient", "lie_basis", "module_dim", "rho")
    try:
        lb = tuple(np.array(a, dtype=float) for a in d["lie_basis"])
        rb = tuple(np.array(r, dtype=float).reshape(d["module_dim"], d["module_dim"]) for r in d["rho"])
        return LinearLieGroupModel(lb, rb, d["module_dim"], ambient=d["ambient"], name=d.get("name", ""))
    except (TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from exc


# -- files -------------------------------------------------------------------------

_READERS = {
    "leibniz": algebra_from_dict,
    "representation": representation_from_dict,
    "dialgebra": dialgebra_from_dict,
    "subspace": subspace_from_dict,
    "rack": rack_from_dict,
    "group": group_from_dict,
    "digroup": digroup_from_dict,
    "model": model_from_dict,
}

_WRITERS = {
    LeibnizAlgebra: algebra_to_dict,
    Representation: representation_to_dict,
    Dialgebra: dialgebra_to_dict,
    Subspace: subspace_to_dict,
    FiniteRack: rack_to_dict,
    FiniteGroup: group_to_dict,
    FiniteDigroup: digroup_to_dict,
    LinearLieGroupModel: model_to_dict,
}


def to_dict(obj) -> dict:
    for cls, fn in _WRITERS.items():
        if isinstance(obj, cls):
            return fn(obj)
    raise TypeError(f"no file format for {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_dict(obj))


def loads(text: str, kind: str):
    if kind not in _READERS:
        raise ValueError(f"unknown kind {kind!r}")
    if not text.strip():
        raise SchemaError("empty input")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return _READERS[kind](data)


def load(path, kind: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    return loads(text, kind)


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj) + "\n")
