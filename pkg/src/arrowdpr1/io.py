"""Matrix and vector files.

A matrix file is a JSON object:

    {"kind": "arrow", "field": "real", "n": 3, "tip": 3,
     "diag": [2.0, 3.0], "u": [1.0, 1.0], "v": [1.0, 1.0], "alpha": 1.0}

    {"kind": "dpr1", "field": "complex", "n": 2,
     "diag": [[1,0],[2,0]], "x": [[1,0],[0,1]], "y": [[1,0],[1,0]],
     "rho": [0.5, 0.0]}

Scalars encode by field: real as a plain number, complex as [re, im],
quaternion as [a, b, c, d], and block as a k-by-k nested array of base
scalar encodings ("block_k" is required and the base is inferred from the
entry shape). A vector file is a bare JSON array of scalar encodings.

Parsing is strict: unknown or missing keys, wrong lengths, and malformed
scalars raise MatrixFileError naming the offender.
"""

from __future__ import annotations

import json

import numpy as np

from .blockscalar import BlockScalar
from .errors import DimensionError, MatrixFileError
from .quaternion import Quaternion
from .scalars import field_name
from .structured import ArrowMatrix, DPR1Matrix

_ARROW_KEYS = ("kind", "field", "n", "tip", "diag", "u", "v", "alpha")
_DPR1_KEYS = ("kind", "field", "n", "diag", "x", "y", "rho")


def _require_number(node, where: str) -> float:
    if isinstance(node, bool) or not isinstance(node, (int, float)):
        raise MatrixFileError(f"{where}: expected a number, got {node!r}")
    return float(node)


def _require_int(node, where: str) -> int:
    if isinstance(node, bool) or not isinstance(node, int):
        raise MatrixFileError(f"{where}: expected an integer, got {node!r}")
    return node


def _decode_components(node, count: int, where: str) -> list[float]:
    if not isinstance(node, list) or len(node) != count:
        raise MatrixFileError(f"{where}: expected a list of {count} numbers, got {node!r}")
    return [_require_number(c, where) for c in node]


def _block_base_of(node, where: str) -> str:
    if not isinstance(node, list) or not node or not isinstance(node[0], list) or not node[0]:
        raise MatrixFileError(f"{where}: expected a nested block array")
    cell = node[0][0]
    if isinstance(cell, (int, float)) and not isinstance(cell, bool):
        return "real"
    if isinstance(cell, list) and len(cell) == 2:
        return "complex"
    if isinstance(cell, list) and len(cell) == 4:
        return "quaternion"
    raise MatrixFileError(f"{where}: cannot infer block base from entry {cell!r}")


def decode_scalar(node, field: str, *, block_k: int | None = None,
                  block_base: str | None = None, where: str = "scalar"):
    if field == "real":
        return _require_number(node, where)
    if field == "complex":
        re, im = _decode_components(node, 2, where)
        return complex(re, im)
    if field == "quaternion":
        a, b, c, d = _decode_components(node, 4, where)
        return Quaternion(a, b, c, d)
    if field == "block":
        k = block_k
        if not isinstance(node, list) or len(node) != k or \
                any(not isinstance(r, list) or len(r) != k for r in node):
            raise MatrixFileError(f"{where}: expected a {k}x{k} block array")
        cells = [[decode_scalar(node[i][j], block_base, where=f"{where}[{i}][{j}]")
                  for j in range(k)] for i in range(k)]
        if block_base == "quaternion":
            out = np.empty((k, k), dtype=object)
            for i in range(k):
                for j in range(k):
                    out[i, j] = cells[i][j]
            return BlockScalar(out)
        return BlockScalar(cells)
    raise MatrixFileError(f"{where}: unknown field {field!r}")


def _decode_vector(node, count: int, field: str, where: str, *,
                   block_k=None, block_base=None) -> list:
    if not isinstance(node, list) or len(node) != count:
        raise MatrixFileError(f"{where}: expected a list of {count} scalars")
    return [decode_scalar(e, field, block_k=block_k, block_base=block_base,
                          where=f"{where}[{i}]") for i, e in enumerate(node)]


def parse_matrix(doc):
    if not isinstance(doc, dict):
        raise MatrixFileError("matrix file must be a JSON object")
    kind = doc.get("kind")
    if kind not in ("arrow", "dpr1"):
        raise MatrixFileError(f"key 'kind' must be 'arrow' or 'dpr1', got {kind!r}")
    field = doc.get("field")
    if field not in ("real", "complex", "quaternion", "block"):
        raise MatrixFileError(f"key 'field' must be one of real, complex, "
                              f"quaternion, block, got {field!r}")
    expected = set(_ARROW_KEYS if kind == "arrow" else _DPR1_KEYS)
    if field == "block":
        expected.add("block_k")
    for key in doc:
        if key not in expected:
            raise MatrixFileError(f"unexpected key {key!r} in matrix file")
    for key in expected:
        if key not in doc:
            raise MatrixFileError(f"missing key {key!r} in matrix file")
    n = _require_int(doc["n"], "key 'n'")
    if n < 1:
        raise MatrixFileError(f"key 'n' must be at least 1, got {n}")
    block_k = None
    block_base = None
    if field == "block":
        block_k = _require_int(doc["block_k"], "key 'block_k'")
        if block_k < 1:
            raise MatrixFileError(f"key 'block_k' must be at least 1, got {block_k}")
        tip_scalar_key = "alpha" if kind == "arrow" else "rho"
        block_base = _block_base_of(doc[tip_scalar_key], f"key {tip_scalar_key!r}")
    kw = dict(block_k=block_k, block_base=block_base)
    try:
        if kind == "arrow":
            tip = _require_int(doc["tip"], "key 'tip'")
            diag = _decode_vector(doc["diag"], n - 1, field, "key 'diag'", **kw)
            u = _decode_vector(doc["u"], n - 1, field, "key 'u'", **kw)
            v = _decode_vector(doc["v"], n - 1, field, "key 'v'", **kw)
            alpha = decode_scalar(doc["alpha"], field, where="key 'alpha'", **kw)
            return ArrowMatrix(diag, u, v, alpha, tip=tip)
        diag = _decode_vector(doc["diag"], n, field, "key 'diag'", **kw)
        x = _decode_vector(doc["x"], n, field, "key 'x'", **kw)
        y = _decode_vector(doc["y"], n, field, "key 'y'", **kw)
        rho = decode_scalar(doc["rho"], field, where="key 'rho'", **kw)
        return DPR1Matrix(diag, x, y, rho)
    except DimensionError as e:
        raise MatrixFileError(str(e)) from e


def load_matrix(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise MatrixFileError(f"{path}: not valid JSON: {e}") from e
    return parse_matrix(doc)


def matrix_meta(m) -> tuple[str, int | None, str | None]:
    """(field, block_k, block_base) of a structured matrix, by inspection."""
    s = m.alpha if isinstance(m, ArrowMatrix) else m.rho
    field = field_name(s)
    if field == "block":
        return field, s.k, s.base_field
    return field, None, None


def load_vector(path: str, like) -> list:
    field, block_k, block_base = matrix_meta(like)
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise MatrixFileError(f"{path}: not valid JSON: {e}") from e
    return _decode_vector(doc, like.n, field, "vector", block_k=block_k,
                          block_base=block_base)


def encode_scalar(s):
    if isinstance(s, Quaternion):
        return [s.a, s.b, s.c, s.d]
    if isinstance(s, BlockScalar):
        return [[encode_scalar(s.entries.item((i, j))) for j in range(s.k)]
                for i in range(s.k)]
    if isinstance(s, complex):
        return [s.real, s.imag]
    return float(s)


def serialize_vector(vec: list) -> list:
    return [encode_scalar(e) for e in vec]


def serialize_matrix(m) -> dict:
    field, block_k, _ = matrix_meta(m)
    if isinstance(m, ArrowMatrix):
        doc = {"kind": "arrow", "field": field, "n": m.n, "tip": m.tip}
        if block_k is not None:
            doc["block_k"] = block_k
        doc.update(diag=serialize_vector(m.diag), u=serialize_vector(m.u),
                   v=serialize_vector(m.v), alpha=encode_scalar(m.alpha))
        return doc
    doc = {"kind": "dpr1", "field": field, "n": m.n}
    if block_k is not None:
        doc["block_k"] = block_k
    doc.update(diag=serialize_vector(m.diag), x=serialize_vector(m.x),
               y=serialize_vector(m.y), rho=encode_scalar(m.rho))
    return doc
