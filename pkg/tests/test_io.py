import json

import numpy as np
import pytest

from arrowdpr1.errors import DimensionError, MatrixFileError
from arrowdpr1.io import (decode_scalar, encode_scalar, load_matrix,
                          load_vector, parse_matrix, serialize_matrix,
                          serialize_vector)
from arrowdpr1.oracle import max_abs_diff, vec_max_abs_diff
from arrowdpr1.quaternion import Quaternion
from arrowdpr1.sampling import sample_arrow, sample_dpr1, sample_vector
from arrowdpr1.structured import ArrowMatrix, DPR1Matrix, to_dense

ARROW_DOC = {"kind": "arrow", "field": "real", "n": 3, "tip": 3,
             "diag": [2.0, 3.0], "u": [1.0, 1.0], "v": [1.0, 1.0],
             "alpha": 1.0}


def test_parse_arrow_example():
    m = parse_matrix(ARROW_DOC)
    assert isinstance(m, ArrowMatrix)
    assert m.diag == (2.0, 3.0) and m.tip == 3 and m.alpha == 1.0


def test_parse_complex_dpr1():
    doc = {"kind": "dpr1", "field": "complex", "n": 2,
           "diag": [[1, 0], [2, 0]], "x": [[1, 0], [0, 1]],
           "y": [[1, 0], [1, 0]], "rho": [0.5, 0.0]}
    m = parse_matrix(doc)
    assert isinstance(m, DPR1Matrix)
    assert m.x == (1 + 0j, 1j) and m.rho == 0.5 + 0j


FIELD_CASES = [
    ("real", {}), ("complex", {}), ("quaternion", {}),
    ("block", {"block_k": 2, "block_base": "real"}),
    ("block", {"block_k": 3, "block_base": "complex"}),
    ("block", {"block_k": 2, "block_base": "quaternion"}),
]


@pytest.mark.parametrize("kind", ["arrow", "dpr1"])
@pytest.mark.parametrize("field,kw", FIELD_CASES)
def test_serialize_round_trip(kind, field, kw):
    # json round-trips IEEE doubles exactly, so parsing back is bit-identical
    rng = np.random.default_rng(70)
    sampler = sample_arrow if kind == "arrow" else sample_dpr1
    m = sampler(rng, 4, field, **kw)
    doc = json.loads(json.dumps(serialize_matrix(m)))
    back = parse_matrix(doc)
    assert type(back) is type(m)
    assert max_abs_diff(to_dense(back), to_dense(m)) == 0.0
    if kind == "arrow":
        assert back.tip == m.tip


def test_vector_round_trip(tmp_path):
    rng = np.random.default_rng(71)
    m = sample_dpr1(rng, 3, "quaternion")
    z = sample_vector(rng, 3, "quaternion")
    p = tmp_path / "z.json"
    p.write_text(json.dumps(serialize_vector(z)))
    assert vec_max_abs_diff(load_vector(str(p), m), z) == 0.0


def test_load_matrix_file(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps(ARROW_DOC))
    m = load_matrix(str(p))
    assert m.diag == (2.0, 3.0)


def test_load_matrix_bad_json(tmp_path):
    p = tmp_path / "m.json"
    p.write_text("{not json")
    with pytest.raises(MatrixFileError):
        load_matrix(str(p))


def _with(doc, **changes):
    out = dict(doc)
    for key, value in changes.items():
        if value is _DROP:
            out.pop(key)
        else:
            out[key] = value
    return out


_DROP = object()


def test_unknown_key_is_named():
    with pytest.raises(MatrixFileError, match="bogus"):
        parse_matrix(_with(ARROW_DOC, bogus=1))


def test_missing_key_is_named():
    with pytest.raises(MatrixFileError, match="alpha"):
        parse_matrix(_with(ARROW_DOC, alpha=_DROP))


def test_bad_kind_and_field():
    with pytest.raises(MatrixFileError, match="kind"):
        parse_matrix(_with(ARROW_DOC, kind="sparse"))
    with pytest.raises(MatrixFileError, match="field"):
        parse_matrix(_with(ARROW_DOC, field="rational"))
    with pytest.raises(MatrixFileError):
        parse_matrix(["not", "an", "object"])


def test_bool_is_not_a_number():
    with pytest.raises(MatrixFileError):
        parse_matrix(_with(ARROW_DOC, alpha=True))
    with pytest.raises(MatrixFileError):
        parse_matrix(_with(ARROW_DOC, n=True))


def test_wrong_lengths():
    with pytest.raises(MatrixFileError, match="diag"):
        parse_matrix(_with(ARROW_DOC, diag=[2.0]))
    with pytest.raises(MatrixFileError, match="u"):
        parse_matrix(_with(ARROW_DOC, u=[1.0, 1.0, 1.0]))


def test_bad_scalar_shape():
    doc = {"kind": "dpr1", "field": "complex", "n": 1,
           "diag": [[1, 0]], "x": [[1, 0]], "y": [[1, 0]], "rho": [1, 0, 0]}
    with pytest.raises(MatrixFileError, match="rho"):
        parse_matrix(doc)


def test_tip_out_of_range():
    with pytest.raises(MatrixFileError):
        parse_matrix(_with(ARROW_DOC, tip=0))
    with pytest.raises(MatrixFileError):
        parse_matrix(_with(ARROW_DOC, tip=4))


def test_n_must_be_positive():
    with pytest.raises(MatrixFileError, match="'n'"):
        parse_matrix(_with(ARROW_DOC, n=0, diag=[], u=[], v=[], tip=1))


def test_block_k_mismatch():
    rng = np.random.default_rng(72)
    m = sample_dpr1(rng, 2, "block", block_k=2)
    doc = serialize_matrix(m)
    doc["block_k"] = 3
    with pytest.raises(MatrixFileError):
        parse_matrix(doc)


def test_block_requires_block_k():
    rng = np.random.default_rng(73)
    doc = serialize_matrix(sample_dpr1(rng, 2, "block", block_k=2))
    doc.pop("block_k")
    with pytest.raises(MatrixFileError, match="block_k"):
        parse_matrix(doc)


def test_vector_must_be_bare_array(tmp_path):
    rng = np.random.default_rng(74)
    m = sample_dpr1(rng, 2, "real")
    p = tmp_path / "z.json"
    p.write_text(json.dumps({"vec": [1.0, 2.0]}))
    with pytest.raises(MatrixFileError):
        load_vector(str(p), m)
    p.write_text(json.dumps([1.0, 2.0, 3.0]))
    with pytest.raises(MatrixFileError):
        load_vector(str(p), m)


def test_scalar_codecs():
    assert encode_scalar(1.5) == 1.5
    assert encode_scalar(2 - 3j) == [2.0, -3.0]
    assert encode_scalar(Quaternion(1, 2, 3, 4)) == [1.0, 2.0, 3.0, 4.0]
    assert decode_scalar([1, 2], "complex") == 1 + 2j
    q = decode_scalar([1, 2, 3, 4], "quaternion")
    assert q == Quaternion(1, 2, 3, 4)
    b = decode_scalar([[1, 2], [3, 4]], "block", block_k=2, block_base="real")
    assert b.entries.tolist() == [[1.0, 2.0], [3.0, 4.0]]
    assert encode_scalar(b) == [[1.0, 2.0], [3.0, 4.0]]
