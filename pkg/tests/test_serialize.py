import json

import pytest

from binary_k1 import serialize
from binary_k1.errors import InvalidInput, NotAcyclic
from binary_k1.randgen import (GenConfig, gen_acyclic, gen_binary, gen_ladder, gen_nenashev,
                               gen_ses)

GENS = [gen_acyclic, gen_binary, gen_ladder, gen_ses, gen_nenashev]


@pytest.mark.parametrize("gen", GENS, ids=lambda g: g.__name__)
def test_round_trip(field, gen):
    obj = gen(GenConfig(seed=3, field=field))
    text = serialize.dumps(obj)
    back = serialize.loads(text)
    assert serialize.dumps(back) == text


def test_scalar_encodings():
    p = serialize.load_fixture("two_three")
    data = serialize.to_json(p)
    assert data["field"] == "Q" and data["top"] == [[["2"]]]
    q = serialize.loads('{"field": "Fp", "p": 7, "dims": [1, 1], "top": [[[3]]], "bot": [[[10]]]}')
    assert serialize.to_json(q)["bot"] == [[[3]]]


def test_rational_entries_round_trip():
    text = '{"field": "Q", "dims": [1, 1], "top": [[["2/3"]]], "bot": [[["-1/4"]]]}'
    assert json.loads(serialize.dumps(serialize.loads(text))) == json.loads(text)


def test_empty_matrices_keep_their_shape():
    p = serialize.loads('{"field": "Q", "dims": [0, 2, 2], "top": [[], [["1","0"],["0","1"]]],'
                        ' "bot": [[], [["0","1"],["1","0"]]]}')
    assert p.top.d(1).shape == (0, 2)


@pytest.mark.parametrize("text", [
    "{bad",
    "[]",
    '{"field": "Fp", "p": 4, "dims": [1, 1], "top": [[[1]]], "bot": [[[1]]]}',
    '{"field": "Q", "dims": [1, 1], "top": [[[1, 2]]], "bot": [[[1]]]}',
    '{"field": "Q", "dims": [1, 1], "top": [[["x"]]], "bot": [[[1]]]}',
    '{"field": "Q", "dims": [-1], "top": [], "bot": []}',
    '{"field": "Q", "dims": [1, 1], "top": [[[1]]]}',
    '{"dims": [1, 1], "top": [[[1]]], "bot": [[[1]]]}',
    '{"field": "R", "dims": [1, 1], "top": [[[1]]], "bot": [[[1]]]}',
])
def test_malformed_input(text):
    with pytest.raises(InvalidInput):
        serialize.loads(text)


def test_non_acyclic_input():
    with pytest.raises(NotAcyclic):
        serialize.loads('{"field": "Q", "dims": [1, 1], "top": [[["0"]]], "bot": [[["1"]]]}')


def test_unknown_object_kind():
    with pytest.raises(TypeError):
        serialize.to_json(object())
