import json
from fractions import Fraction as F

import pytest

from rayleigh_ks import io
from rayleigh_ks.errors import InvalidDistribution, InvalidInput


def test_parse_vectors_plain():
    vs = io.parse_vectors("2 2\n1 0\n0 1/2  # comment\n")
    assert vs.coords == ((1, 0), (0, F(1, 2)))
    assert vs.sq_norms() == [1, F(1, 4)]


def test_parse_vectors_scaled(fixtures):
    vs = io.read_vectors(fixtures / "pairs.vec")
    assert vs.sq_norms() == [F(1, 2)] * 4
    assert vs.is_isotropic()


def test_parse_vectors_mixed_scales_rational_gram():
    vs = io.parse_vectors("1 2\n1 *sqrt(2)\n1 *sqrt(8)\n")
    assert vs.gram() == [[2, 4], [4, 8]]


@pytest.mark.parametrize(
    "text",
    ["", "2\n1 0\n", "2 2\n1 0\n", "2 1\n1 0 0\n", "1 1\nx\n", "1 1\n1 *sqrt(-1)\n", "1 0\n", "1 2\n1 *sqrt(2)\n1\n"],
)
def test_parse_vectors_rejects(text):
    with pytest.raises(InvalidInput):
        io.parse_vectors(text)


def test_read_distribution(fixtures, tmp_path):
    dist = io.read_distribution(fixtures / "pair.json")
    assert dist.m == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InvalidDistribution):
        io.read_distribution(bad)
    bad.write_text(json.dumps({"m": 2, "support": [{"set": [0], "p": "1/3"}]}))
    with pytest.raises(InvalidInput):
        io.read_distribution(bad)


def test_parse_matrix():
    assert io.parse_matrix("1 0\n0 1/2\n") == [[1, 0], [0, F(1, 2)]]
    with pytest.raises(InvalidInput):
        io.parse_matrix("1 0\n0\n")
    with pytest.raises(InvalidInput):
        io.parse_matrix("")


def test_dumps_is_canonical():
    assert io.dumps({"b": 1, "a": [1, 2]}) == io.dumps({"a": [1, 2], "b": 1})
    assert io.dumps({}).endswith("\n")


def test_write_atomic(tmp_path):
    target = tmp_path / "out.json"
    target.write_text("old")
    io.write_atomic(target, "new\n")
    assert target.read_text() == "new\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.json"]
