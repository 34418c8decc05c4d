import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contactindex.contact import decompose, validate
from contactindex.models import (
    DegenerateWeights,
    ParseError,
    ValidationFailed,
    cp_twistor,
    load_fixture,
    projectivized_cotangent,
    save_fixture,
)


def test_cp_twistor_reference_weights():
    # direct subtraction table for signed weights (1, 2, -1, -2)
    data = cp_twistor((1, 2))
    assert data.n == 1
    got = [sorted(p.tangent_weights) for p in data.points]
    assert got == [
        sorted([1, -2, -3]),
        sorted([-1, -3, -4]),
        sorted([2, 3, -1]),
        sorted([3, 4, 1]),
    ]


def test_cp_twistor_h_values():
    # over the fixed point of signed weight w, L has weight -2w
    data = cp_twistor((1, 2))
    hs = [decompose(p, 1).h for p in data.points]
    assert hs == [-2, -4, 2, 4]
    for h, w in zip(hs, (1, 2, -1, -2)):
        assert abs(h) == 2 * abs(w)


def test_cp_twistor_point_count():
    for a in [(1, 2), (1, 2, 3), (2, 3, 5, 8)]:
        data = cp_twistor(a)
        assert len(data.points) == 2 * len(a)
        assert data.n == len(a) - 1


def test_cp_twistor_degenerate():
    with pytest.raises(DegenerateWeights):
        cp_twistor((1, 1))
    with pytest.raises(DegenerateWeights):
        cp_twistor((1, -1))  # +1 collides with -(-1)
    with pytest.raises(DegenerateWeights):
        cp_twistor((0, 2))  # zero weight collides with its negative
    with pytest.raises(DegenerateWeights):
        cp_twistor((3,))


def test_projectivized_cotangent_reference_point():
    data = projectivized_cotangent((0, 1, 3))
    assert data.n == 1
    assert len(data.points) == 6  # ordered pairs (i, j)
    first = data.points[0]
    assert first.label == "(0,1)"
    assert sorted(first.tangent_weights) == [-2, 1, 3]
    dec = decompose(first, 1)
    assert dec.h == 1  # b_1 - b_0
    assert sorted(dec.d_weights) == [-2, 3]


def test_projectivized_cotangent_counts_and_h():
    b = (0, 1, 3, 7)
    data = projectivized_cotangent(b)
    assert len(data.points) == 12  # (m+1)*m with m = 3
    for point in data.points:
        i, j = map(int, point.label.strip("()").split(","))
        assert decompose(point, data.n).h == b[j] - b[i]


def test_projectivized_cotangent_degenerate():
    with pytest.raises(DegenerateWeights):
        projectivized_cotangent((0, 1, 1))
    with pytest.raises(DegenerateWeights):
        projectivized_cotangent((0, 1))  # m must be at least 2


def test_load_fixture_roundtrip(tmp_path):
    data = cp_twistor((1, 2))
    path = tmp_path / "cp3.json"
    save_fixture(data, path, comment="regenerated")
    again = load_fixture(path)
    assert again == data


def test_shipped_cp3_fixture(fixtures_dir):
    data = load_fixture(fixtures_dir / "cp3.json")
    assert data.n == 1
    assert len(data.points) == 4
    assert validate(data).valid
    assert data == cp_twistor((1, 2), name=data.name)


def test_load_fixture_truncated_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"name": "x", "n": 1, "poi')
    with pytest.raises(ParseError):
        load_fixture(path)


def test_load_fixture_wrong_arity(tmp_path):
    path = tmp_path / "short.json"
    path.write_text(
        json.dumps(
            {"name": "x", "n": 1, "points": [{"label": "q", "tangent_weights": [1, -3]}]}
        )
    )
    with pytest.raises(ValidationFailed) as err:
        load_fixture(path)
    assert err.value.report.codes() == ["wrong_arity"]


def test_load_fixture_missing(tmp_path):
    with pytest.raises(ParseError):
        load_fixture(tmp_path / "absent.json")


distinct_magnitudes = st.lists(
    st.integers(min_value=1, max_value=30), min_size=2, max_size=4, unique=True
)


@given(distinct_magnitudes, st.lists(st.booleans(), min_size=4, max_size=4))
@settings(max_examples=40, deadline=None)
def test_cp_twistor_always_validates(mags, signs):
    a = [m if s else -m for m, s in zip(mags, signs)]
    data = cp_twistor(a)
    assert validate(data).valid


@given(st.lists(st.integers(min_value=-15, max_value=15), min_size=3, max_size=4, unique=True))
@settings(max_examples=40, deadline=None)
def test_projectivized_cotangent_always_validates(b):
    data = projectivized_cotangent(b)
    assert validate(data).valid
