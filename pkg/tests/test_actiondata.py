import json
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from bottsum.actiondata import (
    CircleActionData,
    DegenerateActionError,
    IsolatedFixedPoint as Pt,
    ManifoldInvariants,
    ParseError,
    SurfaceComponent,
    ValidationError,
    cp_action,
    invariants_from_document,
    invariants_to_document,
    parse,
    serialize,
    sphere_action,
    validate,
)
from bottsum.exactalg import ArgumentError, Partition

S4 = CircleActionData(2, (Pt((1, 1), 1), Pt((1, 1), -1)), (), "S4-rotation")


def test_validate_examples():
    assert validate(S4) == []
    bad = CircleActionData(3, (), (SurfaceComponent(0, -1),))
    [v] = validate(bad)
    assert v.path == "surfaces" and "dimension 4" in v.message
    zero = CircleActionData(2, (Pt((0, 1), 1),))
    [v] = validate(zero)
    assert v.path == "isolated[0].exponents[0]" and "positive" in v.message


def test_validate_collects_everything():
    data = CircleActionData(2, (Pt((1,), 2), Pt((1, -1), 1)), (SurfaceComponent(-1, 0),))
    paths = {v.path for v in validate(data)}
    assert paths == {"isolated[0].exponents", "isolated[0].sign", "isolated[1].exponents[1]",
                     "surfaces[0].genus"}


def test_cp_action_examples():
    assert cp_action([0, 1, 2]).isolated == (Pt((1, 2), 1), Pt((1, 1), -1), Pt((2, 1), 1))
    assert [p.sign for p in cp_action([0, 1, 2, 3]).isolated] == [1, -1, 1, -1]
    assert cp_action([0, 1]).isolated == (Pt((1,), 1), Pt((1,), -1))


def test_cp_action_repeated_weights():
    with pytest.raises(DegenerateActionError, match="blow_up"):
        cp_action([0, 1, 1])


@given(st.lists(st.integers(-30, 30), min_size=2, max_size=7, unique=True))
def test_cp_signs_alternate_for_sorted_weights(weights):
    data = cp_action(sorted(weights))
    assert [p.sign for p in data.isolated] == [(-1) ** j for j in range(len(weights))]
    assert validate(data) == []


def test_cp_signs_follow_weights_under_permutation():
    base = {(w, p.sign) for w, p in zip([0, 1, 2, 3], cp_action([0, 1, 2, 3]).isolated)}
    for perm in permutations([0, 1, 2, 3]):
        got = {(w, p.sign) for w, p in zip(perm, cp_action(perm).isolated)}
        assert got == base


def test_sphere_action():
    assert sphere_action([1, 1]).isolated == S4.isolated
    assert sphere_action([2, 3]).isolated == (Pt((2, 3), 1), Pt((2, 3), -1))
    with pytest.raises(ArgumentError):
        sphere_action([1, 0])


SPEC_DOC = """{"label": "S4-rotation", "half_dimension": 2,
 "isolated": [{"exponents": [1,1], "sign": 1}, {"exponents": [1,1], "sign": -1}],
 "surfaces": [{"genus": 0, "normal_euler": -1, "label": "E"}]}"""


def test_parse_interface_document():
    data = parse(SPEC_DOC)
    assert data.label == "S4-rotation"
    assert data.isolated == S4.isolated
    assert data.surfaces == (SurfaceComponent(0, -1, "E"),)
    assert parse(serialize(data)) == data


def test_surfaces_and_label_optional():
    data = parse('{"half_dimension": 2, "isolated": [{"exponents": [1, 1], "sign": 1}, '
                 '{"exponents": [1, 1], "sign": -1}]}')
    assert data == CircleActionData(2, S4.isolated)


def test_serialize_is_canonical():
    raw = serialize(S4)
    assert raw == serialize(parse(raw))
    doc = json.loads(raw)
    assert list(doc) == sorted(doc)
    assert raw.endswith(b"\n")


def test_big_integers_accepted():
    big = 10 ** 40
    data = parse(json.dumps({"half_dimension": 1, "isolated": [{"exponents": [big], "sign": 1}]}))
    assert data.isolated[0].exponents == (big,)


@pytest.mark.parametrize("doc, message", [
    ('{"half_dimension": 2, "isolated": [{"exponents": [1, 1], "sign": 2}]}', "sign must be 1 or -1"),
    ('{"half_dimension": 2, "isolated": [{"exponents": [1, 1.5], "sign": 1}]}', "isolated[0].exponents[1]"),
    ('{"half_dimension": true}', "half_dimension"),
    ('{"isolated": []}', "missing"),
    ('{"half_dimension": 2, "extra": 1}', "unknown field"),
    ('[1, 2]', "expected an object"),
    ('{"half_dimension": 2,\n "isolated": [}', "line 2"),
])
def test_parse_errors(doc, message):
    with pytest.raises(ParseError, match=message.replace("[", r"\[").replace("]", r"\]")):
        parse(doc)


def test_parse_validation_error():
    doc = '{"half_dimension": 3, "isolated": [], "surfaces": [{"genus": 0, "normal_euler": 1}]}'
    with pytest.raises(ValidationError) as info:
        parse(doc)
    assert [v.path for v in info.value.violations] == ["surfaces"]


points = st.builds(
    lambda exps, sign: Pt(tuple(exps), sign),
    st.lists(st.integers(1, 10 ** 6), min_size=2, max_size=2),
    st.sampled_from([1, -1]),
)
labels = st.one_of(st.none(), st.text(max_size=8))
surfaces = st.builds(SurfaceComponent, st.integers(0, 5), st.integers(-50, 50), labels)
datasets_4d = st.builds(
    lambda pts, surfs, label: CircleActionData(2, tuple(pts), tuple(surfs), label),
    st.lists(points, max_size=6), st.lists(surfaces, max_size=3), labels,
)


@st.composite
def datasets_any(draw):
    n = draw(st.integers(1, 5))
    pts = draw(st.lists(st.builds(lambda e, s: Pt(tuple(e), s),
                                  st.lists(st.integers(1, 99), min_size=n, max_size=n),
                                  st.sampled_from([1, -1])), max_size=6))
    return CircleActionData(n, tuple(pts), (), draw(labels))


@given(st.one_of(datasets_4d, datasets_any()))
def test_round_trip(data):
    assert validate(data) == []
    assert parse(serialize(data)) == data


def test_invariants_document_round_trip():
    inv = ManifoldInvariants(8, 5, 1, {Partition([2]): 10, Partition([1, 1]): None}, "X", ("n",))
    doc = invariants_to_document(inv)
    assert doc["pontryagin"] == {"2": 10, "1,1": None}
    assert invariants_from_document(doc) == inv


def test_invariants_reject_bad_keys():
    with pytest.raises(ParseError):
        invariants_from_document({"dimension": 4, "pontryagin": {"2": 1}})
    with pytest.raises(ArgumentError):
        ManifoldInvariants(6, 0, 1)


def test_reversal():
    rev = S4.reversed()
    assert [p.sign for p in rev.isolated] == [-1, 1]
    assert rev.reversed().isolated == S4.isolated
