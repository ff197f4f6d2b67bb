import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from genpos.arrangement import enumerate_cells
from genpos.census import classify_tuples
from genpos.datasets import grid_point_set, simplex_hyperplanes
from genpos.geometry import Hyperplane, PointSet
from genpos.pipelines import DichotomyWitness
from genpos.serialize import (
    arrangement_to_dict,
    format_rational,
    hyperplanes_from_json,
    hyperplanes_to_json,
    parse_rational,
    points_from_csv,
    points_to_csv,
    profile_to_dict,
    witness_to_dict,
)


def test_rational_formatting():
    assert format_rational(F(3, 4)) == "3/4"
    assert format_rational(F(-5)) == "-5"
    assert format_rational(7) == "7"
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-5") == F(-5)


@given(st.fractions(max_denominator=10**6))
def test_rational_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


def test_points_csv_roundtrip():
    ps = PointSet.of([(F(1, 2), F(-3)), (F(0), F(7, 5))])
    text = points_to_csv(ps)
    assert text.splitlines()[0] == "x1,x2"
    back = points_from_csv(text)
    assert back.points == ps.points and back.dim == 2


def test_points_csv_header_validation():
    with pytest.raises(ValueError):
        points_from_csv("a,b\n1,2\n")
    with pytest.raises(ValueError):
        points_from_csv("")


def test_hyperplanes_json_roundtrip():
    hps = simplex_hyperplanes(3) + [Hyperplane.from_coeffs((F(1, 3), 0, 1), F(5, 2))]
    back = hyperplanes_from_json(hyperplanes_to_json(hps))
    assert back == hps
    payload = json.loads(hyperplanes_to_json(hps))
    assert payload[0] == {"normal": [1, 0, 0], "offset": 0}


def test_arrangement_dict_shape():
    arr = enumerate_cells(simplex_hyperplanes(2))
    d = arrangement_to_dict(arr)
    assert d["dim"] == 2 and len(d["hyperplanes"]) == 3
    cell = d["cells"][0]
    assert set(cell) == {"signs", "facet_support", "bounded", "simplicial", "witness"}
    assert len(cell["signs"]) == 3 and set(cell["signs"]) <= {"+", "-"}


def test_profile_dict_shape():
    profile = classify_tuples(grid_point_set(2, 3), F(3, 4))
    d = profile_to_dict(profile)
    assert d["tuple_counts"] == {"type1": 0, "type2": 12, "type3": 0, "total": 12}
    assert d["hyperplane_rich"] == {"3": 8, "4": 12}
    assert all({"flat", "profile"} == set(p) for p in d["pencils"])
    json.dumps(d)  # must be JSON-serializable


def test_witness_dict():
    w = DichotomyWitness(
        kind="cohyperplanar",
        indices=(0, 2, 5),
        hyperplane=Hyperplane.from_coeffs((1, 0), 3),
    )
    d = witness_to_dict(w)
    assert d == {
        "kind": "cohyperplanar",
        "indices": [0, 2, 5],
        "hyperplane": {"normal": [1, 0], "offset": 3},
        "guaranteed": True,
    }
