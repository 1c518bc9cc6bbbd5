import math

from hypothesis import given
from hypothesis import strategies as st

from hyperdirac.records import OutputRecord

finite = st.floats(allow_nan=False, allow_infinity=False)


@given(rows=st.lists(st.tuples(st.integers(-10, 10), finite, finite), max_size=8))
def test_csv_json_round_trip(rows):
    rec = OutputRecord("spectrum", {"B": 5.0, "m": [0.5]}, ["variant", "x", "y"], [list(r) for r in rows])
    from_csv = OutputRecord.from_csv(rec.to_csv())
    from_json = OutputRecord.from_json(rec.to_json())
    assert from_csv == rec == from_json
    for a, b in zip(from_csv.rows, rec.rows):
        assert all(type(x) is type(y) for x, y in zip(a, b))


def test_header_carries_schema_and_parameters():
    rec = OutputRecord("limit", {"rho": [10.0]}, ["rho", "rel_error"])
    rec.add(10.0, 0.01)
    lines = rec.to_csv().splitlines()
    assert lines[0] == "# schema_version: 1"
    assert lines[2] == '# parameters: {"rho": [10.0]}'
    assert lines[3:] == ["rho,rel_error", "10.0,0.01"]


def test_seventeen_digits():
    rec = OutputRecord("x", {}, ["v"], [[0.1], [1 / 3], [math.pi]])
    values = [line for line in rec.to_csv().splitlines()[4:]]
    assert values == ["0.10000000000000001", "0.33333333333333331", "3.1415926535897931"]
    assert [r[0] for r in OutputRecord.from_csv(rec.to_csv()).rows] == [0.1, 1 / 3, math.pi]
