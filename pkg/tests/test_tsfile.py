import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tserkit.data import (
    TimeSeries,
    TimeSeriesDataset,
    TsParseError,
    format_ts,
    load_problem,
    parse_ts,
    parse_ts_lines,
    write_ts,
)

HEADER = """@problemName Toy
@timeStamps false
@missing false
@univariate false
@dimensions 2
@equalLength true
@seriesLength 3
@targetlabel true
@data
"""


def _lines(text):
    return text.splitlines()


def test_parse_multivariate():
    ds = parse_ts_lines(_lines(HEADER + "1,2,3:4,5,6:0.5\n7,8,9:1,2,3:-1.25\n"))
    assert ds.problem_name == "Toy"
    assert ds.to_numpy().shape == (2, 2, 3)
    np.testing.assert_array_equal(ds.targets, [0.5, -1.25])
    np.testing.assert_array_equal(ds.series[1].channel(1), [1, 2, 3])


def test_missing_and_unequal():
    text = "@problemName x\n@missing true\n@equalLength false\n@data\n1,?,3:2\n4,5:3\n"
    ds = parse_ts_lines(_lines(text))
    assert ds.has_missing
    assert ds.lengths.tolist() == [3, 2]
    assert math.isnan(ds.series[0].channel(0)[1])


@pytest.mark.parametrize(
    "body, match, line",
    [
        ("1,2,3:4,5:0.5\n", "ragged", 10),
        ("1,2,x:4,5,6:0.5\n", "non-numeric value", 10),
        ("1,2,3:4,5,6:abc\n", "non-numeric target", 10),
        ("1,2,3:4,5,6:inf\n", "finite", 10),
        ("1,2,3:4,5,6:0\n1,2,3:0\n", "channels", 11),
        ("1,2,3:4,5,6:nan\n", "finite", 10),
    ],
)
def test_malformed_case_reports_line(body, match, line):
    with pytest.raises(TsParseError, match=match) as info:
        parse_ts_lines(_lines(HEADER + body))
    assert info.value.line == line


@pytest.mark.parametrize(
    "text, match",
    [
        ("1,2:3\n", "header"),
        ("@univariate maybe\n@data\n1:1\n", "true/false"),
        ("@dimensions two\n@data\n1:1\n", "integer"),
        ("@problemName x\n", "@data"),
        ("@data\n", "no cases"),
        ("@targetlabel false\n@data\n1:1\n", "targets"),
        ("@univariate true\n@data\n1:2:3\n", "univariate"),
        ("@seriesLength 4\n@data\n1,2:3\n", "seriesLength"),
        ("@missing false\n@data\n1,?:3\n", "missing"),
        ("@equalLength true\n@data\n1,2:3\n1:3\n", "equalLength"),
        ("@data\n(0,1),(1,2):3\n", "timestamped"),
        ("@data\n1,2:3\n@problemName x\n", "after @data"),
    ],
)
def test_malformed_header(text, match):
    with pytest.raises(TsParseError, match=match):
        parse_ts_lines(_lines(text))


def test_unknown_header_key_is_ignored(caplog):
    ds = parse_ts_lines(_lines("@classLabel false\n@data\n1,2:3\n"))
    assert ds.n_cases == 1
    assert "classLabel" in caplog.text


def test_error_message_names_path(tmp_path):
    p = tmp_path / "bad.ts"
    p.write_text("@data\n1,2:x\n")
    with pytest.raises(TsParseError) as info:
        parse_ts(p)
    assert str(info.value).startswith(f"{p}:line 2:")


def test_covid_shaped_header():
    rng = np.random.default_rng(0)
    rows = [",".join(f"{v:.6g}" for v in rng.random(84)) + f":{rng.random():.6g}" for _ in range(140)]
    text = (
        "@problemName Covid3Month\n@timeStamps false\n@missing false\n@univariate true\n"
        "@equalLength true\n@seriesLength 84\n@targetlabel true\n@data\n" + "\n".join(rows)
    )
    ds = parse_ts_lines(_lines(text))
    assert (ds.n_cases, int(ds.lengths[0]), ds.n_channels) == (140, 84, 1)


def test_write_parse_roundtrip(tmp_path):
    series = (TimeSeries([[0.1, np.nan, 1e-300], [2.0, -0.0, 5e17]]), TimeSeries([[1.0], [3.0]]))
    ds = TimeSeriesDataset(series, [1 / 3, -2.5], "rt")
    write_ts(ds, tmp_path / "a" / "rt_TRAIN.ts")
    back = parse_ts(tmp_path / "a" / "rt_TRAIN.ts")
    assert back == ds
    assert back.problem_name == "rt"


def test_load_problem(tmp_path):
    ds = TimeSeriesDataset.from_numpy(np.ones((3, 1, 4)), [1.0, 2.0, 3.0], "P")
    write_ts(ds, tmp_path / "P" / "P_TRAIN.ts")
    write_ts(ds.subset([0]), tmp_path / "P" / "P_TEST.ts")
    tr, te = load_problem(tmp_path, "P")
    assert tr.n_cases == 3 and te.n_cases == 1


finite = st.floats(allow_nan=False, allow_infinity=False, width=64)
value = st.one_of(finite, st.just(math.nan))


@st.composite
def datasets(draw):
    d = draw(st.integers(1, 3))
    n = draw(st.integers(1, 5))
    series = []
    for _ in range(n):
        m = draw(st.integers(1, 6))
        series.append(TimeSeries([[draw(value) for _ in range(m)] for _ in range(d)]))
    targets = [draw(finite) for _ in range(n)]
    return TimeSeriesDataset(tuple(series), targets, "h")


@given(datasets())
def test_roundtrip_property(ds):
    assert parse_ts_lines(format_ts(ds).splitlines()) == ds
