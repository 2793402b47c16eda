"""Acceptance criteria, each checked at its stated tolerance and time budget.

Every test prints one ``PASS``/``FAIL`` line; the lines are repeated in the
terminal summary. Numba compilation happens in an untimed warm-up fixture.
"""

import contextlib
import itertools
import json
import math
import time
from pathlib import Path

import numpy as np
import pytest

from _oracles import brute_force_wilcoxon, fresh_oracle
from tserkit._random import generator, member_seed
from tserkit.cli import main as cli_main
from tserkit.data import (
    TimeSeries,
    TimeSeriesDataset,
    format_ts,
    parse_ts,
    parse_ts_lines,
    resample_split,
    synth_generate,
    train_test_split,
    write_ts,
)
from tserkit.evaluation import holm_reject, read_results, rmse, wilcoxon_signed_rank
from tserkit.features import FRESH_NAMES, N_POOL, SUMMARY_NAMES, catch22, fresh_features, summary_stats
from tserkit.learners import CartRegressor, rotation_matrix
from tserkit.regressors import (
    DrCIF,
    FlatRandomForest,
    FlatRotationForest,
    FreshPRINCE,
    KNeighborsTSER,
    TimeSeriesForest,
    flatten,
)
from tserkit.transforms import REPRESENTATIONS, RepresentationSet, extract_interval, periodogram, sample_interval

FIXTURES = Path(__file__).parent / "fixtures"
LOG = []
pytestmark = pytest.mark.acceptance


@contextlib.contextmanager
def criterion(capsys, number, title, budget):
    t0 = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        if elapsed < budget:
            status = "PASS"
        else:
            detail = " (over time budget)"
            raise AssertionError(f"criterion {number} took {elapsed:.1f}s, budget {budget}s")
    except BaseException as e:
        if not detail:
            detail = f" ({type(e).__name__}: {str(e).splitlines()[0][:100] if str(e) else ''})"
        raise
    finally:
        elapsed = time.perf_counter() - t0
        line = f"criterion {number} {status} [{elapsed:6.2f}s / {budget}s] {title}{detail}"
        LOG.append(line)
        with capsys.disabled():
            print("\n" + line)


@pytest.fixture(scope="module")
def warm():
    """Compile every numba kernel once, outside the timed sections."""
    X = np.random.default_rng(0).normal(size=(12, 2, 16))
    y = np.arange(12.0)
    for model in (
        DrCIF(n_estimators=1),
        TimeSeriesForest(n_estimators=1),
        FreshPRINCE(n_estimators=1),
        FlatRandomForest(n_estimators=1),
        FlatRotationForest(n_estimators=1),
    ):
        model.fit(X, y).predict(X)
    catch22(X[0, 0])
    summary_stats(X[0, 0])
    KNeighborsTSER(1, "dtw").fit(X, y).predict(X[:2])


# ---------------------------------------------------------------------------


def test_criterion_1_feature_oracles(capsys, warm):
    fixture = json.loads((FIXTURES / "catch22_reference.json").read_text())
    with criterion(capsys, 1, "catch22 fixtures 1e-6 rel; summary and Fresh brute force 1e-9", 5):
        assert len(fixture["cases"]) == 10
        for case in fixture["cases"]:
            assert len(case["series"]) == 100
            np.testing.assert_allclose(catch22(case["series"]), case["values"], rtol=1e-6, atol=1e-12)
        rng = np.random.default_rng(1)
        for m in (5, 17, 100):
            for _ in range(4):
                x = rng.normal(size=m).cumsum()
                o = fresh_oracle(x)
                np.testing.assert_allclose(
                    summary_stats(x), [o[f"summary_{s}"] for s in SUMMARY_NAMES], rtol=1e-9, atol=1e-9
                )
                np.testing.assert_allclose(
                    fresh_features(x), [o[name] for name in FRESH_NAMES], rtol=1e-9, atol=1e-9
                )


def test_criterion_2_spectral_identity(capsys, warm):
    with criterion(capsys, 2, "Parseval 1e-9 on 100 series; cosine peak (A*m/2)^2 at 1e-6", 5):
        rng = np.random.default_rng(2)
        for m in (16, 17, 64, 101):
            for _ in range(25):
                x = rng.normal(size=m) * rng.uniform(0.1, 10)
                p = periodogram(x)
                rhs = np.sum(x) ** 2 + 2 * p.sum() - (p[-1] if m % 2 == 0 else 0.0)
                lhs = m * np.sum(x * x)
                assert abs(lhs - rhs) / lhs < 1e-9
            t = np.arange(m)
            for k in range(1, (m - 1) // 2 + 1):
                A = rng.uniform(0.5, 3)
                p = periodogram(A * np.cos(2 * np.pi * k * t / m))
                assert int(np.argmax(p)) + 1 == k
                assert abs(p[k - 1] - (A * m / 2) ** 2) <= 1e-6 * (A * m / 2) ** 2


def _exact_mean(members):
    r = members.shape[0]
    return np.array([math.fsum(members[:, j]) / r for j in range(members.shape[1])])


def _drcif_single(model, train, test, seed):
    rng = generator(member_seed(seed, 0))
    attributes = rng.choice(N_POOL, size=model.n_attributes, replace=False)
    m = train.to_numpy().shape[2]
    lengths = {"base": m, "diff": m - 1, "pgram": m // 2}
    intervals = [
        sample_interval(rng, lengths[rep], train.n_channels, rep)
        for rep, k in zip(REPRESENTATIONS, model.n_intervals_)
        for _ in range(k)
    ]

    def row(s):
        out = []
        rs = RepresentationSet.of(s)
        for spec in intervals:
            x = extract_interval(rs, spec)
            out.extend(np.r_[catch22(x), summary_stats(x)][attributes])
        return out

    tree = CartRegressor().fit([row(s) for s in train.series], train.targets)
    return tree.predict([row(s) for s in test.series])


def _tsf_single(model, train, test, seed):
    rng = generator(member_seed(seed, 0))
    m = train.to_numpy().shape[2]
    intervals = [sample_interval(rng, m, train.n_channels, "base") for _ in range(model.n_intervals_)]

    def row(s):
        out = []
        for spec in intervals:
            out.extend(summary_stats(extract_interval(s, spec))[:3])
        return out

    tree = CartRegressor().fit([row(s) for s in train.series], train.targets)
    return tree.predict([row(s) for s in test.series])


def _randf_single(model, train, test, seed):
    Xtr, Xte = flatten(train.to_numpy()), flatten(test.to_numpy())
    s = member_seed(seed, 0)
    idx = generator(s).integers(0, Xtr.shape[0], size=Xtr.shape[0])
    tree = CartRegressor(mtry=max(1, Xtr.shape[1] // 3), seed=s).fit(Xtr, train.targets, sample_idx=idx)
    return tree.predict(Xte)


def _rotf_single(model, train, test, seed):
    Xtr, Xte = flatten(train.to_numpy()), flatten(test.to_numpy())
    R = rotation_matrix(Xtr, generator(member_seed(seed, 0)), 3, 0.75)
    return CartRegressor().fit(Xtr @ R, train.targets).predict(Xte @ R)


def test_criterion_3_ensemble_identities(capsys, warm):
    train, test = train_test_split(synth_generate("interval-mean", 60, 32, 2, 0.1, 3), 0.7)
    cases = [
        (DrCIF, _drcif_single),
        (TimeSeriesForest, _tsf_single),
        (FlatRandomForest, _randf_single),
        (FlatRotationForest, _rotf_single),
    ]
    with criterion(capsys, 3, "DrCIF/TSF/RandF/RotF: mean of members for r in {1,7}; r=1 is the base learner", 30):
        for cls, single in cases:
            for r in (1, 7):
                model = cls(n_estimators=r, seed=5).fit(train)
                pred = model.predict(test)
                members = model.predict_members(test)
                assert members.shape == (r, test.n_cases)
                np.testing.assert_allclose(pred, _exact_mean(members), rtol=1e-15, atol=1e-15)
                if r == 1:
                    np.testing.assert_array_equal(pred, single(model, train, test, 5))


def test_criterion_4_thread_determinism(capsys, warm):
    train, test = train_test_split(synth_generate("interval-mean", 100, 64, 1, 0.1, 4), 0.7)
    with criterion(capsys, 4, "DrCIF and FreshPRINCE bitwise identical at 1, 2, 8 threads (n=100, m=64, r=20)", 60):
        for cls in (DrCIF, FreshPRINCE):
            preds = [cls(n_estimators=20, seed=13, n_jobs=j).fit(train).predict(test) for j in (1, 2, 8)]
            for p in preds[1:]:
                assert p.tobytes() == preds[0].tobytes()


def test_criterion_5_recoverability(capsys, warm):
    with criterion(capsys, 5, "interval-mean DrCIF/TSF RMSE < 0.3x mean predictor; trend-slope FreshPRINCE < 1e-2", 180):
        train, test = train_test_split(synth_generate("interval-mean", 200, 100, 1, 0.1, 7), 0.7)
        baseline = rmse(np.full(test.n_cases, train.targets.mean()), test.targets)
        for cls in (DrCIF, TimeSeriesForest):
            score = rmse(cls(n_estimators=50, seed=0).fit(train).predict(test), test.targets)
            with capsys.disabled():
                print(f"\n  {cls.__name__}: rmse {score:.4f}, mean predictor {baseline:.4f}, ratio {score / baseline:.3f}")
            assert score < 0.3 * baseline
        # n=1000: with 140 training cases a step function on the exact slope
        # feature alone is already at about 1e-2
        train, test = train_test_split(synth_generate("trend-slope", 1000, 100, 1, 0.0, 7), 0.7)
        score = rmse(FreshPRINCE(n_estimators=500, seed=0).fit(train).predict(test), test.targets)
        with capsys.disabled():
            print(f"  FreshPRINCE trend-slope: rmse {score:.5f}")
        assert score < 1e-2


def test_criterion_6_statistics_oracle(capsys, warm):
    with criterion(capsys, 6, "Wilcoxon exact vs 2^n enumeration (n<=12, 50 pairs) 1e-12; n=6 -> 0.03125; Holm fixtures", 10):
        rng = np.random.default_rng(6)
        for k in range(50):
            n = 5 + k % 8
            a, b = np.round(rng.normal(size=n), 1), np.round(rng.normal(size=n), 1)
            b[: k % 3] = a[: k % 3]  # some zero differences, which are discarded
            if np.count_nonzero(a - b) < 5:
                with pytest.raises(ValueError):
                    wilcoxon_signed_rank(a, b)
                continue
            assert abs(wilcoxon_signed_rank(a, b) - brute_force_wilcoxon(a, b)) <= 1e-12
        for n in range(1, 5):
            with pytest.raises(ValueError):
                wilcoxon_signed_rank(np.arange(1, n + 1), np.zeros(n))
        assert wilcoxon_signed_rank([1, 2, 3, 4, 5, 6], [0] * 6) == 0.03125
        assert holm_reject([0.01, 0.02, 0.20], 0.05) == [True, True, False]
        assert holm_reject([0.01, 0.04, 0.03, 0.005], 0.05) == [True, False, False, True]
        assert holm_reject([0.025, 0.5], 0.05) == [False, False]
        assert holm_reject([0.04, 0.001], 0.05) == [True, True]


def test_criterion_7_resample_protocol(capsys, warm):
    train, test = train_test_split(synth_generate("interval-mean", 87, 20, 2, 0.1, 1), 0.7)
    pooled = sorted((s.values.tobytes(), y) for s, y in zip(train.series + test.series, np.r_[train.targets, test.targets]))
    with criterion(capsys, 7, "resample 0 is the given split; resamples 1-30 keep sizes and pooled multiset", 5):
        pair = resample_split(train, test, 0)
        assert pair.train == train and pair.test == test
        trains = set()
        for seed in range(1, 31):
            pair = resample_split(train, test, seed)
            assert (pair.train.n_cases, pair.test.n_cases) == (train.n_cases, test.n_cases)
            got = sorted(
                (s.values.tobytes(), y)
                for s, y in zip(pair.train.series + pair.test.series, np.r_[pair.train.targets, pair.test.targets])
            )
            assert got == pooled
            trains.add(pair.train.targets.tobytes())
        assert len(trains) == 30


def _random_dataset(rng, k):
    d = 1 if k % 2 == 0 else int(rng.integers(2, 4))
    unequal = k % 4 >= 2
    missing = k % 8 >= 4
    n = int(rng.integers(1, 12))
    series = []
    for _ in range(n):
        m = int(rng.integers(3, 30)) if unequal else 17
        v = rng.normal(size=(d, m)) * 10.0 ** rng.integers(-5, 6)
        if missing:
            v[rng.random(size=v.shape) < 0.1] = np.nan
        series.append(TimeSeries(v))
    return TimeSeriesDataset(tuple(series), rng.normal(size=n), f"gen{k}")


def test_criterion_8_parser_roundtrip(capsys, warm, tmp_path):
    with criterion(capsys, 8, "20 datasets survive write -> parse exactly; Covid3Month header gives n=140, m=84, d=1", 5):
        rng = np.random.default_rng(8)
        kinds = set()
        for k in range(20):
            ds = _random_dataset(rng, k)
            kinds.add((ds.n_channels > 1, ds.has_missing, not ds.equal_length))
            path = tmp_path / f"gen{k}_TRAIN.ts"
            write_ts(ds, path)
            back = parse_ts(path)
            assert back == ds and back.problem_name == ds.problem_name
            for a, b in zip(back.series, ds.series):
                assert np.array_equal(a.values, b.values, equal_nan=True)
            assert parse_ts_lines(format_ts(back).splitlines()) == ds
        assert {(mv, miss, ul) for mv in (False, True) for miss in (False, True) for ul in (False, True)} <= kinds
        covid = parse_ts(FIXTURES / "Covid3Month_TRAIN.ts")
        assert (covid.n_cases, int(covid.lengths[0]), covid.n_channels) == (140, 84, 1)
        assert covid.problem_name == "Covid3Month"


def test_criterion_9_cli_pipeline(capsys, warm, tmp_path):
    data = tmp_path / "data"
    out = tmp_path / "results.csv"
    stats = tmp_path / "stats.json"
    with criterion(capsys, 9, "run -> stats on 2 datasets x 3 regressors x 3 resamples: 18 rows, ranks sum to 6", 120):
        for name, problem in (("SynthIM", "interval-mean"), ("SynthTS", "trend-slope")):
            assert cli_main(["synth", "--problem", problem, "--seed", "9", "--out", str(data / name)]) == 0
        rc = cli_main(
            ["run", "--data-dir", str(data), "--datasets", "SynthIM,SynthTS", "--regressors", "tsf,ridge,5nn-ed",
             "--resamples", "3", "--out", str(out)]
        )
        assert rc == 0
        rows = read_results(out)
        assert len(rows) == 18
        assert {(r.dataset, r.regressor, r.resample) for r in rows} == set(
            itertools.product(("SynthIM", "SynthTS"), ("tsf", "ridge", "5nn-ed"), range(3))
        )
        assert cli_main(["stats", "--results", str(out), "--resamples", "3", "--out", str(stats)]) == 0
        report = json.loads(stats.read_text())
        assert set(report["dataset_ranks"]) == {"SynthIM", "SynthTS"}
        for ranks in report["dataset_ranks"].values():
            assert sum(ranks.values()) == 6
        assert sorted(report["mean_ranks"]) == ["5nn-ed", "ridge", "tsf"]
        assert len(report["pairwise_p"]) == 3 and report["cliques"]
