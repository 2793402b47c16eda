import functools
import math

import numpy as np
import pytest

from tserkit._random import generator, member_seed
from tserkit.data import TimeSeries, TimeSeriesDataset, synth_generate, train_test_split
from tserkit.features import FRESH_NAMES, N_POOL, catch22, fresh_features, summary_stats
from tserkit.learners import CartRegressor, RotationForestRegressor
from tserkit.regressors import (
    REGRESSOR_NAMES,
    DrCIF,
    FreshPRINCE,
    KNeighborsTSER,
    RegressorSpec,
    TimeSeriesForest,
    default_n_intervals,
    dtw_distance,
    flatten,
    fresh_channels,
    knn_predict,
    make_regressor,
    pairwise_distances,
    validate_params,
)
from tserkit.transforms import REPRESENTATIONS, RepresentationSet, extract_interval, sample_interval

SMALL = {"n_estimators": 3}


def _small(name, seed=0, n_jobs=1):
    params = SMALL if "n_estimators" in validate_params.__globals__["REGISTRY"][name].schema else {}
    return make_regressor(name, params, seed=seed, n_jobs=n_jobs)


@functools.lru_cache(maxsize=None)
def _problem(problem="interval-mean", n=60, m=24, d=1, noise=0.1, seed=0):
    return train_test_split(synth_generate(problem, n, m, d, noise, seed), 0.7)


def _pool_row(series_set, intervals, attributes):
    """Interval features through the public feature functions, column a*j + c."""
    row = []
    for spec in intervals:
        x = extract_interval(series_set, spec)
        pool = np.r_[catch22(x), summary_stats(x)]
        row.extend(pool[attributes])
    return row


class TestContract:
    @pytest.mark.parametrize("name", REGRESSOR_NAMES)
    def test_constant_targets(self, name):
        train, test = _problem(d=2)
        const = TimeSeriesDataset(train.series, np.full(train.n_cases, 2.75))
        model = _small(name).fit(const)
        np.testing.assert_allclose(model.predict(test), 2.75, rtol=1e-12)

    @pytest.mark.parametrize("name", REGRESSOR_NAMES)
    def test_seed_determinism_and_finite(self, name):
        train, test = _problem(d=2)
        a = _small(name, seed=4).fit(train).predict(test)
        b = _small(name, seed=4).fit(train).predict(test)
        np.testing.assert_array_equal(a, b)
        assert a.shape == (test.n_cases,) and np.isfinite(a).all()

    @pytest.mark.parametrize("name", REGRESSOR_NAMES)
    def test_length_mismatch(self, name):
        train, _ = _problem()
        model = _small(name).fit(train)
        with pytest.raises(ValueError, match="length"):
            model.predict(np.zeros((2, 1, 23)))
        with pytest.raises(ValueError, match="channels"):
            model.predict(np.zeros((2, 2, 24)))

    def test_unpreprocessed_data(self):
        ragged = TimeSeriesDataset((TimeSeries(np.arange(10.0)), TimeSeries(np.arange(9.0))), [0.0, 1.0])
        with pytest.raises(ValueError, match="not preprocessed"):
            DrCIF(n_estimators=1).fit(ragged)
        missing = TimeSeriesDataset((TimeSeries([1.0] * 9 + [np.nan]), TimeSeries(np.arange(10.0))), [0.0, 1.0])
        with pytest.raises(ValueError, match="not preprocessed"):
            TimeSeriesForest(n_estimators=1).fit(missing)
        with pytest.raises(ValueError):
            KNeighborsTSER().fit(np.array([[1.0, np.nan]]), [1.0])

    def test_predict_before_fit(self):
        with pytest.raises(RuntimeError):
            DrCIF().predict(np.zeros((1, 1, 10)))

    def test_unknown_regressor_and_params(self):
        with pytest.raises(KeyError):
            make_regressor("svr")
        with pytest.raises(ValueError, match="hyperparameter"):
            validate_params("drcif", {"depth": 3})
        with pytest.raises(ValueError, match="invalid value"):
            validate_params("drcif", {"n_estimators": "many"})
        spec = RegressorSpec("ridge", {"alphas": "0.1,1"}, seed=3)
        assert spec.hyperparameters == {"alphas": (0.1, 1.0)}
        assert spec.build().alphas == (0.1, 1.0)
        with pytest.raises(ValueError):
            RegressorSpec("tsf", {"n_intervals": "x"})

    def test_registered_names(self):
        assert set(REGRESSOR_NAMES) == {
            "drcif", "freshprince", "tsf", "rotf", "randf", "ridge", "1nn-ed", "5nn-ed", "1nn-dtw", "5nn-dtw"
        }
        for name in REGRESSOR_NAMES:
            assert make_regressor(name).name == name


class TestFlatten:
    def test_channel_major(self):
        X = np.array([[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]]])
        np.testing.assert_array_equal(flatten(X), [[1, 2, 3, 4, 5, 6]])

    def test_univariate_identity_and_width(self):
        X = np.random.default_rng(0).normal(size=(4, 1, 7))
        np.testing.assert_array_equal(flatten(X), X[:, 0])
        assert flatten(np.zeros((2, 3, 5))).shape == (2, 15)


class TestDrCIF:
    def test_default_k(self):
        assert default_n_intervals(1, 144) == 8
        assert default_n_intervals(3, 144) == 10
        for d in range(1, 6):
            for L in range(4, 400):
                assert default_n_intervals(d, L) == 4 + math.floor(math.sqrt(d) * math.sqrt(L) / 3 + 1e-12)

    def test_k_per_representation_and_width(self):
        X = np.random.default_rng(0).normal(size=(12, 1, 144))
        y = np.arange(12.0)
        m = DrCIF(n_estimators=2, n_intervals=(8, 8, 8)).fit(X, y)
        assert all(t.width == 240 and t.tree.n_features_in_ == 240 for t in m.estimators_)
        m = DrCIF(n_estimators=1).fit(X, y)
        assert m.n_intervals_ == (8, default_n_intervals(1, 143), default_n_intervals(1, 72))
        assert m.estimators_[0].width == 10 * sum(m.n_intervals_)

    def test_interval_specs_respect_representation_lengths(self):
        X = np.random.default_rng(1).normal(size=(10, 2, 20))
        m = DrCIF(n_estimators=4).fit(X, np.arange(10.0))
        lengths = {"base": 20, "diff": 19, "pgram": 10}
        for t in m.estimators_:
            assert len(set(t.attributes.tolist())) == 10
            for spec in t.intervals:
                assert spec.stop <= lengths[spec.representation] and spec.channel < 2

    def test_single_tree_reduction(self):
        train, test = _problem(m=20)
        seed = 11
        model = DrCIF(n_estimators=1, seed=seed).fit(train)
        # rebuild the one tree from its seed through the public API
        rng = generator(member_seed(seed, 0))
        attributes = rng.choice(N_POOL, size=10, replace=False)
        lengths = {"base": 20, "diff": 19, "pgram": 10}
        ks = model.n_intervals_
        intervals = [
            sample_interval(rng, lengths[rep], 1, rep) for rep, k in zip(REPRESENTATIONS, ks) for _ in range(k)
        ]
        assert tuple(intervals) == model.estimators_[0].intervals
        Xtr = [_pool_row(RepresentationSet.of(s), intervals, attributes) for s in train.series]
        Xte = [_pool_row(RepresentationSet.of(s), intervals, attributes) for s in test.series]
        tree = CartRegressor().fit(Xtr, train.targets)
        np.testing.assert_array_equal(model.predict(test), tree.predict(Xte))

    @pytest.mark.parametrize("r", [1, 7])
    def test_mean_of_members(self, r):
        train, test = _problem()
        model = DrCIF(n_estimators=r, seed=2).fit(train)
        members = model.predict_members(test)
        expected = [math.fsum(members[:, j]) / r for j in range(test.n_cases)]
        np.testing.assert_allclose(model.predict(test), expected, rtol=1e-15, atol=1e-15)

    def test_minimum_length(self):
        X = np.random.default_rng(2).normal(size=(6, 1, 8))
        assert DrCIF(n_estimators=2).fit(X, np.arange(6.0)).predict(X).shape == (6,)
        with pytest.raises(ValueError, match="length"):
            DrCIF().fit(X[:, :, :7], np.arange(6.0))

    def test_invalid(self):
        X = np.zeros((4, 1, 10))
        with pytest.raises(ValueError):
            DrCIF(n_attributes=30).fit(X, np.arange(4.0))
        with pytest.raises(ValueError):
            DrCIF(n_intervals=(1, 2)).fit(X, np.arange(4.0))


class TestTSF:
    def test_interval_count(self):
        X = np.random.default_rng(0).normal(size=(8, 1, 144))
        m = TimeSeriesForest(n_estimators=2).fit(X, np.arange(8.0))
        assert m.n_intervals_ == 12
        assert m.estimators_[0].tree.n_features_in_ == 36

    def test_single_tree_reduction(self):
        train, test = _problem(d=2, m=25)
        model = TimeSeriesForest(n_estimators=1, seed=5).fit(train)
        rng = generator(member_seed(5, 0))
        intervals = [sample_interval(rng, 25, 2, "base") for _ in range(5)]

        def row(s):
            out = []
            for spec in intervals:
                x = extract_interval(s, spec)
                out += [summary_stats(x)[0], summary_stats(x)[1], summary_stats(x)[2]]
            return out

        tree = CartRegressor().fit([row(s) for s in train.series], train.targets)
        np.testing.assert_array_equal(model.predict(test), tree.predict([row(s) for s in test.series]))

    @pytest.mark.parametrize("r", [1, 7])
    def test_mean_of_members(self, r):
        train, test = _problem()
        model = TimeSeriesForest(n_estimators=r, seed=2).fit(train)
        members = model.predict_members(test)
        expected = [math.fsum(members[:, j]) / r for j in range(test.n_cases)]
        np.testing.assert_allclose(model.predict(test), expected, rtol=1e-15, atol=1e-15)

    def test_interval_mean_noise_free(self):
        train, test = _problem(n=200, m=100, noise=0.0, seed=3)
        pred = TimeSeriesForest(n_estimators=50, seed=0).fit(train).predict(test)
        rmse = np.sqrt(np.mean((pred - test.targets) ** 2))
        y = np.r_[train.targets, test.targets]
        assert rmse < 0.1 * y.std()


class TestFreshPRINCE:
    def test_transform_width_and_layout(self):
        X = np.random.default_rng(0).normal(size=(5, 2, 16))
        T = fresh_channels(X)
        assert T.shape == (5, 174)
        np.testing.assert_allclose(T[3, 87:], fresh_features(X[3, 1]), rtol=1e-14, atol=1e-15)
        m = FreshPRINCE(n_estimators=1).fit(X, np.arange(5.0))
        assert len(m.feature_names_) == 174 and m.feature_names_[87] == f"ch1.{FRESH_NAMES[0]}"

    def test_pipeline_equals_rotation_forest_on_features(self):
        train, test = _problem(d=2)
        model = FreshPRINCE(n_estimators=4, seed=6).fit(train)
        rot = RotationForestRegressor(4, seed=6).fit(fresh_channels(train.to_numpy()), train.targets)
        np.testing.assert_array_equal(model.predict(test), rot.predict(fresh_channels(test.to_numpy())))

    def test_slope_feature_is_target(self):
        ds = synth_generate("trend-slope", 20, 50, noise=0.0, seed=2)
        T = fresh_channels(ds.to_numpy())
        np.testing.assert_allclose(T[:, FRESH_NAMES.index("linear_trend_slope")], ds.targets, atol=1e-12)


def brute_dtw(a, b):
    """Minimum over every monotone warping path, by exhaustive recursion."""
    a = np.atleast_2d(a)
    b = np.atleast_2d(b)
    m = a.shape[1]

    def cost(i, j):
        return float(np.sum((a[:, i] - b[:, j]) ** 2))

    best = math.inf

    def walk(i, j, acc):
        nonlocal best
        acc += cost(i, j)
        if i == m - 1 and j == m - 1:
            best = min(best, acc)
            return
        if i + 1 < m:
            walk(i + 1, j, acc)
        if j + 1 < m:
            walk(i, j + 1, acc)
        if i + 1 < m and j + 1 < m:
            walk(i + 1, j + 1, acc)

    walk(0, 0, 0.0)
    return best


class TestKNN:
    def test_dtw_examples(self):
        assert dtw_distance([0.0, 0.0, 0.0], [1.0, 1.0, 1.0]) == 3.0
        x = np.random.default_rng(0).normal(size=(2, 9))
        assert dtw_distance(x, x) == 0.0
        with pytest.raises(ValueError):
            dtw_distance(np.zeros(3), np.zeros(4))

    @pytest.mark.parametrize("seed", range(5))
    def test_dtw_matches_path_enumeration(self, seed):
        rng = np.random.default_rng(seed)
        a, b = rng.normal(size=(2, 5)), rng.normal(size=(2, 5))
        assert dtw_distance(a, b) == pytest.approx(brute_dtw(a, b), rel=1e-12)
        assert dtw_distance(a, b) == pytest.approx(dtw_distance(b, a), rel=1e-12)
        assert dtw_distance(a, b) <= np.sum((a - b) ** 2) + 1e-12

    def test_euclidean_is_squared(self):
        A = np.array([[[0.0, 0.0], [0.0, 0.0]]])
        B = np.array([[[1.0, 2.0], [0.0, 2.0]]])
        assert pairwise_distances(A, B)[0, 0] == 9.0

    def test_identical_case_returns_its_target(self):
        train, _ = _problem()
        for metric in ("euclidean", "dtw"):
            pred = knn_predict(train, train.subset([4, 9]), 1, metric)
            np.testing.assert_array_equal(pred, train.targets[[4, 9]])

    def test_k_equal_n_is_mean(self):
        train, test = _problem(n=20)
        np.testing.assert_allclose(knn_predict(train, test, k=14), train.targets.mean())

    def test_equidistant_neighbours(self):
        X = np.array([[1.0], [-1.0], [1.0], [-1.0], [1.0], [5.0]])
        y = np.array([1.0, 2.0, 3.0, 4.0, 5.0, 100.0])
        assert KNeighborsTSER(k=5).fit(X, y).predict(np.array([[0.0]]))[0] == 3.0

    def test_ties_to_lowest_index(self):
        X = np.array([[1.0], [-1.0], [1.0]])
        model = KNeighborsTSER(k=2).fit(X, [10.0, 20.0, 30.0])
        assert model.kneighbors(np.array([[0.0]])).tolist() == [[0, 1]]

    def test_k_too_large(self):
        with pytest.raises(ValueError, match="exceeds"):
            KNeighborsTSER(k=5).fit(np.zeros((3, 4)), np.zeros(3))

    def test_thread_invariance(self):
        train, test = _problem()
        a = knn_predict(train, test, 5, "dtw", n_jobs=1)
        b = knn_predict(train, test, 5, "dtw", n_jobs=3)
        np.testing.assert_array_equal(a, b)
