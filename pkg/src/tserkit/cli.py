"""Command line interface: ``tserkit {run,stats,synth,features}``.

Exit codes: 0 success, 1 configuration or input error, 2 some experiment
tuples failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

EXIT_OK, EXIT_CONFIG, EXIT_PARTIAL = 0, 1, 2


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(f"{self.prog}: {message}")


def _err(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _split_list(text: str) -> list:
    return [t.strip() for t in text.split(",") if t.strip()]


def read_config(path) -> dict:
    """Flat ``key = value`` file; ``#`` starts a comment. Repeated keys accumulate."""
    out: dict = {}
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        out.setdefault(key.replace("-", "_"), []).append(value)
    return out


def _apply_config(parser: argparse.ArgumentParser, argv: list, cfg: dict) -> argparse.Namespace:
    actions = {a.dest: a for a in parser._actions if a.dest not in ("help", "config")}
    defaults = {}
    for key, values in cfg.items():
        if key not in actions:
            raise ConfigError(f"unknown config key {key!r}")
        action = actions[key]
        if isinstance(action, argparse._AppendAction):
            defaults[key] = [action.type(v) if action.type else v for v in values]
        elif isinstance(action, argparse._StoreTrueAction):
            v = values[-1].lower()
            if v not in ("true", "false"):
                raise ConfigError(f"config key {key} expects true/false")
            defaults[key] = v == "true"
        else:
            defaults[key] = values[-1]
    parser.set_defaults(**defaults)
    # argparse copies a list default before appending, so --param flags add to the file's
    return parser.parse_args(argv)


def _parse_params(items) -> dict:
    out: dict = {}
    for item in items or []:
        if "=" not in item or "." not in item.split("=", 1)[0]:
            raise ConfigError(f"--param expects regressor.key=value, got {item!r}")
        lhs, value = item.split("=", 1)
        reg, key = lhs.split(".", 1)
        out.setdefault(reg.strip(), {})[key.strip()] = value.strip()
    return out


# ---------------------------------------------------------------------------
# run


def _discover(data_dir: Path) -> list:
    from .data import dataset_paths

    if not data_dir.is_dir():
        raise ConfigError(f"data directory {data_dir} does not exist")
    names = []
    for sub in sorted(p for p in data_dir.iterdir() if p.is_dir()):
        tr, te = dataset_paths(data_dir, sub.name)
        if tr.exists() and te.exists():
            names.append(sub.name)
    return names


def cmd_run(args) -> int:
    from .data import TsParseError, dataset_paths, load_problem
    from .evaluation import ResultsFormatError, read_results, run_experiment
    from .regressors import REGRESSOR_NAMES, validate_params

    if args.data_dir is None:
        raise ConfigError("no data directory: pass --data-dir or set TSER_DATA_DIR")
    data_dir = Path(args.data_dir)
    regressors = _split_list(args.regressors or "")
    if not regressors:
        raise ConfigError("no regressors given")
    unknown = [r for r in regressors if r not in REGRESSOR_NAMES]
    if unknown:
        raise ConfigError(f"unknown regressor(s): {', '.join(unknown)}; choose from {', '.join(REGRESSOR_NAMES)}")
    if args.resamples < 1:
        raise ConfigError("--resamples must be at least 1")
    if args.threads < 1:
        raise ConfigError("--threads must be at least 1")
    params = _parse_params(args.param)
    for reg, p in params.items():
        if reg not in regressors:
            raise ConfigError(f"--param given for {reg}, which is not being run")
        try:
            validate_params(reg, p)
        except (KeyError, ValueError) as e:
            raise ConfigError(str(e)) from None

    names = _split_list(args.datasets or "")
    if names == ["all"]:
        names = _discover(data_dir)
        if not names:
            raise ConfigError(f"no datasets found under {data_dir}")
    if not names:
        raise ConfigError("no datasets given")
    missing = [n for n in names if not all(p.exists() for p in dataset_paths(data_dir, n))]
    if missing:
        raise ConfigError(f"unknown dataset(s) in {data_dir}: {', '.join(missing)}")
    problems = {}
    for n in names:
        try:
            problems[n] = load_problem(data_dir, n)
        except (TsParseError, OSError) as e:
            raise ConfigError(f"cannot load {n}: {e}") from None
    if args.out and Path(args.out).exists():
        try:
            read_results(args.out)
        except ResultsFormatError as e:
            raise ConfigError(f"existing results file is malformed: {e}") from None

    outcome = run_experiment(
        problems,
        regressors,
        resamples=args.resamples,
        seed=args.seed,
        n_jobs=args.threads,
        out_path=args.out,
        params=params,
        timing=not args.no_timing,
        progress=_err,
    )
    total = len(names) * len(regressors) * args.resamples
    _err(
        f"done: {len(outcome.results)}/{total} tuples complete "
        f"({outcome.skipped} resumed), {len(outcome.failures)} failed"
    )
    if outcome.failures:
        for f in outcome.failures:
            _err(f"failed: {f.dataset} {f.regressor} resample {f.resample}: {f.error}")
        return EXIT_PARTIAL
    return EXIT_OK


# ---------------------------------------------------------------------------
# stats


def cmd_stats(args) -> int:
    from .evaluation import ResultsFormatError, read_results, statistics_report

    try:
        results = read_results(args.results)
    except FileNotFoundError:
        raise ConfigError(f"results file {args.results} not found") from None
    except ResultsFormatError as e:
        raise ConfigError(f"malformed results: {e}") from None
    if not results:
        raise ConfigError(f"{args.results} has no result rows")
    regressors = _split_list(args.regressors) if args.regressors else None
    datasets = _split_list(args.datasets) if args.datasets else None
    if args.resamples is not None:
        regs = regressors or sorted({r.regressor for r in results})
        dss = datasets or sorted({r.dataset for r in results})
        have = {(r.dataset, r.regressor, r.resample) for r in results}
        gaps = [
            f"{d}/{g}/{i}" for d in dss for g in regs for i in range(args.resamples) if (d, g, i) not in have
        ]
        if gaps:
            raise ConfigError(f"incomplete results, missing tuples: {', '.join(gaps)}")
    try:
        report = statistics_report(results, args.alpha, regressors, datasets)
    except ValueError as e:
        raise ConfigError(f"incomplete results: {e}") from None
    text = json.dumps(report, indent=2, sort_keys=False)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# synth


def cmd_synth(args) -> int:
    from .data import PROBLEMS, synth_generate, train_test_split, write_ts
    from .data._dataset import TimeSeriesDataset

    if args.problem not in PROBLEMS:
        raise ConfigError(f"unknown problem {args.problem!r}; choose from {', '.join(PROBLEMS)}")
    try:
        ds = synth_generate(args.problem, args.n, args.m, args.d, args.noise, args.seed)
    except ValueError as e:
        raise ConfigError(str(e)) from None
    out = Path(args.out)
    name = out.name
    ds = TimeSeriesDataset(ds.series, ds.targets, name, ds.metadata)
    train, test = train_test_split(ds, 0.7)
    write_ts(train, out / f"{name}_TRAIN.ts")
    write_ts(test, out / f"{name}_TEST.ts")
    _err(f"wrote {train.n_cases} train and {test.n_cases} test cases to {out}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# features


def cmd_features(args) -> int:
    from .features import feature_catalogue

    pool = {"all": "all", "drcif": "interval", "fresh": "fresh"}[args.pool]
    interval_ids = {f.id for f in feature_catalogue("interval")}
    for f in feature_catalogue(pool):
        flag = "drcif-pool" if f.id in interval_ids else "-"
        print(f"{f.id}\t{f.family}\t{flag}\t{f.description}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tserkit", description="Time series extrinsic regression benchmark tools.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    r = sub.add_parser("run", help="run (dataset, regressor, resample) experiments")
    r.add_argument("--config", help="flat key = value file mirroring these flags")
    r.add_argument("--data-dir", default=os.environ.get("TSER_DATA_DIR"), help="default: $TSER_DATA_DIR")
    r.add_argument("--datasets", help="comma separated names, or 'all'")
    r.add_argument("--regressors", help="comma separated registered names")
    r.add_argument("--resamples", type=int, default=30)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    r.add_argument("--out", default="results.csv")
    r.add_argument("--param", action="append", metavar="REG.KEY=VALUE", help="hyperparameter override")
    r.add_argument("--no-timing", action="store_true", help="write zero timing columns")
    r.set_defaults(func=cmd_run)

    s = sub.add_parser("stats", help="rank statistics from a results CSV")
    s.add_argument("--config")
    s.add_argument("--results", default="results.csv")
    s.add_argument("--out", help="JSON output path (default: stdout)")
    s.add_argument("--alpha", type=float, default=0.05)
    s.add_argument("--regressors", help="restrict to these regressors")
    s.add_argument("--datasets", help="restrict to these datasets")
    s.add_argument("--resamples", type=int, help="require resamples 0..N-1 for every pair")
    s.set_defaults(func=cmd_stats)

    g = sub.add_parser("synth", help="write a synthetic train/test problem")
    g.add_argument("--config")
    g.add_argument("--problem", required=False, default=None)
    g.add_argument("--n", type=int, default=200)
    g.add_argument("--m", type=int, default=100)
    g.add_argument("--d", type=int, default=1)
    g.add_argument("--noise", type=float, default=0.1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=False, default=None)
    g.set_defaults(func=cmd_synth)

    f = sub.add_parser("features", help="list the feature catalogue")
    f.add_argument("action", nargs="?", default="list", choices=["list"])
    f.add_argument("--config")
    f.add_argument("--pool", choices=["all", "drcif", "fresh"], default="all")
    f.set_defaults(func=cmd_features)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_CONFIG
        if getattr(args, "config", None):
            sub = parser._subparsers._group_actions[0].choices[args.command]
            command = args.command
            args = _apply_config(sub, argv[1:], read_config(args.config))
            args.command = command
        if args.command == "synth" and (args.problem is None or args.out is None):
            raise ConfigError("synth requires --problem and --out")
        return args.func(args)
    except ConfigError as e:
        _err(f"error: {e}")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
