"""Reader and writer for the ``.ts`` regression file format.

A file is a block of ``@key value`` header lines terminated by ``@data``,
followed by one case per line::

    @problemName Example
    @univariate false
    @dimensions 2
    @equalLength true
    @seriesLength 3
    @targetlabel true
    @data
    1.0,2.0,3.0:4.0,5.0,6.0:0.25

Channels are colon separated, values comma separated, and the final field is
the real-valued target. ``?`` marks a missing value.
"""

from __future__ import annotations

import logging
import math
import os
from pathlib import Path

import numpy as np

from ._dataset import TimeSeries, TimeSeriesDataset

logger = logging.getLogger(__name__)

_BOOL_KEYS = {"timestamps", "missing", "univariate", "equallength", "targetlabel"}
_INT_KEYS = {"dimensions", "serieslength"}
_KNOWN_KEYS = _BOOL_KEYS | _INT_KEYS | {"problemname", "data"}


class TsParseError(ValueError):
    """Raised for malformed ``.ts`` content; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None, path=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.path = path

    def __str__(self) -> str:
        where = f"{self.path}:" if self.path is not None else ""
        if self.line is not None:
            where += f"line {self.line}: "
        elif where:
            where += " "
        return where + self.message


def _parse_bool(text: str, key: str, lineno: int) -> bool:
    t = text.strip().lower()
    if t == "true":
        return True
    if t == "false":
        return False
    raise TsParseError(f"@{key} expects true/false, got {text!r}", lineno)


def _parse_value(token: str, lineno: int) -> float:
    token = token.strip()
    if token == "?":
        return math.nan
    try:
        v = float(token)
    except ValueError:
        raise TsParseError(f"non-numeric value {token!r}", lineno) from None
    if math.isnan(v):
        # only '?' may denote a missing value
        raise TsParseError(f"invalid value {token!r}", lineno)
    return v


def _parse_case(line: str, lineno: int):
    fields = line.split(":")
    if len(fields) < 2:
        raise TsParseError("expected at least one channel and a target", lineno)
    target_text = fields[-1].strip()
    try:
        target = float(target_text)
    except ValueError:
        raise TsParseError(f"non-numeric target {target_text!r}", lineno) from None
    if not math.isfinite(target):
        raise TsParseError(f"target must be finite, got {target_text!r}", lineno)
    channels = []
    for field_text in fields[:-1]:
        field_text = field_text.strip()
        if field_text.startswith("("):
            raise TsParseError("timestamped series are not supported", lineno)
        if not field_text:
            raise TsParseError("empty channel", lineno)
        channels.append([_parse_value(tok, lineno) for tok in field_text.split(",")])
    length = len(channels[0])
    for k, ch in enumerate(channels):
        if len(ch) != length:
            raise TsParseError(
                f"ragged channels: channel 0 has {length} values, channel {k} has {len(ch)}",
                lineno,
            )
    return channels, target


def parse_ts_lines(lines, source=None) -> TimeSeriesDataset:
    header: dict = {}
    in_data = False
    series = []
    targets = []
    n_channels = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not in_data:
            if not line.startswith("@"):
                raise TsParseError("expected a header line starting with '@'", lineno, source)
            parts = line[1:].split(None, 1)
            if not parts:
                raise TsParseError("empty header key", lineno, source)
            key = parts[0].lower()
            value = parts[1].strip() if len(parts) > 1 else ""
            if key == "data":
                if value:
                    raise TsParseError("@data takes no value", lineno, source)
                in_data = True
                continue
            if key not in _KNOWN_KEYS:
                logger.warning("ignoring unknown header key @%s (line %d)", parts[0], lineno)
                continue
            if not value:
                raise TsParseError(f"@{parts[0]} requires a value", lineno, source)
            try:
                if key in _BOOL_KEYS:
                    header[key] = _parse_bool(value, parts[0], lineno)
                elif key in _INT_KEYS:
                    try:
                        header[key] = int(value)
                    except ValueError:
                        raise TsParseError(f"@{parts[0]} expects an integer, got {value!r}", lineno) from None
                    if header[key] < 1:
                        raise TsParseError(f"@{parts[0]} must be positive", lineno)
                else:
                    header[key] = value
            except TsParseError as e:
                e.path = source
                raise
            continue
        if line.startswith("@"):
            raise TsParseError("header line after @data", lineno, source)
        try:
            channels, target = _parse_case(line, lineno)
        except TsParseError as e:
            e.path = source
            raise
        if n_channels is None:
            n_channels = len(channels)
        elif len(channels) != n_channels:
            raise TsParseError(
                f"case has {len(channels)} channels, previous cases have {n_channels}", lineno, source
            )
        series.append(TimeSeries(channels))
        targets.append(target)

    if not in_data:
        raise TsParseError("missing @data section", None, source)
    if not series:
        raise TsParseError("no cases after @data", None, source)
    if header.get("targetlabel") is False:
        raise TsParseError("@targetlabel false: file has no regression targets", None, source)
    dims = header.get("dimensions")
    if header.get("univariate") is True and n_channels != 1:
        raise TsParseError(f"@univariate true but cases have {n_channels} channels", None, source)
    if dims is not None and dims != n_channels:
        raise TsParseError(f"@dimensions {dims} but cases have {n_channels} channels", None, source)

    ds = TimeSeriesDataset(
        tuple(series),
        np.asarray(targets),
        header.get("problemname", "unnamed"),
    )
    if header.get("equallength") is True and not ds.equal_length:
        raise TsParseError("@equalLength true but series lengths differ", None, source)
    m = header.get("serieslength")
    if m is not None and ds.equal_length and int(ds.lengths[0]) != m:
        raise TsParseError(f"@seriesLength {m} but series have length {ds.lengths[0]}", None, source)
    if header.get("missing") is False and ds.has_missing:
        raise TsParseError("@missing false but '?' values present", None, source)
    ds.metadata.update(
        {
            "equal_length": ds.equal_length,
            "missing": ds.has_missing,
            "header": dict(header),
        }
    )
    return ds


def parse_ts(path) -> TimeSeriesDataset:
    """Read a ``.ts`` file.

    Raises
    ------
    TsParseError
        On a malformed header, ragged channels within a case, or a
        non-numeric value or target. The message names the line.
    """
    path = Path(path)
    with open(path, encoding="utf-8") as f:
        return parse_ts_lines(f, source=str(path))


def _fmt(v: float) -> str:
    if math.isnan(v):
        return "?"
    return repr(float(v))


def format_ts(dataset: TimeSeriesDataset) -> str:
    d = dataset.n_channels
    lines = [
        f"@problemName {dataset.problem_name}",
        "@timeStamps false",
        f"@missing {'true' if dataset.has_missing else 'false'}",
        f"@univariate {'true' if d == 1 else 'false'}",
        f"@dimensions {d}",
        f"@equalLength {'true' if dataset.equal_length else 'false'}",
    ]
    if dataset.equal_length:
        lines.append(f"@seriesLength {int(dataset.lengths[0])}")
    lines += ["@targetlabel true", "@data"]
    for s, y in zip(dataset.series, dataset.targets):
        if s.length == 0:
            raise ValueError("cannot write an empty channel")
        chans = [",".join(_fmt(v) for v in s.channel(k)) for k in range(d)]
        lines.append(":".join(chans) + ":" + _fmt(y))
    return "\n".join(lines) + "\n"


def write_ts(dataset: TimeSeriesDataset, path) -> None:
    """Write ``dataset`` so that :func:`parse_ts` reproduces its values exactly.

    Floats use Python's shortest round-trip representation.
    """
    text = format_ts(dataset)
    path = Path(path)
    if path.parent and not path.parent.exists():
        os.makedirs(path.parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def dataset_paths(data_dir, name: str) -> tuple[Path, Path]:
    base = Path(data_dir) / name
    return base / f"{name}_TRAIN.ts", base / f"{name}_TEST.ts"


def load_problem(data_dir, name: str) -> tuple[TimeSeriesDataset, TimeSeriesDataset]:
    """Load ``<data_dir>/<name>/<name>_TRAIN.ts`` and ``_TEST.ts``."""
    train_path, test_path = dataset_paths(data_dir, name)
    return parse_ts(train_path), parse_ts(test_path)
