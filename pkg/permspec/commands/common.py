"""Options and output handling shared by all sub-commands"""
import csv
import io as _io
import json
import sys

from ..io import dumps_report, encode_exact
from ..utils import load_settings, to_fraction

FORMATS = ("json", "csv", "text")


def add_common_arguments(parser):
    parser.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json)")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes for enumeration")
    parser.add_argument("--seed", type=int, default=None, help="Seed of randomized checks")
    parser.add_argument(
        "--set",
        dest="limits",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="Override a setting such as diag_limit=8",
    )


def add_weights_argument(parser, required=False):
    parser.add_argument(
        "--weights",
        nargs=3,
        metavar=("ALPHA", "BETA", "GAMMA"),
        required=required,
        help="Weights as rational literals, e.g. -1 3/2 2",
    )


def parse_weights(values):
    if values is None:
        return None
    return tuple(to_fraction(v) for v in values)


def split_mode(values, modes, default):
    """(mode, remaining values) of a `[MODE] VALUES...` command line"""
    values = list(values)
    if values and values[0] in modes:
        return values[0], values[1:]
    return default, values


class JsonLines(list):
    """Report of uniform records, rendered as one JSON object per line"""


def _parse_limits(items):
    overrides = {}
    for item in items or ():
        if isinstance(item, tuple):
            key, value = item
        else:
            key, sep, value = item.partition("=")
            if not sep:
                raise ValueError(f"Setting {item!r} is not of the form KEY=VALUE")
        overrides[key.strip()] = value.strip() if isinstance(value, str) else value
    return overrides


def settings_from(args) -> dict:
    """Runtime settings with the command line options on top"""
    return load_settings(
        workers=getattr(args, "workers", None),
        seed=getattr(args, "seed", None),
        **_parse_limits(getattr(args, "limits", None)),
    )


def _flatten(report, prefix=""):
    """(key, value) rows of a nested report, lists joined by spaces"""
    if isinstance(report, dict):
        rows = []
        for key, value in report.items():
            name = f"{prefix}.{key}" if prefix else str(key)
            rows.extend(_flatten(value, name))
        return rows
    if isinstance(report, list) and any(isinstance(v, (dict, list)) for v in report):
        rows = []
        for idx, value in enumerate(report):
            rows.extend(_flatten(value, f"{prefix}[{idx}]"))
        return rows
    if isinstance(report, list):
        return [(prefix or "values", " ".join(str(v) for v in report))]
    return [(prefix or "value", "" if report is None else str(report))]


def _plain(value):
    """Encoded rationals back to "p/q" for csv and text output"""
    if isinstance(value, dict):
        if set(value) == {"num", "den"}:
            return f"{value['num']}/{value['den']}"
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_plain(v) for v in value]
    return value


def _render_lines(records, fmt):
    if fmt == "json":
        return "\n".join(json.dumps(encode_exact(record), sort_keys=True) for record in records)
    records = [_plain(encode_exact(record)) for record in records]
    keys = list(records[0]) if records else []
    if fmt == "csv":
        buffer = _io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(keys)
        writer.writerows([record[key] for key in keys] for record in records)
        return buffer.getvalue().rstrip("\n")
    return "\n".join(" ".join(f"{key}={record[key]}" for key in keys) for record in records)


def render(report, fmt="json") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"Unknown format {fmt!r}, allowed values are {list(FORMATS)}")
    if isinstance(report, JsonLines):
        return _render_lines(report, fmt)
    if fmt == "json":
        return dumps_report(report)
    rows = _flatten(_plain(encode_exact(report)))
    if fmt == "csv":
        buffer = _io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    return "\n".join(f"{key}: {value}" for key, value in rows)


def emit(args, status, report):
    """Print the rendered report, exit with `status` when it is nonzero"""
    print(render(report, getattr(args, "format", "json")))
    if status:
        sys.exit(status)
