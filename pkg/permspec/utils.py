"""Utilities that are loosely related to the core permanent computations:
runtime settings, worker counts, colored printing and exact-number helpers
"""
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, Union
from warnings import warn

import psutil
from ase.config import cfg as _cfg

# Built-in defaults. `workers=None` means "ask psutil"
_DEFAULTS = {
    "workers": None,
    "oracle_limit": 12,
    "diag_limit": 9,
    "sym_limit": 10,
    "heavy_n": 8,
    "seed": 2024,
    "use_numba": True,
}


def _to_bool(value):
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"Cannot interpret {value!r} as boolean")


_CONVERTERS = {
    "workers": int,
    "oracle_limit": int,
    "diag_limit": int,
    "sym_limit": int,
    "heavy_n": int,
    "seed": int,
    "use_numba": _to_bool,
}


def default_workers():
    """Number of physical cores, falling back to 1 when psutil cannot tell"""
    count = psutil.cpu_count(logical=False)
    if not count:
        count = psutil.cpu_count(logical=True) or 1
    return count


def load_settings(cfg=_cfg, **overrides) -> Dict[str, Any]:
    """
    Collect the runtime settings of permspec with the following priority:
    1) keyword argument passed to this function (ignored when None)
    2) environment variable $PERMSPEC_<KEY>
    3) key in the [permspec] section of the ASE configuration file
    4) built-in default

    Raises:
        ValueError: if a value cannot be converted, or a limit is not positive.
    """
    unknown = set(overrides) - set(_CONVERTERS)
    if unknown:
        raise ValueError(f"Unknown settings {sorted(unknown)}")
    parser = cfg.parser["permspec"] if "permspec" in cfg.parser else {}
    settings = {}
    for key, convert in _CONVERTERS.items():
        env_name = f"PERMSPEC_{key.upper()}"
        value, source = overrides.get(key), "argument"
        if value is None:
            value, source = cfg.get(env_name), f"${env_name}"
        if value is None:
            value = parser.get(key) if parser else None
            source = "[permspec] section"
        if value is None:
            value, source = _DEFAULTS[key], "default"
        if value is None and key == "workers":
            value = default_workers()
        try:
            settings[key] = convert(value)
        except (TypeError, ValueError):
            raise ValueError(f"Invalid value {value!r} for setting `{key}` from {source}")
        if key != "use_numba" and key != "seed" and settings[key] < 1:
            raise ValueError(f"Setting `{key}` from {source} must be positive")
    return settings


def to_fraction(value: Union[int, str, Fraction, float]) -> Fraction:
    """Convert user input to an exact rational.

    Strings like "3", "-2/7" are parsed exactly. Floats are only accepted
    if they are integral, anything else would silently lose exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not valid matrix entries")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"Float {value} is not exact, pass a string like 'p/q'")
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    # numpy integers and sympy Rationals end up here
    try:
        return Fraction(int(value.p), int(value.q))
    except AttributeError:
        return Fraction(int(value))


def as_exact(value: Fraction) -> Union[int, Fraction]:
    """Return an int when the rational is integral"""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return value


def sanitize_path(path_string):
    """Sanitize path containing string in UNIX systems
    Returns a resolved Path object
    """
    if isinstance(path_string, str):
        path = os.path.expandvars(os.path.expanduser(path_string))
        path = Path(path).resolve()
    else:
        path = Path(path_string).resolve()
    return path


def sorted_unique(values: Iterable) -> list:
    """Deduplicate exact values and sort them ascending"""
    return sorted(set(values))


def cprint(content, color=None, bold=False, underline=False, **kwargs):
    """Color print wrapper for ansi terminal.
    Only a few color names are provided
    """
    ansi_color = dict(
        HEADER="\033[95m",
        COMMENT="\033[90m",
        OKBLUE="\033[94m",
        OKGREEN="\033[92m",
        OKCYAN="\033[96m",
        WARNING="\033[93m",
        FAIL="\033[91m",
        ENDC="\033[0m",
    )

    style_codes = {"BOLD": "\033[1m", "UNDERLINE": "\033[4m"}

    if color is None:
        output = content
    elif color.upper() in ansi_color.keys() and color.upper() != "ENDC":
        output = ansi_color[color.upper()] + content + ansi_color["ENDC"]
    else:
        raise ValueError(
            f"Unknown ANSI color name. Allowed values are {list(ansi_color.keys())}"
        )

    if bold:
        output = style_codes["BOLD"] + output + ansi_color["ENDC"]

    if underline:
        output = style_codes["UNDERLINE"] + output + ansi_color["ENDC"]

    print(output, **kwargs)
    return


_WARNED = set()


def warn_once(message, category=UserWarning):
    """warnings.warn, but only the first time a given message appears"""
    if message in _WARNED:
        return
    _WARNED.add(message)
    warn(message, category=category, stacklevel=3)
