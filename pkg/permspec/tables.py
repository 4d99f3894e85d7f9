"""Access to the published permanent data bundled with permspec"""
import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict, List

from ase.config import cfg as _cfg

from .common import default_tables_file
from .utils import sanitize_path


class RankOutOfRange(IndexError):
    def __init__(self, message):
        self.message = message


def locate_tables(cfg=_cfg) -> Path:
    """Published-table JSON file with priority
    1) $PERMSPEC_TABLES
    2) `tables` key of the [permspec] section
    3) the bundled json_tables/published.json
    """
    path = cfg.get("PERMSPEC_TABLES")
    if path is None:
        parser = cfg.parser["permspec"] if "permspec" in cfg.parser else {}
        path = parser.get("tables") if parser else None
    if path is None:
        return default_tables_file
    return sanitize_path(path)


def _int_keyed(mapping) -> Dict[int, List[int]]:
    return {int(k): sorted(int(v) for v in values) for k, values in mapping.items()}


class PublishedTables:
    """
    Published coefficients of the ranked upper magnitudes and the small
    spectra of Λ_n³, loaded from a JSON file.

    Attributes:
        format_version (str): Version of the table layout.
        upper_tables (dict): kind -> residue -> {"coefficients", ...}.
        spectra (dict): n -> published ps[Λ_n³].
        indecomposable_spectra (dict): n -> permanents of completely
            indecomposable members.
        source (dict): Path and type of the loaded file.

    Methods:
        coefficients(kind, j): Published coefficient list.
        coefficient(kind, j, rank): One coefficient, 1-based rank.
    """

    kinds = ("symmetric", "general")

    def __init__(self, json_tables=None):
        json_tables = locate_tables() if json_tables is None else Path(json_tables)
        with open(json_tables, "r") as fd:
            data = json.load(fd)
        self.format_version = data["format_version"]
        self.upper_tables = data["upper_tables"]
        self.spectra = _int_keyed(data["spectra"])
        self.indecomposable_spectra = _int_keyed(data["indecomposable_spectra"])
        self.circulant_spectra = _int_keyed(data.get("circulant_spectra", {}))
        self.weighted_spectra = {
            key: sorted(int(v) for v in values) for key, values in data.get("weighted_spectra", {}).items()
        }
        self.parity_census = {int(k): v for k, v in data.get("parity_census", {}).items()}
        self.source = {"path": json_tables.as_posix(), "type": "json"}

    def _table(self, kind, j):
        if kind not in self.kinds:
            raise KeyError(f"Unknown table kind {kind!r}, allowed values are {list(self.kinds)}")
        try:
            return self.upper_tables[kind][str(j)]
        except KeyError:
            raise KeyError(f"No {kind} table for residue j={j}")

    def coefficients(self, kind, j) -> List[Fraction]:
        return [Fraction(c) for c in self._table(kind, j)["coefficients"]]

    def coefficient(self, kind, j, rank) -> Fraction:
        """Coefficient of 6^{(n-j)/3} at the given rank (1-based)

        Raises:
            RankOutOfRange: if the rank is not published.
        """
        coefficients = self.coefficients(kind, j)
        if not 1 <= rank <= len(coefficients):
            raise RankOutOfRange(
                f"Rank {rank} out of range for the {kind} table j={j} (1..{len(coefficients)})"
            )
        return coefficients[rank - 1]

    def min_n(self, kind, j) -> int:
        return int(self._table(kind, j)["min_n"])

    def attained_in_symmetric(self, j) -> List[int]:
        return list(self._table("general", j).get("attained_in_symmetric", []))

    def products(self, j) -> List[str]:
        return list(self._table("symmetric", j).get("products", []))


@lru_cache(maxsize=None)
def _cached_tables(path: str) -> PublishedTables:
    return PublishedTables(path)


def default_tables() -> PublishedTables:
    """Tables from `locate_tables()`, loaded once per path"""
    return _cached_tables(locate_tables().as_posix())
