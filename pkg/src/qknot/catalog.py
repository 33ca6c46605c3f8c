"""Per-knot coefficient data and invariant assembly.

Two kinds of knot records exist: closed forms (3_1, 4_1), which answer any
rank and depth, and finite tables (5_2, 6_1) transcribed from published
coefficient lists, which refuse extrapolation beyond their stored keys.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping

from .errors import OutOfTableError
from .laurent import LaurentPoly
from .qcombin import cyclo_coeff, qbinom_shifted, qint

SOURCE_CLOSED_41 = "closed_form_41"
SOURCE_CLOSED_31 = "closed_form_31"
SOURCE_TABLE = "table"
_SOURCES = (SOURCE_CLOSED_41, SOURCE_CLOSED_31, SOURCE_TABLE)

ENV_CATALOG = "QKNOT_CATALOG"
DEFAULT_CATALOG_PATH = Path("data") / "catalog.json"


@dataclass(frozen=True)
class KnotRecord:
    """Source of the depth-k coefficient polynomials of one knot."""

    name: str
    source: str
    table: Mapping[int, Mapping[int, LaurentPoly]] | None = None

    def __post_init__(self):
        if self.source not in _SOURCES:
            raise ValueError(f"unknown source {self.source!r} for knot {self.name!r}")
        if self.source == SOURCE_TABLE and not self.table:
            raise ValueError(f"table-backed knot {self.name!r} has no table")

    def hk(self, n: int, k: int) -> LaurentPoly:
        """Coefficient polynomial at rank n, depth k.

        Closed-form records answer every (n >= 2, k >= 0); table records
        raise OutOfTableError outside their stored keys, which means "no
        published data here", never "zero".
        """
        if n < 2:
            raise ValueError(f"rank must be >= 2, got {n}")
        if k < 0:
            raise ValueError(f"depth must be >= 0, got {k}")
        if self.source == SOURCE_CLOSED_41:
            return qbinom_shifted(n, k)
        if self.source == SOURCE_CLOSED_31:
            sign = -1 if k % 2 else 1
            return LaurentPoly.monomial(sign, k * (2 * n + k - 1)) * qbinom_shifted(n, k)
        ranks = self.table
        if n not in ranks or k not in ranks[n]:
            raise OutOfTableError(
                f"knot {self.name}: no table entry at rank n={n}, depth k={k}"
            )
        return ranks[n][k]

    def max_depth(self, n: int) -> int | None:
        """Largest stored depth at rank n; None means unbounded (closed form)."""
        if self.source != SOURCE_TABLE:
            return None
        if n not in self.table:
            raise OutOfTableError(f"knot {self.name}: no table for rank n={n}")
        return max(self.table[n])

    def is_closed_form(self) -> bool:
        return self.source != SOURCE_TABLE


@dataclass(frozen=True)
class Catalog:
    records: Mapping[str, KnotRecord] = field(default_factory=dict)

    def get(self, name: str) -> KnotRecord:
        try:
            return self.records[name]
        except KeyError:
            raise KeyError(f"knot {name!r} not in catalog (have {sorted(self.records)})") from None

    def names(self) -> list[str]:
        return sorted(self.records)

    @classmethod
    def from_dict(cls, data: dict) -> Catalog:
        records: dict[str, KnotRecord] = {}
        for entry in data["knots"]:
            name = entry["name"]
            if name in records:
                raise ValueError(f"duplicate knot name {name!r} in catalog")
            table = None
            if entry.get("table"):
                table = {
                    int(n): {int(k): LaurentPoly.from_pairs(pairs) for k, pairs in sub.items()}
                    for n, sub in entry["table"].items()
                }
            records[name] = KnotRecord(name=name, source=entry["source"], table=table)
        return cls(records)

    def to_dict(self) -> dict:
        knots = []
        for name in sorted(self.records):
            rec = self.records[name]
            entry: dict = {"name": rec.name, "source": rec.source}
            if rec.table is not None:
                entry["table"] = {
                    str(n): {str(k): rec.table[n][k].to_pairs() for k in sorted(rec.table[n])}
                    for n in sorted(rec.table)
                }
            knots.append(entry)
        return {"knots": knots}


def catalog_from_json(text: str) -> Catalog:
    return Catalog.from_dict(json.loads(text))


def bundled_catalog() -> Catalog:
    """The catalog shipped inside the package."""
    text = resources.files("qknot").joinpath("data/catalog.json").read_text()
    return catalog_from_json(text)


def load_catalog(path: str | os.PathLike | None = None) -> Catalog:
    """Resolve a catalog: explicit path, then $QKNOT_CATALOG, then
    ./data/catalog.json, then the packaged copy."""
    if path is None:
        path = os.environ.get(ENV_CATALOG) or None
    if path is None and DEFAULT_CATALOG_PATH.is_file():
        path = DEFAULT_CATALOG_PATH
    if path is None:
        return bundled_catalog()
    return catalog_from_json(Path(path).read_text())


def invariant_poly(record: KnotRecord, n: int, N: int) -> LaurentPoly:
    """Exact invariant polynomial at rank n and color N: the depth sum of
    expansion coefficients times the knot's coefficient polynomials."""
    if n < 2:
        raise ValueError(f"rank must be >= 2, got {n}")
    if N < 0:
        raise ValueError(f"color must be >= 0, got {N}")
    total = LaurentPoly.zero()
    for k in range(N + 1):
        total = total + cyclo_coeff(N, k, n) * record.hk(n, k)
    return total


def invariant_41_direct(n: int, N: int) -> LaurentPoly:
    """Independent figure-eight construction; returns the invariant at
    color N-1.

    Each summand carries the ratio of quantum factorials as a single exact
    balanced binomial; the individual factor ratios are not Laurent, only
    the partial products are.
    """
    if n < 2:
        raise ValueError(f"rank must be >= 2, got {n}")
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    total = LaurentPoly.one()
    prod = LaurentPoly.one()
    for j in range(1, N):
        prod = prod * qint(N - j) * qint(N + (n - 2) + j)
        total = total + qbinom_shifted(n, j) * prod
    return total
