"""Dimension bookkeeping for the geometric Jacquet-Langlands identity.

Elliptic cusp form dimensions are computed from closed formulas. Siegel
dimensions ``dim S_{k,j}[K(1)]`` and ``dim S_{k,j}[K(p)]`` (weight
``Sym^k ⊗ det^j``) are never computed; they are read from a CSV table.
"""

from __future__ import annotations

import csv
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable

from .local_reps import is_prime

CSV_HEADER = ["kind", "k", "j", "level", "p", "value", "source"]


class DimTableError(ValueError):
    pass


class MissingDimension(KeyError):
    def __str__(self) -> str:
        return f"missing dimension record {self.args[0]}"


# -- elliptic modular forms ---------------------------------------------------


def dim_cusp_level1(k: int) -> int:
    if k < 0:
        raise ValueError("weight must be nonnegative")
    if k % 2 or k < 4:
        return 0
    return k // 12 - 1 if k % 12 == 2 else k // 12


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def gamma0p_invariants(p: int) -> dict[str, Fraction | int]:
    """Index, cusps, elliptic points and genus of Gamma_0(p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    mu = p + 1
    cusps = 2
    nu2 = 1 if p == 2 else 1 + legendre(-1, p)
    if p == 2:
        nu3 = 0
    else:
        nu3 = 1 if p == 3 else 1 + legendre(-3, p)
    g = 1 + Fraction(mu, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(cusps, 2)
    assert g.denominator == 1
    return {"index": mu, "cusps": cusps, "nu2": nu2, "nu3": nu3, "genus": int(g)}


def dim_cusp_gamma0p(k: int, p: int) -> int:
    if k % 2:
        return 0
    if k < 2:
        raise ValueError(f"weight {k} must be even and >= 2")
    inv = gamma0p_invariants(p)
    g = inv["genus"]
    if k == 2:
        return g
    return (k - 1) * (g - 1) + (k // 2 - 1) * inv["cusps"] + inv["nu2"] * (k // 4) + inv["nu3"] * (k // 3)


def dim_cusp_gamma0p_new(k: int, p: int) -> int:
    if k < 2:
        raise ValueError(f"weight {k} must be >= 2")
    if k % 2:
        return 0
    return dim_cusp_gamma0p(k, p) - 2 * dim_cusp_level1(k)


# -- tables -------------------------------------------------------------------


class Kind(str, enum.Enum):
    classical = "classical"
    siegel = "siegel"


CLASSICAL_LEVELS = ("Gamma0(1)", "Gamma0(p)", "Gamma0(p)-new")
SIEGEL_LEVELS = ("K(1)", "K(p)")


@dataclass(frozen=True)
class DimRecord:
    kind: Kind
    k: int
    j: int | None
    level: str
    p: int | None
    value: int
    source: str = ""

    @property
    def key(self) -> tuple:
        return (self.kind.value, self.k, self.j, self.level, self.p)


@dataclass
class DimTable:
    records: dict[tuple, DimRecord] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.records)

    def add(self, rec: DimRecord) -> None:
        old = self.records.get(rec.key)
        if old is None:
            self.records[rec.key] = rec
        elif old.value != rec.value:
            raise DimTableError(
                f"conflicting values for {rec.key}: {old.value} ({old.source or 'no source'}) "
                f"vs {rec.value} ({rec.source or 'no source'})"
            )

    def siegel(self, k: int, j: int, level: str, p: int | None = None) -> int:
        key = (Kind.siegel.value, k, j, level, None if level == "K(1)" else p)
        try:
            return self.records[key].value
        except KeyError:
            raise MissingDimension(f"siegel k={k} j={j} level={level}" + (f" p={p}" if level == "K(p)" else "")) from None

    def siegel_triples(self) -> list[tuple[int, int, int]]:
        """(k, j, p) for which both the K(1) and the K(p) record are present."""
        out = []
        for (kind, k, j, level, p) in self.records:
            if kind == "siegel" and level == "K(p)" and (kind, k, j, "K(1)", None) in self.records:
                out.append((k, j, p))
        return sorted(out)

    def classical_records(self) -> list[DimRecord]:
        return [r for r in self.records.values() if r.kind is Kind.classical]


def _parse_int(text: str, what: str, lineno: int, optional: bool = False) -> int | None:
    text = text.strip()
    if not text:
        if optional:
            return None
        raise DimTableError(f"line {lineno}: missing {what}")
    try:
        return int(text)
    except ValueError:
        raise DimTableError(f"line {lineno}: {what} {text!r} is not an integer") from None


def _parse_row(row: list[str], lineno: int) -> DimRecord:
    if len(row) != len(CSV_HEADER):
        raise DimTableError(f"line {lineno}: expected {len(CSV_HEADER)} fields, got {len(row)}")
    kind_s, k_s, j_s, level, p_s, value_s, source = row
    try:
        kind = Kind(kind_s.strip())
    except ValueError:
        raise DimTableError(f"line {lineno}: unknown kind {kind_s!r}") from None
    k = _parse_int(k_s, "k", lineno)
    j = _parse_int(j_s, "j", lineno, optional=True)
    p = _parse_int(p_s, "p", lineno, optional=True)
    value = _parse_int(value_s, "value", lineno)
    level = level.strip()
    if value < 0:
        raise DimTableError(f"line {lineno}: negative dimension {value}")
    if kind is Kind.siegel:
        if level not in SIEGEL_LEVELS:
            raise DimTableError(f"line {lineno}: siegel level must be one of {SIEGEL_LEVELS}")
        if j is None or j < 3 or k < 0:
            raise DimTableError(f"line {lineno}: siegel records need k >= 0 and j >= 3")
    else:
        if level not in CLASSICAL_LEVELS:
            raise DimTableError(f"line {lineno}: classical level must be one of {CLASSICAL_LEVELS}")
        if j is not None:
            raise DimTableError(f"line {lineno}: classical records have no j")
        if k < 0 or k % 2:
            raise DimTableError(f"line {lineno}: classical weight must be even and nonnegative")
    if level in ("K(1)", "Gamma0(1)"):
        p = None
    elif p is None or not is_prime(p):
        raise DimTableError(f"line {lineno}: level {level} needs a prime p")
    return DimRecord(kind, k, j, level, p, value, source.strip())


def ingest_rows(lines: Iterable[str]) -> DimTable:
    reader = csv.reader(lines)
    table = DimTable()
    header = next(reader, None)
    if header is None:
        raise DimTableError("line 1: empty file, expected header " + ",".join(CSV_HEADER))
    if [h.strip() for h in header] != CSV_HEADER:
        raise DimTableError(f"line 1: header must be {','.join(CSV_HEADER)}")
    for lineno, row in enumerate(reader, start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        table.add(_parse_row(row, lineno))
    return table


def ingest_csv(path: str | Path) -> DimTable:
    with open(path, newline="", encoding="utf-8") as fh:
        return ingest_rows(fh)


def shipped_table_path():
    return resources.files("paramodular") / "data" / "siegel_dims.csv"


def shipped_table() -> DimTable:
    with resources.as_file(shipped_table_path()) as path:
        return ingest_csv(path)


# -- the identities -------------------------------------------------------------


class FinalDelta(str, enum.Enum):
    """Reading of the trailing ``delta_{k,0} delta_{j,?}`` term."""

    j3 = "j3"
    literal = "literal"


def _delta(a: int, b: int) -> int:
    return int(a == b)


def final_delta_term(k: int, j: int, mode: FinalDelta | str = FinalDelta.j3) -> int:
    mode = FinalDelta(mode)
    return _delta(k, 0) * _delta(j, 3 if mode is FinalDelta.j3 else 0)


def _check_weights(k: int, j: int) -> None:
    if k < 0 or j < 3:
        raise ValueError(f"need k >= 0 and j >= 3, got k={k}, j={j}")


def saito_kurokawa_correction(k: int, j: int) -> int:
    """``delta_{k,0} (1 + (-1)^j)/2 dim S_{2j-2}``: coinciding oldforms from Saito-Kurokawa lifts."""
    return _delta(k, 0) * (1 + (-1) ** j) // 2 * dim_cusp_level1(2 * j - 2)


def paramodular_new_dim(k: int, j: int, p: int, table: DimTable) -> int:
    _check_weights(k, j)
    value = table.siegel(k, j, "K(p)", p) - 2 * table.siegel(k, j, "K(1)") + saito_kurokawa_correction(k, j)
    if value < 0:
        raise DimTableError(f"table inconsistent: dim S_{{{k},{j}}}[K({p})]^new = {value} < 0")
    return value


def yoshida_count(k: int, j: int, p: int) -> int:
    _check_weights(k, j)
    return dim_cusp_level1(2 * j - 2 + k) * dim_cusp_gamma0p_new(k + 2, p)


def alpha_cokernel_dim(k: int, j: int) -> int:
    """Extra dimension not hit by alpha when k = 0 and j is odd (a = b even)."""
    if k == 0 and j % 2 == 1:
        return dim_cusp_level1(2 * j - 2)
    return 0


def ibukiyama_terms(k: int, j: int, p: int, table: DimTable, mode: FinalDelta | str = FinalDelta.j3) -> dict[str, int]:
    _check_weights(k, j)
    return {
        "yoshida": yoshida_count(k, j, p),
        "siegel_K(p)": table.siegel(k, j, "K(p)", p),
        "minus_2_siegel_K(1)": -2 * table.siegel(k, j, "K(1)"),
        "delta_k0_S_2j-2": _delta(k, 0) * dim_cusp_level1(2 * j - 2),
        "final_delta": final_delta_term(k, j, mode),
    }


def ibukiyama_dim(k: int, j: int, p: int, table: DimTable, mode: FinalDelta | str = FinalDelta.j3) -> int:
    """Right-hand side of the dimension formula for algebraic modular forms on GU_2(D)."""
    return sum(ibukiyama_terms(k, j, p, table, mode).values())


def substituted_dim(k: int, j: int, p: int, table: DimTable, mode: FinalDelta | str = FinalDelta.j3) -> int:
    """Same number assembled from newform counts: image of alpha plus its cokernel."""
    image_alpha = yoshida_count(k, j, p) + paramodular_new_dim(k, j, p, table)
    return image_alpha + alpha_cokernel_dim(k, j) + final_delta_term(k, j, mode)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str


def verify_table(table: DimTable, mode: FinalDelta | str = FinalDelta.j3) -> list[Check]:
    checks = []
    for rec in sorted(table.classical_records(), key=lambda r: r.key[1:3] + (r.level, r.p or 0)):
        if rec.level == "Gamma0(1)":
            got = dim_cusp_level1(rec.k)
        elif rec.level == "Gamma0(p)":
            got = dim_cusp_gamma0p(rec.k, rec.p)
        else:
            got = dim_cusp_gamma0p_new(rec.k, rec.p)
        name = f"classical {rec.level} k={rec.k}" + (f" p={rec.p}" if rec.p else "")
        checks.append(Check(name, got == rec.value, f"formula {got}, table {rec.value}"))
    for k, j, p in table.siegel_triples():
        tag = f"k={k} j={j} p={p}"
        try:
            new = paramodular_new_dim(k, j, p, table)
        except DimTableError as exc:
            checks.append(Check(f"newform count nonnegative {tag}", False, str(exc)))
            continue
        checks.append(Check(f"newform count nonnegative {tag}", True, f"{new}"))
        lhs = ibukiyama_dim(k, j, p, table, mode)
        rhs = substituted_dim(k, j, p, table, mode)
        checks.append(Check(f"substitution identity {tag}", lhs == rhs, f"formula {lhs}, substituted {rhs}"))
        if (k, j) == (0, 3):
            checks.append(Check(f"constant forms present {tag}", lhs >= 1, f"{lhs}"))
    return checks
